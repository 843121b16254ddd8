#pragma once

// Matrix partitions, mixedness and matrix twin-width. Row and column
// indices are 0-based here; the command line prints them 1-based.

#include "tww/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tww {

/// r x c matrix over a finite alphabet. Cells hold symbol codes; equality
/// compares the symbols themselves.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, int fill = 0);
    /// Numeric symbols; entries must be nonnegative.
    [[nodiscard]] static Matrix from_rows(const std::vector<std::vector<int>>& rows);
    /// Codes assigned in order of first appearance.
    [[nodiscard]] static Matrix from_symbols(const std::vector<std::vector<std::string>>& rows);
    [[nodiscard]] static Matrix adjacency(const Graph& g);

    [[nodiscard]] int rows() const noexcept { return rows_; }
    [[nodiscard]] int cols() const noexcept { return cols_; }
    [[nodiscard]] int at(int i, int j) const { return cells_[index(i, j)]; }
    [[nodiscard]] const std::string& symbol(int i, int j) const { return symbols_[static_cast<std::size_t>(at(i, j))]; }
    [[nodiscard]] const std::vector<std::string>& alphabet() const noexcept { return symbols_; }

    [[nodiscard]] bool symmetric() const;
    [[nodiscard]] Matrix transposed() const;
    /// Row i moves to row_perm[i], column j to col_perm[j].
    [[nodiscard]] Matrix permuted(const std::vector<int>& row_perm, const std::vector<int>& col_perm) const;

    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    [[nodiscard]] std::size_t index(int i, int j) const
    {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<int> cells_;
    std::vector<std::string> symbols_;
};

/// A row partition and a column partition with arbitrary parts.
class MatrixPartition {
public:
    MatrixPartition() = default;
    /// Throws InvalidInput unless each side partitions its index range.
    MatrixPartition(int rows, int cols, std::vector<std::vector<int>> row_parts,
                    std::vector<std::vector<int>> col_parts);

    [[nodiscard]] static MatrixPartition finest(int rows, int cols);
    [[nodiscard]] static MatrixPartition coarsest(int rows, int cols);
    /// Division from the first index of every part after the first.
    [[nodiscard]] static MatrixPartition division(int rows, int cols, const std::vector<int>& row_cuts,
                                                  const std::vector<int>& col_cuts);

    [[nodiscard]] int rows() const noexcept { return rows_; }
    [[nodiscard]] int cols() const noexcept { return cols_; }
    [[nodiscard]] const std::vector<std::vector<int>>& row_parts() const noexcept { return row_parts_; }
    [[nodiscard]] const std::vector<std::vector<int>>& col_parts() const noexcept { return col_parts_; }
    /// Every part is an interval (parts sorted by position).
    [[nodiscard]] bool is_division() const noexcept { return division_; }

    friend bool operator==(const MatrixPartition&, const MatrixPartition&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::vector<int>> row_parts_;
    std::vector<std::vector<int>> col_parts_;
    bool division_ = false;
};

/// Half-open index interval.
struct Range {
    int begin = 0;
    int end = 0;
    [[nodiscard]] int size() const noexcept { return end - begin; }
};

[[nodiscard]] bool zone_constant(const Matrix& m, const std::vector<int>& rows, const std::vector<int>& cols);
[[nodiscard]] int error_value(const Matrix& m, const MatrixPartition& p);

/// Every column of the zone is constant.
[[nodiscard]] bool is_vertical(const Matrix& m, Range rows, Range cols);
/// Every row of the zone is constant.
[[nodiscard]] bool is_horizontal(const Matrix& m, Range rows, Range cols);
[[nodiscard]] bool is_mixed(const Matrix& m, Range rows, Range cols);
/// Top-left cell of a contiguous mixed 2x2 submatrix, scanning row-major.
[[nodiscard]] std::optional<std::pair<int, int>> find_corner(const Matrix& m, Range rows, Range cols);

/// All t*t zones of a (t, t)-division are mixed. Throws InvalidInput on a
/// non-division or when a side does not have exactly t parts.
[[nodiscard]] bool check_t_mixed_minor(const Matrix& m, const MatrixPartition& division, int t);
/// Tries every (t, t)-division. Throws CapExceeded beyond 12 rows or columns.
[[nodiscard]] bool has_t_mixed_minor(const Matrix& m, int t);

inline constexpr int matrix_exact_cap = 10;

struct MatrixWidthReport {
    int value = 0;     // exact width, or the best upper bound found
    int lower = 0;     // proven lower bound
    bool exact = false;
    std::int64_t nodes = 0;
    std::vector<MatrixPartition> sequence; // witness from finest to coarsest
};

/// Minimum over contraction sequences of the maximum error value. In
/// symmetric mode (square matrices) each step merges the same pair of rows
/// and columns. Caps: rows + cols <= 10, or rows <= 10 when symmetric.
[[nodiscard]] MatrixWidthReport matrix_twin_width_exact(const Matrix& m, std::int64_t budget = 5'000'000,
                                                        bool symmetric = false);

} // namespace tww
