#include "tww/matrix.hpp"

#include "tww/errors.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_set>

namespace tww {

namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

std::vector<std::string> numeric_alphabet(int max_symbol)
{
    std::vector<std::string> out;
    for (int s = 0; s <= max_symbol; ++s)
        out.push_back(std::to_string(s));
    return out;
}

} // namespace

Matrix::Matrix(int rows, int cols, int fill)
    : rows_(rows), cols_(cols), cells_(sz(rows) * sz(cols), fill), symbols_(numeric_alphabet(fill))
{
    if (rows < 1 || cols < 1)
        throw InvalidInput("matrix needs at least one row and one column");
    if (fill < 0)
        throw InvalidInput("numeric matrix entries must be nonnegative");
}

Matrix Matrix::from_rows(const std::vector<std::vector<int>>& rows)
{
    if (rows.empty() || rows.front().empty())
        throw InvalidInput("matrix needs at least one row and one column");
    Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    int top = 0;
    for (int i = 0; i < m.rows_; ++i) {
        if (rows[sz(i)].size() != sz(m.cols_))
            throw InvalidInput("row " + std::to_string(i + 1) + " has the wrong length");
        for (int j = 0; j < m.cols_; ++j) {
            int v = rows[sz(i)][sz(j)];
            if (v < 0)
                throw InvalidInput("numeric matrix entries must be nonnegative");
            m.cells_[m.index(i, j)] = v;
            top = std::max(top, v);
        }
    }
    m.symbols_ = numeric_alphabet(top);
    return m;
}

Matrix Matrix::from_symbols(const std::vector<std::vector<std::string>>& rows)
{
    if (rows.empty() || rows.front().empty())
        throw InvalidInput("matrix needs at least one row and one column");
    Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    m.symbols_.clear();
    std::map<std::string, int> code;
    for (int i = 0; i < m.rows_; ++i) {
        if (rows[sz(i)].size() != sz(m.cols_))
            throw InvalidInput("row " + std::to_string(i + 1) + " has the wrong length");
        for (int j = 0; j < m.cols_; ++j) {
            const auto& s = rows[sz(i)][sz(j)];
            auto [it, fresh] = code.emplace(s, static_cast<int>(m.symbols_.size()));
            if (fresh)
                m.symbols_.push_back(s);
            m.cells_[m.index(i, j)] = it->second;
        }
    }
    return m;
}

Matrix Matrix::adjacency(const Graph& g)
{
    Matrix m(g.n(), g.n());
    m.symbols_ = numeric_alphabet(1);
    for (auto [u, v] : g.edges()) {
        m.cells_[m.index(u - 1, v - 1)] = 1;
        m.cells_[m.index(v - 1, u - 1)] = 1;
    }
    return m;
}

bool Matrix::symmetric() const
{
    if (rows_ != cols_)
        return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i))
                return false;
    return true;
}

Matrix Matrix::transposed() const
{
    Matrix t(cols_, rows_);
    t.symbols_ = symbols_;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            t.cells_[t.index(j, i)] = at(i, j);
    return t;
}

Matrix Matrix::permuted(const std::vector<int>& row_perm, const std::vector<int>& col_perm) const
{
    auto check = [](const std::vector<int>& p, int n) {
        std::vector<int> sorted = p;
        std::sort(sorted.begin(), sorted.end());
        for (int k = 0; k < n; ++k)
            if (sorted.size() != sz(n) || sorted[sz(k)] != k)
                throw InvalidInput("not a permutation");
    };
    check(row_perm, rows_);
    check(col_perm, cols_);
    Matrix p = *this;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            p.cells_[p.index(row_perm[sz(i)], col_perm[sz(j)])] = at(i, j);
    return p;
}

bool operator==(const Matrix& a, const Matrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        return false;
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j)
            if (a.symbol(i, j) != b.symbol(i, j))
                return false;
    return true;
}

MatrixPartition::MatrixPartition(int rows, int cols, std::vector<std::vector<int>> row_parts,
                                 std::vector<std::vector<int>> col_parts)
    : rows_(rows), cols_(cols), row_parts_(std::move(row_parts)), col_parts_(std::move(col_parts))
{
    auto normalize = [](std::vector<std::vector<int>>& parts, int n, const char* side) {
        std::vector<char> seen(sz(n), 0);
        for (auto& part : parts) {
            if (part.empty())
                throw InvalidInput(std::string(side) + " partition has an empty part");
            std::sort(part.begin(), part.end());
            for (int x : part) {
                if (x < 0 || x >= n || seen[sz(x)])
                    throw InvalidInput(std::string(side) + " partition repeats or misses index " + std::to_string(x));
                seen[sz(x)] = 1;
            }
        }
        if (std::count(seen.begin(), seen.end(), 0) != 0)
            throw InvalidInput(std::string(side) + " partition does not cover every index");
        std::sort(parts.begin(), parts.end());
        bool intervals = true;
        for (const auto& part : parts)
            intervals = intervals && part.back() - part.front() + 1 == static_cast<int>(part.size());
        return intervals;
    };
    bool r = normalize(row_parts_, rows, "row");
    bool c = normalize(col_parts_, cols, "column");
    division_ = r && c;
}

MatrixPartition MatrixPartition::finest(int rows, int cols)
{
    std::vector<std::vector<int>> r, c;
    for (int i = 0; i < rows; ++i)
        r.push_back({i});
    for (int j = 0; j < cols; ++j)
        c.push_back({j});
    return MatrixPartition(rows, cols, r, c);
}

MatrixPartition MatrixPartition::coarsest(int rows, int cols)
{
    std::vector<int> r(sz(rows)), c(sz(cols));
    for (int i = 0; i < rows; ++i)
        r[sz(i)] = i;
    for (int j = 0; j < cols; ++j)
        c[sz(j)] = j;
    return MatrixPartition(rows, cols, {r}, {c});
}

MatrixPartition MatrixPartition::division(int rows, int cols, const std::vector<int>& row_cuts,
                                          const std::vector<int>& col_cuts)
{
    auto split = [](int n, const std::vector<int>& cuts) {
        std::vector<std::vector<int>> parts(1);
        std::size_t next = 0;
        for (int i = 0; i < n; ++i) {
            if (next < cuts.size() && cuts[next] == i && i > 0) {
                parts.emplace_back();
                ++next;
            }
            parts.back().push_back(i);
        }
        if (next != cuts.size())
            throw InvalidInput("division cuts must increase strictly inside the index range");
        return parts;
    };
    return MatrixPartition(rows, cols, split(rows, row_cuts), split(cols, col_cuts));
}

bool zone_constant(const Matrix& m, const std::vector<int>& rows, const std::vector<int>& cols)
{
    int first = m.at(rows.front(), cols.front());
    for (int i : rows)
        for (int j : cols)
            if (m.at(i, j) != first)
                return false;
    return true;
}

int error_value(const Matrix& m, const MatrixPartition& p)
{
    if (p.rows() != m.rows() || p.cols() != m.cols())
        throw InvalidInput("partition shape does not match the matrix");
    const auto& rp = p.row_parts();
    const auto& cp = p.col_parts();
    std::vector<int> row_err(rp.size(), 0), col_err(cp.size(), 0);
    for (std::size_t i = 0; i < rp.size(); ++i)
        for (std::size_t j = 0; j < cp.size(); ++j)
            if (!zone_constant(m, rp[i], cp[j])) {
                ++row_err[i];
                ++col_err[j];
            }
    int best = 0;
    for (int e : row_err)
        best = std::max(best, e);
    for (int e : col_err)
        best = std::max(best, e);
    return best;
}

namespace {

void check_zone(const Matrix& m, Range rows, Range cols)
{
    if (rows.begin < 0 || rows.end > m.rows() || rows.size() < 1 || cols.begin < 0 || cols.end > m.cols() ||
        cols.size() < 1)
        throw InvalidInput("zone must be a nonempty range inside the matrix");
}

} // namespace

bool is_vertical(const Matrix& m, Range rows, Range cols)
{
    check_zone(m, rows, cols);
    for (int i = rows.begin; i + 1 < rows.end; ++i)
        for (int j = cols.begin; j < cols.end; ++j)
            if (m.at(i, j) != m.at(i + 1, j))
                return false;
    return true;
}

bool is_horizontal(const Matrix& m, Range rows, Range cols)
{
    check_zone(m, rows, cols);
    for (int i = rows.begin; i < rows.end; ++i)
        for (int j = cols.begin; j + 1 < cols.end; ++j)
            if (m.at(i, j) != m.at(i, j + 1))
                return false;
    return true;
}

bool is_mixed(const Matrix& m, Range rows, Range cols)
{
    return !is_vertical(m, rows, cols) && !is_horizontal(m, rows, cols);
}

std::optional<std::pair<int, int>> find_corner(const Matrix& m, Range rows, Range cols)
{
    check_zone(m, rows, cols);
    for (int i = rows.begin; i + 1 < rows.end; ++i)
        for (int j = cols.begin; j + 1 < cols.end; ++j) {
            bool vertical = m.at(i, j) == m.at(i + 1, j) && m.at(i, j + 1) == m.at(i + 1, j + 1);
            bool horizontal = m.at(i, j) == m.at(i, j + 1) && m.at(i + 1, j) == m.at(i + 1, j + 1);
            if (!vertical && !horizontal)
                return std::pair(i, j);
        }
    return std::nullopt;
}

bool check_t_mixed_minor(const Matrix& m, const MatrixPartition& division, int t)
{
    if (!division.is_division())
        throw InvalidInput("mixed minors need a division (interval parts)");
    if (division.rows() != m.rows() || division.cols() != m.cols())
        throw InvalidInput("division shape does not match the matrix");
    if (t < 1 || static_cast<int>(division.row_parts().size()) != t ||
        static_cast<int>(division.col_parts().size()) != t)
        throw InvalidInput("division must have exactly t parts on each side");
    for (const auto& r : division.row_parts())
        for (const auto& c : division.col_parts())
            if (!is_mixed(m, {r.front(), r.back() + 1}, {c.front(), c.back() + 1}))
                return false;
    return true;
}

bool has_t_mixed_minor(const Matrix& m, int t)
{
    const int r = m.rows(), c = m.cols();
    if (r > 12 || c > 12)
        throw CapExceeded("mixed-minor search is limited to 12 rows and 12 columns");
    if (t < 1)
        throw InvalidInput("t must be positive");
    if (t > r || t > c)
        return false;

    // mixed[(r0, r1, c0, c1)] for every interval zone
    auto key = [&](int r0, int r1, int c0, int c1) { return ((sz(r0) * sz(r + 1) + sz(r1)) * sz(c) + sz(c0)) * sz(c + 1) + sz(c1); };
    std::vector<char> mixed(sz(r) * sz(r + 1) * sz(c) * sz(c + 1), 0);
    for (int r0 = 0; r0 < r; ++r0)
        for (int r1 = r0 + 1; r1 <= r; ++r1)
            for (int c0 = 0; c0 < c; ++c0)
                for (int c1 = c0 + 1; c1 <= c; ++c1)
                    mixed[key(r0, r1, c0, c1)] = is_mixed(m, {r0, r1}, {c0, c1}) ? 1 : 0;

    // boundaries b[0] = 0 < b[1] < ... < b[t] = n, enumerated as compositions
    auto compositions = [t](int n) {
        std::vector<std::vector<int>> out;
        std::vector<int> b(sz(t) + 1, 0);
        b[sz(t)] = n;
        auto rec = [&](auto&& self, int k) -> void {
            if (k == t) {
                out.push_back(b);
                return;
            }
            for (int x = b[sz(k - 1)] + 1; x <= n - (t - k); ++x) {
                b[sz(k)] = x;
                self(self, k + 1);
            }
        };
        rec(rec, 1);
        return out;
    };
    auto rows = compositions(r);
    auto cols = compositions(c);
    for (const auto& rb : rows)
        for (const auto& cb : cols) {
            bool all = true;
            for (int i = 0; i < t && all; ++i)
                for (int j = 0; j < t && all; ++j)
                    all = mixed[key(rb[sz(i)], rb[sz(i + 1)], cb[sz(j)], cb[sz(j + 1)])] != 0;
            if (all)
                return true;
        }
    return false;
}

namespace {

using Mask = std::uint16_t;

struct State {
    std::vector<Mask> rows, cols; // parts ordered by smallest member
    friend bool operator==(const State&, const State&) = default;
};

class MatrixSearch {
public:
    MatrixSearch(const Matrix& m, bool symmetric, std::int64_t budget)
        : m_(m), symmetric_(symmetric), budget_(budget)
    {
    }

    struct BudgetHit {};

    State finest() const
    {
        State s;
        for (int i = 0; i < m_.rows(); ++i)
            s.rows.push_back(static_cast<Mask>(1U << i));
        if (!symmetric_)
            for (int j = 0; j < m_.cols(); ++j)
                s.cols.push_back(static_cast<Mask>(1U << j));
        return s;
    }

    [[nodiscard]] int error(const State& s) const
    {
        const auto& cols = symmetric_ ? s.rows : s.cols;
        std::vector<int> row_err(s.rows.size(), 0), col_err(cols.size(), 0);
        for (std::size_t i = 0; i < s.rows.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j)
                if (!constant(s.rows[i], cols[j])) {
                    ++row_err[i];
                    ++col_err[j];
                }
        int best = 0;
        for (int e : row_err)
            best = std::max(best, e);
        for (int e : col_err)
            best = std::max(best, e);
        return best;
    }

    [[nodiscard]] std::vector<State> children(const State& s) const
    {
        std::vector<State> out;
        auto merge_side = [&](bool rows) {
            const auto& parts = rows ? s.rows : s.cols;
            for (std::size_t i = 0; i < parts.size(); ++i)
                for (std::size_t j = i + 1; j < parts.size(); ++j) {
                    State next = s;
                    auto& side = rows ? next.rows : next.cols;
                    side[i] = static_cast<Mask>(side[i] | side[j]);
                    side.erase(side.begin() + static_cast<long>(j));
                    out.push_back(std::move(next));
                }
        };
        merge_side(true);
        if (!symmetric_)
            merge_side(false);
        return out;
    }

    [[nodiscard]] static bool done(const State& s) { return s.rows.size() <= 1 && s.cols.size() <= 1; }

    bool feasible(int bound, std::vector<State>& path)
    {
        bound_ = bound;
        dead_.clear();
        path.assign(1, finest());
        return error(path.front()) <= bound && dfs(path);
    }

    [[nodiscard]] std::int64_t nodes() const { return nodes_; }

private:
    bool constant(Mask rows, Mask cols) const
    {
        int first = m_.at(std::countr_zero(rows), std::countr_zero(cols));
        for (Mask r = rows; r; r &= static_cast<Mask>(r - 1))
            for (Mask c = cols; c; c &= static_cast<Mask>(c - 1))
                if (m_.at(std::countr_zero(r), std::countr_zero(c)) != first)
                    return false;
        return true;
    }

    static std::uint64_t key(const State& s)
    {
        std::uint64_t k = 0;
        int shift = 0;
        for (const auto* side : {&s.rows, &s.cols}) {
            int width = 0;
            for (std::size_t i = 0; i < side->size(); ++i)
                for (Mask rest = (*side)[i]; rest; rest &= static_cast<Mask>(rest - 1)) {
                    int pos = std::countr_zero(rest);
                    k |= std::uint64_t{i} << (shift + 4 * pos);
                    width = std::max(width, pos + 1);
                }
            shift += 4 * width;
        }
        return k;
    }

    bool dfs(std::vector<State>& path)
    {
        if (++nodes_ > budget_)
            throw BudgetHit{};
        const State& s = path.back();
        if (done(s))
            return true;
        std::vector<std::pair<int, State>> next;
        for (auto& c : children(s)) {
            int e = error(c);
            if (e <= bound_)
                next.emplace_back(e, std::move(c));
        }
        std::stable_sort(next.begin(), next.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& [e, c] : next) {
            auto k = key(c);
            if (dead_.contains(k))
                continue;
            path.push_back(std::move(c));
            if (dfs(path))
                return true;
            path.pop_back();
            dead_.insert(k);
        }
        return false;
    }

    const Matrix& m_;
    bool symmetric_;
    std::int64_t budget_;
    std::int64_t nodes_ = 0;
    int bound_ = 0;
    std::unordered_set<std::uint64_t> dead_;
};

MatrixPartition to_partition(const Matrix& m, const State& s, bool symmetric)
{
    auto lists = [](const std::vector<Mask>& parts) {
        std::vector<std::vector<int>> out;
        for (Mask p : parts) {
            out.emplace_back();
            for (Mask rest = p; rest; rest &= static_cast<Mask>(rest - 1))
                out.back().push_back(std::countr_zero(rest));
        }
        return out;
    };
    return MatrixPartition(m.rows(), m.cols(), lists(s.rows), lists(symmetric ? s.rows : s.cols));
}

} // namespace

MatrixWidthReport matrix_twin_width_exact(const Matrix& m, std::int64_t budget, bool symmetric)
{
    if (symmetric) {
        if (m.rows() != m.cols())
            throw InvalidInput("symmetric mode needs a square matrix");
        if (m.rows() > matrix_exact_cap)
            throw CapExceeded("symmetric matrix search is limited to " + std::to_string(matrix_exact_cap) + " rows");
    } else if (m.rows() + m.cols() > matrix_exact_cap) {
        throw CapExceeded("matrix search is limited to rows + cols <= " + std::to_string(matrix_exact_cap));
    }

    MatrixSearch search(m, symmetric, budget);
    auto convert = [&](const std::vector<State>& path) {
        std::vector<MatrixPartition> out;
        for (const auto& s : path)
            out.push_back(to_partition(m, s, symmetric));
        return out;
    };

    // greedy upper bound
    std::vector<State> greedy{search.finest()};
    int upper = search.error(greedy.front());
    while (!MatrixSearch::done(greedy.back())) {
        auto kids = search.children(greedy.back());
        std::size_t best = 0;
        int best_err = search.error(kids[0]);
        for (std::size_t i = 1; i < kids.size(); ++i) {
            int e = search.error(kids[i]);
            if (e < best_err) {
                best_err = e;
                best = i;
            }
        }
        upper = std::max(upper, best_err);
        greedy.push_back(std::move(kids[best]));
    }

    MatrixWidthReport report;
    for (int bound = 0; bound < upper; ++bound) {
        std::vector<State> path;
        try {
            if (search.feasible(bound, path)) {
                report.value = report.lower = bound;
                report.exact = true;
                report.nodes = search.nodes();
                report.sequence = convert(path);
                return report;
            }
        } catch (const MatrixSearch::BudgetHit&) {
            report.value = upper;
            report.lower = bound;
            report.nodes = search.nodes();
            report.sequence = convert(greedy);
            return report;
        }
    }
    report.value = report.lower = upper;
    report.exact = true;
    report.nodes = search.nodes();
    report.sequence = convert(greedy);
    return report;
}

} // namespace tww
