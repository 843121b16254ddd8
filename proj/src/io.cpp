#include "tww/io.hpp"

#include "tww/errors.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace tww::io {

namespace {

// Yields tokenized non-comment lines with their 1-based line numbers.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next()
    {
        std::string raw;
        while (std::getline(in_, raw)) {
            ++line_;
            if (!raw.empty() && raw.back() == '\r')
                raw.pop_back();
            tokens_.clear();
            std::istringstream ss(raw);
            std::string tok;
            while (ss >> tok)
                tokens_.push_back(tok);
            if (tokens_.empty() || tokens_.front().front() == '#')
                continue;
            return true;
        }
        return false;
    }

    [[nodiscard]] int line() const noexcept { return line_; }
    [[nodiscard]] const std::vector<std::string>& tokens() const noexcept { return tokens_; }

    [[noreturn]] void fail(const std::string& why) const { throw ParseError(line_, why); }

    void expect(const std::string& tag, std::size_t count)
    {
        if (tokens_.front() != tag)
            fail("expected '" + tag + "' line, got '" + tokens_.front() + "'");
        if (tokens_.size() != count + 1)
            fail("'" + tag + "' line takes " + std::to_string(count) + " field(s), got " +
                 std::to_string(tokens_.size() - 1));
    }

    [[nodiscard]] int number(std::size_t i, int lo, int hi) const
    {
        const auto& tok = tokens_.at(i);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            fail("'" + tok + "' is not an integer");
        if (value < lo || value > hi)
            fail(std::to_string(value) + " is outside " + std::to_string(lo) + ".." + std::to_string(hi));
        return value;
    }

private:
    std::istream& in_;
    int line_ = 0;
    std::vector<std::string> tokens_;
};

constexpr int id_limit = 1 << 24;

void header(LineReader& r, const std::string& what)
{
    if (!r.next())
        throw ParseError(r.line(), "empty " + what + " file");
}

void no_trailing(LineReader& r, const std::string& what)
{
    if (r.next())
        r.fail("unexpected line after the " + what);
}

} // namespace

Graph parse_graph(std::istream& in)
{
    LineReader r(in);
    header(r, "graph");
    r.expect("p", 2);
    int n = r.number(1, 0, id_limit);
    int m = r.number(2, 0, id_limit);
    int header_line = r.line();
    Graph g(n);
    for (int k = 0; k < m; ++k) {
        if (!r.next())
            throw ParseError(header_line, "header announces " + std::to_string(m) + " edges, found " + std::to_string(k));
        r.expect("e", 2);
        int u = r.number(1, 1, n), v = r.number(2, 1, n);
        if (u == v)
            r.fail("loop at vertex " + std::to_string(u));
        if (!g.add_edge(u, v))
            r.fail("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
    no_trailing(r, "edge list");
    return g;
}

ContractionSequence parse_sequence(std::istream& in)
{
    LineReader r(in);
    header(r, "sequence");
    r.expect("s", 2);
    int n = r.number(1, 1, id_limit);
    int k = r.number(2, 0, n - 1);
    int header_line = r.line();
    ContractionSequence s(n);
    for (int i = 1; i <= k; ++i) {
        if (!r.next())
            throw ParseError(header_line, "header announces " + std::to_string(k) + " steps, found " + std::to_string(i - 1));
        r.expect("c", 2);
        int u = r.number(1, 1, n + i - 1), v = r.number(2, 1, n + i - 1);
        if (u == v)
            r.fail("contraction of a part with itself");
        s.push(u, v);
    }
    no_trailing(r, "steps");
    return s;
}

BranchDecomposition parse_decomposition(std::istream& in)
{
    LineReader r(in);
    header(r, "decomposition");
    r.expect("t", 1);
    int size = r.number(1, 1, id_limit);
    std::vector<int> parent(static_cast<std::size_t>(size), -1), vertex(parent.size(), 0);
    int leaves = 0, max_vertex = 0, defined = 0, last_line = r.line();
    bool linear = false;
    while (r.next()) {
        last_line = r.line();
        const auto& tag = r.tokens().front();
        if (tag == "lin") {
            r.expect("lin", 0);
            linear = true;
            continue;
        }
        if (tag != "n" && tag != "l")
            r.fail("expected 'n', 'l' or 'lin' line, got '" + tag + "'");
        r.expect(tag, tag == "n" ? 2 : 3);
        int id = r.number(1, 1, size);
        auto slot = static_cast<std::size_t>(id - 1);
        if (parent[slot] != -1)
            r.fail("node " + std::to_string(id) + " defined twice");
        parent[slot] = r.number(2, tag == "n" ? 0 : 1, size);
        if (tag == "l") {
            vertex[slot] = r.number(3, 1, id_limit);
            ++leaves;
            max_vertex = std::max(max_vertex, vertex[slot]);
        }
        ++defined;
    }
    if (defined != size)
        throw ParseError(last_line, "header announces " + std::to_string(size) + " nodes, found " + std::to_string(defined));
    if (max_vertex != leaves)
        throw ParseError(last_line, "leaf vertices must be exactly 1.." + std::to_string(leaves));
    try {
        return BranchDecomposition(leaves, std::move(parent), std::move(vertex), linear);
    } catch (const InvalidInput& e) {
        throw ParseError(last_line, e.what());
    }
}

Matrix parse_matrix(std::istream& in)
{
    LineReader r(in);
    header(r, "matrix");
    r.expect("m", 2);
    int rows = r.number(1, 1, id_limit), cols = r.number(2, 1, id_limit);
    int header_line = r.line();
    std::vector<std::vector<std::string>> cells;
    for (int i = 0; i < rows; ++i) {
        if (!r.next())
            throw ParseError(header_line, "header announces " + std::to_string(rows) + " rows, found " + std::to_string(i));
        if (r.tokens().size() != static_cast<std::size_t>(cols))
            r.fail("row has " + std::to_string(r.tokens().size()) + " symbols, expected " + std::to_string(cols));
        cells.push_back(r.tokens());
    }
    no_trailing(r, "rows");
    return Matrix::from_symbols(cells);
}

Graph parse_graph(const std::string& text)
{
    std::istringstream in(text);
    return parse_graph(in);
}
ContractionSequence parse_sequence(const std::string& text)
{
    std::istringstream in(text);
    return parse_sequence(in);
}
BranchDecomposition parse_decomposition(const std::string& text)
{
    std::istringstream in(text);
    return parse_decomposition(in);
}
Matrix parse_matrix(const std::string& text)
{
    std::istringstream in(text);
    return parse_matrix(in);
}

std::string serialize(const Graph& g)
{
    std::ostringstream out;
    out << "p " << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges())
        out << "e " << u << ' ' << v << '\n';
    return out.str();
}

std::string serialize(const ContractionSequence& s)
{
    std::ostringstream out;
    out << "s " << s.n() << ' ' << s.size() << '\n';
    for (const auto& c : s.steps())
        out << "c " << c.u << ' ' << c.v << '\n';
    return out.str();
}

std::string serialize(const BranchDecomposition& t)
{
    std::ostringstream out;
    out << "t " << t.size() << '\n';
    for (int node = 1; node <= t.size(); ++node) {
        if (t.is_leaf(node))
            out << "l " << node << ' ' << t.parent(node) << ' ' << t.vertex(node) << '\n';
        else
            out << "n " << node << ' ' << t.parent(node) << '\n';
    }
    if (t.is_linear())
        out << "lin\n";
    return out.str();
}

std::string serialize(const Matrix& m)
{
    std::ostringstream out;
    out << "m " << m.rows() << ' ' << m.cols() << '\n';
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j)
            out << (j ? " " : "") << m.symbol(i, j);
        out << '\n';
    }
    return out.str();
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InvalidInput("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace tww::io
