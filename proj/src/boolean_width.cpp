#include "tww/boolean_width.hpp"

#include "tww/errors.hpp"
#include "tww/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace tww {

double CutProfile::boolean_width() const
{
    return exact ? std::log2(static_cast<double>(union_closure_size)) : upper();
}

double CutProfile::lower() const
{
    if (exact)
        return boolean_width();
    return std::log2(static_cast<double>(std::max(distinct_neighborhoods, 1)));
}

double CutProfile::upper() const
{
    return exact ? boolean_width() : static_cast<double>(distinct_neighborhoods);
}

CutProfile cut_profile(const Graph& g, const VertexSet& x, std::int64_t cap)
{
    VertexSet all = g.all();
    if (x.size() != all.size())
        throw InvalidInput("cut side has the wrong universe size");
    int k = x.count();
    if (k == 0 || k == g.n() || !x.is_subset_of(all))
        throw InvalidInput("cut side must be a proper nonempty vertex subset");
    VertexSet y = all - x;

    std::unordered_set<VertexSet, VertexSetHash> traces;
    x.for_each([&](int v) { traces.insert(g.neighbors(v) & y); });

    CutProfile out;
    out.side = x;
    out.distinct_neighborhoods = static_cast<int>(traces.size());

    std::unordered_set<VertexSet, VertexSetHash> closure{g.empty_set()};
    std::vector<VertexSet> members{g.empty_set()};
    for (const auto& t : traces) {
        if (t.empty())
            continue;
        std::size_t before = members.size();
        for (std::size_t i = 0; i < before; ++i) {
            VertexSet u = members[i] | t;
            if (closure.insert(u).second) {
                members.push_back(std::move(u));
                if (static_cast<std::int64_t>(members.size()) > cap) {
                    out.union_closure_size = static_cast<std::int64_t>(members.size());
                    out.exact = false;
                    return out;
                }
            }
        }
    }
    out.union_closure_size = static_cast<std::int64_t>(members.size());
    out.exact = true;
    return out;
}

bool WidthBracket::at_most(int d) const noexcept
{
    if (!exact)
        return false;
    if (d >= 62)
        return true;
    return max_closure <= (std::int64_t{1} << d);
}

namespace {

WidthBracket fold(const std::vector<CutProfile>& cuts)
{
    WidthBracket w;
    for (const auto& c : cuts) {
        w.lower = std::max(w.lower, c.lower());
        w.upper = std::max(w.upper, c.upper());
        w.max_q = std::max(w.max_q, c.distinct_neighborhoods);
        if (c.exact)
            w.max_closure = std::max(w.max_closure, c.union_closure_size);
        else
            w.exact = false;
    }
    return w;
}

} // namespace

WidthBracket bd_boolean_width(const Graph& g, const BranchDecomposition& t, std::int64_t cap)
{
    if (t.n() != g.n())
        throw InvalidInput("decomposition has " + std::to_string(t.n()) + " leaves, graph has " +
                           std::to_string(g.n()) + " vertices");
    return fold(kernels::cut_profiles(g, t.cut_sides(), cap));
}

bool bd_boolean_width_at_most(const Graph& g, const BranchDecomposition& t, int d)
{
    std::int64_t cap = d >= 62 ? std::numeric_limits<std::int64_t>::max() : (std::int64_t{1} << d);
    return bd_boolean_width(g, t, cap).at_most(d);
}

} // namespace tww
