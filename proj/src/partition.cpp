#include "tww/partition.hpp"

#include "tww/errors.hpp"

#include <string>

namespace tww {

Partition::Partition(int n, std::map<int, VertexSet> parts) : n_(n), parts_(std::move(parts))
{
    VertexSet seen(static_cast<std::size_t>(n) + 1);
    int total = 0;
    for (const auto& [id, members] : parts_) {
        if (members.size() != seen.size())
            throw InvalidInput("part " + std::to_string(id) + " has the wrong universe size");
        if (members.empty())
            throw InvalidInput("part " + std::to_string(id) + " is empty");
        if (members.test(0))
            throw InvalidInput("vertex 0 does not exist");
        if (members.intersects(seen))
            throw InvalidInput("part " + std::to_string(id) + " overlaps another part");
        seen |= members;
        total += members.count();
    }
    if (total != n)
        throw InvalidInput("parts do not cover all " + std::to_string(n) + " vertices");
}

Partition Partition::singletons(int n)
{
    std::map<int, VertexSet> parts;
    for (int v = 1; v <= n; ++v)
        parts.emplace(v, VertexSet(static_cast<std::size_t>(n) + 1, {v}));
    return Partition(n, std::move(parts));
}

Partition Partition::from_lists(int n, const std::vector<std::vector<int>>& lists)
{
    std::map<int, VertexSet> parts;
    int next = n + 1;
    for (const auto& list : lists) {
        VertexSet s(static_cast<std::size_t>(n) + 1);
        for (int v : list) {
            if (v < 1 || v > n)
                throw InvalidInput("vertex " + std::to_string(v) + " out of range");
            s.set(v);
        }
        int id = list.size() == 1 ? list.front() : next++;
        if (!parts.emplace(id, std::move(s)).second)
            throw InvalidInput("duplicate part-id " + std::to_string(id));
    }
    return Partition(n, std::move(parts));
}

const VertexSet& Partition::part(int id) const
{
    auto it = parts_.find(id);
    if (it == parts_.end())
        throw InvalidInput("no part with id " + std::to_string(id));
    return it->second;
}

int Partition::part_of(int v) const
{
    for (const auto& [id, members] : parts_)
        if (members.test(v))
            return id;
    throw InvalidInput("vertex " + std::to_string(v) + " not covered");
}

void Partition::merge(int a, int b, int new_id)
{
    if (a == b || !contains(a) || !contains(b))
        throw InvalidContraction("cannot merge parts " + std::to_string(a) + " and " + std::to_string(b));
    if (contains(new_id))
        throw InvalidContraction("part-id " + std::to_string(new_id) + " is not fresh");
    VertexSet merged = parts_.at(a) | parts_.at(b);
    parts_.erase(a);
    parts_.erase(b);
    parts_.emplace(new_id, std::move(merged));
}

} // namespace tww
