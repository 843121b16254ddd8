#include "tww/kernels.hpp"

#include <omp.h>

#include <unordered_set>

namespace tww::kernels {

namespace {

struct MaskHash {
    std::size_t operator()(const std::vector<ColorMask>& v) const noexcept
    {
        std::size_t h = 0x9e3779b97f4a7c15ULL;
        for (auto m : v)
            h = (h ^ m) * 0x100000001b3ULL;
        return h;
    }
};

using Seen = std::unordered_set<std::vector<ColorMask>, MaskHash>;

std::uint64_t product_size(const FusionPlan& plan)
{
    std::uint64_t total = 1;
    for (const auto& in : plan.inputs)
        total *= in->size();
    return total;
}

// Decodes combination `index` (mixed radix, first input fastest) and
// appends its union profile to `out` unless it conflicts or was seen.
class Enumerator {
public:
    explicit Enumerator(const FusionPlan& plan) : plan_(plan), pick_(plan.inputs.size(), 0) {}

    void run(std::uint64_t begin, std::uint64_t end, ProfileSet& out, Seen& seen)
    {
        for (std::uint64_t index = begin; index < end; ++index) {
            std::uint64_t rest = index;
            for (std::size_t j = 0; j < pick_.size(); ++j) {
                auto size = plan_.inputs[j]->size();
                pick_[j] = static_cast<std::size_t>(rest % size);
                rest /= size;
            }
            if (conflicting())
                continue;
            std::vector<ColorMask> profile(plan_.parts.size(), 0);
            for (std::size_t k = 0; k < profile.size(); ++k)
                for (const auto& slot : plan_.sources[k])
                    profile[k] |= mask(slot);
            if (!seen.insert(profile).second)
                continue;
            out.profiles.push_back(std::move(profile));
            if (plan_.witnesses) {
                std::vector<std::uint8_t> w;
                for (std::size_t j = 0; j < pick_.size(); ++j) {
                    const auto& src = plan_.inputs[j]->witnesses[pick_[j]];
                    if (w.empty())
                        w.assign(src.size(), 0);
                    for (std::size_t v = 0; v < src.size(); ++v)
                        w[v] |= src[v];
                }
                out.witnesses.push_back(std::move(w));
            }
        }
    }

private:
    ColorMask mask(const FusionPlan::Slot& s) const
    {
        auto j = static_cast<std::size_t>(s.input);
        return plan_.inputs[j]->profiles[pick_[j]][static_cast<std::size_t>(s.part)];
    }
    bool conflicting() const
    {
        for (const auto& c : plan_.conflicts)
            if (mask(c.a) & mask(c.b))
                return true;
        return false;
    }

    const FusionPlan& plan_;
    std::vector<std::size_t> pick_;
};

} // namespace

FusionResult fuse_profiles(const FusionPlan& plan)
{
    FusionResult r;
    r.set.parts = plan.parts;
    r.combinations = product_size(plan);
    if (r.combinations == 0)
        return r;

    int threads = omp_get_max_threads();
    if (r.combinations < 4096 || threads <= 1) {
        Seen seen;
        Enumerator(plan).run(0, r.combinations, r.set, seen);
        return r;
    }

    // contiguous chunks, concatenated in chunk order: first occurrences survive
    std::vector<ProfileSet> local(static_cast<std::size_t>(threads));
#pragma omp parallel num_threads(threads)
    {
        auto t = static_cast<std::uint64_t>(omp_get_thread_num());
        auto count = static_cast<std::uint64_t>(omp_get_num_threads());
        std::uint64_t begin = r.combinations * t / count, end = r.combinations * (t + 1) / count;
        Seen seen;
        Enumerator(plan).run(begin, end, local[t], seen);
    }
    Seen seen;
    for (auto& part : local)
        for (std::size_t i = 0; i < part.profiles.size(); ++i)
            if (seen.insert(part.profiles[i]).second) {
                r.set.profiles.push_back(std::move(part.profiles[i]));
                if (plan.witnesses)
                    r.set.witnesses.push_back(std::move(part.witnesses[i]));
            }
    return r;
}

namespace serial {

FusionResult fuse_profiles(const FusionPlan& plan)
{
    FusionResult r;
    r.set.parts = plan.parts;
    r.combinations = product_size(plan);
    Seen seen;
    Enumerator(plan).run(0, r.combinations, r.set, seen);
    return r;
}

} // namespace serial

} // namespace tww::kernels
