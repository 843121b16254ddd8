#include "tww/kernels.hpp"

#include <exception>

namespace tww::kernels {

std::vector<CutProfile> cut_profiles(const Graph& g, const std::vector<VertexSet>& sides, std::int64_t cap)
{
    std::vector<CutProfile> out(sides.size());
    std::exception_ptr failure;
    const auto count = static_cast<long>(sides.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < count; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = cut_profile(g, sides[static_cast<std::size_t>(i)], cap);
        } catch (...) {
#pragma omp critical(cut_profiles_failure)
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);
    return out;
}

namespace serial {

std::vector<CutProfile> cut_profiles(const Graph& g, const std::vector<VertexSet>& sides, std::int64_t cap)
{
    std::vector<CutProfile> out;
    out.reserve(sides.size());
    for (const auto& s : sides)
        out.push_back(cut_profile(g, s, cap));
    return out;
}

} // namespace serial

} // namespace tww::kernels
