#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace tww {

/// Fixed-width bit vector over the index range [0, size).
///
/// Used both for sets of original vertices (ids 1..n, bit 0 unused) and for
/// sets of part-ids in a trigraph. Binary operators require equal sizes.
class VertexSet {
public:
    using word_type = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    VertexSet() = default;
    explicit VertexSet(std::size_t size) : size_(size), words_((size + word_bits - 1) / word_bits, 0) {}
    VertexSet(std::size_t size, std::initializer_list<int> members) : VertexSet(size)
    {
        for (int m : members)
            set(m);
    }

    [[nodiscard]] std::size_t size() const noexcept { return size_; }

    [[nodiscard]] bool test(int i) const noexcept
    {
        auto idx = static_cast<std::size_t>(i);
        return idx < size_ && ((words_[idx / word_bits] >> (idx % word_bits)) & 1U);
    }
    void set(int i) noexcept
    {
        auto idx = static_cast<std::size_t>(i);
        words_[idx / word_bits] |= word_type{1} << (idx % word_bits);
    }
    void reset(int i) noexcept
    {
        auto idx = static_cast<std::size_t>(i);
        words_[idx / word_bits] &= ~(word_type{1} << (idx % word_bits));
    }
    void assign(int i, bool value) noexcept { value ? set(i) : reset(i); }
    void clear() noexcept { std::fill(words_.begin(), words_.end(), 0); }

    /// Grows (never shrinks) the index range; new bits are zero.
    void resize(std::size_t size)
    {
        if (size <= size_)
            return;
        size_ = size;
        words_.resize((size + word_bits - 1) / word_bits, 0);
    }

    [[nodiscard]] int count() const noexcept
    {
        int c = 0;
        for (auto w : words_)
            c += std::popcount(w);
        return c;
    }
    [[nodiscard]] bool empty() const noexcept
    {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }
    [[nodiscard]] bool any() const noexcept { return !empty(); }

    [[nodiscard]] bool intersects(const VertexSet& o) const noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i])
                return true;
        return false;
    }
    [[nodiscard]] bool is_subset_of(const VertexSet& o) const noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i])
                return false;
        return true;
    }
    /// popcount(this & o) without materializing the intersection.
    [[nodiscard]] int count_and(const VertexSet& o) const noexcept
    {
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }
    /// True iff (this & mask) == (o & mask).
    [[nodiscard]] bool equal_on(const VertexSet& o, const VertexSet& mask) const noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((words_[i] ^ o.words_[i]) & mask.words_[i])
                return false;
        return true;
    }

    /// Smallest member >= from, or -1.
    [[nodiscard]] int next(int from) const noexcept
    {
        if (from < 0)
            from = 0;
        auto idx = static_cast<std::size_t>(from);
        if (idx >= size_)
            return -1;
        std::size_t w = idx / word_bits;
        word_type cur = words_[w] & (~word_type{0} << (idx % word_bits));
        while (true) {
            if (cur)
                return static_cast<int>(w * word_bits + static_cast<std::size_t>(std::countr_zero(cur)));
            if (++w >= words_.size())
                return -1;
            cur = words_[w];
        }
    }
    [[nodiscard]] int first() const noexcept { return next(0); }

    template <typename F>
    void for_each(F&& f) const
    {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            word_type cur = words_[w];
            while (cur) {
                f(static_cast<int>(w * word_bits + static_cast<std::size_t>(std::countr_zero(cur))));
                cur &= cur - 1;
            }
        }
    }

    [[nodiscard]] std::vector<int> members() const
    {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    VertexSet& operator|=(const VertexSet& o) noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator^=(const VertexSet& o) noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] ^= o.words_[i];
        return *this;
    }
    /// Set difference.
    VertexSet& operator-=(const VertexSet& o) noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend auto operator<=>(const VertexSet& a, const VertexSet& b)
    {
        // lexicographic on the member list, so ordered containers sort the way humans read sets
        int i = a.first(), j = b.first();
        while (i >= 0 && j >= 0) {
            if (i != j)
                return i <=> j;
            i = a.next(i + 1);
            j = b.next(j + 1);
        }
        if (i < 0 && j < 0)
            return std::strong_ordering::equal;
        return i < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }

    [[nodiscard]] std::size_t hash() const noexcept
    {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (auto w : words_) {
            h ^= static_cast<std::size_t>(w);
            h *= 0x100000001b3ULL;
            h ^= h >> 29;
        }
        return h;
    }

    [[nodiscard]] const std::vector<word_type>& words() const noexcept { return words_; }

private:
    std::size_t size_ = 0;
    std::vector<word_type> words_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const noexcept { return s.hash(); }
};

} // namespace tww
