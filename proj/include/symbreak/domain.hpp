#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace symbreak {

/// Finite set of value indices in [0, kCapacity) with cached bounds and size.
/// An empty domain is a valid state and means failure.
class Domain {
public:
    static constexpr int kCapacity = 256;

    Domain() = default;

    /// All indices in [lo, hi].
    static Domain range(int lo, int hi);
    static Domain singleton(int v) { return range(v, v); }

    bool empty() const { return size_ == 0; }
    bool fixed() const { return size_ == 1; }
    int size() const { return size_; }
    int min() const { return min_; }
    int max() const { return max_; }
    /// Only meaningful when fixed().
    int value() const { return min_; }

    bool contains(int v) const
    {
        if (v < min_ || v > max_)
            return false;
        return (words_[static_cast<unsigned>(v) >> 6] >> (static_cast<unsigned>(v) & 63)) & 1U;
    }

    // Mutators return true iff the set changed.
    bool remove(int v);
    bool restrict_to(int lo, int hi);
    bool assign(int v);
    /// Keeps only values present in `other`.
    bool intersect(const Domain& other);

    template <typename F>
    void for_each(F&& f) const
    {
        for (unsigned w = 0; w < kWords; ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                int b = std::countr_zero(bits);
                f(static_cast<int>(w * 64 + static_cast<unsigned>(b)));
                bits &= bits - 1;
            }
        }
    }

    std::string to_string() const;

    friend bool operator==(const Domain& a, const Domain& b) { return a.words_ == b.words_; }

private:
    static constexpr unsigned kWords = kCapacity / 64;

    void recompute();

    std::array<std::uint64_t, kWords> words_{};
    int min_ = 0;
    int max_ = -1;
    int size_ = 0;
};

} // namespace symbreak
