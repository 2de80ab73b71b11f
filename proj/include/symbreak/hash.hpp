#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace symbreak {

inline std::size_t hash_combine(std::size_t seed, std::size_t value)
{
    return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

inline std::size_t hash_ints(std::span<const int> values)
{
    std::size_t h = values.size();
    for (int v : values)
        h = hash_combine(h, static_cast<std::size_t>(static_cast<std::uint32_t>(v)));
    return h;
}

struct IntVectorHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept { return hash_ints(v); }
};

} // namespace symbreak
