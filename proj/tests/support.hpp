#pragma once

#include <array>
#include <vector>

#include "symbreak/csp.hpp"

namespace symbreak::test {

// The four 4x4 most-perfect squares of the running example, row by row.
inline const std::array<std::vector<int>, 4> kSquares = {{
    {14, 11, 5, 4, 1, 8, 10, 15, 12, 13, 3, 6, 7, 2, 16, 9},
    {4, 5, 11, 14, 15, 10, 8, 1, 6, 3, 13, 12, 9, 16, 2, 7},
    {3, 6, 12, 13, 16, 9, 7, 2, 5, 4, 14, 11, 10, 15, 1, 8},
    {13, 12, 6, 3, 2, 7, 9, 16, 11, 14, 4, 5, 8, 1, 15, 10},
}};

/// Square k (1-based, as numbered in the text) as value indices of csp.
inline Assignment square(const Csp& csp, int k) { return csp.from_values(kSquares[static_cast<std::size_t>(k - 1)]); }

} // namespace symbreak::test
