#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "symbreak/constraint.hpp"
#include "symbreak/csp.hpp"
#include "symbreak/perm.hpp"

namespace symbreak {

/// A set of symmetry-breaking constraints with a human-readable origin.
struct SymBreakSet {
    std::vector<Constraint> constraints;
    std::string label;

    bool empty() const { return constraints.empty(); }
};

/// Image of the set under g: variable i becomes g.var[i] and every view is
/// pre-composed with the inverse value map, so that sol(g(S)) = g(sol(S)).
/// Throws DimensionMismatch if a view falls outside g's ranges.
View apply_symmetry(const Symmetry& g, const View& v);
Constraint apply_symmetry(const Symmetry& g, const Constraint& c);
SymBreakSet apply_symmetry(const Symmetry& g, const SymBreakSet& s);

/// Cancels reflected views on the left of orderings, turning
/// `k - u < k - v` into `v < u` and min-bounds into max-bounds, and folds
/// affine parts of linear terms into coefficients. Semantics are unchanged.
Constraint simplify(const Constraint& c);
SymBreakSet simplify(const SymBreakSet& s);

enum class Classification { Eliminates, BreaksNotEliminates, DoesNotBreak };

const char* to_string(Classification c);

/// Exact classification of S against g over sol(csp + S). An empty solution
/// set is reported as DoesNotBreak.
Classification classify(const Csp& csp, const SymBreakSet& s, const Symmetry& g,
                        std::size_t bound = 100000000);
/// Same, given the solutions of csp + S.
Classification classify(std::span<const Assignment> survivors, const SymBreakSet& s, const Symmetry& g);

/// Copy of csp with S posted.
Csp with_constraints(const Csp& csp, const SymBreakSet& s);

// Printing in the usual textual notation, e.g. "X[4,1] > 17 - min(X[4,1], X[1,4])".
std::string format_view(const View& v, const std::vector<std::string>& names);
std::string format_constraint(const Constraint& c, const std::vector<std::string>& names);
std::string format_set(const SymBreakSet& s, const std::vector<std::string>& names);

} // namespace symbreak
