#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symbreak/csp.hpp"
#include "symbreak/perm.hpp"
#include "symbreak/symbreak.hpp"

namespace symbreak {

enum class VarHeuristic { FixedOrder, MinDomain };
enum class ValHeuristic { LexMin, RandomOrder };

struct BranchSpec {
    VarHeuristic var = VarHeuristic::FixedOrder;
    ValHeuristic val = ValHeuristic::LexMin;
    /// Seed of the value-order stream when val is RandomOrder.
    std::uint64_t seed = 0;
};

struct SearchLimits {
    /// Backtracks allowed before giving up. Must be at least 1 when set.
    std::optional<std::uint64_t> cutoff;
    /// Wall-clock limit in seconds.
    std::optional<double> timeLimit;
};

struct SearchStats {
    std::uint64_t backtracks = 0;
    std::uint64_t nodes = 0;
    std::uint64_t restarts = 0;
    std::uint64_t solutionsFound = 0;
    double wallTime = 0.0;

    SearchStats& operator+=(const SearchStats& o);
};

enum class Outcome { Solution, Exhausted, CutoffReached, TimedOut };

const char* to_string(Outcome o);

struct SolveResult {
    Outcome outcome = Outcome::Exhausted;
    std::optional<Assignment> solution;
    SearchStats stats;
};

struct OptimizeResult {
    std::optional<Assignment> best;
    std::optional<int> bestValue;
    bool provedOptimal = false;
    /// Exhausted when the search space was closed, otherwise the limit hit.
    Outcome outcome = Outcome::Exhausted;
    SearchStats stats;
};

struct EnumerateResult {
    std::vector<Assignment> solutions;
    Outcome outcome = Outcome::Exhausted;
    SearchStats stats;
};

/// Optional extras for a single search.
struct SearchOptions {
    BranchSpec branch;
    SearchLimits limits;
    /// Generators whose symmetric refutations are posted on every right
    /// branch (symmetry breaking during search).
    std::vector<Symmetry> sbds;
    /// Only solutions with objective below this value are accepted.
    std::optional<int> objectiveBound;
};

/// Depth-first search with propagation to a fixpoint at every node and
/// binary branching X=v / X!=v. One backtrack is one failed node. With a
/// cutoff c, the run reports CutoffReached (with c backtracks) on the failure
/// after the c-th.
SolveResult solve(const Csp& csp, const SymBreakSet& extra, const SearchOptions& options);
SolveResult solve(const Csp& csp, const SymBreakSet& extra, const BranchSpec& branch,
                  std::optional<std::uint64_t> cutoff = std::nullopt);

/// Branch and bound on the csp's objective: after each incumbent, only
/// strictly better solutions are accepted. The cutoff acts as a total
/// backtrack budget.
OptimizeResult optimize(const Csp& csp, const SymBreakSet& extra, const SearchOptions& options);

/// All solutions of csp + extra (and SBDS pruning, if any).
EnumerateResult enumerate_all(const Csp& csp, const SymBreakSet& extra, const SearchOptions& options = {});

} // namespace symbreak
