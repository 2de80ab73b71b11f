#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symbreak/csp.hpp"
#include "symbreak/perm.hpp"
#include "symbreak/search.hpp"
#include "symbreak/symbreak.hpp"

namespace symbreak {

struct RestartConfig {
    std::uint64_t cutoff = 1000;
    std::optional<std::uint64_t> maxRestarts;
    std::uint64_t masterSeed = 0;
};

struct RestartLogEntry {
    std::uint64_t index = 0;
    std::string symmetry;
    std::uint64_t backtracks = 0;
    Outcome outcome = Outcome::CutoffReached;
};

/// "restart<TAB>symmetry<TAB>backtracks<TAB>outcome".
std::string format_log_entry(const RestartLogEntry& e);
std::string log_header();

/// Result of a strategy. For satisfaction problems `objective` is empty and
/// provedOptimal mirrors whether the outcome is final.
struct StrategyResult {
    /// Solution, Exhausted (infeasible or optimum proved), or the limit that
    /// stopped the run: CutoffReached for a spent budget, TimedOut.
    Outcome outcome = Outcome::Exhausted;
    std::optional<Assignment> solution;
    std::optional<int> objective;
    bool provedOptimal = false;
    SearchStats stats;
    std::vector<RestartLogEntry> log;
    /// The symmetry whose image of S was posted in the final run.
    std::optional<Symmetry> finalSymmetry;
};

/// Limits shared by every strategy: a total backtrack budget and a time
/// limit for the whole run.
struct StrategyLimits {
    std::optional<std::uint64_t> budget;
    std::optional<double> timeLimit;
};

/// S posted once; plain search (or branch and bound if the csp has an objective).
StrategyResult run_static(const Csp& csp, const SymBreakSet& s, const BranchSpec& branch,
                          const StrategyLimits& limits = {});

/// Repeatedly samples g from the group, posts g(S) and searches with the
/// cutoff. Nothing carries over between restarts except, when optimizing,
/// the incumbent's objective value. RandomOrder value streams are reseeded
/// per restart from the master seed.
StrategyResult run_model_restarts(const Csp& csp, const SymBreakSet& s, const SymmetryGroup& group,
                                  const BranchSpec& branch, const RestartConfig& cfg,
                                  const StrategyLimits& limits = {});

/// Symmetry breaking during search on the given generators.
StrategyResult run_sbds(const Csp& csp, std::span<const Symmetry> generators, const BranchSpec& branch,
                        const StrategyLimits& limits = {});

/// Seed of the value-order stream for restart `index`.
std::uint64_t restart_seed(std::uint64_t masterSeed, std::uint64_t index);

/// Expected total backtracks of the restart process when each restart picks
/// one of k symmetries uniformly and symmetry i needs counts[i] backtracks:
/// the fixed point of t = (1/k) sum_{b<=c} b + (1/k) sum_{b>c} (c + t).
/// Empty when every count exceeds the cutoff.
std::optional<double> expected_restart_cost(std::span<const std::uint64_t> counts, std::uint64_t cutoff);

/// Mean total backtracks over simulated restart runs.
double simulate_restart_cost(std::span<const std::uint64_t> counts, std::uint64_t cutoff, std::size_t trials,
                             std::uint64_t seed);

/// max(a, b) / min(a, b) with zero counts treated as one.
double robustness_ratio(std::uint64_t a, std::uint64_t b);

} // namespace symbreak
