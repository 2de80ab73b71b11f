#include "symbreak/strategies.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <stdexcept>

namespace symbreak {

std::string log_header() { return "restart\tsymmetry\tbacktracks\toutcome"; }

std::string format_log_entry(const RestartLogEntry& e)
{
    return std::to_string(e.index) + "\t" + e.symmetry + "\t" + std::to_string(e.backtracks) + "\t" +
           to_string(e.outcome);
}

namespace {

using Clock = std::chrono::steady_clock;

SearchOptions options_for(const BranchSpec& branch, const StrategyLimits& limits)
{
    SearchOptions o;
    o.branch = branch;
    o.limits.cutoff = limits.budget;
    o.limits.timeLimit = limits.timeLimit;
    return o;
}

StrategyResult from_solve(SolveResult r)
{
    StrategyResult out;
    out.outcome = r.outcome;
    out.solution = std::move(r.solution);
    out.provedOptimal = r.outcome == Outcome::Solution || r.outcome == Outcome::Exhausted;
    out.stats = r.stats;
    return out;
}

StrategyResult from_optimize(OptimizeResult r)
{
    StrategyResult out;
    out.solution = std::move(r.best);
    out.objective = r.bestValue;
    out.provedOptimal = r.provedOptimal && out.solution.has_value();
    out.outcome = out.solution ? Outcome::Solution : r.outcome;
    out.stats = r.stats;
    return out;
}

StrategyResult run_once(const Csp& csp, const SymBreakSet& s, const SearchOptions& options)
{
    if (csp.objective())
        return from_optimize(optimize(csp, s, options));
    return from_solve(solve(csp, s, options));
}

} // namespace

StrategyResult run_static(const Csp& csp, const SymBreakSet& s, const BranchSpec& branch, const StrategyLimits& limits)
{
    return run_once(csp, s, options_for(branch, limits));
}

StrategyResult run_sbds(const Csp& csp, std::span<const Symmetry> generators, const BranchSpec& branch,
                        const StrategyLimits& limits)
{
    SearchOptions options = options_for(branch, limits);
    options.sbds.assign(generators.begin(), generators.end());
    return run_once(csp, SymBreakSet{}, options);
}

std::uint64_t restart_seed(std::uint64_t masterSeed, std::uint64_t index)
{
    // splitmix64 finalizer over the pair.
    std::uint64_t z = masterSeed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

StrategyResult run_model_restarts(const Csp& csp, const SymBreakSet& s, const SymmetryGroup& group,
                                  const BranchSpec& branch, const RestartConfig& cfg, const StrategyLimits& limits)
{
    if (cfg.cutoff < 1)
        throw std::invalid_argument("restart cutoff must be at least 1");
    const auto start = Clock::now();
    const bool optimizing = csp.objective().has_value();
    std::mt19937_64 rng(cfg.masterSeed);
    StrategyResult result;
    result.outcome = Outcome::CutoffReached;

    for (std::uint64_t i = 0;; ++i) {
        if (cfg.maxRestarts && i > *cfg.maxRestarts)
            break;
        std::uint64_t cutoff = cfg.cutoff;
        bool budgetBound = false;
        if (limits.budget) {
            if (result.stats.backtracks >= *limits.budget)
                break;
            const std::uint64_t left = *limits.budget - result.stats.backtracks;
            if (left <= cutoff) {
                cutoff = left;
                budgetBound = true;
            }
        }
        SearchOptions options;
        options.branch = branch;
        options.branch.seed = restart_seed(cfg.masterSeed, i);
        options.limits.cutoff = cutoff;
        if (limits.timeLimit) {
            const double left = *limits.timeLimit - std::chrono::duration<double>(Clock::now() - start).count();
            if (left <= 0) {
                result.outcome = Outcome::TimedOut;
                break;
            }
            options.limits.timeLimit = left;
        }
        if (optimizing)
            options.objectiveBound = result.objective;

        Symmetry g = random_element(group, rng);
        const SymBreakSet image = apply_symmetry(g, s);
        StrategyResult run = run_once(csp, image, options);

        result.stats.backtracks += run.stats.backtracks;
        result.stats.nodes += run.stats.nodes;
        result.stats.solutionsFound += run.stats.solutionsFound;
        result.stats.restarts = i;
        Outcome logged = run.outcome;
        if (optimizing && run.solution && !run.provedOptimal)
            logged = Outcome::CutoffReached;
        result.log.push_back({i, g.describe(), run.stats.backtracks, logged});
        result.finalSymmetry = g;

        if (run.solution) {
            result.solution = std::move(run.solution);
            result.objective = run.objective;
        }
        if (!optimizing) {
            if (run.outcome == Outcome::Solution || run.outcome == Outcome::Exhausted ||
                run.outcome == Outcome::TimedOut) {
                result.outcome = run.outcome;
                result.provedOptimal = run.outcome != Outcome::TimedOut;
                break;
            }
        } else {
            // A run that closes its search space proves the incumbent optimal
            // (or the problem infeasible): every g(S) is sound.
            const bool closed = run.provedOptimal || (!run.solution && run.outcome == Outcome::Exhausted);
            if (closed) {
                result.provedOptimal = result.solution.has_value();
                result.outcome = result.solution ? Outcome::Solution : Outcome::Exhausted;
                break;
            }
            if (run.outcome == Outcome::TimedOut) {
                result.outcome = Outcome::TimedOut;
                break;
            }
        }
        if (budgetBound && run.outcome == Outcome::CutoffReached)
            break;
    }
    if (optimizing && !result.provedOptimal && result.solution && result.outcome != Outcome::TimedOut)
        result.outcome = Outcome::Solution;
    else if (optimizing && result.solution && result.outcome == Outcome::TimedOut)
        result.outcome = Outcome::Solution;
    result.stats.wallTime = std::chrono::duration<double>(Clock::now() - start).count();
    return result;
}

std::optional<double> expected_restart_cost(std::span<const std::uint64_t> counts, std::uint64_t cutoff)
{
    if (counts.empty())
        return std::nullopt;
    double successSum = 0.0;
    std::size_t over = 0;
    for (auto b : counts) {
        if (b <= cutoff)
            successSum += static_cast<double>(b);
        else
            ++over;
    }
    if (over == counts.size())
        return std::nullopt;
    return (successSum + static_cast<double>(over) * static_cast<double>(cutoff)) /
           static_cast<double>(counts.size() - over);
}

double simulate_restart_cost(std::span<const std::uint64_t> counts, std::uint64_t cutoff, std::size_t trials,
                             std::uint64_t seed)
{
    if (!expected_restart_cost(counts, cutoff))
        throw std::invalid_argument("every count exceeds the cutoff; the process never stops");
    std::mt19937_64 rng(seed);
    double total = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        std::uint64_t spent = 0;
        while (true) {
            const std::uint64_t b = counts[static_cast<std::size_t>(uniform_below(rng, counts.size()))];
            if (b <= cutoff) {
                spent += b;
                break;
            }
            spent += cutoff;
        }
        total += static_cast<double>(spent);
    }
    return total / static_cast<double>(trials);
}

double robustness_ratio(std::uint64_t a, std::uint64_t b)
{
    const double x = static_cast<double>(std::max<std::uint64_t>(a, 1));
    const double y = static_cast<double>(std::max<std::uint64_t>(b, 1));
    return std::max(x, y) / std::min(x, y);
}

} // namespace symbreak
