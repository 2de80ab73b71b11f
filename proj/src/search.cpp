#include "symbreak/search.hpp"

#include <chrono>
#include <deque>
#include <random>
#include <stdexcept>

namespace symbreak {

SearchStats& SearchStats::operator+=(const SearchStats& o)
{
    backtracks += o.backtracks;
    nodes += o.nodes;
    restarts += o.restarts;
    solutionsFound += o.solutionsFound;
    wallTime += o.wallTime;
    return *this;
}

const char* to_string(Outcome o)
{
    switch (o) {
    case Outcome::Solution:
        return "solution";
    case Outcome::Exhausted:
        return "exhausted";
    case Outcome::CutoffReached:
        return "cutoff";
    case Outcome::TimedOut:
        return "timeout";
    }
    return "?";
}

namespace {

enum class Mode { First, All, Optimize };
enum class Flow { Continue, Stop };

// If every guard literal holds then var != val.
struct Nogood {
    std::vector<std::pair<int, int>> guard;
    int var;
    int val;
};

class Engine {
public:
    Engine(const Csp& csp, const SymBreakSet& extra, const SearchOptions& options, Mode mode)
        : csp_(csp), options_(options), mode_(mode), rng_(options.branch.seed),
          watchers_(static_cast<std::size_t>(csp.var_count())), start_(Clock::now())
    {
        if (options.limits.cutoff && *options.limits.cutoff == 0)
            throw std::invalid_argument("cutoff must be at least 1");
        for (const auto& g : options.sbds)
            if (g.var_count() != csp.var_count() || g.value_count() != csp.value_count())
                throw DimensionMismatch("SBDS generator does not match the problem dimensions");
        if (mode == Mode::Optimize && !csp.objective())
            throw std::invalid_argument("optimize needs an objective");
        for (const auto& c : csp.constraints())
            add_constraint(c);
        for (const auto& c : extra.constraints) {
            for_each_view(c, [&](const View& v) {
                if (v.var >= csp.var_count())
                    throw std::out_of_range("extra constraint references a variable outside the problem");
            });
            add_constraint(c);
        }
        if (options.objectiveBound)
            set_cuts(*options.objectiveBound);
    }

    void run()
    {
        std::vector<Domain> doms = csp_.domains();
        std::vector<int> all;
        ++stats_.nodes;
        if (fixpoint(doms, all, true) == PropStatus::Fail) {
            fail();
            finish();
            return;
        }
        std::vector<std::pair<int, int>> positives;
        dfs(doms, positives);
        finish();
    }

    Outcome outcome() const { return outcome_; }
    SearchStats stats() const { return stats_; }
    std::vector<Assignment>& solutions() { return solutions_; }
    std::optional<int> best_value() const { return bestValue_; }

private:
    using Clock = std::chrono::steady_clock;

    int add_constraint(Constraint c)
    {
        const int idx = static_cast<int>(constraints_.size());
        for (int v : variables_of(c))
            watchers_[static_cast<std::size_t>(v)].push_back(idx);
        constraints_.push_back(std::move(c));
        return idx;
    }

    void set_cuts(int bound)
    {
        const auto& obj = *csp_.objective();
        std::vector<Constraint> cuts;
        if (obj.kind == Objective::Kind::Distinct) {
            cuts.push_back(at_most_nvalues(obj.views, bound - 1));
        } else {
            for (const auto& v : obj.views)
                cuts.push_back(linear_le({v}, {1}, bound - 1));
        }
        if (cuts_.empty()) {
            for (auto& c : cuts)
                cuts_.push_back(add_constraint(std::move(c)));
        } else {
            for (std::size_t i = 0; i < cuts.size(); ++i)
                constraints_[static_cast<std::size_t>(cuts_[i])] = std::move(cuts[i]);
        }
    }

    PropStatus fixpoint(std::vector<Domain>& doms, std::span<const int> seeds, bool all)
    {
        std::deque<int> queue;
        inQueue_.assign(constraints_.size(), 0);
        auto push = [&](int c) {
            if (!inQueue_[static_cast<std::size_t>(c)]) {
                inQueue_[static_cast<std::size_t>(c)] = 1;
                queue.push_back(c);
            }
        };
        auto wake = [&](int var, int except) {
            for (int w : watchers_[static_cast<std::size_t>(var)])
                if (w != except)
                    push(w);
        };
        if (all) {
            for (int c = 0; c < static_cast<int>(constraints_.size()); ++c)
                push(c);
        } else {
            for (int v : seeds)
                wake(v, -1);
            for (int c : cuts_)
                push(c);
        }
        std::vector<int> changed;
        while (true) {
            while (!queue.empty()) {
                const int c = queue.front();
                queue.pop_front();
                inQueue_[static_cast<std::size_t>(c)] = 0;
                changed.clear();
                if (propagate(constraints_[static_cast<std::size_t>(c)], doms, &changed) == PropStatus::Fail)
                    return PropStatus::Fail;
                for (int v : changed)
                    wake(v, c);
            }
            changed.clear();
            if (apply_nogoods(doms, changed) == PropStatus::Fail)
                return PropStatus::Fail;
            if (changed.empty())
                return PropStatus::Ok;
            for (int v : changed)
                wake(v, -1);
        }
    }

    PropStatus apply_nogoods(std::vector<Domain>& doms, std::vector<int>& changed)
    {
        for (const auto& ng : nogoods_) {
            int open = -1;
            bool dead = false;
            for (std::size_t i = 0; i < ng.guard.size() && !dead; ++i) {
                const auto [var, val] = ng.guard[i];
                const Domain& d = doms[static_cast<std::size_t>(var)];
                if (!d.contains(val))
                    dead = true;
                else if (!d.fixed())
                    open = open == -1 ? static_cast<int>(i) : -2;
            }
            if (dead || open == -2)
                continue;
            Domain& target = doms[static_cast<std::size_t>(ng.var)];
            if (open == -1) {
                if (target.remove(ng.val)) {
                    changed.push_back(ng.var);
                    if (target.empty())
                        return PropStatus::Fail;
                }
            } else if (target.fixed() && target.value() == ng.val) {
                const auto [var, val] = ng.guard[static_cast<std::size_t>(open)];
                Domain& d = doms[static_cast<std::size_t>(var)];
                d.remove(val);
                changed.push_back(var);
                if (d.empty())
                    return PropStatus::Fail;
            }
        }
        return PropStatus::Ok;
    }

    int select_var(const std::vector<Domain>& doms) const
    {
        int best = -1;
        for (int i = 0; i < static_cast<int>(doms.size()); ++i) {
            const int size = doms[static_cast<std::size_t>(i)].size();
            if (size <= 1)
                continue;
            if (options_.branch.var == VarHeuristic::FixedOrder)
                return i;
            if (best < 0 || size < doms[static_cast<std::size_t>(best)].size())
                best = i;
        }
        return best;
    }

    int select_value(const Domain& d)
    {
        if (options_.branch.val == ValHeuristic::LexMin)
            return d.min();
        std::uint64_t k = uniform_below(rng_, static_cast<std::uint64_t>(d.size()));
        int chosen = d.min();
        d.for_each([&](int x) {
            if (k-- == 0)
                chosen = x;
        });
        return chosen;
    }

    // Counts a failed node; true when the cutoff stops the search.
    bool fail()
    {
        ++stats_.backtracks;
        const auto& cutoff = options_.limits.cutoff;
        if (cutoff && stats_.backtracks > *cutoff) {
            stats_.backtracks = *cutoff;
            outcome_ = Outcome::CutoffReached;
            return true;
        }
        return false;
    }

    bool timed_out()
    {
        if (!options_.limits.timeLimit)
            return false;
        if ((stats_.nodes & 63) != 0)
            return false;
        const double elapsed = std::chrono::duration<double>(Clock::now() - start_).count();
        if (elapsed > *options_.limits.timeLimit) {
            outcome_ = Outcome::TimedOut;
            return true;
        }
        return false;
    }

    bool leaf_ok(const Assignment& values) const
    {
        for (const auto& c : constraints_)
            if (!eval(c, values))
                return false;
        for (const auto& ng : nogoods_) {
            bool guardHolds = true;
            for (const auto& [var, val] : ng.guard)
                guardHolds = guardHolds && values[static_cast<std::size_t>(var)] == val;
            if (guardHolds && values[static_cast<std::size_t>(ng.var)] == ng.val)
                return false;
        }
        return true;
    }

    Flow on_solution(Assignment values)
    {
        ++stats_.solutionsFound;
        switch (mode_) {
        case Mode::First:
            solutions_.push_back(std::move(values));
            outcome_ = Outcome::Solution;
            return Flow::Stop;
        case Mode::All:
            solutions_.push_back(std::move(values));
            return Flow::Continue;
        case Mode::Optimize: {
            const int value = objective_value(*csp_.objective(), values);
            solutions_.assign(1, std::move(values));
            bestValue_ = value;
            set_cuts(value);
            return Flow::Continue;
        }
        }
        return Flow::Continue;
    }

    void post_refutations(const std::vector<Domain>& doms, const std::vector<std::pair<int, int>>& positives, int x,
                          int v)
    {
        for (const auto& g : options_.sbds) {
            Nogood ng{{}, g.var[x], g.val[v]};
            if (!doms[static_cast<std::size_t>(ng.var)].contains(ng.val))
                continue;
            bool possible = true;
            for (const auto& [y, w] : positives) {
                const int gy = g.var[y], gw = g.val[w];
                if (!doms[static_cast<std::size_t>(gy)].contains(gw)) {
                    possible = false;
                    break;
                }
                ng.guard.emplace_back(gy, gw);
            }
            if (possible)
                nogoods_.push_back(std::move(ng));
        }
    }

    Flow dfs(std::vector<Domain>& doms, std::vector<std::pair<int, int>>& positives)
    {
        const std::size_t mark = nogoods_.size();
        auto leave = [&](Flow f) {
            nogoods_.resize(mark);
            return f;
        };
        while (true) {
            if (timed_out())
                return leave(Flow::Stop);
            const int x = select_var(doms);
            if (x < 0) {
                Assignment values(doms.size());
                for (std::size_t i = 0; i < doms.size(); ++i)
                    values[i] = doms[i].value();
                if (!leaf_ok(values))
                    return leave(fail() ? Flow::Stop : Flow::Continue);
                return leave(on_solution(std::move(values)));
            }
            const int v = select_value(doms[static_cast<std::size_t>(x)]);
            {
                std::vector<Domain> child = doms;
                child[static_cast<std::size_t>(x)].assign(v);
                positives.emplace_back(x, v);
                const int seed[1] = {x};
                Flow f = Flow::Continue;
                ++stats_.nodes;
                if (fixpoint(child, seed, false) == PropStatus::Ok)
                    f = dfs(child, positives);
                else if (fail())
                    f = Flow::Stop;
                positives.pop_back();
                if (f == Flow::Stop)
                    return leave(Flow::Stop);
            }
            post_refutations(doms, positives, x, v);
            doms[static_cast<std::size_t>(x)].remove(v);
            const int seed[1] = {x};
            ++stats_.nodes;
            if (fixpoint(doms, seed, false) == PropStatus::Fail)
                return leave(fail() ? Flow::Stop : Flow::Continue);
        }
    }

    void finish() { stats_.wallTime = std::chrono::duration<double>(Clock::now() - start_).count(); }

    const Csp& csp_;
    const SearchOptions& options_;
    Mode mode_;
    std::mt19937_64 rng_;
    std::vector<Constraint> constraints_;
    std::vector<std::vector<int>> watchers_;
    std::vector<char> inQueue_;
    std::vector<int> cuts_;
    std::vector<Nogood> nogoods_;
    std::vector<Assignment> solutions_;
    std::optional<int> bestValue_;
    Outcome outcome_ = Outcome::Exhausted;
    SearchStats stats_;
    Clock::time_point start_;
};

} // namespace

SolveResult solve(const Csp& csp, const SymBreakSet& extra, const SearchOptions& options)
{
    Engine engine(csp, extra, options, Mode::First);
    engine.run();
    SolveResult r{engine.outcome(), std::nullopt, engine.stats()};
    if (!engine.solutions().empty())
        r.solution = std::move(engine.solutions().front());
    return r;
}

SolveResult solve(const Csp& csp, const SymBreakSet& extra, const BranchSpec& branch,
                  std::optional<std::uint64_t> cutoff)
{
    SearchOptions options;
    options.branch = branch;
    options.limits.cutoff = cutoff;
    return solve(csp, extra, options);
}

OptimizeResult optimize(const Csp& csp, const SymBreakSet& extra, const SearchOptions& options)
{
    Engine engine(csp, extra, options, Mode::Optimize);
    engine.run();
    OptimizeResult r;
    r.outcome = engine.outcome();
    r.stats = engine.stats();
    r.provedOptimal = r.outcome == Outcome::Exhausted;
    if (!engine.solutions().empty()) {
        r.best = std::move(engine.solutions().front());
        r.bestValue = engine.best_value();
    }
    return r;
}

EnumerateResult enumerate_all(const Csp& csp, const SymBreakSet& extra, const SearchOptions& options)
{
    Engine engine(csp, extra, options, Mode::All);
    engine.run();
    return {std::move(engine.solutions()), engine.outcome(), engine.stats()};
}

} // namespace symbreak
