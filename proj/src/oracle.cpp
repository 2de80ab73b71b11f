#include "symbreak/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "symbreak/hash.hpp"
#include "symbreak/models.hpp"

namespace symbreak {

SearchSpaceTooLarge::SearchSpaceTooLarge(std::size_t bound)
    : std::runtime_error("generate-and-test visited more than " + std::to_string(bound) + " nodes"), bound_(bound)
{
}

namespace {

struct Check {
    int constraint = -1;
    // Pairwise all-different check when constraint < 0.
    View a;
    View b;
};

class Enumerator {
public:
    Enumerator(const Csp& csp, std::size_t bound, std::size_t maxSolutions)
        : csp_(csp), bound_(bound), maxSolutions_(maxSolutions), values_(static_cast<std::size_t>(csp.var_count()), kUnassigned),
          triggers_(static_cast<std::size_t>(csp.var_count()))
    {
        const auto& cs = csp.constraints();
        for (std::size_t k = 0; k < cs.size(); ++k) {
            if (const auto* ad = cs[k].as<AllDifferent>()) {
                for (std::size_t i = 0; i < ad->views.size(); ++i)
                    for (std::size_t j = i + 1; j < ad->views.size(); ++j) {
                        int last = std::max(ad->views[i].var, ad->views[j].var);
                        triggers_[static_cast<std::size_t>(last)].push_back(Check{-1, ad->views[i], ad->views[j]});
                    }
                continue;
            }
            auto vars = variables_of(cs[k]);
            if (vars.empty()) {
                if (!eval(cs[k], values_))
                    trivialFail_ = true;
                continue;
            }
            triggers_[static_cast<std::size_t>(vars.back())].push_back(Check{static_cast<int>(k), {}, {}});
        }
    }

    std::vector<Assignment> run()
    {
        if (!trivialFail_)
            descend(0);
        return std::move(found_);
    }

private:
    bool passes(int var) const
    {
        for (const auto& chk : triggers_[static_cast<std::size_t>(var)]) {
            if (chk.constraint >= 0) {
                if (!eval(csp_.constraints()[static_cast<std::size_t>(chk.constraint)], values_))
                    return false;
            } else if (chk.a.value_of(values_[static_cast<std::size_t>(chk.a.var)]) ==
                       chk.b.value_of(values_[static_cast<std::size_t>(chk.b.var)])) {
                return false;
            }
        }
        return true;
    }

    // Returns false once enough solutions are collected.
    bool descend(int var)
    {
        if (var == csp_.var_count()) {
            found_.push_back(values_);
            return found_.size() < maxSolutions_;
        }
        bool more = true;
        csp_.domain(var).for_each([&](int x) {
            if (!more)
                return;
            if (++visited_ > bound_)
                throw SearchSpaceTooLarge(bound_);
            values_[static_cast<std::size_t>(var)] = x;
            if (passes(var))
                more = descend(var + 1);
        });
        values_[static_cast<std::size_t>(var)] = kUnassigned;
        return more;
    }

    const Csp& csp_;
    std::size_t bound_;
    std::size_t maxSolutions_;
    std::size_t visited_ = 0;
    bool trivialFail_ = false;
    Assignment values_;
    std::vector<std::vector<Check>> triggers_;
    std::vector<Assignment> found_;
};

} // namespace

std::vector<Assignment> enumerate_solutions(const Csp& csp, std::size_t bound)
{
    return Enumerator(csp, bound, std::numeric_limits<std::size_t>::max()).run();
}

std::optional<Assignment> first_solution(const Csp& csp, std::size_t bound)
{
    auto found = Enumerator(csp, bound, 1).run();
    if (found.empty())
        return std::nullopt;
    return std::move(found.front());
}

Csp apply_symmetry(const Symmetry& g, const Csp& csp)
{
    if (g.var_count() != csp.var_count() || g.value_count() != csp.value_count())
        throw DimensionMismatch("symmetry does not match the problem dimensions");
    Csp out(csp.var_count(), csp.value_count(), csp.value_offset());
    for (int i = 0; i < csp.var_count(); ++i) {
        Domain mapped = Domain::range(0, csp.value_count() - 1);
        for (int x = 0; x < csp.value_count(); ++x)
            if (!csp.domain(i).contains(x))
                mapped.remove(g.val[x]);
        out.set_domain(g.var[i], mapped);
        out.set_var_name(i, csp.var_name(i));
    }
    for (const auto& c : csp.constraints())
        out.post(apply_symmetry(g, c));
    if (const auto& obj = csp.objective()) {
        Objective mapped{obj->kind, {}};
        for (const auto& v : obj->views)
            mapped.views.push_back(apply_symmetry(g, v));
        out.set_objective(std::move(mapped));
    }
    return out;
}

std::vector<std::vector<Assignment>> orbit_partition(std::span<const Assignment> solutions,
                                                     std::span<const Symmetry> elements)
{
    std::vector<Assignment> sorted(solutions.begin(), solutions.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::unordered_map<Assignment, int, IntVectorHash> index;
    for (std::size_t k = 0; k < sorted.size(); ++k)
        index.emplace(sorted[k], static_cast<int>(k));

    std::vector<int> parent(sorted.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        for (const auto& g : elements) {
            auto it = index.find(apply_assignment(g, sorted[k]));
            if (it == index.end())
                continue;
            int a = find(static_cast<int>(k)), b = find(it->second);
            if (a != b)
                parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        }
    }
    std::vector<std::vector<Assignment>> orbits;
    std::vector<int> slot(sorted.size(), -1);
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        int root = find(static_cast<int>(k));
        if (slot[static_cast<std::size_t>(root)] < 0) {
            slot[static_cast<std::size_t>(root)] = static_cast<int>(orbits.size());
            orbits.emplace_back();
        }
        orbits[static_cast<std::size_t>(slot[static_cast<std::size_t>(root)])].push_back(sorted[k]);
    }
    return orbits;
}

std::vector<std::vector<Assignment>> orbit_partition(std::span<const Assignment> solutions,
                                                     const SymmetryGroup& group, std::size_t bound)
{
    auto elements = enumerate_group(group, bound);
    return orbit_partition(solutions, elements);
}

const char* to_string(Proposition p)
{
    switch (p) {
    case Proposition::Satisfiability:
        return "satisfiability";
    case Proposition::SolutionImage:
        return "solution-image";
    case Proposition::FixedSolutions:
        return "fixed-solutions";
    case Proposition::GroupPreservation:
        return "group-preservation";
    case Proposition::Soundness:
        return "soundness";
    case Proposition::Completeness:
        return "completeness";
    case Proposition::Representatives:
        return "representatives";
    case Proposition::BreaksEliminates:
        return "breaks-eliminates";
    case Proposition::NoSymmetryInGroup:
        return "no-symmetry-in-group";
    }
    return "?";
}

std::optional<Proposition> parse_proposition(const std::string& name)
{
    for (auto p : kAllPropositions)
        if (name == to_string(p))
            return p;
    return std::nullopt;
}

int VerificationContext::solution_index(const Assignment& a) const
{
    auto it = index.find(a);
    return it == index.end() ? -1 : it->second;
}

VerificationContext make_context(std::string instance, const Csp& csp, const SymmetryGroup& group,
                                 const SymBreakSet& sbc, std::size_t groupBound, std::size_t searchBound)
{
    VerificationContext ctx{std::move(instance), csp, sbc, group.generators(), {}, {}, {}, {}, {}, searchBound, {}};
    ctx.elements = enumerate_group(group, groupBound);
    ctx.solutions = enumerate_solutions(csp, searchBound);
    std::sort(ctx.solutions.begin(), ctx.solutions.end());
    ctx.index.reserve(ctx.solutions.size());
    for (std::size_t k = 0; k < ctx.solutions.size(); ++k)
        ctx.index.emplace(ctx.solutions[k], static_cast<int>(k));
    ctx.orbits = orbit_partition(ctx.solutions, ctx.elements);
    ctx.orbitOf.assign(ctx.solutions.size(), -1);
    for (std::size_t o = 0; o < ctx.orbits.size(); ++o)
        for (const auto& a : ctx.orbits[o])
            ctx.orbitOf[static_cast<std::size_t>(ctx.solution_index(a))] = static_cast<int>(o);
    ctx.survivors.reserve(ctx.elements.size());
    for (const auto& g : ctx.elements) {
        SymBreakSet image = apply_symmetry(g, sbc);
        std::vector<int> keep;
        for (std::size_t k = 0; k < ctx.solutions.size(); ++k)
            if (satisfies(ctx.solutions[k], image.constraints))
                keep.push_back(static_cast<int>(k));
        ctx.survivors.push_back(std::move(keep));
    }
    return ctx;
}

VerificationContext make_context(const ModelBundle& bundle, std::size_t groupBound, std::size_t searchBound)
{
    return make_context(bundle.name, bundle.csp, bundle.group, bundle.sbc, groupBound, searchBound);
}

namespace {

using AssignmentSet = std::vector<Assignment>;

AssignmentSet sorted_set(AssignmentSet v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::size_t identity_index(const VerificationContext& ctx)
{
    for (std::size_t e = 0; e < ctx.elements.size(); ++e)
        if (ctx.elements[e].is_identity())
            return e;
    throw std::logic_error("enumerated group lacks the identity");
}

CheckResult fail(Proposition p, const Symmetry* g, Assignment a, std::string detail)
{
    CheckResult r{p, false, false, Counterexample{g ? g->describe() : "-", std::move(a), std::move(detail)}, {}};
    return r;
}

Csp problem_with_sbc(const VerificationContext& ctx) { return with_constraints(ctx.csp, ctx.sbc); }

CheckResult check_satisfiability(const VerificationContext& ctx)
{
    const Csp base = problem_with_sbc(ctx);
    const bool sat = !ctx.survivors[identity_index(ctx)].empty();
    for (const auto& g : ctx.elements) {
        const bool imageSat = first_solution(apply_symmetry(g, base), ctx.searchBound).has_value();
        if (imageSat != sat)
            return fail(Proposition::Satisfiability, &g, {},
                        sat ? "C + S is satisfiable but its image is not" : "the image is satisfiable but C + S is not");
    }
    return {Proposition::Satisfiability, true, false, std::nullopt, sat ? "C + S satisfiable" : "C + S unsatisfiable"};
}

CheckResult check_solution_image(const VerificationContext& ctx)
{
    const Csp base = problem_with_sbc(ctx);
    const auto& surv = ctx.survivors[identity_index(ctx)];
    for (std::size_t e = 0; e < ctx.elements.size(); ++e) {
        const Symmetry& g = ctx.elements[e];
        AssignmentSet expected;
        for (int k : surv)
            expected.push_back(apply_assignment(g, ctx.solutions[static_cast<std::size_t>(k)]));
        expected = sorted_set(std::move(expected));
        AssignmentSet actual = sorted_set(enumerate_solutions(apply_symmetry(g, base), ctx.searchBound));
        if (actual != expected) {
            AssignmentSet diff;
            std::set_symmetric_difference(actual.begin(), actual.end(), expected.begin(), expected.end(),
                                          std::back_inserter(diff));
            return fail(Proposition::SolutionImage, &g, diff.empty() ? Assignment{} : diff.front(),
                        "sol(g(C + S)) differs from g(sol(C + S))");
        }
        AssignmentSet filtered;
        for (int k : ctx.survivors[e])
            filtered.push_back(ctx.solutions[static_cast<std::size_t>(k)]);
        if (filtered != expected)
            return fail(Proposition::SolutionImage, &g, {}, "sol(C + g(S)) differs from g(sol(C + S))");
    }
    return {Proposition::SolutionImage, true, false, std::nullopt, {}};
}

CheckResult check_fixed_solutions(const VerificationContext& ctx)
{
    for (const auto& g : ctx.elements)
        for (const auto& a : ctx.solutions)
            if (ctx.solution_index(apply_assignment(g, a)) < 0)
                return fail(Proposition::FixedSolutions, &g, a, "g(A) is not a solution");
    return {Proposition::FixedSolutions, true, false, std::nullopt, {}};
}

CheckResult check_group_preservation(const VerificationContext& ctx)
{
    for (const auto& g : ctx.elements) {
        AssignmentSet sols = sorted_set(enumerate_solutions(apply_symmetry(g, ctx.csp), ctx.searchBound));
        for (const auto& tau : ctx.generators)
            for (const auto& a : sols)
                if (!std::binary_search(sols.begin(), sols.end(), apply_assignment(tau, a)))
                    return fail(Proposition::GroupPreservation, &g, a,
                                "generator " + tau.describe() + " maps a solution of g(C) outside sol(g(C))");
    }
    return {Proposition::GroupPreservation, true, false, std::nullopt, {}};
}

std::vector<int> survivors_per_orbit(const VerificationContext& ctx, std::size_t e)
{
    std::vector<int> count(ctx.orbits.size(), 0);
    for (int k : ctx.survivors[e])
        ++count[static_cast<std::size_t>(ctx.orbitOf[static_cast<std::size_t>(k)])];
    return count;
}

template <typename Pred>
CheckResult check_orbit_property(const VerificationContext& ctx, Proposition p, Pred ok, const char* what)
{
    const std::size_t id = identity_index(ctx);
    auto base = survivors_per_orbit(ctx, id);
    if (!std::all_of(base.begin(), base.end(), ok))
        return {p, true, true, std::nullopt, std::string("S is not ") + what + ", premise does not hold"};
    for (std::size_t e = 0; e < ctx.elements.size(); ++e) {
        auto counts = survivors_per_orbit(ctx, e);
        for (std::size_t o = 0; o < counts.size(); ++o)
            if (!ok(counts[o]))
                return fail(p, &ctx.elements[e], ctx.orbits[o].front(),
                            std::string("g(S) is not ") + what + ": orbit keeps " + std::to_string(counts[o]));
    }
    return {p, true, false, std::nullopt, std::string("S is ") + what};
}

CheckResult check_representatives(const VerificationContext& ctx)
{
    const std::size_t id = identity_index(ctx);
    auto base = survivors_per_orbit(ctx, id);
    if (!std::all_of(base.begin(), base.end(), [](int c) { return c >= 1; }))
        return {Proposition::Representatives, true, true, std::nullopt, "S is not sound, premise does not hold"};
    std::vector<char> covered(ctx.solutions.size(), 0);
    for (const auto& surv : ctx.survivors)
        for (int k : surv)
            covered[static_cast<std::size_t>(k)] = 1;
    for (std::size_t k = 0; k < covered.size(); ++k)
        if (!covered[k])
            return fail(Proposition::Representatives, nullptr, ctx.solutions[k], "no g(S) admits this solution");
    return {Proposition::Representatives, true, false, std::nullopt, {}};
}

// image[t][k]: index of elements[t](solutions[k]) in solutions, or -1.
std::vector<std::vector<int>> solution_images(const VerificationContext& ctx)
{
    std::vector<std::vector<int>> image(ctx.elements.size(), std::vector<int>(ctx.solutions.size(), -1));
    for (std::size_t t = 0; t < ctx.elements.size(); ++t)
        for (std::size_t k = 0; k < ctx.solutions.size(); ++k)
            image[t][k] = ctx.solution_index(apply_assignment(ctx.elements[t], ctx.solutions[k]));
    return image;
}

Classification classify_indexed(const std::vector<int>& surv, const std::vector<char>& member,
                                const std::vector<int>& image)
{
    std::size_t excluded = 0;
    for (int k : surv) {
        int img = image[static_cast<std::size_t>(k)];
        if (img < 0 || !member[static_cast<std::size_t>(img)])
            ++excluded;
    }
    if (excluded == 0)
        return Classification::DoesNotBreak;
    return excluded == surv.size() ? Classification::Eliminates : Classification::BreaksNotEliminates;
}

std::vector<std::vector<Classification>> classification_matrix(const VerificationContext& ctx,
                                                               const std::vector<std::vector<int>>& image)
{
    const std::size_t n = ctx.elements.size();
    std::vector<std::vector<Classification>> cls(n, std::vector<Classification>(n));
    std::vector<char> member(ctx.solutions.size(), 0);
    for (std::size_t e = 0; e < n; ++e) {
        for (int k : ctx.survivors[e])
            member[static_cast<std::size_t>(k)] = 1;
        for (std::size_t t = 0; t < n; ++t)
            cls[e][t] = classify_indexed(ctx.survivors[e], member, image[t]);
        for (int k : ctx.survivors[e])
            member[static_cast<std::size_t>(k)] = 0;
    }
    return cls;
}

CheckResult check_breaks_eliminates(const VerificationContext& ctx)
{
    const std::size_t n = ctx.elements.size();
    const std::size_t id = identity_index(ctx);
    const auto cls = classification_matrix(ctx, solution_images(ctx));

    auto breaks_all = [&](std::size_t e) {
        for (std::size_t t = 0; t < n; ++t)
            if (t != id && cls[e][t] == Classification::DoesNotBreak)
                return false;
        return true;
    };
    auto eliminates_all = [&](std::size_t e) {
        for (std::size_t t = 0; t < n; ++t)
            if (t != id && cls[e][t] != Classification::Eliminates)
                return false;
        return true;
    };
    const bool breaks = breaks_all(id);
    const bool eliminates = eliminates_all(id);
    for (std::size_t e = 0; e < n; ++e) {
        if (breaks && !breaks_all(e))
            return fail(Proposition::BreaksEliminates, &ctx.elements[e], {},
                        "S breaks every non-identity symmetry but g(S) does not");
        if (eliminates && !eliminates_all(e))
            return fail(Proposition::BreaksEliminates, &ctx.elements[e], {},
                        "S eliminates every non-identity symmetry but g(S) does not");
    }

    // Element-wise: g(S) treats g tau g^-1 exactly as S treats tau.
    std::unordered_map<Symmetry, std::size_t, SymmetryHash> index;
    for (std::size_t t = 0; t < n; ++t)
        index.emplace(ctx.elements[t], t);
    for (std::size_t e = 0; e < n; ++e) {
        const Symmetry& g = ctx.elements[e];
        const Symmetry gInv = inverse(g);
        for (std::size_t t = 0; t < n; ++t) {
            auto it = index.find(compose(g, compose(ctx.elements[t], gInv)));
            if (it == index.end())
                return fail(Proposition::BreaksEliminates, &g, {}, "conjugate lies outside the enumerated group");
            if (cls[e][it->second] != cls[id][t])
                return fail(Proposition::BreaksEliminates, &g, {},
                            "S " + std::string(to_string(cls[id][t])) + " " + ctx.elements[t].describe() +
                                " but g(S) " + to_string(cls[e][it->second]) + " its conjugate");
        }
    }
    std::string note = breaks ? (eliminates ? "S eliminates all non-identity symmetries"
                                            : "S breaks all non-identity symmetries")
                              : "S leaves some non-identity symmetry unbroken";
    return {Proposition::BreaksEliminates, true, false, std::nullopt, note};
}

CheckResult check_no_symmetry(const VerificationContext& ctx)
{
    const std::size_t id = identity_index(ctx);
    const auto& surv = ctx.survivors[id];
    std::size_t broken = 0;
    std::vector<char> member(ctx.solutions.size(), 0);
    for (int k : surv)
        member[static_cast<std::size_t>(k)] = 1;
    for (std::size_t t = 0; t < ctx.elements.size(); ++t) {
        const Symmetry& tau = ctx.elements[t];
        bool breaksTau = false;
        bool witness = false;
        for (int k : surv) {
            const auto img = apply_assignment(tau, ctx.solutions[static_cast<std::size_t>(k)]);
            const int idx = ctx.solution_index(img);
            if (idx < 0 || !member[static_cast<std::size_t>(idx)]) {
                breaksTau = true;
                if (!satisfies(img, ctx.sbc.constraints)) {
                    witness = true;
                    break;
                }
            }
        }
        if (!breaksTau)
            continue;
        ++broken;
        if (!witness)
            return fail(Proposition::NoSymmetryInGroup, &tau, {},
                        "S breaks this symmetry yet no solution of S maps outside sol(S)");
    }
    return {Proposition::NoSymmetryInGroup, true, broken == 0, std::nullopt,
            std::to_string(broken) + " broken symmetries are not symmetries of S"};
}

} // namespace

CheckResult check_proposition(Proposition p, const VerificationContext& ctx)
{
    switch (p) {
    case Proposition::Satisfiability:
        return check_satisfiability(ctx);
    case Proposition::SolutionImage:
        return check_solution_image(ctx);
    case Proposition::FixedSolutions:
        return check_fixed_solutions(ctx);
    case Proposition::GroupPreservation:
        return check_group_preservation(ctx);
    case Proposition::Soundness:
        return check_orbit_property(ctx, p, [](int c) { return c >= 1; }, "sound");
    case Proposition::Completeness:
        return check_orbit_property(ctx, p, [](int c) { return c <= 1; }, "complete");
    case Proposition::Representatives:
        return check_representatives(ctx);
    case Proposition::BreaksEliminates:
        return check_breaks_eliminates(ctx);
    case Proposition::NoSymmetryInGroup:
        return check_no_symmetry(ctx);
    }
    throw std::invalid_argument("unknown proposition");
}

std::vector<CheckResult> check_all(const VerificationContext& ctx)
{
    std::vector<CheckResult> out;
    for (auto p : kAllPropositions)
        out.push_back(check_proposition(p, ctx));
    return out;
}

std::string report(const VerificationContext& ctx, std::span<const CheckResult> results)
{
    std::ostringstream os;
    for (const auto& r : results) {
        os << to_string(r.proposition) << '\t' << ctx.instance << "\tgroup=" << ctx.elements.size()
           << "\tsolutions=" << ctx.solutions.size() << "\torbits=" << ctx.orbits.size() << '\t'
           << (r.passed ? (r.vacuous ? "PASS (vacuous)" : "PASS") : "FAIL");
        if (!r.note.empty())
            os << "\t" << r.note;
        os << '\n';
        if (r.counterexample) {
            os << "  counterexample: symmetry " << r.counterexample->symmetry;
            if (!r.counterexample->assignment.empty()) {
                os << ", assignment";
                for (int v : ctx.csp.to_values(r.counterexample->assignment))
                    os << ' ' << v;
            }
            os << ": " << r.counterexample->detail << '\n';
        }
    }
    return os.str();
}

} // namespace symbreak
