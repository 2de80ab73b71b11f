#include "symbreak/symbreak.hpp"

#include <sstream>
#include <unordered_set>

#include "symbreak/hash.hpp"
#include "symbreak/oracle.hpp"

namespace symbreak {

View apply_symmetry(const Symmetry& g, const View& v)
{
    if (v.var >= g.var_count())
        throw DimensionMismatch("symmetry acts on " + std::to_string(g.var_count()) +
                                " variables but a constraint uses variable " + std::to_string(v.var));
    if (v.table && v.table->size() != g.value_count())
        throw DimensionMismatch("value map size differs from the symmetry's value range");
    View out = v;
    out.var = g.var[v.var];
    if (!g.val.is_identity())
        out = compose_table(out, g.val.inverse());
    return out;
}

Constraint apply_symmetry(const Symmetry& g, const Constraint& c)
{
    return map_views(c, [&](const View& v) { return apply_symmetry(g, v); });
}

SymBreakSet apply_symmetry(const Symmetry& g, const SymBreakSet& s)
{
    SymBreakSet out;
    out.constraints.reserve(s.constraints.size());
    for (const auto& c : s.constraints)
        out.constraints.push_back(apply_symmetry(g, c));
    out.label = g.describe() + "(" + (s.label.empty() ? "S" : s.label) + ")";
    return out;
}

namespace {

bool is_reflected(const View& v) { return v.sign == -1 && !v.table; }

std::vector<View> reflect_all(const std::vector<View>& views, int k)
{
    std::vector<View> out;
    out.reserve(views.size());
    for (const auto& v : views)
        out.push_back(reflect(v, k));
    return out;
}

} // namespace

Constraint simplify(const Constraint& c)
{
    if (const auto* cmp = c.as<Compare>()) {
        if (is_reflected(cmp->lhs)) {
            const int k = cmp->lhs.shift;
            return Compare{reflect(cmp->rhs, k), reflect(cmp->lhs, k), cmp->strict};
        }
        return c;
    }
    if (const auto* mb = c.as<MinBound>()) {
        if (is_reflected(mb->lhs)) {
            const int k = mb->lhs.shift;
            return MaxBound{reflect(mb->lhs, k), reflect_all(mb->others, k), mb->strict};
        }
        return c;
    }
    if (const auto* mb = c.as<MaxBound>()) {
        if (is_reflected(mb->lhs)) {
            const int k = mb->lhs.shift;
            return MinBound{reflect(mb->lhs, k), reflect_all(mb->others, k), mb->strict};
        }
        return c;
    }
    if (const auto* lin = c.as<Linear>()) {
        Linear out = *lin;
        for (std::size_t i = 0; i < out.terms.size(); ++i) {
            View& t = out.terms[i];
            if (t.table || (t.sign == 1 && t.shift == 0))
                continue;
            out.rhs -= out.coeffs[i] * t.shift;
            out.coeffs[i] *= t.sign;
            t.sign = 1;
            t.shift = 0;
        }
        return out;
    }
    if (const auto* imp = c.as<Implies>())
        return implies(simplify(*imp->guard), simplify(*imp->body));
    return c;
}

SymBreakSet simplify(const SymBreakSet& s)
{
    SymBreakSet out;
    out.label = s.label;
    for (const auto& c : s.constraints)
        out.constraints.push_back(simplify(c));
    return out;
}

const char* to_string(Classification c)
{
    switch (c) {
    case Classification::Eliminates:
        return "eliminates";
    case Classification::BreaksNotEliminates:
        return "breaks-not-eliminates";
    case Classification::DoesNotBreak:
        return "does-not-break";
    }
    return "?";
}

Csp with_constraints(const Csp& csp, const SymBreakSet& s)
{
    Csp out = csp;
    out.post_all(s.constraints);
    return out;
}

Classification classify(std::span<const Assignment> survivors, const SymBreakSet&, const Symmetry& g)
{
    std::unordered_set<Assignment, IntVectorHash> members(survivors.begin(), survivors.end());
    std::size_t excluded = 0;
    for (const auto& a : survivors)
        if (!members.contains(apply_assignment(g, a)))
            ++excluded;
    if (excluded == 0)
        return Classification::DoesNotBreak;
    return excluded == survivors.size() ? Classification::Eliminates : Classification::BreaksNotEliminates;
}

Classification classify(const Csp& csp, const SymBreakSet& s, const Symmetry& g, std::size_t bound)
{
    if (g.var_count() != csp.var_count() || g.value_count() != csp.value_count())
        throw DimensionMismatch("symmetry does not match the problem dimensions");
    const auto survivors = enumerate_solutions(with_constraints(csp, s), bound);
    return classify(survivors, s, g);
}

// ---------------------------------------------------------------------------
// Printing

namespace {

std::string name_of(int var, const std::vector<std::string>& names)
{
    if (var >= 0 && static_cast<std::size_t>(var) < names.size())
        return names[static_cast<std::size_t>(var)];
    return "X[" + std::to_string(var) + "]";
}

std::string base_term(const View& v, const std::vector<std::string>& names)
{
    std::string name = name_of(v.var, names);
    if (!v.table)
        return name;
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < v.table->size(); ++i)
        os << (i ? " " : "") << (*v.table)[i] + v.base;
    os << "](" << name << ')';
    return os.str();
}

bool is_compound(const View& v) { return v.sign == -1 || v.shift != 0; }

std::string join_views(const std::vector<View>& views, const std::vector<std::string>& names)
{
    std::string out;
    for (std::size_t i = 0; i < views.size(); ++i) {
        if (i)
            out += ", ";
        out += format_view(views[i], names);
    }
    return out;
}

// The common k of a list of views that are all `k - plain`, if there is one.
std::optional<int> common_reflection(const std::vector<View>& views)
{
    if (views.empty())
        return std::nullopt;
    std::optional<int> k;
    for (const auto& v : views) {
        if (!is_reflected(v) || (k && *k != v.shift))
            return std::nullopt;
        k = v.shift;
    }
    return k;
}

std::string bracketed(const std::vector<View>& views, const std::vector<std::string>& names)
{
    return "[" + join_views(views, names) + "]";
}

} // namespace

std::string format_view(const View& v, const std::vector<std::string>& names)
{
    std::string t = base_term(v, names);
    if (v.sign == -1)
        return std::to_string(v.shift) + " - " + t;
    if (v.shift > 0)
        return t + " + " + std::to_string(v.shift);
    if (v.shift < 0)
        return t + " - " + std::to_string(-v.shift);
    return t;
}

std::string format_constraint(const Constraint& c, const std::vector<std::string>& names)
{
    auto fv = [&](const View& v) { return format_view(v, names); };
    return std::visit(
        [&](const auto& n) -> std::string {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Linear>) {
                std::string out;
                for (std::size_t i = 0; i < n.terms.size(); ++i) {
                    int coeff = n.coeffs[i];
                    if (i == 0)
                        out += coeff < 0 ? "-" : "";
                    else
                        out += coeff < 0 ? " - " : " + ";
                    int mag = coeff < 0 ? -coeff : coeff;
                    if (mag != 1)
                        out += std::to_string(mag) + "*";
                    out += is_compound(n.terms[i]) ? "(" + fv(n.terms[i]) + ")" : fv(n.terms[i]);
                }
                if (n.terms.empty())
                    out = "0";
                return out + (n.rel == Relation::Eq ? " = " : " <= ") + std::to_string(n.rhs);
            } else if constexpr (std::is_same_v<T, Compare>) {
                return fv(n.lhs) + (n.strict ? " < " : " <= ") + fv(n.rhs);
            } else if constexpr (std::is_same_v<T, MinBound>) {
                std::string op = n.strict ? " < " : " <= ";
                if (auto k = common_reflection(n.others))
                    return fv(n.lhs) + op + std::to_string(*k) + " - max(" + join_views(reflect_all(n.others, *k), names) +
                           ")";
                return fv(n.lhs) + op + "min(" + join_views(n.others, names) + ")";
            } else if constexpr (std::is_same_v<T, MaxBound>) {
                std::string op = n.strict ? " > " : " >= ";
                if (auto k = common_reflection(n.others))
                    return fv(n.lhs) + op + std::to_string(*k) + " - min(" + join_views(reflect_all(n.others, *k), names) +
                           ")";
                return fv(n.lhs) + op + "max(" + join_views(n.others, names) + ")";
            } else if constexpr (std::is_same_v<T, AllDifferent>) {
                return "alldifferent(" + join_views(n.views, names) + ")";
            } else if constexpr (std::is_same_v<T, Lex>) {
                return bracketed(n.a, names) + (n.strict ? " <lex " : " <=lex ") + bracketed(n.b, names);
            } else if constexpr (std::is_same_v<T, Occurrence>) {
                return "count(" + bracketed(n.views, names) + ", " + std::to_string(n.value) +
                       ") = " + std::to_string(n.count);
            } else if constexpr (std::is_same_v<T, Hamming>) {
                return "hamming(" + bracketed(n.a, names) + ", " + bracketed(n.b, names) +
                       ") = " + std::to_string(n.distance);
            } else if constexpr (std::is_same_v<T, Precedence>) {
                std::string chain;
                for (std::size_t i = 0; i < n.chain.size(); ++i)
                    chain += (i ? " " : "") + std::to_string(n.chain[i]);
                return "precede(" + bracketed(n.views, names) + ", [" + chain + "])";
            } else if constexpr (std::is_same_v<T, AtMostNValues>) {
                return "nvalues(" + bracketed(n.views, names) + ") <= " + std::to_string(n.bound);
            } else {
                return format_constraint(*n.guard, names) + " -> " + format_constraint(*n.body, names);
            }
        },
        c.node());
}

std::string format_set(const SymBreakSet& s, const std::vector<std::string>& names)
{
    std::string out;
    if (!s.label.empty())
        out += s.label + ":\n";
    for (const auto& c : s.constraints)
        out += "  " + format_constraint(c, names) + "\n";
    return out;
}

} // namespace symbreak
