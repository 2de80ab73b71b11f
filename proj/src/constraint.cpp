#include "symbreak/constraint.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

namespace symbreak {

namespace {

constexpr long long kInf = 1LL << 40;

long long floor_div(long long a, long long b)
{
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

int clamp_int(long long v)
{
    constexpr long long lim = 1LL << 30;
    return static_cast<int>(std::clamp(v, -lim, lim));
}

bool same_table(const std::shared_ptr<const Permutation>& a, const std::shared_ptr<const Permutation>& b)
{
    if (a == b)
        return true;
    if (!a || !b)
        return false;
    return *a == *b;
}

} // namespace

int View::index_of(int value, int universe) const
{
    int t = sign * (value - shift) - base;
    if (table) {
        if (t < 0 || t >= tableInverse->size())
            return -1;
        return (*tableInverse)[t];
    }
    if (t < 0 || t >= universe)
        return -1;
    return t;
}

bool operator==(const View& a, const View& b)
{
    return a.var == b.var && a.sign == b.sign && a.shift == b.shift && a.base == b.base &&
           same_table(a.table, b.table);
}

View reflect(const View& v, int k)
{
    View r = v;
    r.sign = -v.sign;
    r.shift = k - v.shift;
    return r;
}

View offset_by(const View& v, int k)
{
    View r = v;
    r.shift += k;
    return r;
}

View compose_table(const View& v, const Permutation& perm)
{
    View r = v;
    Permutation combined = v.table ? (*v.table) * perm : perm;
    const int n = combined.size();
    bool reversal = n > 1;
    for (int i = 0; i < n && reversal; ++i)
        reversal = combined[i] == n - 1 - i;
    if (combined.is_identity()) {
        r.table.reset();
        r.tableInverse.reset();
    } else if (reversal) {
        // sign * ((n-1-x) + base) + shift = -sign * (x + base) + sign * (n-1 + 2*base) + shift
        r.table.reset();
        r.tableInverse.reset();
        r.shift = v.shift + v.sign * (n - 1 + 2 * v.base);
        r.sign = -v.sign;
    } else {
        r.tableInverse = std::make_shared<const Permutation>(combined.inverse());
        r.table = std::make_shared<const Permutation>(std::move(combined));
    }
    return r;
}

bool operator==(const Implies& a, const Implies& b) { return *a.guard == *b.guard && *a.body == *b.body; }

bool operator==(const Constraint& a, const Constraint& b) { return a.node_ == b.node_; }

namespace {

void check_view(const View& v)
{
    if (v.sign != 1 && v.sign != -1)
        throw std::invalid_argument("view sign must be +1 or -1");
    if (v.var < 0)
        throw std::invalid_argument("negative variable index in view");
}

} // namespace

Constraint::Constraint(Node node) : node_(std::move(node))
{
    std::visit(
        [](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Linear>) {
                if (n.terms.size() != n.coeffs.size())
                    throw std::invalid_argument("linear constraint: coefficient count differs from term count");
            } else if constexpr (std::is_same_v<T, Lex> || std::is_same_v<T, Hamming>) {
                if (n.a.size() != n.b.size())
                    throw std::invalid_argument(std::string(std::is_same_v<T, Lex> ? "lex" : "hamming") +
                                                " constraint: vectors differ in length");
            } else if constexpr (std::is_same_v<T, Precedence>) {
                if (!std::is_sorted(n.chain.begin(), n.chain.end()))
                    throw std::invalid_argument("precedence chain must be ascending");
            } else if constexpr (std::is_same_v<T, Implies>) {
                if (!n.guard || !n.body)
                    throw std::invalid_argument("implication needs a guard and a body");
                const auto* lin = n.guard->template as<Linear>();
                bool ok = n.guard->template as<Compare>() || (lin && lin->rel == Relation::Eq);
                if (!ok)
                    throw std::invalid_argument("implication guard must be a linear equality or a comparison");
            }
        },
        node_);
    for_each_view(*this, check_view);
}

const char* Constraint::kind_name() const
{
    return std::visit(
        [](const auto& n) -> const char* {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Linear>)
                return n.rel == Relation::Eq ? "linear_eq" : "linear_le";
            else if constexpr (std::is_same_v<T, Compare>)
                return n.strict ? "less" : "less_eq";
            else if constexpr (std::is_same_v<T, MinBound>)
                return n.strict ? "less_than_min" : "less_eq_min";
            else if constexpr (std::is_same_v<T, MaxBound>)
                return n.strict ? "greater_than_max" : "greater_eq_max";
            else if constexpr (std::is_same_v<T, AllDifferent>)
                return "all_different";
            else if constexpr (std::is_same_v<T, Lex>)
                return n.strict ? "lex_less" : "lex_le";
            else if constexpr (std::is_same_v<T, Occurrence>)
                return "occurrence";
            else if constexpr (std::is_same_v<T, Hamming>)
                return "hamming_eq";
            else if constexpr (std::is_same_v<T, Precedence>)
                return "precedence";
            else if constexpr (std::is_same_v<T, AtMostNValues>)
                return "at_most_nvalues";
            else
                return "implies";
        },
        node_);
}

Constraint linear_eq(std::vector<View> terms, std::vector<int> coeffs, int rhs)
{
    return Linear{std::move(terms), std::move(coeffs), rhs, Relation::Eq};
}

Constraint linear_le(std::vector<View> terms, std::vector<int> coeffs, int rhs)
{
    return Linear{std::move(terms), std::move(coeffs), rhs, Relation::Le};
}

Constraint sum_eq(std::vector<View> terms, int rhs)
{
    std::vector<int> ones(terms.size(), 1);
    return linear_eq(std::move(terms), std::move(ones), rhs);
}

Constraint less(View lhs, View rhs) { return Compare{std::move(lhs), std::move(rhs), true}; }
Constraint less_eq(View lhs, View rhs) { return Compare{std::move(lhs), std::move(rhs), false}; }

Constraint less_than_min(View lhs, std::vector<View> others, bool strict)
{
    return MinBound{std::move(lhs), std::move(others), strict};
}

Constraint greater_than_max(View lhs, std::vector<View> others, bool strict)
{
    return MaxBound{std::move(lhs), std::move(others), strict};
}

Constraint all_different(std::vector<View> views) { return AllDifferent{std::move(views)}; }
Constraint lex_le(std::vector<View> a, std::vector<View> b) { return Lex{std::move(a), std::move(b), false}; }
Constraint lex_less(std::vector<View> a, std::vector<View> b) { return Lex{std::move(a), std::move(b), true}; }

Constraint occurrence(std::vector<View> views, int value, int count)
{
    return Occurrence{std::move(views), value, count};
}

Constraint hamming_eq(std::vector<View> a, std::vector<View> b, int distance)
{
    return Hamming{std::move(a), std::move(b), distance};
}

Constraint precedence(std::vector<View> views, std::vector<int> chain)
{
    return Precedence{std::move(views), std::move(chain)};
}

Constraint at_most_nvalues(std::vector<View> views, int bound) { return AtMostNValues{std::move(views), bound}; }

Constraint implies(Constraint guard, Constraint body)
{
    return Implies{std::make_shared<const Constraint>(std::move(guard)),
                   std::make_shared<const Constraint>(std::move(body))};
}

std::vector<int> variables_of(const Constraint& c)
{
    std::vector<int> vars;
    for_each_view(c, [&](const View& v) { vars.push_back(v.var); });
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

struct Evaluator {
    std::span<const int> values;

    int operator()(const View& v) const { return v.value_of(values[static_cast<std::size_t>(v.var)]); }

    bool check(const Linear& n) const
    {
        long long sum = 0;
        for (std::size_t i = 0; i < n.terms.size(); ++i)
            sum += static_cast<long long>(n.coeffs[i]) * (*this)(n.terms[i]);
        return n.rel == Relation::Eq ? sum == n.rhs : sum <= n.rhs;
    }

    bool check(const Compare& n) const
    {
        int l = (*this)(n.lhs), r = (*this)(n.rhs);
        return n.strict ? l < r : l <= r;
    }

    bool check(const MinBound& n) const
    {
        int l = (*this)(n.lhs);
        return std::all_of(n.others.begin(), n.others.end(),
                           [&](const View& o) { return n.strict ? l < (*this)(o) : l <= (*this)(o); });
    }

    bool check(const MaxBound& n) const
    {
        int l = (*this)(n.lhs);
        return std::all_of(n.others.begin(), n.others.end(),
                           [&](const View& o) { return n.strict ? l > (*this)(o) : l >= (*this)(o); });
    }

    bool check(const AllDifferent& n) const
    {
        for (std::size_t i = 0; i < n.views.size(); ++i)
            for (std::size_t j = i + 1; j < n.views.size(); ++j)
                if ((*this)(n.views[i]) == (*this)(n.views[j]))
                    return false;
        return true;
    }

    bool check(const Lex& n) const
    {
        for (std::size_t i = 0; i < n.a.size(); ++i) {
            int x = (*this)(n.a[i]), y = (*this)(n.b[i]);
            if (x != y)
                return x < y;
        }
        return !n.strict;
    }

    bool check(const Occurrence& n) const
    {
        int count = 0;
        for (const auto& v : n.views)
            count += (*this)(v) == n.value;
        return count == n.count;
    }

    bool check(const Hamming& n) const
    {
        int dist = 0;
        for (std::size_t i = 0; i < n.a.size(); ++i)
            dist += (*this)(n.a[i]) != (*this)(n.b[i]);
        return dist == n.distance;
    }

    bool check(const Precedence& n) const
    {
        long long maxSeen = -1;
        for (const auto& v : n.views) {
            auto it = std::lower_bound(n.chain.begin(), n.chain.end(), (*this)(v));
            if (it == n.chain.end() || *it != (*this)(v))
                continue;
            long long k = it - n.chain.begin();
            if (k > maxSeen + 1)
                return false;
            maxSeen = std::max(maxSeen, k);
        }
        return true;
    }

    bool check(const AtMostNValues& n) const
    {
        std::set<int> seen;
        for (const auto& v : n.views)
            seen.insert((*this)(v));
        return static_cast<int>(seen.size()) <= n.bound;
    }

    bool check(const Implies& n) const { return !eval(*n.guard, values) || eval(*n.body, values); }
};

} // namespace

bool eval(const Constraint& c, std::span<const int> values)
{
    Evaluator ev{values};
    return std::visit([&](const auto& n) { return ev.check(n); }, c.node());
}

// ---------------------------------------------------------------------------
// Propagation

int view_min(const View& v, const Domain& d)
{
    if (d.empty())
        return 0;
    if (!v.table)
        return v.sign > 0 ? d.min() + v.base + v.shift : -(d.max() + v.base) + v.shift;
    int best = std::numeric_limits<int>::max();
    d.for_each([&](int x) { best = std::min(best, v.value_of(x)); });
    return best;
}

int view_max(const View& v, const Domain& d)
{
    if (d.empty())
        return 0;
    if (!v.table)
        return v.sign > 0 ? d.max() + v.base + v.shift : -(d.min() + v.base) + v.shift;
    int best = std::numeric_limits<int>::min();
    d.for_each([&](int x) { best = std::max(best, v.value_of(x)); });
    return best;
}

bool view_contains(const View& v, const Domain& d, int value)
{
    int idx = v.index_of(value, Domain::kCapacity);
    return idx >= 0 && d.contains(idx);
}

namespace {

// Mutation helpers over a domain span. Every mutator returns false once a
// domain is wiped out.
class Filter {
public:
    Filter(std::span<Domain> doms, std::vector<int>* changed) : doms_(doms), changed_(changed) {}

    const Domain& dom(const View& v) const { return doms_[static_cast<std::size_t>(v.var)]; }
    int min(const View& v) const { return view_min(v, dom(v)); }
    int max(const View& v) const { return view_max(v, dom(v)); }
    bool fixed(const View& v) const { return dom(v).fixed(); }
    int value(const View& v) const { return v.value_of(dom(v).value()); }
    bool contains(const View& v, int value) const { return view_contains(v, dom(v), value); }

    bool restrict(const View& v, long long lo, long long hi)
    {
        Domain& d = mut(v);
        bool changed;
        if (!v.table) {
            long long ilo, ihi;
            if (v.sign > 0) {
                ilo = lo - v.shift - v.base;
                ihi = hi - v.shift - v.base;
            } else {
                ilo = v.shift - hi - v.base;
                ihi = v.shift - lo - v.base;
            }
            changed = d.restrict_to(clamp_int(ilo), clamp_int(ihi));
        } else {
            changed = remove_if(d, [&](int x) {
                int val = v.value_of(x);
                return val < lo || val > hi;
            });
        }
        return note(v, changed);
    }

    bool remove(const View& v, int value)
    {
        int idx = v.index_of(value, Domain::kCapacity);
        if (idx < 0)
            return true;
        return note(v, mut(v).remove(idx));
    }

    bool assign(const View& v, int value)
    {
        int idx = v.index_of(value, Domain::kCapacity);
        Domain& d = mut(v);
        bool changed = idx >= 0 && d.contains(idx) ? d.assign(idx) : d.restrict_to(0, -1);
        return note(v, changed);
    }

    template <typename Pred>
    bool keep_if(const View& v, Pred keep)
    {
        Domain& d = mut(v);
        bool changed = remove_if(d, [&](int x) { return !keep(v.value_of(x)); });
        return note(v, changed);
    }

    bool progress() const { return progress_; }
    void reset_progress() { progress_ = false; }
    std::span<Domain> domains() const { return doms_; }
    std::vector<int>* changed_list() const { return changed_; }

private:
    Domain& mut(const View& v) { return doms_[static_cast<std::size_t>(v.var)]; }

    template <typename Pred>
    static bool remove_if(Domain& d, Pred drop)
    {
        bool changed = false;
        Domain copy = d;
        copy.for_each([&](int x) {
            if (drop(x))
                changed |= d.remove(x);
        });
        return changed;
    }

    bool note(const View& v, bool changed)
    {
        if (changed) {
            progress_ = true;
            if (changed_)
                changed_->push_back(v.var);
        }
        return !dom(v).empty();
    }

    std::span<Domain> doms_;
    std::vector<int>* changed_;
    bool progress_ = false;
};

bool propagate_once(const Constraint& c, Filter& f);

bool prop(const Linear& n, Filter& f)
{
    const std::size_t k = n.terms.size();
    std::vector<long long> lo(k), hi(k);
    long long sumLo = 0, sumHi = 0;
    for (std::size_t i = 0; i < k; ++i) {
        long long c = n.coeffs[i];
        long long a = f.min(n.terms[i]), b = f.max(n.terms[i]);
        lo[i] = c >= 0 ? c * a : c * b;
        hi[i] = c >= 0 ? c * b : c * a;
        sumLo += lo[i];
        sumHi += hi[i];
    }
    if (sumLo > n.rhs || (n.rel == Relation::Eq && sumHi < n.rhs))
        return false;
    for (std::size_t i = 0; i < k; ++i) {
        long long c = n.coeffs[i];
        if (c == 0)
            continue;
        long long tHi = n.rhs - (sumLo - lo[i]);
        long long tLo = n.rel == Relation::Eq ? n.rhs - (sumHi - hi[i]) : -kInf;
        long long vLo, vHi;
        if (c > 0) {
            vLo = tLo == -kInf ? -kInf : ceil_div(tLo, c);
            vHi = floor_div(tHi, c);
        } else {
            vLo = ceil_div(tHi, c);
            vHi = tLo == -kInf ? kInf : floor_div(tLo, c);
        }
        if (!f.restrict(n.terms[i], vLo, vHi))
            return false;
    }
    return true;
}

bool prop(const Compare& n, Filter& f)
{
    const int s = n.strict ? 1 : 0;
    if (!f.restrict(n.lhs, -kInf, static_cast<long long>(f.max(n.rhs)) - s))
        return false;
    return f.restrict(n.rhs, static_cast<long long>(f.min(n.lhs)) + s, kInf);
}

bool prop(const MinBound& n, Filter& f)
{
    const int s = n.strict ? 1 : 0;
    for (const auto& o : n.others) {
        if (!f.restrict(n.lhs, -kInf, static_cast<long long>(f.max(o)) - s))
            return false;
        if (!f.restrict(o, static_cast<long long>(f.min(n.lhs)) + s, kInf))
            return false;
    }
    return true;
}

bool prop(const MaxBound& n, Filter& f)
{
    const int s = n.strict ? 1 : 0;
    for (const auto& o : n.others) {
        if (!f.restrict(n.lhs, static_cast<long long>(f.min(o)) + s, kInf))
            return false;
        if (!f.restrict(o, -kInf, static_cast<long long>(f.max(n.lhs)) - s))
            return false;
    }
    return true;
}

bool prop(const AllDifferent& n, Filter& f)
{
    for (std::size_t i = 0; i < n.views.size(); ++i) {
        if (!f.fixed(n.views[i]))
            continue;
        const int val = f.value(n.views[i]);
        for (std::size_t j = 0; j < n.views.size(); ++j) {
            if (j == i)
                continue;
            if (n.views[j].var == n.views[i].var) {
                // Same variable through another map: equal images are a conflict.
                if (f.value(n.views[j]) == val)
                    return false;
                continue;
            }
            if (!f.remove(n.views[j], val))
                return false;
        }
    }
    return true;
}

// Whether some completion of positions [from, n) satisfies the lex order,
// judged from bounds with each position treated independently.
bool lex_suffix_feasible(const Lex& n, Filter& f, std::size_t from)
{
    for (std::size_t k = from; k < n.a.size(); ++k) {
        int amin = f.min(n.a[k]), bmax = f.max(n.b[k]);
        if (amin < bmax)
            return true;
        if (amin > bmax)
            return false;
    }
    return !n.strict;
}

bool prop(const Lex& n, Filter& f)
{
    const std::size_t len = n.a.size();
    std::size_t i = 0;
    while (i < len && f.fixed(n.a[i]) && f.fixed(n.b[i]) && f.value(n.a[i]) == f.value(n.b[i]))
        ++i;
    if (i == len)
        return !n.strict;
    const bool strictHere = !lex_suffix_feasible(n, f, i + 1);
    const int s = strictHere ? 1 : 0;
    if (!f.restrict(n.a[i], -kInf, static_cast<long long>(f.max(n.b[i])) - s))
        return false;
    return f.restrict(n.b[i], static_cast<long long>(f.min(n.a[i])) + s, kInf);
}

bool prop(const Occurrence& n, Filter& f)
{
    int fixedCount = 0, possible = 0;
    for (const auto& v : n.views) {
        if (f.contains(v, n.value)) {
            ++possible;
            if (f.fixed(v))
                ++fixedCount;
        }
    }
    if (fixedCount > n.count || possible < n.count)
        return false;
    if (fixedCount == n.count) {
        for (const auto& v : n.views)
            if (!f.fixed(v) && !f.remove(v, n.value))
                return false;
    } else if (possible == n.count) {
        for (const auto& v : n.views)
            if (f.contains(v, n.value) && !f.assign(v, n.value))
                return false;
    }
    return true;
}

bool views_may_equal(const View& a, const View& b, Filter& f)
{
    bool found = false;
    f.dom(a).for_each([&](int x) {
        if (!found && f.contains(b, a.value_of(x)))
            found = true;
    });
    return found;
}

bool prop(const Hamming& n, Filter& f)
{
    const std::size_t len = n.a.size();
    std::vector<char> mustDiff(len), mustEq(len);
    int must = 0, may = 0;
    for (std::size_t i = 0; i < len; ++i) {
        const View& a = n.a[i];
        const View& b = n.b[i];
        if (f.fixed(a) && f.fixed(b)) {
            mustEq[i] = f.value(a) == f.value(b);
            mustDiff[i] = !mustEq[i];
        } else {
            mustDiff[i] = !views_may_equal(a, b, f);
        }
        must += mustDiff[i];
        may += !mustEq[i];
    }
    if (must > n.distance || may < n.distance)
        return false;
    if (may == n.distance) {
        for (std::size_t i = 0; i < len; ++i) {
            if (mustEq[i] || mustDiff[i])
                continue;
            if (f.fixed(n.a[i]) && !f.remove(n.b[i], f.value(n.a[i])))
                return false;
            if (f.fixed(n.b[i]) && !f.remove(n.a[i], f.value(n.b[i])))
                return false;
        }
    } else if (must == n.distance) {
        for (std::size_t i = 0; i < len; ++i) {
            if (mustEq[i] || mustDiff[i])
                continue;
            const View& a = n.a[i];
            const View& b = n.b[i];
            if (!f.keep_if(a, [&](int val) { return f.contains(b, val); }))
                return false;
            if (!f.keep_if(b, [&](int val) { return f.contains(a, val); }))
                return false;
        }
    }
    return true;
}

bool prop(const Precedence& n, Filter& f)
{
    auto rank = [&](int val) -> long long {
        auto it = std::lower_bound(n.chain.begin(), n.chain.end(), val);
        if (it == n.chain.end() || *it != val)
            return -1;
        return it - n.chain.begin();
    };
    long long reach = -1;
    for (const auto& v : n.views) {
        const long long limit = reach + 1;
        if (!f.keep_if(v, [&](int val) { return rank(val) <= limit; }))
            return false;
        f.dom(v).for_each([&](int x) { reach = std::max(reach, rank(v.value_of(x))); });
    }
    return true;
}

bool prop(const AtMostNValues& n, Filter& f)
{
    std::set<int> used;
    for (const auto& v : n.views)
        if (f.fixed(v))
            used.insert(f.value(v));
    if (static_cast<int>(used.size()) > n.bound)
        return false;
    if (static_cast<int>(used.size()) == n.bound) {
        for (const auto& v : n.views)
            if (!f.fixed(v) && !f.keep_if(v, [&](int val) { return used.contains(val); }))
                return false;
    }
    return true;
}

bool propagate_negation(const Constraint& guard, Filter& f)
{
    if (const auto* cmp = guard.as<Compare>()) {
        Compare neg{cmp->rhs, cmp->lhs, !cmp->strict};
        return prop(neg, f);
    }
    const auto& lin = *guard.as<Linear>();
    long long fixedSum = 0;
    int open = -1, openCount = 0;
    for (std::size_t i = 0; i < lin.terms.size(); ++i) {
        if (f.fixed(lin.terms[i])) {
            fixedSum += static_cast<long long>(lin.coeffs[i]) * f.value(lin.terms[i]);
        } else {
            open = static_cast<int>(i);
            ++openCount;
        }
    }
    if (openCount == 0)
        return fixedSum != lin.rhs;
    if (openCount == 1) {
        long long c = lin.coeffs[static_cast<std::size_t>(open)];
        long long rest = lin.rhs - fixedSum;
        if (c != 0 && rest % c == 0)
            return f.remove(lin.terms[static_cast<std::size_t>(open)], static_cast<int>(rest / c));
        if (c == 0 && rest == 0)
            return false;
    }
    return true;
}

bool prop(const Implies& n, Filter& f)
{
    if (entailed(*n.guard, f.domains()))
        return propagate_once(*n.body, f);
    std::vector<Domain> scratch(f.domains().begin(), f.domains().end());
    if (propagate(*n.body, scratch) == PropStatus::Fail)
        return propagate_negation(*n.guard, f);
    return true;
}

bool propagate_once(const Constraint& c, Filter& f)
{
    return std::visit([&](const auto& n) { return prop(n, f); }, c.node());
}

} // namespace

PropStatus propagate(const Constraint& c, std::span<Domain> domains, std::vector<int>* changed)
{
    Filter f(domains, changed);
    do {
        f.reset_progress();
        if (!propagate_once(c, f))
            return PropStatus::Fail;
    } while (f.progress());
    return PropStatus::Ok;
}

bool entailed(const Constraint& c, std::span<const Domain> domains)
{
    auto dom = [&](const View& v) -> const Domain& { return domains[static_cast<std::size_t>(v.var)]; };
    if (const auto* cmp = c.as<Compare>()) {
        int l = view_max(cmp->lhs, dom(cmp->lhs)), r = view_min(cmp->rhs, dom(cmp->rhs));
        return cmp->strict ? l < r : l <= r;
    }
    if (const auto* lin = c.as<Linear>()) {
        long long sumLo = 0, sumHi = 0;
        for (std::size_t i = 0; i < lin->terms.size(); ++i) {
            long long k = lin->coeffs[i];
            long long a = view_min(lin->terms[i], dom(lin->terms[i]));
            long long b = view_max(lin->terms[i], dom(lin->terms[i]));
            sumLo += k >= 0 ? k * a : k * b;
            sumHi += k >= 0 ? k * b : k * a;
        }
        if (lin->rel == Relation::Le)
            return sumHi <= lin->rhs;
        return sumLo == lin->rhs && sumHi == lin->rhs;
    }
    std::vector<int> values(domains.size(), kUnassigned);
    bool allFixed = true;
    for_each_view(c, [&](const View& v) {
        const Domain& d = dom(v);
        if (d.fixed())
            values[static_cast<std::size_t>(v.var)] = d.value();
        else
            allFixed = false;
    });
    return allFixed && eval(c, values);
}

} // namespace symbreak
