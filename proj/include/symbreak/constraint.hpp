#pragma once

#include <memory>
#include <span>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "symbreak/domain.hpp"
#include "symbreak/perm.hpp"

namespace symbreak {

/// A variable seen through a value map. For a variable holding value index x:
///
///     value(x) = sign * (table(x) + base) + shift
///
/// `base` is the problem's value offset, so with no table, sign +1 and shift 0
/// the view yields the external value. `table` is a permutation of value
/// indices; sign is +1 or -1.
struct View {
    int var = 0;
    int sign = 1;
    int shift = 0;
    int base = 0;
    std::shared_ptr<const Permutation> table;
    std::shared_ptr<const Permutation> tableInverse;

    static View of(int var, int base = 0) { return View{var, 1, 0, base, nullptr, nullptr}; }

    bool has_table() const { return table != nullptr; }
    bool is_plain() const { return !table && sign == 1 && shift == 0; }

    int value_of(int index) const { return sign * ((table ? (*table)[index] : index) + base) + shift; }

    /// The value index mapped to `value`, or -1 if none exists in [0, universe).
    int index_of(int value, int universe) const;

    friend bool operator==(const View& a, const View& b);
};

/// View of `k - v`.
View reflect(const View& v, int k);
/// View of `v + k`.
View offset_by(const View& v, int k);
/// Pre-composes a value-index permutation: result.value_of(x) = v.value_of(perm[x]).
/// A resulting identity table is dropped and a full reversal is folded into the affine part.
View compose_table(const View& v, const Permutation& perm);

enum class Relation { Eq, Le };

struct Linear {
    std::vector<View> terms;
    std::vector<int> coeffs;
    int rhs = 0;
    Relation rel = Relation::Eq;

    friend bool operator==(const Linear&, const Linear&) = default;
};

/// lhs < rhs (strict) or lhs <= rhs.
struct Compare {
    View lhs;
    View rhs;
    bool strict = true;

    friend bool operator==(const Compare&, const Compare&) = default;
};

/// lhs < min(others) (strict) or lhs <= min(others).
struct MinBound {
    View lhs;
    std::vector<View> others;
    bool strict = true;

    friend bool operator==(const MinBound&, const MinBound&) = default;
};

/// lhs > max(others) (strict) or lhs >= max(others).
struct MaxBound {
    View lhs;
    std::vector<View> others;
    bool strict = true;

    friend bool operator==(const MaxBound&, const MaxBound&) = default;
};

struct AllDifferent {
    std::vector<View> views;

    friend bool operator==(const AllDifferent&, const AllDifferent&) = default;
};

/// a <=lex b, or a <lex b when strict.
struct Lex {
    std::vector<View> a;
    std::vector<View> b;
    bool strict = false;

    friend bool operator==(const Lex&, const Lex&) = default;
};

/// Exactly `count` of the views take `value`.
struct Occurrence {
    std::vector<View> views;
    int value = 0;
    int count = 0;

    friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

/// The two vectors differ in exactly `distance` positions.
struct Hamming {
    std::vector<View> a;
    std::vector<View> b;
    int distance = 0;

    friend bool operator==(const Hamming&, const Hamming&) = default;
};

/// Value precedence along `chain` (ascending): if chain[k] occurs at some
/// position then chain[k-1] occurs strictly earlier. Values not in the chain
/// are unconstrained.
struct Precedence {
    std::vector<View> views;
    std::vector<int> chain;

    friend bool operator==(const Precedence&, const Precedence&) = default;
};

/// At most `bound` distinct values among the views.
struct AtMostNValues {
    std::vector<View> views;
    int bound = 0;

    friend bool operator==(const AtMostNValues&, const AtMostNValues&) = default;
};

class Constraint;

/// guard -> body. The guard must be a Linear equality or a Compare.
struct Implies {
    std::shared_ptr<const Constraint> guard;
    std::shared_ptr<const Constraint> body;

    friend bool operator==(const Implies& a, const Implies& b);
};

class Constraint {
public:
    using Node = std::variant<Linear, Compare, MinBound, MaxBound, AllDifferent, Lex, Occurrence, Hamming,
                              Precedence, AtMostNValues, Implies>;

    Constraint(Node node);

    template <typename T>
        requires(!std::is_same_v<std::decay_t<T>, Constraint> && !std::is_same_v<std::decay_t<T>, Node> &&
                 std::is_constructible_v<Node, T &&>)
    Constraint(T&& alternative) : Constraint(Node(std::forward<T>(alternative)))
    {
    }

    const Node& node() const { return node_; }
    const char* kind_name() const;

    template <typename T>
    const T* as() const
    {
        return std::get_if<T>(&node_);
    }

    friend bool operator==(const Constraint& a, const Constraint& b);

private:
    Node node_;
};

// Constructors.
Constraint linear_eq(std::vector<View> terms, std::vector<int> coeffs, int rhs);
Constraint linear_le(std::vector<View> terms, std::vector<int> coeffs, int rhs);
Constraint sum_eq(std::vector<View> terms, int rhs);
Constraint less(View lhs, View rhs);
Constraint less_eq(View lhs, View rhs);
Constraint less_than_min(View lhs, std::vector<View> others, bool strict = true);
Constraint greater_than_max(View lhs, std::vector<View> others, bool strict = true);
Constraint all_different(std::vector<View> views);
Constraint lex_le(std::vector<View> a, std::vector<View> b);
Constraint lex_less(std::vector<View> a, std::vector<View> b);
Constraint occurrence(std::vector<View> views, int value, int count);
Constraint hamming_eq(std::vector<View> a, std::vector<View> b, int distance);
Constraint precedence(std::vector<View> views, std::vector<int> chain);
Constraint at_most_nvalues(std::vector<View> views, int bound);
Constraint implies(Constraint guard, Constraint body);

/// Rebuilds the constraint with every view replaced by f(view).
template <typename F>
Constraint map_views(const Constraint& c, F&& f);

/// Calls f(view) for every view, including those nested in Implies.
template <typename F>
void for_each_view(const Constraint& c, F&& f);

std::vector<int> variables_of(const Constraint& c);

/// Truth value on a total assignment of value indices.
bool eval(const Constraint& c, std::span<const int> values);

enum class PropStatus { Ok, Fail };

/// Filters `domains` to a fixpoint of this constraint. Never removes a value
/// that belongs to a satisfying tuple of the constraint alone. Indices of
/// changed variables are appended to `changed` when provided.
PropStatus propagate(const Constraint& c, std::span<Domain> domains, std::vector<int>* changed = nullptr);

/// Bounds-based entailment test used by Implies guards.
bool entailed(const Constraint& c, std::span<const Domain> domains);

// View helpers over a domain.
int view_min(const View& v, const Domain& d);
int view_max(const View& v, const Domain& d);
bool view_contains(const View& v, const Domain& d, int value);

} // namespace symbreak

#include "symbreak/constraint_inl.hpp"
