#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symbreak/constraint.hpp"
#include "symbreak/domain.hpp"

namespace symbreak {

/// A total or partial assignment of value indices, kUnassigned marking holes.
using Assignment = std::vector<int>;

bool is_total(std::span<const int> assignment);

/// What a branch-and-bound run minimizes: the largest value among the views,
/// or the number of distinct values they take.
struct Objective {
    enum class Kind { Max, Distinct };
    Kind kind = Kind::Max;
    std::vector<View> views;
};

/// Variables over value indices 0..valueCount-1; external value = index + offset.
class Csp {
public:
    Csp(int varCount, int valueCount, int valueOffset = 0);

    int var_count() const { return varCount_; }
    int value_count() const { return valueCount_; }
    int value_offset() const { return valueOffset_; }

    /// Plain view of variable i, yielding external values.
    View var(int i) const;

    int to_index(int value) const { return value - valueOffset_; }
    int to_value(int index) const { return index + valueOffset_; }

    const std::vector<Domain>& domains() const { return domains_; }
    const Domain& domain(int i) const { return domains_.at(static_cast<std::size_t>(i)); }
    /// Intersects the domain of variable i with the external values [lo, hi].
    void restrict_domain(int i, int lo, int hi);
    void set_domain(int i, Domain d) { domains_.at(static_cast<std::size_t>(i)) = d; }

    const std::vector<Constraint>& constraints() const { return constraints_; }
    void post(Constraint c);
    void post_all(std::span<const Constraint> cs);

    const std::optional<Objective>& objective() const { return objective_; }
    void set_objective(Objective obj);

    const std::string& var_name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
    void set_var_name(int i, std::string name);
    const std::vector<std::string>& var_names() const { return names_; }

    /// External values of an assignment; holes stay kUnassigned.
    std::vector<int> to_values(std::span<const int> assignment) const;
    Assignment from_values(std::span<const int> values) const;

private:
    void check_view(const View& v) const;

    int varCount_;
    int valueCount_;
    int valueOffset_;
    std::vector<Domain> domains_;
    std::vector<Constraint> constraints_;
    std::optional<Objective> objective_;
    std::vector<std::string> names_;
};

bool satisfies(std::span<const int> assignment, const Constraint& c);
bool satisfies(std::span<const int> assignment, std::span<const Constraint> cs);
/// Domain membership plus every posted constraint.
bool satisfies(const Csp& csp, std::span<const int> assignment);

/// Value of the objective on a total assignment.
int objective_value(const Objective& obj, std::span<const int> assignment);

/// Exhaustive solution set, computed by the generate-and-test oracle.
std::vector<Assignment> sol(const Csp& csp);

} // namespace symbreak
