#include "symbreak/csp.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

#include "symbreak/oracle.hpp"

namespace symbreak {

bool is_total(std::span<const int> assignment)
{
    return std::none_of(assignment.begin(), assignment.end(), [](int v) { return v == kUnassigned; });
}

Csp::Csp(int varCount, int valueCount, int valueOffset)
    : varCount_(varCount), valueCount_(valueCount), valueOffset_(valueOffset)
{
    if (varCount < 0)
        throw std::invalid_argument("negative variable count");
    if (valueCount < 1 || valueCount > Domain::kCapacity)
        throw std::invalid_argument("value count must lie in [1, " + std::to_string(Domain::kCapacity) + "]");
    domains_.assign(static_cast<std::size_t>(varCount), Domain::range(0, valueCount - 1));
    names_.reserve(static_cast<std::size_t>(varCount));
    for (int i = 0; i < varCount; ++i)
        names_.push_back("X[" + std::to_string(i) + "]");
}

View Csp::var(int i) const
{
    if (i < 0 || i >= varCount_)
        throw std::out_of_range("variable index " + std::to_string(i) + " out of range");
    return View::of(i, valueOffset_);
}

void Csp::restrict_domain(int i, int lo, int hi)
{
    domains_.at(static_cast<std::size_t>(i)).restrict_to(std::max(0, to_index(lo)), to_index(hi));
}

void Csp::check_view(const View& v) const
{
    if (v.var >= varCount_)
        throw std::out_of_range("constraint references variable " + std::to_string(v.var) + " but the problem has " +
                                std::to_string(varCount_));
    if (v.table && v.table->size() != valueCount_)
        throw DimensionMismatch("value map size differs from the value range");
}

void Csp::post(Constraint c)
{
    for_each_view(c, [&](const View& v) { check_view(v); });
    constraints_.push_back(std::move(c));
}

void Csp::post_all(std::span<const Constraint> cs)
{
    for (const auto& c : cs)
        post(c);
}

void Csp::set_objective(Objective obj)
{
    for (const auto& v : obj.views)
        check_view(v);
    objective_ = std::move(obj);
}

void Csp::set_var_name(int i, std::string name) { names_.at(static_cast<std::size_t>(i)) = std::move(name); }

std::vector<int> Csp::to_values(std::span<const int> assignment) const
{
    std::vector<int> out(assignment.begin(), assignment.end());
    for (auto& v : out)
        if (v != kUnassigned)
            v = to_value(v);
    return out;
}

Assignment Csp::from_values(std::span<const int> values) const
{
    Assignment out(values.begin(), values.end());
    for (auto& v : out) {
        if (v == kUnassigned)
            continue;
        v = to_index(v);
        if (v < 0 || v >= valueCount_)
            throw std::out_of_range("value outside the problem's range");
    }
    return out;
}

bool satisfies(std::span<const int> assignment, const Constraint& c) { return eval(c, assignment); }

bool satisfies(std::span<const int> assignment, std::span<const Constraint> cs)
{
    return std::all_of(cs.begin(), cs.end(), [&](const Constraint& c) { return eval(c, assignment); });
}

bool satisfies(const Csp& csp, std::span<const int> assignment)
{
    if (static_cast<int>(assignment.size()) != csp.var_count() || !is_total(assignment))
        return false;
    for (int i = 0; i < csp.var_count(); ++i)
        if (!csp.domain(i).contains(assignment[static_cast<std::size_t>(i)]))
            return false;
    return satisfies(assignment, csp.constraints());
}

int objective_value(const Objective& obj, std::span<const int> assignment)
{
    if (obj.kind == Objective::Kind::Max) {
        int best = std::numeric_limits<int>::min();
        for (const auto& v : obj.views)
            best = std::max(best, v.value_of(assignment[static_cast<std::size_t>(v.var)]));
        return best;
    }
    std::set<int> seen;
    for (const auto& v : obj.views)
        seen.insert(v.value_of(assignment[static_cast<std::size_t>(v.var)]));
    return static_cast<int>(seen.size());
}

std::vector<Assignment> sol(const Csp& csp) { return enumerate_solutions(csp); }

} // namespace symbreak
