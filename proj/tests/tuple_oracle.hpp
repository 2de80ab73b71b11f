#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "symbreak/constraint.hpp"

namespace symbreak::test {

struct OracleTally {
    std::size_t configurations = 0;
    std::size_t violations = 0;
    std::string firstViolation;
};

/// Runs propagate on every assignment of nonempty subsets of {0..values-1}
/// to variables 0..arity-1 and compares with the supports computed by
/// enumerating tuples. A violation is a supported value that was removed, or
/// a Fail on a configuration that has a satisfying tuple.
inline OracleTally tuple_oracle(const Constraint& c, int arity, int values)
{
    OracleTally tally;
    const int subsets = (1 << values) - 1;
    std::vector<int> mask(static_cast<std::size_t>(arity), 1);
    while (true) {
        std::vector<Domain> doms;
        for (int m : mask) {
            Domain d;
            Domain full = Domain::range(0, values - 1);
            for (int v = 0; v < values; ++v)
                if (!(m >> v & 1))
                    full.remove(v);
            doms.push_back(full);
        }

        std::vector<std::vector<char>> supported(static_cast<std::size_t>(arity),
                                                 std::vector<char>(static_cast<std::size_t>(values), 0));
        bool any = false;
        std::vector<int> t(static_cast<std::size_t>(arity), 0);
        while (true) {
            bool inside = true;
            for (int i = 0; i < arity; ++i)
                inside = inside && doms[static_cast<std::size_t>(i)].contains(t[static_cast<std::size_t>(i)]);
            if (inside && eval(c, t)) {
                any = true;
                for (int i = 0; i < arity; ++i)
                    supported[static_cast<std::size_t>(i)][static_cast<std::size_t>(t[static_cast<std::size_t>(i)])] = 1;
            }
            int k = 0;
            while (k < arity && ++t[static_cast<std::size_t>(k)] == values)
                t[static_cast<std::size_t>(k++)] = 0;
            if (k == arity)
                break;
        }

        std::vector<Domain> filtered = doms;
        const bool failed = propagate(c, filtered) == PropStatus::Fail;
        ++tally.configurations;
        bool bad = failed && any;
        if (!failed)
            for (int i = 0; i < arity && !bad; ++i)
                for (int v = 0; v < values; ++v)
                    if (supported[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)] &&
                        !filtered[static_cast<std::size_t>(i)].contains(v))
                        bad = true;
        if (bad) {
            if (tally.violations == 0) {
                for (const auto& d : doms)
                    tally.firstViolation += d.to_string() + " ";
            }
            ++tally.violations;
        }

        int k = 0;
        while (k < arity && ++mask[static_cast<std::size_t>(k)] > subsets)
            mask[static_cast<std::size_t>(k++)] = 1;
        if (k == arity)
            break;
    }
    return tally;
}

/// One or more constraints of every kind over variables 0..arity-1 with
/// value indices 0..3, mixing plain, reflected and permuted views.
inline std::vector<std::pair<Constraint, int>> constraint_catalog()
{
    auto x = [](int i) { return View::of(i); };
    auto r = [](int i) { return reflect(View::of(i), 3); };
    auto t = [](int i) { return compose_table(View::of(i), Permutation({2, 0, 3, 1})); };
    std::vector<std::pair<Constraint, int>> out;
    out.emplace_back(linear_eq({x(0), x(1), x(2)}, {1, 2, -1}, 2), 3);
    out.emplace_back(linear_eq({x(0), r(1), x(2), x(3)}, {1, 1, 1, 1}, 6), 4);
    out.emplace_back(linear_le({x(0), x(1), r(2)}, {1, -1, 3}, 4), 3);
    out.emplace_back(linear_le({t(0), x(1)}, {2, 1}, 3), 2);
    out.emplace_back(less(x(0), x(1)), 2);
    out.emplace_back(less(r(0), x(1)), 2);
    out.emplace_back(less_eq(x(0), r(1)), 2);
    out.emplace_back(less(t(0), t(1)), 2);
    out.emplace_back(less_than_min(x(0), {x(1), x(2), x(3)}), 4);
    out.emplace_back(less_than_min(x(0), {r(0), r(1), r(2)}, false), 3);
    out.emplace_back(less_than_min(x(0), {r(0), r(1), r(2), r(3)}, true), 4);
    out.emplace_back(greater_than_max(x(0), {x(1), x(2)}), 3);
    out.emplace_back(greater_than_max(r(0), {x(1), t(2), x(3)}, false), 4);
    out.emplace_back(all_different({x(0), x(1), x(2)}), 3);
    out.emplace_back(all_different({x(0), x(1), x(2), x(3)}), 4);
    out.emplace_back(all_different({t(0), x(1), r(2)}), 3);
    out.emplace_back(lex_le({x(0), x(1)}, {x(2), x(3)}), 4);
    out.emplace_back(lex_less({x(0), x(1)}, {x(2), x(3)}), 4);
    out.emplace_back(lex_le({x(0), x(1)}, {x(1), x(0)}), 2);
    out.emplace_back(lex_le({r(0), x(1)}, {t(2), x(3)}), 4);
    out.emplace_back(occurrence({x(0), x(1), x(2)}, 1, 2), 3);
    out.emplace_back(occurrence({x(0), x(1), x(2), x(3)}, 0, 1), 4);
    out.emplace_back(occurrence({t(0), x(1), r(2)}, 2, 1), 3);
    out.emplace_back(hamming_eq({x(0), x(1)}, {x(2), x(3)}, 1), 4);
    out.emplace_back(hamming_eq({x(0), x(1)}, {x(2), x(3)}, 2), 4);
    out.emplace_back(hamming_eq({x(0), x(1)}, {x(2), x(3)}, 0), 4);
    out.emplace_back(precedence({x(0), x(1), x(2), x(3)}, {0, 1, 2}), 4);
    out.emplace_back(precedence({x(0), x(1), x(2)}, {1, 3}), 3);
    out.emplace_back(at_most_nvalues({x(0), x(1), x(2), x(3)}, 2), 4);
    out.emplace_back(at_most_nvalues({x(0), x(1), x(2)}, 1), 3);
    out.emplace_back(implies(linear_eq({x(0), x(1)}, {1, 1}, 3), less(x(0), x(1))), 2);
    out.emplace_back(implies(less(x(0), x(1)), less(x(1), x(2))), 3);
    out.emplace_back(implies(linear_eq({x(0), x(3)}, {1, 1}, 3), less_than_min(x(1), {x(2), x(3)})), 4);
    return out;
}

} // namespace symbreak::test
