#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "symbreak/csp.hpp"
#include "symbreak/hash.hpp"
#include "symbreak/perm.hpp"
#include "symbreak/symbreak.hpp"

namespace symbreak {

struct ModelBundle;

inline constexpr std::size_t kDefaultOracleBound = 100000000;

class SearchSpaceTooLarge : public std::runtime_error {
public:
    explicit SearchSpaceTooLarge(std::size_t bound);
    std::size_t bound() const { return bound_; }

private:
    std::size_t bound_;
};

/// Every solution of csp, by plain generate-and-test: variables are assigned
/// in index order and each constraint is evaluated once all its variables
/// are assigned (all-different is checked pairwise). No propagation. `bound`
/// limits the number of visited nodes. Solutions come out in lexicographic
/// order of value indices.
std::vector<Assignment> enumerate_solutions(const Csp& csp, std::size_t bound = kDefaultOracleBound);
std::optional<Assignment> first_solution(const Csp& csp, std::size_t bound = kDefaultOracleBound);

/// The whole problem (domains and constraints) transformed by g.
Csp apply_symmetry(const Symmetry& g, const Csp& csp);

/// Partition of `solutions` into classes under the listed elements: A and
/// g(A) share a class whenever both are in the input. Classes are sorted and
/// listed by their smallest member.
std::vector<std::vector<Assignment>> orbit_partition(std::span<const Assignment> solutions,
                                                     std::span<const Symmetry> elements);
std::vector<std::vector<Assignment>> orbit_partition(std::span<const Assignment> solutions,
                                                     const SymmetryGroup& group,
                                                     std::size_t bound = kDefaultGroupBound);

enum class Proposition {
    Satisfiability,
    SolutionImage,
    FixedSolutions,
    GroupPreservation,
    Soundness,
    Completeness,
    Representatives,
    BreaksEliminates,
    NoSymmetryInGroup,
};

inline constexpr std::array<Proposition, 9> kAllPropositions = {
    Proposition::Satisfiability,  Proposition::SolutionImage,   Proposition::FixedSolutions,
    Proposition::GroupPreservation, Proposition::Soundness,     Proposition::Completeness,
    Proposition::Representatives, Proposition::BreaksEliminates, Proposition::NoSymmetryInGroup,
};

const char* to_string(Proposition p);
std::optional<Proposition> parse_proposition(const std::string& name);

struct Counterexample {
    std::string symmetry;
    Assignment assignment;
    std::string detail;
};

struct CheckResult {
    Proposition proposition;
    bool passed = true;
    /// Set when the statement is an implication whose premise fails here.
    bool vacuous = false;
    std::optional<Counterexample> counterexample;
    std::string note;
};

/// Everything the checks share, computed once: the enumerated group, sol(C),
/// its orbits and the survivors of g(S) for every element g.
struct VerificationContext {
    std::string instance;
    Csp csp;
    SymBreakSet sbc;
    std::vector<Symmetry> generators;
    std::vector<Symmetry> elements;
    std::vector<Assignment> solutions;
    std::vector<std::vector<Assignment>> orbits;
    /// orbitOf[k] is the orbit index of solutions[k].
    std::vector<int> orbitOf;
    /// survivors[e] = sol(C + elements[e](S)), as indices into solutions.
    std::vector<std::vector<int>> survivors;
    std::size_t searchBound = kDefaultOracleBound;
    std::unordered_map<Assignment, int, IntVectorHash> index;

    /// Position of a in solutions, or -1.
    int solution_index(const Assignment& a) const;
};

VerificationContext make_context(std::string instance, const Csp& csp, const SymmetryGroup& group,
                                 const SymBreakSet& sbc, std::size_t groupBound = kDefaultGroupBound,
                                 std::size_t searchBound = kDefaultOracleBound);
VerificationContext make_context(const ModelBundle& bundle, std::size_t groupBound = kDefaultGroupBound,
                                 std::size_t searchBound = kDefaultOracleBound);

CheckResult check_proposition(Proposition p, const VerificationContext& ctx);
std::vector<CheckResult> check_all(const VerificationContext& ctx);

/// One line per check: proposition, instance, group size, solutions, orbits, verdict.
std::string report(const VerificationContext& ctx, std::span<const CheckResult> results);

} // namespace symbreak
