#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace symbreak {

/// Bijection on {0..n-1}, stored as its image array.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> image);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(image_.size()); }
    int operator[](int i) const { return image_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& image() const { return image_; }

    bool is_identity() const;
    Permutation inverse() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> image_;
};

/// (p*q)[i] = p[q[i]]: apply q first.
Permutation operator*(const Permutation& p, const Permutation& q);

/// Mixed variable/value symmetry. Acting on an assignment A it produces B with
/// B[var[i]] = val[A[i]].
struct Symmetry {
    Permutation var;
    Permutation val;
    std::string label;

    static Symmetry identity(int varCount, int valueCount);

    int var_count() const { return var.size(); }
    int value_count() const { return val.size(); }
    bool is_identity() const { return var.is_identity() && val.is_identity(); }

    /// Label if present, otherwise a compact rendering of both images.
    std::string describe() const;

    /// Equality ignores labels.
    friend bool operator==(const Symmetry& a, const Symmetry& b)
    {
        return a.var == b.var && a.val == b.val;
    }
};

struct SymmetryHash {
    std::size_t operator()(const Symmetry& s) const noexcept;
};

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class GroupTooLarge : public std::runtime_error {
public:
    explicit GroupTooLarge(std::size_t bound);
    std::size_t bound() const { return bound_; }

private:
    std::size_t bound_;
};

/// compose(g, h) acts as "h first, then g".
Symmetry compose(const Symmetry& g, const Symmetry& h);
Symmetry inverse(const Symmetry& g);

/// Value index used for an unassigned variable in partial assignments.
inline constexpr int kUnassigned = -1;

/// Applies g to a total assignment of value indices.
std::vector<int> apply_assignment(const Symmetry& g, std::span<const int> values);
/// Same as apply_assignment but carries kUnassigned entries through.
std::vector<int> apply_partial(const Symmetry& g, std::span<const int> values);

// Structure descriptors. Each factor is a subgroup we can sample uniformly;
// the group is assumed to be their direct product.

/// Full symmetric group on a set of value indices.
struct SymmetricValues {
    std::vector<int> values;
};

/// Full symmetric group on a block of variables.
struct SymmetricVariables {
    std::vector<int> vars;
};

/// Independent row and column permutations of a rows x cols matrix of
/// variables given in row-major order.
struct RowColumnPermutations {
    int rows = 0;
    int cols = 0;
    std::vector<int> cells;
};

/// Any finite subgroup given by its full element list.
struct ExplicitElements {
    std::vector<Symmetry> elements;
};

using GroupFactor = std::variant<SymmetricValues, SymmetricVariables, RowColumnPermutations, ExplicitElements>;

inline constexpr std::size_t kDefaultGroupBound = 10000;
inline constexpr int kDefaultWordLength = 50;

class SymmetryGroup {
public:
    SymmetryGroup(int varCount, int valueCount, std::vector<Symmetry> generators = {});

    /// Builds a group from factors, deriving a generating set for each.
    static SymmetryGroup from_factors(int varCount, int valueCount, std::vector<GroupFactor> factors);

    int var_count() const { return varCount_; }
    int value_count() const { return valueCount_; }
    const std::vector<Symmetry>& generators() const { return generators_; }
    const std::optional<std::vector<GroupFactor>>& structure() const { return structure_; }

    void add_generator(Symmetry g);
    void set_structure(std::vector<GroupFactor> factors) { structure_ = std::move(factors); }
    void clear_structure() { structure_.reset(); }

private:
    int varCount_;
    int valueCount_;
    std::vector<Symmetry> generators_;
    std::optional<std::vector<GroupFactor>> structure_;
};

/// Uniform integer in [0, n) by rejection on raw 64-bit draws, so sequences
/// do not depend on the standard library's distribution implementations.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);
void shuffle(std::vector<int>& items, std::mt19937_64& rng);

/// Uniform over the product when a structure is present, otherwise a random
/// word of `wordLength` letters over generators and their inverses.
Symmetry random_element(const SymmetryGroup& group, std::mt19937_64& rng, int wordLength = kDefaultWordLength);

/// Breadth-first closure of the generators. Throws GroupTooLarge.
std::vector<Symmetry> enumerate_group(const SymmetryGroup& group, std::size_t bound = kDefaultGroupBound);

/// Distinct images of a total assignment under the listed elements.
std::vector<std::vector<int>> orbit(std::span<const int> assignment, std::span<const Symmetry> elements);
std::vector<std::vector<int>> orbit(std::span<const int> assignment, const SymmetryGroup& group,
                                    std::size_t bound = kDefaultGroupBound);

} // namespace symbreak
