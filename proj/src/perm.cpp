#include "symbreak/perm.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "symbreak/hash.hpp"

namespace symbreak {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image))
{
    std::vector<char> seen(image_.size(), 0);
    for (int v : image_) {
        if (v < 0 || static_cast<std::size_t>(v) >= image_.size() || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("permutation image is not a bijection");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int n)
{
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    Permutation p;
    p.image_ = std::move(img);
    return p;
}

bool Permutation::is_identity() const
{
    for (std::size_t i = 0; i < image_.size(); ++i)
        if (image_[i] != static_cast<int>(i))
            return false;
    return true;
}

Permutation Permutation::inverse() const
{
    std::vector<int> inv(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i)
        inv[static_cast<std::size_t>(image_[i])] = static_cast<int>(i);
    Permutation p;
    p.image_ = std::move(inv);
    return p;
}

Permutation operator*(const Permutation& p, const Permutation& q)
{
    if (p.size() != q.size())
        throw DimensionMismatch("composing permutations of different sizes");
    std::vector<int> img(static_cast<std::size_t>(q.size()));
    for (int i = 0; i < q.size(); ++i)
        img[static_cast<std::size_t>(i)] = p[q[i]];
    return Permutation(std::move(img));
}

Symmetry Symmetry::identity(int varCount, int valueCount)
{
    return {Permutation::identity(varCount), Permutation::identity(valueCount), "id"};
}

namespace {

void write_image(std::ostream& os, const Permutation& p)
{
    os << '[';
    for (int i = 0; i < p.size(); ++i)
        os << (i ? "," : "") << p[i];
    os << ']';
}

} // namespace

std::string Symmetry::describe() const
{
    if (!label.empty())
        return label;
    std::ostringstream os;
    if (!var.is_identity()) {
        os << "var";
        write_image(os, var);
    }
    if (!val.is_identity()) {
        if (!var.is_identity())
            os << ' ';
        os << "val";
        write_image(os, val);
    }
    if (is_identity())
        os << "id";
    return os.str();
}

std::size_t SymmetryHash::operator()(const Symmetry& s) const noexcept
{
    std::size_t h = hash_ints(s.var.image());
    return hash_combine(h, hash_ints(s.val.image()));
}

GroupTooLarge::GroupTooLarge(std::size_t bound)
    : std::runtime_error("generated group exceeds " + std::to_string(bound) + " elements"), bound_(bound)
{
}

namespace {

std::string join_labels(const Symmetry& g, const Symmetry& h)
{
    if (g.is_identity() && !h.label.empty())
        return h.label;
    if (h.is_identity() && !g.label.empty())
        return g.label;
    if (g.label.empty() || h.label.empty())
        return {};
    return g.label + "*" + h.label;
}

} // namespace

Symmetry compose(const Symmetry& g, const Symmetry& h)
{
    if (g.var_count() != h.var_count() || g.value_count() != h.value_count())
        throw DimensionMismatch("composing symmetries over different ranges");
    return {g.var * h.var, g.val * h.val, join_labels(g, h)};
}

Symmetry inverse(const Symmetry& g)
{
    std::string label;
    if (g.is_identity())
        label = g.label;
    else if (!g.label.empty())
        label = g.label + "^-1";
    return {g.var.inverse(), g.val.inverse(), std::move(label)};
}

namespace {

std::vector<int> apply_impl(const Symmetry& g, std::span<const int> values, bool allowPartial)
{
    if (static_cast<int>(values.size()) != g.var_count())
        throw DimensionMismatch("assignment length differs from the symmetry's variable range");
    std::vector<int> out(values.size(), kUnassigned);
    for (std::size_t i = 0; i < values.size(); ++i) {
        int v = values[i];
        if (v == kUnassigned) {
            if (!allowPartial)
                throw std::invalid_argument("apply_assignment requires a total assignment");
            continue;
        }
        if (v < 0 || v >= g.value_count())
            throw std::out_of_range("assigned value outside the symmetry's value range");
        out[static_cast<std::size_t>(g.var[static_cast<int>(i)])] = g.val[v];
    }
    return out;
}

} // namespace

std::vector<int> apply_assignment(const Symmetry& g, std::span<const int> values)
{
    return apply_impl(g, values, false);
}

std::vector<int> apply_partial(const Symmetry& g, std::span<const int> values)
{
    return apply_impl(g, values, true);
}

SymmetryGroup::SymmetryGroup(int varCount, int valueCount, std::vector<Symmetry> generators)
    : varCount_(varCount), valueCount_(valueCount)
{
    for (auto& g : generators)
        add_generator(std::move(g));
}

void SymmetryGroup::add_generator(Symmetry g)
{
    if (g.var_count() != varCount_ || g.value_count() != valueCount_)
        throw DimensionMismatch("generator does not match the group's ranges");
    generators_.push_back(std::move(g));
}

namespace {

// Transposition and long cycle generate the symmetric group on `items`.
std::vector<Permutation> symmetric_generators(int n, const std::vector<int>& items)
{
    std::vector<Permutation> gens;
    if (items.size() < 2)
        return gens;
    std::vector<int> swap = Permutation::identity(n).image();
    std::swap(swap[static_cast<std::size_t>(items[0])], swap[static_cast<std::size_t>(items[1])]);
    gens.emplace_back(std::move(swap));
    if (items.size() > 2) {
        std::vector<int> cycle = Permutation::identity(n).image();
        for (std::size_t k = 0; k < items.size(); ++k)
            cycle[static_cast<std::size_t>(items[k])] = items[(k + 1) % items.size()];
        gens.emplace_back(std::move(cycle));
    }
    return gens;
}

Permutation permute_items(int n, const std::vector<int>& items, const std::vector<int>& order)
{
    std::vector<int> img = Permutation::identity(n).image();
    for (std::size_t k = 0; k < items.size(); ++k)
        img[static_cast<std::size_t>(items[k])] = items[static_cast<std::size_t>(order[k])];
    return Permutation(std::move(img));
}

// Variable permutation of a row/column matrix: cell (r, c) moves to
// (rowPerm[r], colPerm[c]).
Permutation matrix_permutation(int n, const RowColumnPermutations& m, const std::vector<int>& rowPerm,
                               const std::vector<int>& colPerm)
{
    std::vector<int> img = Permutation::identity(n).image();
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) {
            int from = m.cells[static_cast<std::size_t>(r * m.cols + c)];
            int to = m.cells[static_cast<std::size_t>(rowPerm[static_cast<std::size_t>(r)] * m.cols +
                                                      colPerm[static_cast<std::size_t>(c)])];
            img[static_cast<std::size_t>(from)] = to;
        }
    return Permutation(std::move(img));
}

std::vector<int> iota_vec(int n)
{
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return v;
}

} // namespace

SymmetryGroup SymmetryGroup::from_factors(int varCount, int valueCount, std::vector<GroupFactor> factors)
{
    SymmetryGroup group(varCount, valueCount);
    const Permutation varId = Permutation::identity(varCount);
    const Permutation valId = Permutation::identity(valueCount);
    for (const auto& factor : factors) {
        if (const auto* sv = std::get_if<SymmetricValues>(&factor)) {
            for (auto& p : symmetric_generators(valueCount, sv->values))
                group.add_generator({varId, std::move(p), {}});
        } else if (const auto* sb = std::get_if<SymmetricVariables>(&factor)) {
            for (auto& p : symmetric_generators(varCount, sb->vars))
                group.add_generator({std::move(p), valId, {}});
        } else if (const auto* rc = std::get_if<RowColumnPermutations>(&factor)) {
            if (static_cast<int>(rc->cells.size()) != rc->rows * rc->cols)
                throw std::invalid_argument("row/column factor cell count mismatch");
            for (auto& p : symmetric_generators(rc->rows, iota_vec(rc->rows)))
                group.add_generator({matrix_permutation(varCount, *rc, p.image(), iota_vec(rc->cols)), valId, {}});
            for (auto& p : symmetric_generators(rc->cols, iota_vec(rc->cols)))
                group.add_generator({matrix_permutation(varCount, *rc, iota_vec(rc->rows), p.image()), valId, {}});
        } else {
            for (const auto& e : std::get<ExplicitElements>(factor).elements)
                if (!e.is_identity())
                    group.add_generator(e);
        }
    }
    group.structure_ = std::move(factors);
    return group;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n)
{
    if (n == 0)
        throw std::invalid_argument("uniform_below(0)");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

void shuffle(std::vector<int>& items, std::mt19937_64& rng)
{
    for (std::size_t i = items.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(uniform_below(rng, i));
        std::swap(items[i - 1], items[j]);
    }
}

namespace {

Symmetry sample_factor(const GroupFactor& factor, int varCount, int valueCount, std::mt19937_64& rng)
{
    const Permutation varId = Permutation::identity(varCount);
    const Permutation valId = Permutation::identity(valueCount);
    if (const auto* sv = std::get_if<SymmetricValues>(&factor)) {
        auto order = iota_vec(static_cast<int>(sv->values.size()));
        shuffle(order, rng);
        return {varId, permute_items(valueCount, sv->values, order), {}};
    }
    if (const auto* sb = std::get_if<SymmetricVariables>(&factor)) {
        auto order = iota_vec(static_cast<int>(sb->vars.size()));
        shuffle(order, rng);
        return {permute_items(varCount, sb->vars, order), valId, {}};
    }
    if (const auto* rc = std::get_if<RowColumnPermutations>(&factor)) {
        auto rows = iota_vec(rc->rows);
        auto cols = iota_vec(rc->cols);
        shuffle(rows, rng);
        shuffle(cols, rng);
        std::ostringstream label;
        label << "rows";
        for (std::size_t i = 0; i < rows.size(); ++i)
            label << (i ? "," : "[") << rows[i];
        label << "] cols";
        for (std::size_t i = 0; i < cols.size(); ++i)
            label << (i ? "," : "[") << cols[i];
        label << ']';
        return {matrix_permutation(varCount, *rc, rows, cols), valId, label.str()};
    }
    const auto& elems = std::get<ExplicitElements>(factor).elements;
    if (elems.empty())
        return Symmetry::identity(varCount, valueCount);
    return elems[static_cast<std::size_t>(uniform_below(rng, elems.size()))];
}

} // namespace

Symmetry random_element(const SymmetryGroup& group, std::mt19937_64& rng, int wordLength)
{
    Symmetry result = Symmetry::identity(group.var_count(), group.value_count());
    if (const auto& structure = group.structure()) {
        for (const auto& factor : *structure)
            result = compose(result, sample_factor(factor, group.var_count(), group.value_count(), rng));
        return result;
    }
    const auto& gens = group.generators();
    if (gens.empty())
        return result;
    result.label.clear();
    for (int i = 0; i < wordLength; ++i) {
        const Symmetry& g = gens[static_cast<std::size_t>(uniform_below(rng, gens.size()))];
        result = compose(result, uniform_below(rng, 2) ? g : inverse(g));
    }
    result.label.clear();
    return result;
}

std::vector<Symmetry> enumerate_group(const SymmetryGroup& group, std::size_t bound)
{
    std::vector<Symmetry> elements;
    std::unordered_set<Symmetry, SymmetryHash> seen;
    std::deque<std::size_t> frontier;
    auto add = [&](Symmetry s) {
        if (seen.contains(s))
            return;
        if (elements.size() >= bound)
            throw GroupTooLarge(bound);
        seen.insert(s);
        elements.push_back(std::move(s));
        frontier.push_back(elements.size() - 1);
    };
    add(Symmetry::identity(group.var_count(), group.value_count()));
    while (!frontier.empty()) {
        std::size_t idx = frontier.front();
        frontier.pop_front();
        for (const auto& g : group.generators()) {
            Symmetry next = compose(g, elements[idx]);
            add(std::move(next));
        }
    }
    return elements;
}

std::vector<std::vector<int>> orbit(std::span<const int> assignment, std::span<const Symmetry> elements)
{
    std::vector<std::vector<int>> out;
    std::unordered_set<std::vector<int>, IntVectorHash> seen;
    for (const auto& g : elements) {
        auto image = apply_assignment(g, assignment);
        if (seen.insert(image).second)
            out.push_back(std::move(image));
    }
    return out;
}

std::vector<std::vector<int>> orbit(std::span<const int> assignment, const SymmetryGroup& group, std::size_t bound)
{
    auto elements = enumerate_group(group, bound);
    return orbit(assignment, elements);
}

} // namespace symbreak
