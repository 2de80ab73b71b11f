#include "symbreak/models.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace symbreak {

int square_cell(int n, int i, int j) { return (j - 1) * n + (i - 1); }

namespace {

// Where the cell at display (r, c) moves under each geometric symmetry.
std::pair<int, int> move_cell(const std::string& label, int n, int r, int c)
{
    const int m = n - 1;
    if (label == "id")
        return {r, c};
    if (label == "rot90")
        return {c, m - r};
    if (label == "rot180")
        return {m - r, m - c};
    if (label == "rot270")
        return {m - c, r};
    if (label == "flipv")
        return {r, m - c};
    if (label == "fliph")
        return {m - r, c};
    if (label == "diag")
        return {c, r};
    if (label == "antidiag")
        return {m - c, m - r};
    throw std::invalid_argument("unknown square symmetry '" + label + "'");
}

const std::vector<std::string> kSquareLabels = {"id",    "rot90", "rot180", "rot270",
                                                "flipv", "fliph", "diag",   "antidiag"};

Csp square_csp(int n)
{
    Csp csp(n * n, n * n, 1);
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= n; ++i)
            csp.set_var_name(square_cell(n, i, j), "X[" + std::to_string(i) + "," + std::to_string(j) + "]");
    return csp;
}

void post_magic(Csp& csp, int n)
{
    const int magic = n * (n * n + 1) / 2;
    std::vector<View> all;
    for (int k = 0; k < n * n; ++k)
        all.push_back(csp.var(k));
    csp.post(all_different(all));
    std::vector<View> diag, anti;
    for (int r = 0; r < n; ++r) {
        std::vector<View> row, col;
        for (int c = 0; c < n; ++c) {
            row.push_back(csp.var(r * n + c));
            col.push_back(csp.var(c * n + r));
        }
        csp.post(sum_eq(row, magic));
        csp.post(sum_eq(col, magic));
        diag.push_back(csp.var(r * n + r));
        anti.push_back(csp.var(r * n + (n - 1 - r)));
    }
    csp.post(sum_eq(diag, magic));
    csp.post(sum_eq(anti, magic));
}

std::vector<Symmetry> pick(const std::vector<Symmetry>& all, std::initializer_list<const char*> labels)
{
    std::vector<Symmetry> out;
    for (const char* l : labels)
        for (const auto& s : all)
            if (s.label == l)
                out.push_back(s);
    return out;
}

} // namespace

Symmetry square_symmetry(int n, int valueCount, const std::string& label)
{
    std::vector<int> img(static_cast<std::size_t>(n * n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            auto [r2, c2] = move_cell(label, n, r, c);
            img[static_cast<std::size_t>(r * n + c)] = r2 * n + c2;
        }
    return {Permutation(std::move(img)), Permutation::identity(valueCount), label};
}

std::vector<Symmetry> square_symmetries(int n, int valueCount)
{
    std::vector<Symmetry> out;
    for (const auto& l : kSquareLabels)
        out.push_back(square_symmetry(n, valueCount, l));
    return out;
}

Symmetry value_inversion(int n)
{
    const int u = n * n;
    std::vector<int> img(static_cast<std::size_t>(u));
    for (int k = 0; k < u; ++k)
        img[static_cast<std::size_t>(k)] = u - 1 - k;
    return {Permutation::identity(u), Permutation(std::move(img)), "inv"};
}

SymBreakSet corner_constraints(const Csp& csp, int n)
{
    const View x11 = csp.var(square_cell(n, 1, 1));
    const View x1n = csp.var(square_cell(n, 1, n));
    const View xn1 = csp.var(square_cell(n, n, 1));
    const View xnn = csp.var(square_cell(n, n, n));
    return {{less_than_min(x11, {x1n, xn1, xnn}), less(x1n, xn1)}, "S"};
}

Constraint inversion_constraint(const Csp& csp, int n, bool strict)
{
    const int k = n * n + 1;
    std::vector<View> others;
    for (auto [i, j] : {std::pair{1, 1}, {1, n}, {n, 1}, {n, n}})
        others.push_back(reflect(csp.var(square_cell(n, i, j)), k));
    return less_than_min(csp.var(square_cell(n, 1, 1)), std::move(others), strict);
}

ModelBundle most_perfect_magic_square(int n)
{
    if (n < 4 || n % 4 != 0)
        throw std::invalid_argument("most-perfect magic squares need an order divisible by 4");
    Csp csp = square_csp(n);
    post_magic(csp, n);
    const int u = n * n;
    const int half = n / 2;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            const int r1 = (r + 1) % n, c1 = (c + 1) % n;
            csp.post(sum_eq({csp.var(r * n + c), csp.var(r * n + c1), csp.var(r1 * n + c), csp.var(r1 * n + c1)},
                            2 * (u + 1)));
        }
    for (int r = 0; r < half; ++r)
        for (int c = 0; c < n; ++c)
            csp.post(sum_eq({csp.var(r * n + c), csp.var((r + half) * n + (c + half) % n)}, u + 1));

    auto d4 = square_symmetries(n, u);
    const Symmetry inv = value_inversion(n);
    SymmetryGroup group(u, u, pick(d4, {"rot90", "flipv"}));
    group.add_generator(inv);
    group.set_structure({ExplicitElements{d4}, ExplicitElements{{Symmetry::identity(u, u), inv}}});

    SymBreakSet sbc = corner_constraints(csp, n);
    sbc.constraints.push_back(inversion_constraint(csp, n, true));
    return {"most-perfect-" + std::to_string(n), std::move(csp), std::move(group), std::move(sbc),
            {{"n", n}}, Layout::Square, n, n};
}

ModelBundle magic_square(int n, MagicGroup which)
{
    if (n < 2)
        throw std::invalid_argument("magic square order must be at least 2");
    Csp csp = square_csp(n);
    post_magic(csp, n);
    const int u = n * n;
    auto d4 = square_symmetries(n, u);
    SymmetryGroup group(u, u);
    switch (which) {
    case MagicGroup::Geometric8:
        for (auto& g : pick(d4, {"rot90", "flipv"}))
            group.add_generator(g);
        group.set_structure({ExplicitElements{d4}});
        break;
    case MagicGroup::Rotations4:
        group.add_generator(pick(d4, {"rot90"}).front());
        group.set_structure({ExplicitElements{pick(d4, {"id", "rot90", "rot180", "rot270"})}});
        break;
    case MagicGroup::Full16: {
        const Symmetry inv = value_inversion(n);
        for (auto& g : pick(d4, {"rot90", "flipv"}))
            group.add_generator(g);
        group.add_generator(inv);
        group.set_structure({ExplicitElements{d4}, ExplicitElements{{Symmetry::identity(u, u), inv}}});
        break;
    }
    }
    SymBreakSet sbc = corner_constraints(csp, n);
    sbc.constraints.push_back(inversion_constraint(csp, n, false));
    return {"magic-" + std::to_string(n), std::move(csp), std::move(group), std::move(sbc), {{"n", n}},
            Layout::Square, n, n};
}

Graph random_block_graph(int vertexCount, int maxBlock, std::uint64_t seed)
{
    if (vertexCount < 1)
        throw std::invalid_argument("graph needs at least one vertex");
    if (maxBlock < 1)
        throw std::invalid_argument("block size bound must be at least 1");
    std::mt19937_64 rng(seed);
    Graph g;
    g.vertexCount = vertexCount;
    for (int pos = 0; pos < vertexCount;) {
        int size = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(maxBlock)));
        size = std::min(size, vertexCount - pos);
        g.blocks.emplace_back(pos, size);
        pos += size;
    }
    auto coin = [&] { return (rng() >> 63) != 0; };
    for (const auto& [first, size] : g.blocks) {
        if (!coin())
            continue;
        for (int a = first; a < first + size; ++a)
            for (int b = a + 1; b < first + size; ++b)
                g.edges.emplace_back(a, b);
    }
    for (std::size_t x = 0; x < g.blocks.size(); ++x)
        for (std::size_t y = x + 1; y < g.blocks.size(); ++y) {
            if (!coin())
                continue;
            for (int a = g.blocks[x].first; a < g.blocks[x].first + g.blocks[x].second; ++a)
                for (int b = g.blocks[y].first; b < g.blocks[y].first + g.blocks[y].second; ++b)
                    g.edges.emplace_back(a, b);
        }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

ModelBundle graph_coloring(const Graph& g, int colors)
{
    if (g.vertexCount < 1)
        throw std::invalid_argument("graph needs at least one vertex");
    if (colors < 1)
        throw std::invalid_argument("need at least one color");
    Csp csp(g.vertexCount, colors, 1);
    for (int v = 0; v < g.vertexCount; ++v)
        csp.set_var_name(v, "v" + std::to_string(v + 1));
    for (const auto& [a, b] : g.edges)
        csp.post(all_different({csp.var(a), csp.var(b)}));
    std::vector<View> all;
    for (int v = 0; v < g.vertexCount; ++v)
        all.push_back(csp.var(v));
    csp.set_objective({Objective::Kind::Distinct, all});

    std::vector<GroupFactor> factors;
    SymBreakSet sbc{{}, "S"};
    std::vector<int> chain(static_cast<std::size_t>(colors));
    std::iota(chain.begin(), chain.end(), 1);
    sbc.constraints.push_back(precedence(all, chain));
    for (const auto& [first, size] : g.blocks) {
        if (size < 2)
            continue;
        std::vector<int> vars(static_cast<std::size_t>(size));
        std::iota(vars.begin(), vars.end(), first);
        factors.push_back(SymmetricVariables{vars});
        for (int v = first; v + 1 < first + size; ++v)
            sbc.constraints.push_back(less_eq(csp.var(v), csp.var(v + 1)));
    }
    if (colors >= 2) {
        std::vector<int> values(static_cast<std::size_t>(colors));
        std::iota(values.begin(), values.end(), 0);
        factors.push_back(SymmetricValues{values});
    }
    SymmetryGroup group = SymmetryGroup::from_factors(g.vertexCount, colors, std::move(factors));
    return {"coloring-" + std::to_string(g.vertexCount), std::move(csp), std::move(group), std::move(sbc),
            {{"vertices", g.vertexCount}, {"colors", colors}}, Layout::Vector, 1, g.vertexCount};
}

ModelBundle graph_coloring(int vertexCount, int maxBlock, std::uint64_t seed, int colors)
{
    ModelBundle b = graph_coloring(random_block_graph(vertexCount, maxBlock, seed), colors > 0 ? colors : vertexCount);
    b.name = "coloring-" + std::to_string(vertexCount) + "-" + std::to_string(maxBlock) + "-" + std::to_string(seed);
    b.params.insert(b.params.begin() + 1, {"maxBlock", maxBlock});
    b.params.insert(b.params.begin() + 2, {"seed", static_cast<int>(seed)});
    return b;
}

void write_dimacs(std::ostream& os, const Graph& g)
{
    for (const auto& [first, size] : g.blocks)
        os << "c block " << first + 1 << ' ' << size << '\n';
    os << "p edge " << g.vertexCount << ' ' << g.edges.size() << '\n';
    for (const auto& [a, b] : g.edges)
        os << "e " << a + 1 << ' ' << b + 1 << '\n';
}

Graph read_dimacs(std::istream& is)
{
    Graph g;
    bool header = false;
    std::string line;
    int lineNo = 0;
    while (std::getline(is, line)) {
        ++lineNo;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag))
            continue;
        auto bad = [&](const std::string& what) {
            return std::runtime_error("DIMACS line " + std::to_string(lineNo) + ": " + what);
        };
        if (tag == "c") {
            std::string kind;
            int first = 0, size = 0;
            if (ls >> kind && kind == "block") {
                if (!(ls >> first >> size) || first < 1 || size < 1)
                    throw bad("malformed block comment");
                g.blocks.emplace_back(first - 1, size);
            }
        } else if (tag == "p") {
            std::string format;
            std::size_t edges = 0;
            if (!(ls >> format >> g.vertexCount >> edges) || g.vertexCount < 1)
                throw bad("malformed problem line");
            header = true;
        } else if (tag == "e") {
            int a = 0, b = 0;
            if (!header)
                throw bad("edge before problem line");
            if (!(ls >> a >> b) || a < 1 || b < 1 || a > g.vertexCount || b > g.vertexCount || a == b)
                throw bad("malformed edge");
            g.edges.emplace_back(std::min(a, b) - 1, std::max(a, b) - 1);
        } else {
            throw bad("unknown line type '" + tag + "'");
        }
    }
    if (!header)
        throw std::runtime_error("DIMACS input has no problem line");
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    if (g.blocks.empty())
        for (int v = 0; v < g.vertexCount; ++v)
            g.blocks.emplace_back(v, 1);
    int covered = 0;
    for (const auto& [first, size] : g.blocks) {
        if (first != covered)
            throw std::runtime_error("DIMACS blocks must be contiguous and start at vertex 1");
        covered += size;
    }
    if (covered != g.vertexCount)
        throw std::runtime_error("DIMACS blocks do not cover every vertex");
    return g;
}

ModelBundle efpa(int v, int q, int lambda, int d)
{
    if (v < 1 || q < 1 || lambda < 1 || d < 0)
        throw std::invalid_argument("efpa parameters must be positive (distance may be zero)");
    const int len = q * lambda;
    Csp csp(v * len, q, 0);
    for (int r = 0; r < v; ++r)
        for (int c = 0; c < len; ++c)
            csp.set_var_name(r * len + c, "X[" + std::to_string(r + 1) + "," + std::to_string(c + 1) + "]");
    auto row = [&](int r) {
        std::vector<View> out;
        for (int c = 0; c < len; ++c)
            out.push_back(csp.var(r * len + c));
        return out;
    };
    auto col = [&](int c) {
        std::vector<View> out;
        for (int r = 0; r < v; ++r)
            out.push_back(csp.var(r * len + c));
        return out;
    };
    for (int r = 0; r < v; ++r)
        for (int s = 0; s < q; ++s)
            csp.post(occurrence(row(r), s, lambda));
    for (int a = 0; a < v; ++a)
        for (int b = a + 1; b < v; ++b)
            csp.post(hamming_eq(row(a), row(b), d));

    std::vector<int> cells(static_cast<std::size_t>(v * len));
    std::iota(cells.begin(), cells.end(), 0);
    SymmetryGroup group = SymmetryGroup::from_factors(v * len, q, {RowColumnPermutations{v, len, cells}});

    SymBreakSet sbc{{}, "S"};
    for (int r = 0; r + 1 < v; ++r)
        sbc.constraints.push_back(lex_le(row(r), row(r + 1)));
    for (int c = 0; c + 1 < len; ++c)
        sbc.constraints.push_back(lex_le(col(c), col(c + 1)));
    std::string name = "efpa-" + std::to_string(v) + "-" + std::to_string(q) + "-" + std::to_string(lambda) + "-" +
                       std::to_string(d);
    return {std::move(name), std::move(csp), std::move(group), std::move(sbc),
            {{"v", v}, {"q", q}, {"lambda", lambda}, {"d", d}}, Layout::Matrix, v, len};
}

std::string render(const ModelBundle& bundle, std::span<const int> assignment)
{
    const auto values = bundle.csp.to_values(assignment);
    std::ostringstream os;
    switch (bundle.layout) {
    case Layout::Square: {
        int width = 1;
        for (int x : values)
            width = std::max(width, static_cast<int>(std::to_string(x).size()));
        std::string rule = "+";
        for (int c = 0; c < bundle.cols; ++c)
            rule += std::string(static_cast<std::size_t>(width + 2), '-') + "+";
        os << rule << '\n';
        for (int r = 0; r < bundle.rows; ++r) {
            os << '|';
            for (int c = 0; c < bundle.cols; ++c) {
                std::string cell = std::to_string(values[static_cast<std::size_t>(r * bundle.cols + c)]);
                os << ' ' << std::string(static_cast<std::size_t>(width) - cell.size(), ' ') << cell << " |";
            }
            os << '\n' << rule << '\n';
        }
        break;
    }
    case Layout::Matrix:
        for (int r = 0; r < bundle.rows; ++r) {
            for (int c = 0; c < bundle.cols; ++c)
                os << (c ? " " : "") << values[static_cast<std::size_t>(r * bundle.cols + c)];
            os << '\n';
        }
        break;
    case Layout::Vector:
        for (std::size_t i = 0; i < values.size(); ++i)
            os << (i ? " " : "") << values[i];
        os << '\n';
        break;
    }
    return os.str();
}

} // namespace symbreak
