#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "symbreak/csp.hpp"
#include "symbreak/perm.hpp"
#include "symbreak/symbreak.hpp"

namespace symbreak {

/// How solutions of a model are laid out for printing.
enum class Layout { Square, Matrix, Vector };

struct ModelBundle {
    std::string name;
    Csp csp;
    SymmetryGroup group;
    SymBreakSet sbc;
    std::vector<std::pair<std::string, int>> params;
    Layout layout = Layout::Vector;
    int rows = 0;
    int cols = 0;
};

/// Variable index of X[i,j] in an n x n square, where i is the column and j
/// the row, both 1-based. Display row r, column c is index r*n + c.
int square_cell(int n, int i, int j);

/// The eight geometric symmetries of an n x n grid of variables, labelled
/// id, rot90, rot180, rot270 (clockwise), flipv (mirror in the vertical
/// axis), fliph, diag (exchanges X[1,n] and X[n,1]) and antidiag.
std::vector<Symmetry> square_symmetries(int n, int valueCount);
Symmetry square_symmetry(int n, int valueCount, const std::string& label);
/// Value inversion k -> n^2 + 1 - k on an n x n square.
Symmetry value_inversion(int n);

/// X[1,1] < min(X[1,n], X[n,1], X[n,n]) and X[1,n] < X[n,1].
SymBreakSet corner_constraints(const Csp& csp, int n);
/// X[1,1] < n^2+1 - max(corners), strict or not.
Constraint inversion_constraint(const Csp& csp, int n, bool strict);

/// Most-perfect magic square of order n (n divisible by 4) over 1..n^2.
/// Group: the 16 elements generated by rot90, flipv and value inversion.
ModelBundle most_perfect_magic_square(int n);

enum class MagicGroup { Geometric8, Rotations4, Full16 };

/// Plain magic square of order n >= 2 over 1..n^2, with the corner
/// constraints and a non-strict inversion constraint.
ModelBundle magic_square(int n, MagicGroup group = MagicGroup::Geometric8);

/// Undirected graph whose vertices come in blocks of interchangeable vertices.
struct Graph {
    int vertexCount = 0;
    /// 0-based, u < v, sorted.
    std::vector<std::pair<int, int>> edges;
    /// Contiguous blocks given as (first vertex, size).
    std::vector<std::pair<int, int>> blocks;
};

/// Random graph: vertices are cut into contiguous blocks of random size in
/// [1, maxBlock]; each block is a clique or an independent set and each pair
/// of blocks is fully joined or not, all by fair coins. The stream is
/// mt19937_64(seed); block sizes use uniform_below and coins take the top
/// bit of one draw.
Graph random_block_graph(int vertexCount, int maxBlock, std::uint64_t seed);

/// Coloring with colors 1..colors minimizing the number of distinct colors.
/// Group: every block permuted freely times all color permutations.
/// Symmetry breaking: value precedence over vertex order plus nondecreasing
/// colors within each block.
ModelBundle graph_coloring(const Graph& g, int colors);
ModelBundle graph_coloring(int vertexCount, int maxBlock, std::uint64_t seed, int colors = 0);

void write_dimacs(std::ostream& os, const Graph& g);
Graph read_dimacs(std::istream& is);

/// Equidistant frequency permutation array: v words of length q*lambda over
/// symbols 0..q-1, each symbol lambda times per word, all pairs at Hamming
/// distance d. Group: row and column permutations. Symmetry breaking:
/// lexicographically ordered rows and columns.
ModelBundle efpa(int v, int q, int lambda, int d);

/// Human-readable rendering of a total assignment.
std::string render(const ModelBundle& bundle, std::span<const int> assignment);

} // namespace symbreak
