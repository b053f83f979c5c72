#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ncpark/numbers.hpp"
#include "ncpark/parking.hpp"
#include "ncpark/partition.hpp"
#include "ncpark/permutation.hpp"
#include "ncpark/poset.hpp"
#include "ncpark/pp_poset.hpp"

namespace ncpark {

// ---------------------------------------------------------------- linear algebra

// Integer matrix stored by columns; each column lists (row, value) sorted by row.
struct SparseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::pair<int, int>>> columns;
};

// Rank over the rationals by fraction-free column reduction; every reduced
// column is divided by the gcd of its entries to keep them small.
int exact_rank(const SparseMatrix& m);
// True when a * b is the zero matrix. Throws std::invalid_argument on a shape mismatch.
bool product_is_zero(const SparseMatrix& a, const SparseMatrix& b);

// ---------------------------------------------------------------- complexes

// A simplicial complex on the vertices 0..vertex_count-1. Faces are sorted
// vertex lists; the empty face is included, so a nonempty complex has
// reduced homology in degree -1 only when it has no vertex.
struct SimplicialComplex {
    int vertex_count = 0;
    std::vector<std::vector<int>> faces;  // sorted by size, then lexicographically
    std::vector<std::string> vertex_labels;

    // Sorts and deduplicates the faces, adds the empty face and checks that
    // every face of a face is present (std::invalid_argument otherwise).
    static SimplicialComplex from_faces(int vertex_count, std::vector<std::vector<int>> faces,
                                        std::vector<std::string> labels = {});
    // The smallest complex containing the given faces.
    static SimplicialComplex generated_by(int vertex_count, const std::vector<std::vector<int>>& faces,
                                          std::vector<std::string> labels = {});
    int dimension() const;
    // Faces that are not contained in a larger face.
    std::vector<std::vector<int>> facets() const;
};

// Chain spaces C_m for m = -1..top and the boundary maps between them. The
// m-simplex [v_1, ..., v_{m+1}] (vertices increasing) is sent to
// sum_i (-1)^i [v_1, ..., v_{i-1}, v_{i+1}, ..., v_{m+1}].
struct ChainComplex {
    std::vector<std::vector<std::vector<int>>> bases;  // bases[m+1]: the m-simplices
    std::vector<SparseMatrix> boundaries;              // boundaries[m]: d_m from C_m to C_{m-1}, m >= 0

    int top() const { return static_cast<int>(bases.size()) - 2; }
    int dim(int m) const;
    // d_m for 0 <= m <= top(); zero maps outside that range.
    SparseMatrix boundary(int m) const;
};

ChainComplex chain_complex(const SimplicialComplex& c);
// d_m o d_{m+1} = 0 for every m.
bool boundary_squared_zero(const ChainComplex& c);
// Ranks of the reduced homology groups over the rationals, entry m+1 for
// m = -1..top: dim C_m - rank d_m - rank d_{m+1}.
std::vector<int> homology_ranks(const ChainComplex& c);
// sum_m (-1)^m dim C_m over m >= -1.
Integer reduced_euler_characteristic(const ChainComplex& c);

// Hopf trace of a simplicial automorphism given on vertices: sum over the
// faces F with f(F) = F of (-1)^dim(F) times the sign of f on F, the empty
// face included. Throws std::invalid_argument unless f maps faces to faces
// bijectively.
Integer lefschetz_number(const SimplicialComplex& c, const std::vector<int>& vertex_map);
// Trace of f on the only nonzero reduced homology group, (-1)^d times the
// Lefschetz number; zero when the complex is acyclic. Throws
// std::invalid_argument when the ranks are nonzero in two degrees.
Integer concentrated_character(const SimplicialComplex& c, const std::vector<int>& ranks,
                               const std::vector<int>& vertex_map);

// ---------------------------------------------------------------- order complexes

inline constexpr int kMaxOrderComplexPoset = 1500;
inline constexpr long long kMaxSimplices = 2000000;

// Strict chains of the proper part: the bottom is removed, and the top when
// there is one. Vertex v stands for element element_of_vertex[v]; vertices
// follow a linear extension, so the sorted vertex list of a face is its chain.
struct OrderComplex {
    SimplicialComplex complex;
    std::vector<int> element_of_vertex;
    std::vector<int> vertex_of_element;  // -1 for removed elements
};
// Throws std::invalid_argument without a bottom and std::out_of_range beyond
// 1500 elements or 2 000 000 simplices.
OrderComplex order_complex(const FinitePoset& p);

struct PosetHomology {
    OrderComplex order;
    ChainComplex chains;
    std::vector<int> ranks;  // entry m+1 for m = -1..top
};
PosetHomology poset_homology(const FinitePoset& p);
// Character of an order automorphism (element_map[i] is the image of element
// i) on the concentrated reduced homology of the proper part.
Integer homology_character(const PosetHomology& h, const std::vector<int>& element_map);

// element_map of the symmetric group action on the 2-partition poset.
std::vector<int> pp_action_map(const PPPoset& p, const Permutation& sigma);
// (-1)^(n-z) (kn-1)^(z-1) for sigma in S_n with z cycles.
Integer homology_character_formula(int k, const Permutation& sigma);

// ---------------------------------------------------------------- Whitney modules

// Dimensions of the Whitney modules of the 2-partition poset: entry l sums
// prod_{b in K(pi)} C_{|b|-1} * n! / prod_{b in pi} |b|! over pi in NC_n with
// |pi| - 1 = l. Guard 1..5.
std::vector<Integer> whitney_module_dims(int n);
// (-1)^(n-1) sum_l (-1)^l dim W_l.
Integer whitney_module_alternating_sum(int n);
// |mu(0_n, pi)| = prod_{b in K(pi)} C_{|b|-1} for every pi in NC_n. Guard 1..9.
bool kreweras_mobius_check(int n);

// ---------------------------------------------------------------- alternating forests

// Edges {i, j} with i < j, sorted.
using Forest = std::vector<std::pair<int, int>>;

// The edge pair {i,j}, {k,l} is forbidden when i < k <= j < l.
bool edges_compatible(const std::pair<int, int>& a, const std::pair<int, int>& b);
// Acyclic, edges inside 1..n with i < j, no forbidden pair.
bool is_alternating_forest(const Forest& f, int n);
// Connected components of f as a noncrossing partition of {1..n}.
NoncrossingPartition underline(const Forest& f, int n);

inline constexpr int kMaxForestN = 7;

// The complex of noncrossing alternating forests. Vertex v is the edge
// edges[v] (edges in lexicographic order); boundary = true drops the edge {1,n}.
struct ForestComplex {
    int n = 0;
    bool boundary = false;
    std::vector<std::pair<int, int>> edges;
    SimplicialComplex complex;

    Forest forest(const std::vector<int>& face) const;
};
// Guard 1..7.
ForestComplex forest_complex(int n, bool boundary = false);
// Number of faces f with underline(f) = pi, counted on the complex.
Integer forest_fiber_count(const ForestComplex& c, const NoncrossingPartition& pi);
// prod_{b in pi} C_{|b|-1}.
Integer forest_fiber_formula(const NoncrossingPartition& pi);

// Vertices of the right branch of the root: the root and the nonleaf
// vertices reached from it through rightmost children.
int right_branch_size(const ParkingTree& t);
// For a block b = {b_1 < ... < b_s} of K(pi), the tree encoding pi restricted
// to the positions b_1 .. b_s - 1.
ParkingTree kreweras_block_tree(const ParkingObject& p, const Block& b);
// |b| = |RB(T_b)| + 1 for every block of K(pi) and every 2-partition. Guard 1..4.
bool right_branch_check(int n);

// ---------------------------------------------------------------- cluster parking functions

inline constexpr int kMaxClusterN = 4;

// Pairs (f, phi) with K(underline(f)) = pi(phi), ordered by inclusion of
// forests and the order of 2-partitions. Elements are sorted by rank, then
// forest, then phi. vertices lists the rank-1 elements; complex has a face
// for every element, made of the vertices below it.
struct ClusterComplex {
    int n = 0;
    std::vector<std::pair<Forest, ParkingObject>> elements;
    FinitePoset poset;
    std::vector<int> vertices;
    std::vector<std::vector<int>> support;  // support[x]: positions in vertices below x
    SimplicialComplex complex;
};
// Guard 1..4. Throws std::logic_error when two elements share a support.
ClusterComplex cluster_complex(int n);
// Every principal order ideal is a boolean lattice on the vertices below.
bool cluster_ideals_boolean(const ClusterComplex& c);
// The support map is injective.
bool cluster_support_injective(const ClusterComplex& c);
// Number of elements of each rank.
std::vector<Integer> cluster_whitney(const ClusterComplex& c);

}  // namespace ncpark
