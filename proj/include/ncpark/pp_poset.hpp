#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ncpark/parking.hpp"
#include "ncpark/poset.hpp"

namespace ncpark {

// phi <= psi through the eta criterion: eta_psi(k) is contained in eta_phi(k) for all k.
bool pp_leq(const ParkingObject& a, const ParkingObject& b);
// The same order from the triple definition: pi_b refines pi_a, rho_b refines
// rho_a, and every block of pi_a is sent to the union of the images of the
// blocks of pi_b it contains.
bool pp_leq_definition(const ParkingObject& a, const ParkingObject& b);

// Upper covers generated by splitting one block of pi into two noncrossing
// parts and distributing its image between them. Sorted.
std::vector<ParkingObject> pp_upper_covers_direct(const ParkingObject& a);
// Upper covers generated on the parking tree: a vertex label A is split into
// A1 and A2, A1 keeps the first j children and the last |A1| - j, and A2 is
// grafted on the rightmost leaf of the first j subtrees, taking the |A2|
// middle children. Sorted.
std::vector<ParkingTree> tree_upper_covers(const ParkingTree& t);
// Upper covers through tree surgery, certified against the direct generator
// (std::logic_error on disagreement). Sorted.
std::vector<ParkingObject> pp_upper_covers(const ParkingObject& a);

// The unique element below phi whose partition is pi2 (requires pi2 <= pi(phi)).
ParkingObject pp_descend(const ParkingObject& phi, const NoncrossingPartition& pi2);
// The order ideal of phi, one element for each pi2 <= pi(phi). Sorted.
std::vector<ParkingObject> pp_ideal(const ParkingObject& phi);

// An element of the poset with a maximum adjoined; nullopt stands for the top.
using HatElement = std::optional<ParkingObject>;
HatElement pp_join(const HatElement& a, const HatElement& b);
HatElement pp_meet(const HatElement& a, const HatElement& b);
bool hat_leq(const HatElement& a, const HatElement& b);

// Desk-scale guard for building the whole poset.
inline constexpr int kMaxPosetN = 5;

// The poset of noncrossing 2-partitions with its element table.
struct PPPoset {
    int n = 0;
    std::vector<ParkingObject> elements;  // sorted, index = element id
    std::map<ParkingObject, int> index;
    FinitePoset poset;                    // labels are parking words

    int id(const ParkingObject& x) const { return index.at(x); }
};

// Builds the whole poset from tree-surgery covers; throws std::out_of_range for n outside 1..5.
PPPoset build_pp_poset(int n);

// NC_n with the one-block partition at the bottom; labels are block lists.
inline constexpr int kMaxNCPosetN = 9;
struct NCPoset {
    int n = 0;
    std::vector<NoncrossingPartition> elements;  // sorted, index = element id
    FinitePoset poset;

    int id(const NoncrossingPartition& p) const;
};
// Throws std::out_of_range for n outside 1..9.
NCPoset build_nc_poset(int n);

// Ordered set compositions of {1..n}, merging two adjacent parts giving a lower cover.
struct CompositionPoset {
    std::vector<std::vector<std::vector<int>>> elements;
    FinitePoset poset;
};
CompositionPoset permutahedron_face_poset(int n);

// Induced subposet of the 2-partition poset on right-comb trees, with the
// explicit witness: witness[i] is the index in the right-comb subposet of
// the image of composition i.
struct RightCombComparison {
    CompositionPoset faces;
    std::vector<ParkingObject> combs;
    FinitePoset comb_poset;
    std::vector<int> witness;
    bool isomorphic = false;
};
RightCombComparison right_comb_subposet(int n);

}  // namespace ncpark
