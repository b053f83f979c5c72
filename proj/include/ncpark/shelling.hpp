#pragma once

#include <array>
#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "ncpark/pp_poset.hpp"

namespace ncpark {

// The code c_n ... c_1 of the permutation of a noncrossing 2-partition.
std::vector<int> code(const ParkingObject& p);
// Length of the longest all-zero prefix of the code.
int p0_from_code(const ParkingObject& p);
// The same quantity as the largest k with i in eta(i) for every i in n-k+1..n.
int p0_from_eta(const ParkingObject& p);

// Edge label of a cover x < y of noncrossing partitions: the transposition
// (i, j), i < j, obtained by applying the inverse embedding of x and then the
// embedding of y. Pairs compare lexicographically. Throws
// std::invalid_argument unless y covers x.
std::pair<int, int> el_label(const NoncrossingPartition& x, const NoncrossingPartition& y);

// Sort key of an upper cover: code of the upper element, then the edge label
// of the underlying partitions.
struct CoverKey {
    std::vector<int> code;
    std::pair<int, int> el;

    friend auto operator<=>(const CoverKey&, const CoverKey&) = default;
    friend bool operator==(const CoverKey&, const CoverKey&) = default;
};
// Throws std::invalid_argument unless psi covers phi.
CoverKey cover_key(const ParkingObject& phi, const ParkingObject& psi);

// The upper covers of phi in the bounded poset, sorted increasingly for the
// cover order at phi. An element of rank n-1 has the single cover {top}.
// Throws std::logic_error if two distinct covers share a key.
std::vector<HatElement> cover_order(const ParkingObject& phi);
// a precedes b in the cover order at phi (both upper covers of phi).
bool cover_precedes(const ParkingObject& phi, const HatElement& a, const HatElement& b);

// A maximal chain p_0 < p_1 < ... < p_n of the bounded poset: p_0 is the
// minimum and p_n the adjoined top.
using MaximalChain = std::vector<HatElement>;
// Lexicographic comparison: the first index where the chains fork decides
// through the cover order at the common predecessor.
std::strong_ordering lex_compare(const MaximalChain& a, const MaximalChain& b);
// All maximal chains of the bounded poset in lexicographic order.
std::vector<MaximalChain> lex_maximal_chains(int n);

// Outcome of an exhaustive check of the shelling condition. A witness
// (a, b, c) lists chain indices in lexicographic order with chain c before
// chain b, c differing from b at exactly one rank, and the common part of
// chains a and b contained in chain c.
struct ShellingReport {
    int n = 0;
    long long chains = 0;
    long long pairs_checked = 0;
    long long witnessed = 0;
    std::vector<std::array<int, 3>> witnesses;  // filled when requested
    bool order_consistent = true;               // generation order agrees with lex_compare
    std::string counterexample;                 // empty when none
    bool passed() const { return order_consistent && counterexample.empty() && witnessed == pairs_checked; }
};
// Guard 1..5; n = 5 takes about a second per million pairs.
ShellingReport verify_shelling(int n, bool keep_witnesses = true);

// Check of the key lemma on every x < y < z, x < y' with y' before y at x,
// all four below the top. Branch A: some y'' before y
// at x with x < y'' < z. Branch B: some z' before z at y with y < z' <= y' v z.
struct KeyLemmaReport {
    int n = 0;
    long long quadruples = 0;
    long long branch_a = 0;      // branch A holds
    long long branch_b = 0;      // branch B holds
    long long only_branch_b = 0; // branch B holds and branch A does not
    std::string counterexample;
    bool passed() const { return counterexample.empty(); }
};
KeyLemmaReport verify_key_lemma(int n);

// Split block and m-statistic of a cover, and p0 of both ends.
struct CoverStats {
    Block split;   // the block of phi split in psi
    int m = 0;     // largest i with c_i(phi) < c_i(psi), or 0
    int p0_lower = 0;
    int p0_upper = 0;
};
// Throws std::invalid_argument unless psi covers phi.
CoverStats cover_stats(const ParkingObject& phi, const ParkingObject& psi);

// Pass count of one lemma over its whole domain.
struct LemmaReport {
    std::string name;
    long long domain = 0;
    long long passed = 0;
    std::string counterexample;  // first failure, empty when none
    bool ok() const { return passed == domain && counterexample.empty(); }
};
// Code monotonicity, joins of equal codes, p0 through eta, p0 of a join, the
// four-element intervals, the m bound when one block is split twice, the
// increasing m lemma, m against codes and totality of every cover order.
// Guard 1..4.
std::vector<LemmaReport> verify_support_lemmas(int n);

// Edge-labelling of NC_n: every interval has exactly one strictly increasing
// maximal chain and it is lexicographically first (guard 1..6), and distinct
// covers of an element carry distinct labels (guard 1..7).
LemmaReport verify_el_increasing(int n);
LemmaReport verify_el_distinct(int n);

// The six-point configuration showing that the cover orders are not a
// recursive atom ordering: x is the minimum, y is the first of the two
// elements covering x below z, yet z precedes z' at y while z' covers y'
// and y' precedes y at x.
struct AtomOrderingCounterexample {
    ParkingObject x, y, z, y_prime, z_prime;
    bool all_valid = false;
    bool y_first_below_z = false;       // y is the first lower cover of z at x, among two
    bool z_before_z_prime = false;      // z precedes z' at y
    bool z_prime_covers_y_prime = false;
    bool y_prime_before_y = false;      // y' precedes y at x
    bool holds() const {
        return all_valid && y_first_below_z && z_before_z_prime && z_prime_covers_y_prime && y_prime_before_y;
    }
};
AtomOrderingCounterexample recursive_atom_counterexample();

}  // namespace ncpark
