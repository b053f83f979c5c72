#pragma once

#include <vector>

#include "ncpark/numbers.hpp"
#include "ncpark/parking.hpp"
#include "ncpark/permutation.hpp"

namespace ncpark {

// ---------------------------------------------------------------- closed forms

// l! binom(kn, l) S_2(n, l+1): the number of multichains phi_1 <= ... <= phi_k
// of noncrossing 2-partitions of size n with phi_k of rank l. Any integer k is
// accepted; k = 1 gives the rank sizes and k = -1 the Whitney numbers of the
// first kind. Throws std::out_of_range unless n >= 1 and 0 <= l <= n-1.
Integer chain_count_closed(int n, int k, int l);
// (-1)^l l! binom(n+l-1, l) S_2(n, l+1).
Integer whitney_first_closed(int n, int l);

// Brute-force counterparts on the poset of noncrossing 2-partitions: the
// k-multichain counts and the Whitney numbers of the first kind, indexed by
// rank. Guard 1..5.
std::vector<Integer> chain_count_oracle(int n, int k);
std::vector<Integer> whitney_first_oracle(int n);

// ---------------------------------------------------------------- k-parking objects

// A k-parking word w_1 ... w_n: #{i : w_i <= k(j-1)+1} >= j for every j.
Validation validate_k_word(const ParkingWord& w, int k);
// A k-parking tree on {1..n}: every vertex with label E has k|E| children,
// grouped left to right into |E| broods of k.
Validation validate_k_tree(const ParkingTree& t, int n, int k);

// Prefix-order bijection through weak set compositions of length kn+1.
// Both commute with the symmetric group action. Throw std::invalid_argument
// on invalid input.
ParkingTree k_word_to_tree(const ParkingWord& w, int k);
ParkingWord k_tree_to_word(const ParkingTree& t, int k);

// Child of index i (1..k) in brood j (1..|label|) of the root of t.
const ParkingTree& brood_child(const ParkingTree& t, int k, int j, int i);

// All k-parking words over 1..k(n-1)+1, sorted. Guard: (k(n-1)+1)^n <= 10^7.
std::vector<ParkingWord> enumerate_k_words(int n, int k);
// All k-parking trees, built recursively from the root and sorted.
// Independent of the word enumeration. Guard n <= 5.
std::vector<ParkingTree> enumerate_k_trees(int n, int k);

// #{i : w_i <= k(j-1)+1} > j for every j in 1..n-1. Through the chain and
// k-tree bijections these are the words of the multichains with a prime
// largest element.
bool is_prime_k_word(const ParkingWord& w, int k);
// #{i : w_i <= kj} > j for every j in 1..n-1: rational parking functions with
// parameters (n, kn-1), counted by (kn-1)^(n-1). Both notions agree for k = 1.
bool is_rational_prime_k_word(const ParkingWord& w, int k);

// ---------------------------------------------------------------- chains and k-trees

// A multichain phi_1 <= ... <= phi_k of parking trees (k = 1 trees).
using KChain = std::vector<ParkingTree>;

// Every entry is a parking tree on {1..n} and consecutive entries are related.
bool is_k_multichain(const KChain& c);
// All k-multichains of noncrossing 2-partitions of size n, in the order of
// the underlying poset. Guard n <= 4.
std::vector<KChain> enumerate_k_multichains(int n, int k);
KChain act(const Permutation& s, const KChain& c);

// The i-th tree merges every child of index > i into its parent and turns
// every brood into one subtree: the child of index j is grafted on the
// rightmost leaf of the nearest nonempty elder sibling, or on the parent when
// all elder siblings are empty. Throws std::invalid_argument on an invalid tree.
KChain ktree_to_chain(const ParkingTree& t, int k);
// Inverse of ktree_to_chain by the cutting procedure along rightmost branches
// of the last tree. Throws std::invalid_argument unless c is a multichain.
ParkingTree chain_to_ktree(const KChain& c);

// Prufer-type code of a k-parking tree with l+1 nonempty vertices. Half-edges
// are the k|v| child slots of each vertex v, numbered globally 1..kn with the
// vertices ordered by their minima; used_half_edges lists the l slots that
// hold a nonempty child. The word lists, for each deleted smallest leaf in
// turn, the rank (1..l) of its parent half-edge among the used ones.
struct KTreeCode {
    SetPartition vertices;
    std::vector<int> used_half_edges;  // increasing, within 1..kn
    std::vector<int> word;             // permutation of 1..l

    friend bool operator==(const KTreeCode&, const KTreeCode&) = default;
};
KTreeCode ktree_code(const ParkingTree& t, int k);
// Repeatedly grafts the tree with the smallest root among the complete ones
// on the half-edge named by the next letter. Throws std::invalid_argument on
// an inconsistent code.
ParkingTree code_to_ktree(const KTreeCode& code, int k);
// Every code with l+1 vertices: set partitions, half-edge subsets and words.
// Guard n <= 4.
std::vector<KTreeCode> enumerate_ktree_codes(int n, int k, int l);

// ---------------------------------------------------------------- characters

enum class CharacterKind { park_k, park_prime, park_prime_k };

// park_k: (kn+1)^(z-1). park_prime: (n-1)^(z-1). park_prime_k: (kn-1)^(z-1).
// z is the number of cycles of sigma, n = sigma.size(); k is ignored for
// park_prime.
Integer character_eval(CharacterKind kind, int k, const Permutation& sigma);
// Fixed-point oracle: sigma-fixed k-multichains (park_k), sigma-fixed prime
// 2-partitions (park_prime) or sigma-fixed k-multichains whose smallest
// element is prime (park_prime_k). Guard n <= 5.
Integer character_oracle(CharacterKind kind, int k, const Permutation& sigma);

// sum over pi in NC_n of prod_{b in K(pi)} C^{(k)}_{|b|} * n! / prod_{b in pi} |b|!.
Integer dimension_identity_sum(int n, int k);
// The sum above equals (kn+1)^(n-1). Guard n <= 9.
bool dimension_identity_check(int n, int k);

}  // namespace ncpark
