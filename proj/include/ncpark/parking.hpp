#pragma once

#include <compare>
#include <string>
#include <variant>
#include <vector>

#include "ncpark/partition.hpp"
#include "ncpark/permutation.hpp"

namespace ncpark {

// A word w_1 ... w_n of positive integers.
using ParkingWord = std::vector<int>;

// A labelled plane tree. Internal vertices carry nonempty sorted labels and
// leaves carry the empty label. For a parking tree every internal vertex has
// as many children as elements in its label; for a k-parking tree it has k
// times as many, grouped left to right into broods of k.
struct ParkingTree {
    std::vector<int> label;
    std::vector<ParkingTree> children;

    static ParkingTree leaf() { return {}; }
    bool is_leaf() const { return label.empty(); }
    // Number of internal vertices.
    int internal_count() const;
    // Total number of labels.
    int label_count() const;
    // Bracket notation, for example {1,7}[{3,5}[{2}[.],{4}[.]],{6}[.]].
    std::string str() const;

    // Label first, then the children lexicographically.
    friend std::strong_ordering operator<=>(const ParkingTree& a, const ParkingTree& b);
    friend bool operator==(const ParkingTree& a, const ParkingTree& b);
};

// Noncrossing 2-partition in triple form: pi noncrossing, rho a set partition
// and lam a size-preserving bijection; lam[b] is the index in rho.blocks() of
// the image of pi.blocks()[b].
struct NC2Triple {
    NoncrossingPartition pi;
    SetPartition rho;
    std::vector<int> lam;

    friend bool operator==(const NC2Triple&, const NC2Triple&) = default;
};

// Canonical form of a noncrossing 2-partition: a pair (pi, sigma) where sigma
// is increasing along every block of pi. The block B is sent to the block
// sigma(B) of the second partition.
class ParkingObject {
public:
    ParkingObject() = default;
    // Throws std::invalid_argument unless sigma increases along each block.
    ParkingObject(NoncrossingPartition pi, Permutation sigma);

    // The minimum (one block, identity) and the maximal element (singletons, s).
    static ParkingObject minimum(int n);
    static ParkingObject maximal(const Permutation& s);

    const NoncrossingPartition& pi() const { return pi_; }
    const Permutation& sigma() const { return sigma_; }
    int size() const { return pi_.size(); }
    // |pi| - 1.
    int rank() const { return pi_.block_count() - 1; }

    NC2Triple triple() const;
    ParkingWord word() const;
    ParkingTree tree() const;

    friend auto operator<=>(const ParkingObject&, const ParkingObject&) = default;
    friend bool operator==(const ParkingObject&, const ParkingObject&) = default;

private:
    NoncrossingPartition pi_;
    Permutation sigma_;
};

enum class Representation { triple, pair, word, tree };
using AnyRepresentation = std::variant<NC2Triple, ParkingObject, ParkingWord, ParkingTree>;

// Result of a validation: ok, or the first violated invariant.
struct Validation {
    bool ok = true;
    std::string diagnostic;
    explicit operator bool() const { return ok; }
};

Validation validate_triple(const NC2Triple& t);
Validation validate_pair(const NoncrossingPartition& pi, const Permutation& sigma);
Validation validate_word(const ParkingWord& w);
// n is the expected ground-set size; k the arity multiplier (1 for parking trees).
Validation validate_tree(const ParkingTree& t, int n, int k = 1);
Validation validate(const AnyRepresentation& x);

// Direct bijections. Each throws std::invalid_argument on invalid input.
NC2Triple pair_to_triple(const ParkingObject& p);
ParkingObject triple_to_pair(const NC2Triple& t);
ParkingWord triple_to_word(const NC2Triple& t);
NC2Triple word_to_triple(const ParkingWord& w);
ParkingTree pair_to_tree(const ParkingObject& p);
ParkingObject tree_to_pair(const ParkingTree& t);
ParkingTree word_to_tree(const ParkingWord& w);
ParkingWord tree_to_word(const ParkingTree& t);
// The arch decomposition of p restricted to positions lo..hi, which must be a
// union of blocks of pi; lo > hi gives a leaf. pair_to_tree is the case 1..n.
ParkingTree interval_tree(const ParkingObject& p, int lo, int hi);

// Weak set composition of a word over the frame {1..length}: entry i-1 holds
// the positions of letter i.
std::vector<std::vector<int>> word_to_composition(const ParkingWord& w, int length);
ParkingWord composition_to_word(const std::vector<std::vector<int>>& c, int n);
// Prefix reading of the labels, leaves included.
std::vector<std::vector<int>> tree_to_composition(const ParkingTree& t);
// Rebuilds the plane tree whose prefix reading is c, each vertex with label E
// receiving k|E| children: a nonempty E_i takes E_{i+1} as its leftmost child,
// an empty E_i hands E_{i+1} to the nearest ancestor that still has a free slot.
ParkingTree composition_to_tree(const std::vector<std::vector<int>>& c, int k = 1);

ParkingObject to_pair(const AnyRepresentation& x);
AnyRepresentation convert(const AnyRepresentation& x, Representation target);

// Symmetric group action.
ParkingWord act(const Permutation& s, const ParkingWord& w);
NC2Triple act(const Permutation& s, const NC2Triple& t);
ParkingObject act(const Permutation& s, const ParkingObject& p);
ParkingTree act(const Permutation& s, const ParkingTree& t);

// eta(k) for k = 1..n, as indices into pi().blocks(): the block B with k in its image.
std::vector<int> eta_indices(const ParkingObject& p);
std::vector<Block> eta(const ParkingObject& p);
// The element with partition pi and eta sequence given by block indices into
// pi.blocks(); throws unless each block B occurs exactly |B| times.
ParkingObject from_eta(const NoncrossingPartition& pi, const std::vector<int>& eta_idx);

// Primeness: 1 and n in a common block of pi.
bool is_prime(const ParkingObject& p);
// #{i : w_i <= j} > j for every j in 1..n-1.
bool is_prime_word(const ParkingWord& w);
// The rightmost child of the root is a leaf.
bool is_prime_tree(const ParkingTree& t);

// True iff w_i <= i for all i and w is lexicographically maximal among the
// rearrangements of w satisfying that condition.
bool orbit_representative_check(const ParkingWord& w);

// Nilpotent partial function of a parking tree: the j-th child edge of a
// vertex is matched with the j-th smallest element of its label, and every
// element of a non-root vertex is sent to the element its vertex hangs from.
// Entry i-1 is f(i), or 0 where f is undefined (the root labels).
std::vector<int> tree_to_nilpotent(const ParkingTree& t, int n);
// Inverse; throws std::invalid_argument when f is not nilpotent.
ParkingTree nilpotent_to_tree(const std::vector<int>& f);

// Right combs: every child other than the rightmost is a leaf.
bool is_right_comb(const ParkingTree& t);
// Labels read down the right branch; throws when t is not a right comb.
std::vector<std::vector<int>> right_comb_to_composition(const ParkingTree& t);
// Inverse through the interval partition with block sizes |C_1|, |C_2|, ...
// whose i-th block is sent increasingly onto C_i.
ParkingTree composition_to_right_comb(const std::vector<std::vector<int>>& c, int n);

// Independent enumerations of every representation (all sorted).
std::vector<ParkingObject> enumerate_parking_objects(int n);  // pairs
std::vector<NC2Triple> enumerate_triples(int n);
std::vector<ParkingWord> enumerate_parking_words(int n);
std::vector<ParkingTree> enumerate_parking_trees(int n);

// Ordered set compositions of {1..n} (nonempty parts).
std::vector<std::vector<std::vector<int>>> enumerate_set_compositions(int n);

std::string word_str(const ParkingWord& w);

}  // namespace ncpark
