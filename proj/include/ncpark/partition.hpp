#pragma once

#include <compare>
#include <string>
#include <vector>

#include "ncpark/permutation.hpp"

namespace ncpark {

using Block = std::vector<int>;

// A set partition of {1..n} in canonical form: each block sorted ascending,
// blocks listed by increasing minimum.
//
// Poset convention used throughout the library: the one-block partition is
// the minimum and the all-singletons partition is the maximum, so p <= q
// means that q refines p.
class SetPartition {
public:
    SetPartition() = default;
    // Canonicalizes the given blocks; throws if they do not partition {1..n}.
    SetPartition(int n, std::vector<Block> blocks);

    static SetPartition one_block(int n);
    static SetPartition singletons(int n);

    int size() const { return n_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<Block>& blocks() const { return blocks_; }
    const Block& block(int index) const { return blocks_[static_cast<std::size_t>(index)]; }
    // Index (into blocks()) of the block containing element i.
    int block_index(int i) const { return index_[static_cast<std::size_t>(i - 1)]; }
    const Block& block_of(int i) const { return block(block_index(i)); }

    // True when every block of *this lies inside a block of other.
    bool refines(const SetPartition& other) const;
    bool is_noncrossing() const;
    // Image of the partition under s, that is the blocks s(B).
    SetPartition image(const Permutation& s) const;

    // Example: {1,2}{3}.
    std::string str() const;

    friend auto operator<=>(const SetPartition& a, const SetPartition& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.blocks_ <=> b.blocks_;
    }
    friend bool operator==(const SetPartition& a, const SetPartition& b) {
        return a.n_ == b.n_ && a.blocks_ == b.blocks_;
    }

private:
    int n_ = 0;
    std::vector<Block> blocks_;
    std::vector<int> index_;
};

// A set partition with no i<j<k<l having i,k in one block and j,l in another.
class NoncrossingPartition : public SetPartition {
public:
    NoncrossingPartition() = default;
    // Throws std::invalid_argument when the partition is crossing.
    explicit NoncrossingPartition(SetPartition p);
    NoncrossingPartition(int n, std::vector<Block> blocks);

    static NoncrossingPartition zero(int n);  // one block, the minimum
    static NoncrossingPartition one(int n);   // singletons, the maximum
};

// Desk-scale guard for exhaustive enumerations of NC_n.
inline constexpr int kMaxNoncrossingSize = 12;

// All set partitions of {1..n}, sorted canonically.
std::vector<SetPartition> enumerate_set_partitions(int n);
// All noncrossing partitions of {1..n}, sorted canonically; throws for n outside 1..12.
std::vector<NoncrossingPartition> enumerate_noncrossing(int n);

// p <= q in NC_n, that is q refines p. Throws on size mismatch.
bool nc_leq(const SetPartition& p, const SetPartition& q);

// One cycle per block, each block cycled in increasing order.
Permutation embed_permutation(const SetPartition& p);
// Inverse of embed_permutation; throws std::logic_error when the permutation
// is not the embedding of a noncrossing partition.
NoncrossingPartition partition_from_embedding(const Permutation& s);

// Kreweras complement: the partition whose embedding is c * p^{-1}, c = (1 2 ... n).
NoncrossingPartition kreweras(const NoncrossingPartition& p);
// Relative complement K(p, t) for p <= t: the partition whose embedding is p * t^{-1}.
NoncrossingPartition relative_kreweras(const NoncrossingPartition& p, const NoncrossingPartition& t);

// a_i = |B| if i = min B, else 0.
std::vector<int> lukasiewicz_encode(const SetPartition& p);
// Inverse of the encoding on noncrossing partitions. Each position with a zero
// joins the innermost block that is still open. Throws when some prefix sum
// a_1 + ... + a_j is smaller than j or the total is not n.
NoncrossingPartition lukasiewicz_decode(const std::vector<int>& a);

// Restriction of p to a set of elements, relabelled to {1..m} in increasing order.
SetPartition restrict_partition(const SetPartition& p, const std::vector<int>& elements);

}  // namespace ncpark
