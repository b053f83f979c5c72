#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "ncpark/numbers.hpp"

namespace ncpark {

// A finite poset on the indices 0..size()-1 with a precomputed reachability
// table. Elements carry display labels only; the values they stand for live
// in whichever module built the poset.
class FinitePoset {
public:
    FinitePoset() = default;

    // Builds the poset from its upper covers (upper[i] lists the j covering i).
    // Throws std::invalid_argument when the cover digraph has a cycle.
    static FinitePoset from_covers(std::vector<std::vector<int>> upper, std::vector<std::string> labels = {});
    // Builds the poset from an order predicate; the Hasse diagram is derived.
    template <class Leq>
    static FinitePoset from_leq(int size, Leq&& leq, std::vector<std::string> labels = {});

    int size() const { return static_cast<int>(upper_.size()); }
    bool leq(int i, int j) const { return up_[static_cast<std::size_t>(i)].test(static_cast<std::size_t>(j)); }
    bool less(int i, int j) const { return i != j && leq(i, j); }
    const std::vector<int>& upper_covers(int i) const { return upper_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& lower_covers(int i) const { return lower_[static_cast<std::size_t>(i)]; }
    bool covers(int i, int j) const;  // true when j covers i
    const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
    const std::vector<std::string>& labels() const { return labels_; }

    // Elements j with i <= j (as a bitset over indices), and elements below.
    const boost::dynamic_bitset<>& up_set(int i) const { return up_[static_cast<std::size_t>(i)]; }
    const boost::dynamic_bitset<>& down_set(int i) const { return down_[static_cast<std::size_t>(i)]; }

    // Graded structure: rank(i) is the length of a saturated chain from a
    // minimal element. is_graded() is false when two such chains disagree.
    bool is_graded() const { return graded_; }
    int rank(int i) const { return rank_[static_cast<std::size_t>(i)]; }
    int max_rank() const;
    std::vector<int> rank_sizes() const;

    std::vector<int> minimal_elements() const;
    std::vector<int> maximal_elements() const;
    std::optional<int> bottom() const;
    std::optional<int> top() const;

    // Indices in an order compatible with the partial order.
    const std::vector<int>& linear_extension() const { return topo_; }

    // The poset with a new maximum appended at index size().
    FinitePoset with_top(const std::string& label = "1") const;
    // The induced subposet on the given indices, in the given order.
    FinitePoset induced(const std::vector<int>& elements) const;
    // The closed interval [x, y] as an induced subposet.
    FinitePoset interval(int x, int y) const;
    std::vector<int> interval_elements(int x, int y) const;

    // Cover relations as (lower, upper) pairs, sorted.
    std::vector<std::pair<int, int>> cover_pairs() const;

private:
    void finish();

    std::vector<std::vector<int>> upper_;
    std::vector<std::vector<int>> lower_;
    std::vector<boost::dynamic_bitset<>> up_;
    std::vector<boost::dynamic_bitset<>> down_;
    std::vector<int> rank_;
    std::vector<int> topo_;
    std::vector<std::string> labels_;
    bool graded_ = true;
};

// Moebius function mu(x, y); zero when x is not below y.
Integer mobius(const FinitePoset& p, int x, int y);
// mu(x, y) for every y, computed in one pass.
std::vector<Integer> mobius_from(const FinitePoset& p, int x);

// Number of multichains x_1 <= x_2 <= ... <= x_k (k >= 1).
Integer zeta_count(const FinitePoset& p, int k);
// Multichain counts of length k refined by the rank of the top element x_k.
std::vector<Integer> multichains_by_top_rank(const FinitePoset& p, int k);

enum class WhitneyKind { first, second };
// Second kind: number of elements of rank l. First kind: sum of mu(bottom, x)
// over the elements x of rank l; throws std::invalid_argument without a bottom.
Integer whitney(const FinitePoset& p, WhitneyKind kind, int l);

// Maximal chains as index lists from a minimal to a maximal element, in
// depth-first order along upper_covers.
std::vector<std::vector<int>> maximal_chains(const FinitePoset& p);

// True when f (a list with f[i] the image of i) is a bijection that
// preserves and reflects the order.
bool is_order_isomorphism(const FinitePoset& a, const FinitePoset& b, const std::vector<int>& f);

// Guard for order relations computed as a dense table.
inline constexpr int kMaxDensePosetSize = 20000;

template <class Leq>
FinitePoset FinitePoset::from_leq(int size, Leq&& leq, std::vector<std::string> labels) {
    if (size > kMaxDensePosetSize) throw std::out_of_range("FinitePoset::from_leq: poset too large");
    const auto n = static_cast<std::size_t>(size);
    std::vector<boost::dynamic_bitset<>> up(n, boost::dynamic_bitset<>(n));
    std::vector<boost::dynamic_bitset<>> down(n, boost::dynamic_bitset<>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i == j || leq(static_cast<int>(i), static_cast<int>(j))) {
                up[i].set(j);
                down[j].set(i);
            }
    std::vector<std::vector<int>> upper(n);
    for (std::size_t i = 0; i < n; ++i) {
        boost::dynamic_bitset<> strict = up[i];
        strict.reset(i);
        for (auto j = strict.find_first(); j != boost::dynamic_bitset<>::npos; j = strict.find_next(j))
            if ((strict & down[j]).count() == 1) upper[i].push_back(static_cast<int>(j));
    }
    FinitePoset p = from_covers(std::move(upper), std::move(labels));
    if (p.up_ != up) throw std::invalid_argument("FinitePoset::from_leq: relation is not a partial order");
    return p;
}

}  // namespace ncpark
