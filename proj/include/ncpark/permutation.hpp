#pragma once

#include <compare>
#include <string>
#include <vector>

namespace ncpark {

// A permutation of {1..n} in one-line notation.
//
// Products compose right to left: (a * b)(i) = a(b(i)).
class Permutation {
public:
    Permutation() = default;

    // Validates that the word is a bijection on {1..n}.
    explicit Permutation(std::vector<int> one_line);

    static Permutation identity(int n);
    // Builds the product of the given disjoint cycles; unlisted points are fixed.
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);
    static Permutation transposition(int n, int i, int j);

    int size() const { return static_cast<int>(w_.size()); }
    int operator()(int i) const { return w_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& one_line() const { return w_; }

    Permutation inverse() const;
    friend Permutation operator*(const Permutation& a, const Permutation& b);

    // Cycles written from their minimum, listed by increasing minimum (fixed points included).
    std::vector<std::vector<int>> cycles() const;
    int cycle_count() const;
    // Cycle lengths sorted in decreasing order.
    std::vector<int> cycle_type() const;
    bool is_identity() const;

    // Digits concatenated when n <= 9, space separated otherwise.
    std::string str() const;

    friend auto operator<=>(const Permutation&, const Permutation&) = default;
    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> w_;
};

// All permutations of {1..n} in lexicographic order of their one-line words.
std::vector<Permutation> all_permutations(int n);

// Integer partitions of n in decreasing lexicographic order; each part list is decreasing.
std::vector<std::vector<int>> integer_partitions(int n);

// A representative permutation with the given cycle type, cycles on consecutive integers.
Permutation permutation_of_cycle_type(const std::vector<int>& type);

// The code c_n ... c_1 where c_i counts the j < i with s^{-1}(j) > s^{-1}(i),
// that is the smaller letters standing to the right of i in the one-line word.
// Entry 0 of the result is c_n.
std::vector<int> permutation_code(const Permutation& s);

}  // namespace ncpark
