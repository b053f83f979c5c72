#include "doctest.h"

#include <algorithm>
#include <set>

#include "ncpark/enumeration.hpp"
#include "ncpark/partition.hpp"
#include "ncpark/poset.hpp"
#include "ncpark/pp_poset.hpp"
#include "ncpark/series.hpp"

using namespace ncpark;

namespace {

ParkingTree leaf() { return ParkingTree::leaf(); }

ParkingTree node(std::vector<int> label, std::vector<ParkingTree> children) {
    ParkingTree t;
    t.label = std::move(label);
    t.children = std::move(children);
    return t;
}

ParkingTree bare(std::vector<int> label, int k) {
    std::size_t slots = static_cast<std::size_t>(k) * label.size();
    return node(std::move(label), std::vector<ParkingTree>(slots, leaf()));
}

// The 3-parking tree on seven points: the root {1,2} has the brood
// (., 6, 7) and the brood (35, 4, .).
ParkingTree seven_point_tree() {
    return node({1, 2}, {leaf(), bare({6}, 3), bare({7}, 3), bare({3, 5}, 3), bare({4}, 3), leaf()});
}

// Number of multichains x_1 <= ... <= x_k counted by listing them directly.
std::vector<long long> listed_chain_counts(int n, int k) {
    std::vector<long long> out(static_cast<std::size_t>(n), 0);
    for (const auto& c : enumerate_k_multichains(n, k)) ++out[static_cast<std::size_t>(c.back().internal_count() - 1)];
    return out;
}

}  // namespace

TEST_CASE("closed chain counts") {
    CHECK(chain_count_closed(3, 1, 0) == 1);
    CHECK(chain_count_closed(3, 1, 1) == 9);
    CHECK(chain_count_closed(3, 1, 2) == 6);
    CHECK(chain_count_closed(3, 2, 2) == 30);
    for (int n = 1; n <= 6; ++n)
        for (int k = -1; k <= 3; ++k) CHECK(chain_count_closed(n, k, 0) == 1);
    CHECK_THROWS_AS(chain_count_closed(3, 1, 3), std::out_of_range);
    CHECK_THROWS_AS(chain_count_closed(3, 1, -1), std::out_of_range);
    CHECK_THROWS_AS(chain_count_closed(0, 1, 0), std::out_of_range);
    // Summing over the rank of the top gives the zeta polynomial.
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= 3; ++k) {
            Integer s = 0;
            for (int l = 0; l < n; ++l) s += chain_count_closed(n, k, l);
            CHECK(s == power(Integer(n * k + 1), n - 1));
        }
}

TEST_CASE("closed chain counts against the poset") {
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= 3; ++k) {
            auto oracle = chain_count_oracle(n, k);
            REQUIRE(oracle.size() == static_cast<std::size_t>(n));
            for (int l = 0; l < n; ++l) CHECK(oracle[static_cast<std::size_t>(l)] == chain_count_closed(n, k, l));
        }
    // The multichain listing used by the bijection tests agrees as well.
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 3; ++k) {
            auto listed = listed_chain_counts(n, k);
            for (int l = 0; l < n; ++l)
                CHECK(Integer(listed[static_cast<std::size_t>(l)]) == chain_count_closed(n, k, l));
        }
}

TEST_CASE("Whitney numbers of the first kind") {
    CHECK(whitney_first_closed(3, 0) == 1);
    CHECK(whitney_first_closed(3, 1) == -9);
    CHECK(whitney_first_closed(3, 2) == 12);
    CHECK(whitney_first_closed(4, 3) == -120);
    for (int n = 1; n <= 5; ++n) {
        auto oracle = whitney_first_oracle(n);
        REQUIRE(oracle.size() == static_cast<std::size_t>(n));
        Integer sum = 0;
        for (int l = 0; l < n; ++l) {
            CHECK(oracle[static_cast<std::size_t>(l)] == whitney_first_closed(n, l));
            sum += oracle[static_cast<std::size_t>(l)];
        }
        // Adding mu(bottom, top) closes the sum to zero.
        Integer mu_top = power(Integer(n - 1), n - 1) * (n % 2 ? -1 : 1);
        if (n > 1) CHECK(sum + mu_top == 0);
    }
}

TEST_CASE("k-parking words") {
    CHECK(validate_k_word({1, 1, 1}, 2));
    CHECK(validate_k_word({5, 1, 3}, 2));
    CHECK_FALSE(validate_k_word({5, 1, 4}, 1));
    CHECK_FALSE(validate_k_word({6, 1, 3}, 2));
    CHECK_FALSE(validate_k_word({0, 1}, 2));
    CHECK(enumerate_k_words(3, 2).size() == 49);
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= 3; ++k) {
            auto words = enumerate_k_words(n, k);
            CHECK(Integer(words.size()) == power(Integer(k * n + 1), n - 1));
        }
    // k = 1 is the usual notion.
    for (int n = 1; n <= 4; ++n) CHECK(enumerate_k_words(n, 1) == enumerate_parking_words(n));
}

TEST_CASE("k-parking trees and words") {
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 3; ++k) {
            auto trees = enumerate_k_trees(n, k);
            CHECK(Integer(trees.size()) == power(Integer(k * n + 1), n - 1));
            std::set<ParkingTree> from_words;
            for (const auto& w : enumerate_k_words(n, k)) {
                ParkingTree t = k_word_to_tree(w, k);
                CHECK(validate_k_tree(t, n, k));
                CHECK(k_tree_to_word(t, k) == w);
                from_words.insert(t);
            }
            CHECK(std::vector<ParkingTree>(from_words.begin(), from_words.end()) == trees);
        }
    CHECK(enumerate_k_trees(4, 2).size() == 729);
    for (int n = 1; n <= 4; ++n) {
        CHECK(enumerate_k_trees(n, 1) == enumerate_parking_trees(n));
        for (const auto& w : enumerate_parking_words(n)) CHECK(k_word_to_tree(w, 1) == word_to_tree(w));
    }
    CHECK_THROWS_AS(k_word_to_tree({3, 1}, 1), std::invalid_argument);
    CHECK_THROWS_AS(k_tree_to_word(bare({1, 2}, 1), 2), std::invalid_argument);
}

TEST_CASE("k-parking conversions commute with the action") {
    for (int k = 1; k <= 2; ++k)
        for (const auto& s : all_permutations(3))
            for (const auto& w : enumerate_k_words(3, k)) {
                CHECK(k_word_to_tree(act(s, w), k) == act(s, k_word_to_tree(w, k)));
            }
}

TEST_CASE("seven-point 3-parking tree") {
    ParkingTree t = seven_point_tree();
    REQUIRE(validate_k_tree(t, 7, 3));
    CHECK(brood_child(t, 3, 1, 3).label == std::vector<int>{7});
    CHECK(brood_child(t, 3, 1, 2).label == std::vector<int>{6});
    CHECK(brood_child(t, 3, 2, 2).label == std::vector<int>{4});
    CHECK(brood_child(t, 3, 1, 1).is_leaf());
    CHECK_THROWS_AS(brood_child(t, 3, 3, 1), std::out_of_range);
    ParkingWord w = k_tree_to_word(t, 3);
    CHECK(validate_k_word(w, 3));
    CHECK(k_word_to_tree(w, 3) == t);
    KChain c = ktree_to_chain(t, 3);
    REQUIRE(c.size() == 3);
    CHECK(is_k_multichain(c));
    CHECK(c[0] == node({1, 2, 4, 6, 7}, {leaf(), leaf(), leaf(), node({3, 5}, {leaf(), leaf()}), leaf()}));
    CHECK(c[2] == node({1, 2}, {node({6}, {node({7}, {leaf()})}), node({3, 5}, {leaf(), node({4}, {leaf()})})}));
    CHECK(c[2].internal_count() - 1 == 4);
    CHECK(chain_to_ktree(c) == t);
}

TEST_CASE("chains and k-trees") {
    // A constant chain comes from the one-vertex tree.
    KChain constant(3, bare({1, 2, 3}, 1));
    CHECK(chain_to_ktree(constant) == bare({1, 2, 3}, 3));
    CHECK(ktree_to_chain(bare({1, 2, 3}, 3), 3) == constant);
    // Every 2-multichain for n = 3, and all small cases, round-trip.
    CHECK(enumerate_k_multichains(3, 2).size() == 49);
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 3; ++k) {
            std::set<ParkingTree> images;
            for (const auto& c : enumerate_k_multichains(n, k)) {
                ParkingTree t = chain_to_ktree(c);
                CHECK(validate_k_tree(t, n, k));
                CHECK(ktree_to_chain(t, k) == c);
                CHECK(t.internal_count() == c.back().internal_count());
                images.insert(t);
            }
            CHECK(std::vector<ParkingTree>(images.begin(), images.end()) == enumerate_k_trees(n, k));
            for (const auto& t : enumerate_k_trees(n, k)) {
                KChain c = ktree_to_chain(t, k);
                CHECK(is_k_multichain(c));
                CHECK(chain_to_ktree(c) == t);
            }
        }
    for (const auto& c : enumerate_k_multichains(4, 2)) CHECK(ktree_to_chain(chain_to_ktree(c), 2) == c);
    KChain bad = {bare({1}, 1), bare({1}, 1)};
    bad[0] = node({1, 2}, {node({3}, {leaf()}), leaf()});
    bad[1] = bare({1, 2, 3}, 1);
    CHECK_FALSE(is_k_multichain(bad));
    CHECK_THROWS_AS(chain_to_ktree(bad), std::invalid_argument);
}

TEST_CASE("k-tree counts by nonempty vertices") {
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= 3; ++k) {
            if (n == 4 && k == 3) continue;
            std::vector<Integer> by_rank(static_cast<std::size_t>(n), 0);
            for (const auto& t : enumerate_k_trees(n, k)) by_rank[static_cast<std::size_t>(t.internal_count() - 1)] += 1;
            for (int l = 0; l < n; ++l) CHECK(by_rank[static_cast<std::size_t>(l)] == chain_count_closed(n, k, l));
        }
}

TEST_CASE("chain bijection commutes with the action") {
    for (int k = 1; k <= 2; ++k)
        for (const auto& s : all_permutations(3))
            for (const auto& c : enumerate_k_multichains(3, k)) CHECK(chain_to_ktree(act(s, c)) == act(s, chain_to_ktree(c)));
}

TEST_CASE("Prufer codes of k-parking trees") {
    KTreeCode single = ktree_code(bare({1, 2, 3}, 2), 2);
    CHECK(single.word.empty());
    CHECK(single.used_half_edges.empty());
    CHECK(code_to_ktree(single, 2) == bare({1, 2, 3}, 2));
    for (int k = 1; k <= 2; ++k)
        for (int n = 1; n <= 3; ++n) {
            std::set<KTreeCode, bool (*)(const KTreeCode&, const KTreeCode&)> codes(
                [](const KTreeCode& a, const KTreeCode& b) {
                    return std::tie(a.vertices, a.used_half_edges, a.word) < std::tie(b.vertices, b.used_half_edges, b.word);
                });
            for (const auto& t : enumerate_k_trees(n, k)) {
                KTreeCode c = ktree_code(t, k);
                CHECK(c.word.size() == static_cast<std::size_t>(t.internal_count() - 1));
                CHECK(code_to_ktree(c, k) == t);
                codes.insert(c);
            }
            CHECK(Integer(codes.size()) == power(Integer(k * n + 1), n - 1));
        }
    // Every code decodes to a tree with the right number of vertices, and
    // encoding gives it back.
    for (int l = 0; l <= 2; ++l) {
        auto all = enumerate_ktree_codes(3, 2, l);
        CHECK(Integer(all.size()) == chain_count_closed(3, 2, l));
        for (const auto& c : all) {
            ParkingTree t = code_to_ktree(c, 2);
            CHECK(validate_k_tree(t, 3, 2));
            CHECK(t.internal_count() == l + 1);
            CHECK(ktree_code(t, 2) == c);
        }
    }
    CHECK(enumerate_ktree_codes(3, 2, 2).size() == 30);
    KTreeCode broken = ktree_code(seven_point_tree(), 3);
    broken.word.back() = broken.word.front();
    CHECK_THROWS_AS(code_to_ktree(broken, 3), std::invalid_argument);
    CHECK(code_to_ktree(ktree_code(seven_point_tree(), 3), 3) == seven_point_tree());
}

TEST_CASE("truncated series arithmetic") {
    TruncatedSeries x = TruncatedSeries::x(4, 2);
    TruncatedSeries e = exp_series(x);
    CHECK(e.exponential(3, 0) == 1);
    CHECK(e.ordinary(3, 0) == Rational(1, 6));
    TruncatedSeries l = log1p_series(exp_series(x) - TruncatedSeries::constant(4, 2, 1));
    CHECK(l == x);
    TruncatedSeries inv = pow1p_series(x, -1) * pow1p_series(x, 1);
    CHECK(inv == TruncatedSeries::constant(4, 2, 1));
    CHECK(x.compose_x(x * Rational(2)) == x * Rational(2));
    CHECK_THROWS_AS(x.compose_x(TruncatedSeries::t(4, 2)), std::invalid_argument);
    CHECK_THROWS_AS(exp_series(TruncatedSeries::constant(4, 2, 1)), std::invalid_argument);
    CHECK_THROWS_AS(x + TruncatedSeries::x(3, 2), std::invalid_argument);
    CHECK(x.to_json() == "{\"1,0\":\"1\"}");
}

TEST_CASE("chain series") {
    TruncatedSeries c1 = chain_series(1, 6, 6);
    CHECK(c1.exponential(1, 0) == 1);
    CHECK(c1.exponential(3, 0) == 1);
    CHECK(c1.exponential(3, 1) == 9);
    CHECK(c1.exponential(3, 2) == 6);
    for (int k = 1; k <= 3; ++k) {
        TruncatedSeries c = chain_series(k, 6, 6);
        for (int n = 1; n <= 6; ++n)
            for (int l = 0; l <= 6; ++l) {
                Rational expected = l < n ? Rational(chain_count_closed(n, k, l)) : Rational(0);
                CHECK(c.exponential(n, l) == expected);
            }
        CHECK(chain_series_by_inversion(k, 6, 6) == c);
        for (int i = 1; i <= k; ++i) CHECK(chain_series_recomposed(k, i, 6, 6) == c);
    }
    // k = 0 is exp(x) - 1.
    CHECK(chain_series(0, 6, 6) == exp_series(TruncatedSeries::x(6, 6)) - TruncatedSeries::constant(6, 6, 1));
    CHECK_THROWS_AS(chain_series(1, 9, 2), std::out_of_range);
    // k = -1 gives the Whitney numbers of the first kind.
    TruncatedSeries w = chain_series(-1, 6, 6);
    CHECK(chain_series_by_inversion(-1, 6, 6) == w);
    for (int n = 1; n <= 6; ++n)
        for (int l = 0; l < n; ++l) CHECK(w.exponential(n, l) == Rational(whitney_first_closed(n, l)));
}

TEST_CASE("characters") {
    Permutation swap12 = Permutation::from_cycles(3, {{1, 2}});
    CHECK(character_eval(CharacterKind::park_k, 1, swap12) == 4);
    CHECK(character_oracle(CharacterKind::park_k, 1, swap12) == 4);
    // The fixed parking words of (12) are listed directly.
    int fixed_words = 0;
    for (const auto& w : enumerate_parking_words(3))
        if (act(swap12, w) == w) ++fixed_words;
    CHECK(fixed_words == 4);
    CHECK(character_eval(CharacterKind::park_prime, 1, Permutation::identity(3)) == 4);
    CHECK(character_oracle(CharacterKind::park_prime, 1, Permutation::identity(3)) == 4);
    CHECK(character_eval(CharacterKind::park_k, 2, Permutation({2, 3, 1})) == 1);
    for (int n = 1; n <= 4; ++n)
        for (const auto& type : integer_partitions(n)) {
            Permutation s = permutation_of_cycle_type(type);
            for (int k = 1; k <= 3; ++k)
                CHECK(character_oracle(CharacterKind::park_k, k, s) == character_eval(CharacterKind::park_k, k, s));
            CHECK(character_oracle(CharacterKind::park_prime, 1, s) == character_eval(CharacterKind::park_prime, 1, s));
        }
    for (const auto& type : integer_partitions(3)) {
        Permutation s = permutation_of_cycle_type(type);
        for (int k = 1; k <= 3; ++k) {
            Integer value = character_eval(CharacterKind::park_prime_k, k, s);
            CHECK(character_oracle(CharacterKind::park_prime_k, k, s) == value);
            // The word-level criterion gives the same fixed-point count.
            Integer words = 0;
            for (const auto& w : enumerate_k_words(3, k))
                if (is_rational_prime_k_word(w, k) && act(s, w) == w) words += 1;
            CHECK(words == value);
        }
    }
    for (const auto& type : integer_partitions(4)) {
        Permutation s = permutation_of_cycle_type(type);
        CHECK(character_oracle(CharacterKind::park_prime_k, 2, s) == character_eval(CharacterKind::park_prime_k, 2, s));
    }
    CHECK_THROWS_AS(character_oracle(CharacterKind::park_k, 1, Permutation::identity(6)), std::out_of_range);
}

TEST_CASE("prime k-multichains and prime k-words") {
    for (int k = 1; k <= 3; ++k)
        for (int n = 1; n <= 3; ++n) {
            int bottom = 0;
            int top = 0;
            int rational = 0;
            for (const auto& c : enumerate_k_multichains(n, k)) {
                ParkingWord w = k_tree_to_word(chain_to_ktree(c), k);
                // A prime largest element is exactly the printed word criterion.
                CHECK(is_prime(tree_to_pair(c.back())) == is_prime_k_word(w, k));
                if (is_prime(tree_to_pair(c.back()))) ++top;
                if (is_prime(tree_to_pair(c.front()))) ++bottom;
                if (is_rational_prime_k_word(w, k)) ++rational;
            }
            if (n == 1) continue;
            // A prime smallest element gives the count (kn-1)^(n-1).
            CHECK(Integer(bottom) == power(Integer(k * n - 1), n - 1));
            CHECK(rational == bottom);
            if (k == 1) CHECK(top == bottom);
            if (n == 3) CHECK(top == 1 + 3 * k);
        }
}

TEST_CASE("dimension identity") {
    CHECK(dimension_identity_sum(1, 1) == 1);
    CHECK(dimension_identity_sum(3, 1) == 16);
    CHECK(dimension_identity_sum(3, 2) == 49);
    for (int n = 1; n <= 7; ++n)
        for (int k = 1; k <= 3; ++k) CHECK(dimension_identity_check(n, k));
}
