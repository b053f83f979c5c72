#include "doctest.h"

#include "ncpark/numbers.hpp"
#include "ncpark/partition.hpp"

using namespace ncpark;

namespace {

// Brute-force oracle: set partitions that avoid the pattern i<j<k<l with
// i,k in one block and j,l in another.
bool crossing_by_pattern(const SetPartition& p) {
    const int n = p.size();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l)
                    if (p.block_index(i) == p.block_index(k) && p.block_index(j) == p.block_index(l) &&
                        p.block_index(i) != p.block_index(j))
                        return true;
    return false;
}

}  // namespace

TEST_CASE("noncrossing partitions are counted by Catalan numbers") {
    CHECK(enumerate_noncrossing(1).size() == 1);
    CHECK(enumerate_noncrossing(1).front().str() == "{1}");
    for (int n = 1; n <= 7; ++n) {
        std::size_t filtered = 0;
        for (const auto& p : enumerate_set_partitions(n))
            if (!crossing_by_pattern(p)) ++filtered;
        CHECK(enumerate_noncrossing(n).size() == filtered);
        CHECK(Integer(filtered) == catalan(n));
    }
    CHECK(enumerate_noncrossing(3).size() == 5);
    CHECK(enumerate_noncrossing(6).size() == 132);
    CHECK_THROWS_AS(enumerate_noncrossing(13), std::out_of_range);
    CHECK_THROWS_AS(enumerate_noncrossing(0), std::out_of_range);
}

TEST_CASE("noncrossing predicate agrees with the four-point pattern") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& p : enumerate_set_partitions(n)) CHECK(p.is_noncrossing() == !crossing_by_pattern(p));
}

TEST_CASE("order on noncrossing partitions") {
    auto zero = NoncrossingPartition::zero(3);
    auto one = NoncrossingPartition::one(3);
    NoncrossingPartition p(3, {{1, 2}, {3}});
    NoncrossingPartition q(3, {{1, 3}, {2}});
    for (const auto& x : enumerate_noncrossing(3)) CHECK(nc_leq(zero, x));
    CHECK(nc_leq(p, one));
    CHECK_FALSE(nc_leq(p, q));
    CHECK_FALSE(nc_leq(q, p));
    CHECK_THROWS_AS(nc_leq(p, NoncrossingPartition::one(4)), std::invalid_argument);
}

TEST_CASE("permutation embedding") {
    CHECK(embed_permutation(NoncrossingPartition::zero(3)).str() == "231");
    CHECK(embed_permutation(NoncrossingPartition::one(3)).is_identity());
    CHECK(embed_permutation(NoncrossingPartition(6, {{1, 2}, {3}, {4, 5, 6}})).str() == "213564");
}

TEST_CASE("Kreweras complement") {
    NoncrossingPartition p(6, {{1, 2}, {3}, {4, 5, 6}});
    CHECK(kreweras(p) == NoncrossingPartition(6, {{1, 3, 4}, {2}, {5}, {6}}));
    for (int n = 1; n <= 6; ++n) CHECK(kreweras(NoncrossingPartition::zero(n)) == NoncrossingPartition::one(n));
    Permutation c = embed_permutation(NoncrossingPartition::zero(4));
    for (const auto& x : enumerate_noncrossing(4)) {
        Permutation twice = embed_permutation(kreweras(kreweras(x)));
        CHECK(twice == c * embed_permutation(x) * c.inverse());
    }
    for (int n = 1; n <= 5; ++n) {
        auto all = enumerate_noncrossing(n);
        for (const auto& a : all) {
            CHECK(kreweras(a).is_noncrossing());
            for (const auto& b : all)
                if (nc_leq(a, b)) CHECK(nc_leq(kreweras(b), kreweras(a)));
        }
    }
}

TEST_CASE("relative Kreweras complement") {
    for (int n = 1; n <= 5; ++n) {
        auto all = enumerate_noncrossing(n);
        for (const auto& a : all)
            for (const auto& b : all) {
                if (!nc_leq(a, b)) continue;
                auto k = relative_kreweras(a, b);
                CHECK(embed_permutation(k) == embed_permutation(a) * embed_permutation(b).inverse());
                CHECK((k == NoncrossingPartition::one(n)) == (a == b));
                // Rank bookkeeping: |K(a,b)| = n - (|b| - |a|).
                CHECK(k.block_count() == n - (b.block_count() - a.block_count()));
            }
        for (const auto& t : all) {
            auto k = relative_kreweras(NoncrossingPartition::zero(n), t);
            CHECK(embed_permutation(k) ==
                  embed_permutation(NoncrossingPartition::zero(n)) * embed_permutation(t).inverse());
        }
    }
    // n = 3 worked by hand: (123) * ((12))^{-1} = (123)(12) sends 1->3, 2->2, 3->1.
    auto k = relative_kreweras(NoncrossingPartition::zero(3), NoncrossingPartition(3, {{1, 2}, {3}}));
    CHECK(k == NoncrossingPartition(3, {{1, 3}, {2}}));
    CHECK_THROWS_AS(relative_kreweras(NoncrossingPartition::one(3), NoncrossingPartition::zero(3)),
                    std::invalid_argument);
}

TEST_CASE("Lukasiewicz encoding") {
    NoncrossingPartition p(15, {{1, 2, 15}, {3, 6, 10, 11}, {4, 5}, {7, 8, 9}, {12, 13, 14}});
    std::vector<int> expected{3, 0, 4, 2, 0, 0, 3, 0, 0, 0, 0, 3, 0, 0, 0};
    CHECK(lukasiewicz_encode(p) == expected);
    CHECK(lukasiewicz_decode(expected) == p);
    CHECK(lukasiewicz_encode(NoncrossingPartition::one(4)) == std::vector<int>{1, 1, 1, 1});
    for (const auto& x : enumerate_noncrossing(5)) CHECK(lukasiewicz_decode(lukasiewicz_encode(x)) == x);
    CHECK_THROWS_AS(lukasiewicz_decode({0, 2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(lukasiewicz_decode({1, 1, 0}), std::invalid_argument);
}

TEST_CASE("permutation code") {
    CHECK(permutation_code(Permutation({1, 5, 3, 2, 4})) == std::vector<int>{3, 0, 1, 0, 0});
    CHECK(permutation_code(Permutation::identity(5)) == std::vector<int>(5, 0));
    CHECK(permutation_code(Permutation({4, 3, 2, 1})) == std::vector<int>{3, 2, 1, 0});
}

TEST_CASE("combinatorial numbers") {
    CHECK(combinatorial_number(NumberKind::catalan, 3) == 5);
    CHECK(combinatorial_number(NumberKind::fuss_catalan, 3, -1) == 2);
    CHECK(combinatorial_number(NumberKind::stirling2, 3, 2) == 3);
    CHECK(combinatorial_number(NumberKind::binomial, 6, 2) == 15);
    CHECK(binomial(-3, 2) == 6);
    for (int n = 1; n <= 8; ++n) {
        CHECK(fuss_catalan(n, 1) == 1);
        CHECK(fuss_catalan(n, 2) == catalan(n));
        CHECK(fuss_catalan(n, -1) == (n % 2 == 1 ? catalan(n - 1) : -catalan(n - 1)));
    }
}

TEST_CASE("multichains of NC_n are counted by Fuss-Catalan numbers") {
    // Direct count of (k-1)-multichains pi_1 <= ... <= pi_{k-1}.
    for (int n = 1; n <= 5; ++n) {
        auto all = enumerate_noncrossing(n);
        std::vector<Integer> ends(all.size(), 1);
        for (int k = 2; k <= 4; ++k) {
            Integer total = 0;
            for (const auto& e : ends) total += e;
            CHECK(total == fuss_catalan(n, k));
            std::vector<Integer> next(all.size(), 0);
            for (std::size_t j = 0; j < all.size(); ++j)
                for (std::size_t i = 0; i < all.size(); ++i)
                    if (nc_leq(all[i], all[j])) next[j] += ends[i];
            ends = std::move(next);
        }
    }
}

TEST_CASE("order ideals of NC_n factor along the Kreweras complement") {
    for (int n = 1; n <= 5; ++n) {
        auto all = enumerate_noncrossing(n);
        for (const auto& p : all) {
            Integer below = 0;
            for (const auto& q : all)
                if (nc_leq(q, p)) ++below;
            Integer product = 1;
            const NoncrossingPartition k = kreweras(p);
            for (const auto& b : k.blocks()) product *= catalan(static_cast<int>(b.size()));
            CHECK(below == product);
        }
    }
}
