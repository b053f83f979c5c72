#include "doctest.h"

#include <algorithm>

#include "ncpark/shelling.hpp"

using namespace ncpark;

TEST_CASE("codes and p0") {
    ParkingObject p = ParkingObject::maximal(Permutation({1, 5, 3, 2, 4}));
    CHECK(code(p) == std::vector<int>{3, 0, 1, 0, 0});
    CHECK(p0_from_code(p) == 0);
    for (int n = 1; n <= 5; ++n) {
        CHECK(p0_from_code(ParkingObject::maximal(Permutation::identity(n))) == n);
        CHECK(p0_from_eta(ParkingObject::maximal(Permutation::identity(n))) == n);
    }
    for (int n = 1; n <= 4; ++n)
        for (const auto& x : enumerate_parking_objects(n)) CHECK(p0_from_code(x) == p0_from_eta(x));
}

TEST_CASE("edge labels of NC_n") {
    NoncrossingPartition one = NoncrossingPartition::zero(3);
    NoncrossingPartition split(3, {{1, 2}, {3}});
    auto l = el_label(one, split);
    CHECK(l.first < l.second);
    CHECK_THROWS_AS(el_label(split, one), std::invalid_argument);
    CHECK_THROWS_AS(el_label(one, NoncrossingPartition::one(3)), std::invalid_argument);
    for (int n = 1; n <= 5; ++n) {
        LemmaReport r = verify_el_increasing(n);
        CHECK_MESSAGE(r.ok(), r.counterexample);
    }
    for (int n = 1; n <= 6; ++n) {
        LemmaReport r = verify_el_distinct(n);
        CHECK_MESSAGE(r.ok(), r.counterexample);
        CHECK(Integer(r.domain) == catalan(n));
    }
}

TEST_CASE("cover order") {
    auto first = cover_order(ParkingObject::minimum(3));
    REQUIRE(first.size() == 9);
    CHECK(code(*first.front()) == std::vector<int>{0, 0, 0});
    for (std::size_t i = 0; i + 1 < first.size(); ++i) {
        CHECK(cover_precedes(ParkingObject::minimum(3), first[i], first[i + 1]));
        CHECK_FALSE(cover_precedes(ParkingObject::minimum(3), first[i + 1], first[i]));
    }
    auto last = cover_order(ParkingObject::maximal(Permutation({2, 3, 1})));
    REQUIRE(last.size() == 1);
    CHECK_FALSE(last.front());
    for (int n = 1; n <= 4; ++n)
        for (const auto& x : enumerate_parking_objects(n)) CHECK_NOTHROW(cover_order(x));
    CHECK_THROWS_AS(cover_key(ParkingObject::minimum(3), ParkingObject::minimum(3)), std::invalid_argument);
}

TEST_CASE("six-point configuration against recursive atom orderings") {
    AtomOrderingCounterexample c = recursive_atom_counterexample();
    CHECK(c.all_valid);
    CHECK(c.y != c.y_prime);
    CHECK(c.z != c.z_prime);
    CHECK(c.y_prime_before_y);
    CHECK(c.y_first_below_z);
    CHECK(c.z_before_z_prime);
    CHECK(c.z_prime_covers_y_prime);
    CHECK(c.holds());
    CHECK(word_str(c.y.word()) == word_str(triple_to_word(c.y.triple())));
}

TEST_CASE("lexicographic order on maximal chains") {
    auto chains = lex_maximal_chains(3);
    REQUIRE(chains.size() == 18);
    for (const auto& ch : chains) {
        CHECK(ch.size() == 4);
        CHECK(lex_compare(ch, ch) == std::strong_ordering::equal);
        CHECK_FALSE(ch.back());
    }
    for (std::size_t i = 0; i < chains.size(); ++i)
        for (std::size_t j = 0; j < chains.size(); ++j)
            CHECK((lex_compare(chains[i], chains[j]) == std::strong_ordering::less) == (i < j));
    // Chains through the same rank-1 element are ordered by the cover order there.
    for (std::size_t i = 0; i + 1 < chains.size(); ++i)
        if (chains[i][1] == chains[i + 1][1]) CHECK(cover_precedes(*chains[i][1], chains[i][2], chains[i + 1][2]));
    CHECK(lex_maximal_chains(4).size() == 384);
}

TEST_CASE("shelling") {
    const long long expected_chains[] = {0, 1, 2, 18, 384};
    for (int n = 1; n <= 4; ++n) {
        ShellingReport r = verify_shelling(n);
        CHECK_MESSAGE(r.passed(), r.counterexample);
        CHECK(r.chains == expected_chains[n]);
        CHECK(r.pairs_checked == r.chains * (r.chains - 1) / 2);
        CHECK(static_cast<long long>(r.witnesses.size()) == r.pairs_checked);
    }
    // Every stored witness is checked independently on the chain lists.
    auto chains = lex_maximal_chains(3);
    for (const auto& [a, b, w] : verify_shelling(3).witnesses) {
        CHECK(w < b);
        int differ = 0;
        for (std::size_t r = 0; r < chains[0].size(); ++r) {
            const auto& pb = chains[static_cast<std::size_t>(b)][r];
            if (chains[static_cast<std::size_t>(w)][r] != pb) ++differ;
            if (chains[static_cast<std::size_t>(a)][r] == pb) CHECK(chains[static_cast<std::size_t>(w)][r] == pb);
        }
        CHECK(differ == 1);
    }
}

TEST_CASE("key lemma") {
    CHECK(verify_key_lemma(2).quadruples == 0);
    for (int n = 3; n <= 4; ++n) {
        KeyLemmaReport r = verify_key_lemma(n);
        CHECK_MESSAGE(r.passed(), r.counterexample);
        CHECK(r.quadruples > 0);
    }
    KeyLemmaReport r4 = verify_key_lemma(4);
    CHECK(r4.branch_a > 0);
    CHECK(r4.only_branch_b > 0);
}

TEST_CASE("cover statistics") {
    ParkingObject m = ParkingObject::minimum(3);
    ParkingObject same(NoncrossingPartition(3, {{1, 2}, {3}}), Permutation::identity(3));
    CoverStats s = cover_stats(m, same);
    CHECK(s.m == 0);
    CHECK(s.split == Block{1, 2, 3});
    CHECK(s.p0_lower == 3);
    ParkingObject moved(NoncrossingPartition(3, {{1, 2}, {3}}), Permutation({1, 3, 2}));
    CHECK(cover_stats(m, moved).m == 3);
    CHECK(cover_stats(m, moved).p0_upper == 0);
    CHECK_THROWS_AS(cover_stats(moved, m), std::invalid_argument);
}

TEST_CASE("joins of rank-one elements with equal codes") {
    auto all = enumerate_parking_objects(3);
    int pairs = 0;
    for (const auto& a : all)
        for (const auto& b : all) {
            if (a.rank() != 1 || b.rank() != 1 || a == b || code(a) != code(b)) continue;
            ++pairs;
            HatElement j = pp_join(a, b);
            REQUIRE(j);
            CHECK(code(*j) == code(a));
        }
    CHECK(pairs > 0);
}

TEST_CASE("supporting lemmas") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& r : verify_support_lemmas(n)) CHECK_MESSAGE(r.ok(), r.name << ": " << r.counterexample);
    for (const auto& r : verify_support_lemmas(4)) CHECK_MESSAGE(r.domain > 0, r.name);
    CHECK_THROWS_AS(verify_support_lemmas(5), std::out_of_range);
}
