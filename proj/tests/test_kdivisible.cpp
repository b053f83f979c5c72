#include "doctest.h"

#include "ncpark/enumeration.hpp"
#include "ncpark/kdivisible.hpp"
#include "ncpark/topology.hpp"

using namespace ncpark;

TEST_CASE("k-divisible noncrossing partitions") {
    NCKPoset p = build_nc_k(3, 2);
    CHECK(p.poset.size() == 12);
    CHECK(p.poset.is_graded());
    auto bottom = p.poset.bottom();
    REQUIRE(bottom);
    CHECK(p.elements[static_cast<std::size_t>(*bottom)] ==
          std::vector<NoncrossingPartition>{NoncrossingPartition::zero(3), NoncrossingPartition::zero(3)});
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= 3; ++k) {
            NCKPoset q = build_nc_k(n, k);
            CHECK(Integer(q.poset.size()) == fuss_catalan(n, k + 1));
            CHECK(q.poset.is_graded());
            CHECK(q.poset.bottom().has_value());
            for (int x = 0; x < q.poset.size(); ++x)
                CHECK(q.poset.rank(x) == q.elements[static_cast<std::size_t>(x)].back().block_count() - 1);
            for (int x : q.poset.maximal_elements())
                CHECK(q.elements[static_cast<std::size_t>(x)].back() == NoncrossingPartition::one(n));
        }
    CHECK_THROWS_AS(build_nc_k(5, 1), std::out_of_range);
    CHECK_THROWS_AS(build_nc_k(3, 4), std::out_of_range);
}

TEST_CASE("k = 1 gives back NC_n and the 2-partitions") {
    for (int n = 1; n <= 4; ++n) {
        NCKPoset q = build_nc_k(n, 1);
        std::vector<int> f;
        for (const auto& c : q.elements) f.push_back(q.nc.id(c.front()));
        CHECK(is_order_isomorphism(q.poset, q.nc.poset, f));
        PPKPoset r = build_pp_k(n, 1);
        std::vector<int> g;
        for (const auto& c : r.chains) g.push_back(c.front());
        CHECK(is_order_isomorphism(r.poset, r.pp.poset, g));
    }
}

TEST_CASE("multichains of k-divisible noncrossing partitions") {
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 3; ++k) {
            NCKPoset q = build_nc_k(n, k);
            for (int j = 1; j <= 3; ++j) CHECK(zeta_count(q.poset, j) == zeta_count(q.nc.poset, j * k));
        }
}

TEST_CASE("k-divisible 2-partitions") {
    CHECK(build_pp_k(3, 2).poset.size() == 49);
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= 3; ++k) {
            PPKPoset p = build_pp_k(n, k);
            CHECK(Integer(p.poset.size()) == power(Integer(n * k + 1), n - 1));
            CHECK(p.poset.is_graded());
            for (int x = 0; x < p.poset.size(); ++x) CHECK(p.poset.rank(x) == p.top(x).rank());
            CHECK(compact_encoding_check(p));
            CHECK(unique_descent_check(p));
        }
    CHECK_THROWS_AS(build_pp_k(5, 1), std::out_of_range);
}

TEST_CASE("multichains of k-divisible 2-partitions") {
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 3; ++k) {
            PPKPoset p = build_pp_k(n, k);
            for (int j = 1; j <= 3; ++j) CHECK(zeta_count(p.poset, j) == power(Integer(n * j * k + 1), n - 1));
        }
}

TEST_CASE("the action on k-divisible 2-partitions") {
    PPKPoset p = build_pp_k(3, 2);
    for (const auto& s : all_permutations(3)) {
        auto f = pp_k_action_map(p, s);
        CHECK(is_order_isomorphism(p.poset, p.poset, f));
        Integer fixed = 0;
        for (int x = 0; x < p.poset.size(); ++x)
            if (f[static_cast<std::size_t>(x)] == x) ++fixed;
        CHECK(fixed == character_eval(CharacterKind::park_k, 2, s));
    }
}

TEST_CASE("Edelman's k-divisible partitions") {
    DivisibleNC d = edelman_divisible_nc(2, 2);
    CHECK(d.elements == std::vector<NoncrossingPartition>{NoncrossingPartition(4, {{1, 2}, {3, 4}}),
                                                           NoncrossingPartition(4, {{1, 2, 3, 4}}),
                                                           NoncrossingPartition(4, {{1, 4}, {2, 3}})});
    CHECK(edelman_divisible_nc(3, 2).poset.size() == 12);
    CHECK(edelman_divisible_nc(4, 1).poset.size() == 14);
    for (auto [n, k] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}, {4, 2}}) {
        DivisibleNC e = edelman_divisible_nc(n, k);
        NCKPoset a = build_nc_k(n, k);
        CHECK(e.poset.size() == a.poset.size());
        CHECK(e.poset.is_graded());
        CHECK(e.poset.rank_sizes() == a.poset.rank_sizes());
        for (int x = 0; x < e.poset.size(); ++x)
            CHECK(e.poset.rank(x) == e.elements[static_cast<std::size_t>(x)].block_count() - 1);
    }
    CHECK_THROWS_AS(edelman_divisible_nc(3, 3), std::out_of_range);
    for (auto [n, k] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {2, 3}, {3, 2}}) {
        DivisiblePP e = edelman_divisible_pp(n, k);
        Integer expect = 0;
        for (const auto& pi : edelman_divisible_nc(n, k).elements) {
            Integer orbit = factorial(n * k);
            for (const auto& b : pi.blocks()) orbit /= factorial(static_cast<int>(b.size()));
            expect += orbit;
        }
        CHECK(Integer(e.poset.size()) == expect);
    }
    CHECK_THROWS_AS(edelman_divisible_pp(4, 2), std::out_of_range);
}

TEST_CASE("prime k-divisible 2-partitions") {
    // k = 1: the four primes of size 3.
    PPKPoset p1 = build_pp_k(3, 1);
    CHECK(k_prime_elements(p1, PrimeReading::largest).size() == 4);
    CHECK(k_prime_elements(p1, PrimeReading::smallest).size() == 4);
    PPKPoset p = build_pp_k(3, 2);
    CHECK(k_prime_elements(p, PrimeReading::smallest).size() == 25);
    // The printed reading, kept as a regression.
    CHECK(k_prime_elements(p, PrimeReading::largest).size() == 7);
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= 3; ++k) {
            PPKPoset q = build_pp_k(n, k);
            CHECK(k_prime_word_agreement(q));
            for (const auto& type : integer_partitions(n)) {
                Permutation s = permutation_of_cycle_type(type);
                CHECK(k_prime_fixed_count(q, PrimeReading::smallest, s) == character_eval(CharacterKind::park_prime_k, k, s));
            }
            Permutation cycle = permutation_of_cycle_type({n});
            CHECK(k_prime_fixed_count(q, PrimeReading::smallest, cycle) == 1);
        }
}

TEST_CASE("homology of k-divisible 2-partitions") {
    for (int k = 2; k <= 3; ++k) {
        PPKPoset p = build_pp_k(3, k);
        PosetHomology h = poset_homology(p.poset);
        CHECK(boundary_squared_zero(h.chains));
        CHECK(h.ranks == std::vector<int>{0, 0, (3 * k - 1) * (3 * k - 1)});
        for (const auto& type : integer_partitions(3)) {
            Permutation s = permutation_of_cycle_type(type);
            Integer chi = homology_character(h, pp_k_action_map(p, s));
            CHECK(chi == homology_character_formula(k, s));
            Integer sign = ((3 - s.cycle_count()) % 2 == 0) ? 1 : -1;
            CHECK(chi == sign * k_prime_fixed_count(p, PrimeReading::smallest, s));
        }
    }
}
