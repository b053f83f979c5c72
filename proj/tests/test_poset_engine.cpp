#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "ncpark/numbers.hpp"
#include "ncpark/pp_poset.hpp"

using namespace ncpark;

namespace {

ParkingTree node(std::vector<int> label, std::vector<ParkingTree> children) { return {std::move(label), std::move(children)}; }
ParkingTree leaf() { return ParkingTree::leaf(); }

// Upper covers by brute force over every element: y > x with nothing strictly between.
std::vector<ParkingObject> brute_covers(const std::vector<ParkingObject>& all, const ParkingObject& x) {
    std::vector<ParkingObject> above;
    for (const auto& y : all)
        if (y != x && pp_leq(x, y)) above.push_back(y);
    std::vector<ParkingObject> out;
    for (const auto& y : above) {
        bool cover = true;
        for (const auto& z : above)
            if (z != y && pp_leq(z, y)) cover = false;
        if (cover) out.push_back(y);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// The poset with the maximum adjoined, as hat elements indexed like the poset (top last).
std::vector<HatElement> hat_elements(const PPPoset& pp) {
    std::vector<HatElement> out(pp.elements.begin(), pp.elements.end());
    out.emplace_back(std::nullopt);
    return out;
}

int hat_index(const PPPoset& pp, const HatElement& x) {
    return x ? pp.id(*x) : static_cast<int>(pp.elements.size());
}

// Least upper bound and greatest lower bound read off the reachability table.
int table_join(const FinitePoset& p, int a, int b) {
    boost::dynamic_bitset<> ub = p.up_set(a) & p.up_set(b);
    for (auto c = ub.find_first(); c != boost::dynamic_bitset<>::npos; c = ub.find_next(c))
        if ((ub & p.up_set(static_cast<int>(c))) == ub) return static_cast<int>(c);
    return -1;
}

int table_meet(const FinitePoset& p, int a, int b) {
    boost::dynamic_bitset<> lb = p.down_set(a) & p.down_set(b);
    for (auto c = lb.find_first(); c != boost::dynamic_bitset<>::npos; c = lb.find_next(c))
        if ((lb & p.down_set(static_cast<int>(c))) == lb) return static_cast<int>(c);
    return -1;
}

}  // namespace

TEST_CASE("eta order agrees with the triple definition") {
    for (int n = 1; n <= 4; ++n) {
        auto all = enumerate_parking_objects(n);
        for (const auto& a : all)
            for (const auto& b : all) CHECK(pp_leq(a, b) == pp_leq_definition(a, b));
    }
    CHECK_THROWS_AS(pp_leq(ParkingObject::minimum(2), ParkingObject::minimum(3)), std::invalid_argument);
}

TEST_CASE("basic order properties") {
    auto all = enumerate_parking_objects(3);
    for (const auto& a : all) {
        CHECK(pp_leq(ParkingObject::minimum(3), a));
        CHECK(pp_leq(a, a));
        for (const auto& b : all)
            if (a != b) CHECK_FALSE((pp_leq(a, b) && pp_leq(b, a)));
    }
    for (int n = 1; n <= 5; ++n) {
        auto elems = enumerate_parking_objects(n);
        for (const auto& s : all_permutations(n)) {
            ParkingObject top = ParkingObject::maximal(s);
            int below = 0;
            for (const auto& x : elems)
                if (pp_leq(x, top)) ++below;
            CHECK(below == catalan(n));
        }
    }
}

TEST_CASE("upper covers") {
    auto all3 = enumerate_parking_objects(3);
    CHECK(pp_upper_covers(ParkingObject::minimum(3)).size() == 9);
    for (const auto& s : all_permutations(3)) CHECK(pp_upper_covers(ParkingObject::maximal(s)).empty());
    for (int n = 1; n <= 4; ++n) {
        auto all = enumerate_parking_objects(n);
        for (const auto& x : all) {
            auto covers = pp_upper_covers(x);
            CHECK(covers == brute_covers(all, x));
            for (const auto& y : covers) CHECK(y.rank() == x.rank() + 1);
        }
    }
}

TEST_CASE("tree surgery on the covering example") {
    ParkingTree t = node({1, 2, 5, 6}, {leaf(), node({3, 4}, {leaf(), leaf()}), leaf(), leaf()});
    REQUIRE(validate_tree(t, 6));
    auto covers = tree_upper_covers(t);
    const std::vector<ParkingTree> printed{
        node({1, 5, 6}, {node({2}, {node({3, 4}, {leaf(), leaf()})}), leaf(), leaf()}),
        node({1, 5, 6}, {leaf(), node({3, 4}, {leaf(), node({2}, {leaf()})}), leaf()}),
        node({1, 5, 6}, {leaf(), node({3, 4}, {leaf(), leaf()}), node({2}, {leaf()})}),
    };
    for (const auto& p : printed) {
        CHECK(validate_tree(p, 6));
        CHECK(std::find(covers.begin(), covers.end(), p) != covers.end());
    }
    // A root label of size a contributes a(2^(a-1) - 1) covers; {3,4} contributes 2.
    CHECK(covers.size() == 4 * 7 + 2);
}

TEST_CASE("join and meet") {
    ParkingObject m = ParkingObject::minimum(3);
    CHECK(pp_join(m, m) == HatElement(m));
    CHECK_FALSE(pp_join(ParkingObject::maximal(Permutation({1, 2, 3})), ParkingObject::maximal(Permutation({2, 1, 3}))));
    CHECK(pp_meet(std::nullopt, m) == HatElement(m));

    // Against least upper bounds and greatest lower bounds in the bounded poset.
    for (int n = 1; n <= 4; ++n) {
        PPPoset pp = build_pp_poset(n);
        FinitePoset hat = pp.poset.with_top();
        auto h = hat_elements(pp);
        for (std::size_t a = 0; a < h.size(); ++a)
            for (std::size_t b = a; b < h.size(); ++b) {
                CHECK(hat_index(pp, pp_join(h[a], h[b])) == table_join(hat, static_cast<int>(a), static_cast<int>(b)));
                if (n <= 3 || (a * 31 + b) % 17 == 0)
                    CHECK(hat_index(pp, pp_meet(h[a], h[b])) == table_meet(hat, static_cast<int>(a), static_cast<int>(b)));
            }
    }
}

TEST_CASE("lattice axioms") {
    auto check_triple = [](const HatElement& a, const HatElement& b, const HatElement& c) {
        CHECK(pp_join(a, pp_join(b, c)) == pp_join(pp_join(a, b), c));
        CHECK(pp_meet(a, pp_meet(b, c)) == pp_meet(pp_meet(a, b), c));
        CHECK(pp_join(a, b) == pp_join(b, a));
        CHECK(pp_meet(a, b) == pp_meet(b, a));
        CHECK(pp_join(a, pp_meet(a, b)) == a);
        CHECK(pp_meet(a, pp_join(a, b)) == a);
        CHECK(hat_leq(a, pp_join(a, b)));
        CHECK(hat_leq(pp_meet(a, b), a));
    };
    for (int n = 1; n <= 3; ++n) {
        std::vector<HatElement> h;
        for (const auto& x : enumerate_parking_objects(n)) h.emplace_back(x);
        h.emplace_back(std::nullopt);
        for (const auto& a : h)
            for (const auto& b : h)
                for (const auto& c : h) check_triple(a, b, c);
    }
    std::vector<HatElement> h4;
    for (const auto& x : enumerate_parking_objects(4)) h4.emplace_back(x);
    h4.emplace_back(std::nullopt);
    std::mt19937 rng(20240601);
    std::uniform_int_distribution<std::size_t> pick(0, h4.size() - 1);
    for (int trial = 0; trial < 400; ++trial) check_triple(h4[pick(rng)], h4[pick(rng)], h4[pick(rng)]);
}

TEST_CASE("order ideals and filters factor") {
    for (int n = 1; n <= 5; ++n) {
        PPPoset pp = build_pp_poset(n);
        for (std::size_t i = 0; i < pp.elements.size(); ++i) {
            const ParkingObject& phi = pp.elements[i];
            const int id = static_cast<int>(i);
            Integer ideal = 1;
            const NoncrossingPartition k = kreweras(phi.pi());
            for (const auto& b : k.blocks()) ideal *= catalan(static_cast<int>(b.size()));
            CHECK(Integer(pp.poset.down_set(id).count()) == ideal);
            Integer filter = 1;
            for (const auto& b : phi.pi().blocks()) {
                const int s = static_cast<int>(b.size());
                filter *= power(s + 1, s - 1);
            }
            CHECK(Integer(pp.poset.up_set(id).count()) == filter);
        }
    }
}

TEST_CASE("unique descent along the partition") {
    for (int n = 1; n <= 4; ++n) {
        auto all = enumerate_parking_objects(n);
        for (const auto& phi : all) {
            auto ideal = pp_ideal(phi);
            for (const auto& p : enumerate_noncrossing(n)) {
                if (!nc_leq(p, phi.pi())) continue;
                int found = 0;
                for (const auto& x : all)
                    if (x.pi() == p && pp_leq(x, phi)) ++found;
                CHECK(found == 1);
                ParkingObject d = pp_descend(phi, p);
                CHECK(d.pi() == p);
                CHECK(pp_leq(d, phi));
                CHECK(std::binary_search(ideal.begin(), ideal.end(), d));
            }
        }
    }
    CHECK_THROWS_AS(pp_descend(ParkingObject::minimum(3), NoncrossingPartition(3, {{1, 2}, {3}})), std::invalid_argument);
}

TEST_CASE("the action preserves the order") {
    for (int n = 1; n <= 4; ++n) {
        PPPoset pp = build_pp_poset(n);
        const int size = static_cast<int>(pp.elements.size());
        for (const auto& s : all_permutations(n)) {
            std::vector<int> image;
            for (const auto& x : pp.elements) image.push_back(pp.id(act(s, x)));
            for (int a = 0; a < size; ++a)
                for (int b = 0; b < size; ++b)
                    CHECK(pp.poset.leq(a, b) ==
                          pp.poset.leq(image[static_cast<std::size_t>(a)], image[static_cast<std::size_t>(b)]));
        }
    }
}

TEST_CASE("whole poset") {
    for (int n = 1; n <= 5; ++n) {
        PPPoset pp = build_pp_poset(n);
        CHECK(Integer(pp.elements.size()) == power(n + 1, n - 1));
        CHECK(pp.poset.is_graded());
        CHECK(Integer(pp.poset.maximal_elements().size()) == factorial(n));
        REQUIRE(pp.poset.bottom());
        CHECK(pp.elements[static_cast<std::size_t>(*pp.poset.bottom())] == ParkingObject::minimum(n));
        auto sizes = pp.poset.rank_sizes();
        REQUIRE(static_cast<int>(sizes.size()) == n);
        for (int l = 0; l < n; ++l)
            CHECK(Integer(sizes[static_cast<std::size_t>(l)]) == factorial(l) * binomial(n, l) * stirling2(n, l + 1));
        for (std::size_t i = 0; i < pp.elements.size(); ++i) {
            CHECK(pp.poset.rank(static_cast<int>(i)) == pp.elements[i].rank());
            CHECK(pp.poset.label(static_cast<int>(i)) == word_str(pp.elements[i].word()));
        }
        if (n <= 4)
            for (std::size_t a = 0; a < pp.elements.size(); ++a)
                for (std::size_t b = 0; b < pp.elements.size(); ++b)
                    CHECK(pp.poset.leq(static_cast<int>(a), static_cast<int>(b)) == pp_leq(pp.elements[a], pp.elements[b]));
    }
    CHECK(build_pp_poset(3).poset.rank_sizes() == std::vector<int>{1, 9, 6});
    CHECK(build_pp_poset(4).poset.rank_sizes() == std::vector<int>{1, 28, 72, 24});
    PPPoset v = build_pp_poset(2);
    CHECK(v.elements.size() == 3);
    CHECK(v.poset.minimal_elements().size() == 1);
    CHECK(v.poset.maximal_elements().size() == 2);
    CHECK_THROWS_AS(build_pp_poset(0), std::out_of_range);
    CHECK_THROWS_AS(build_pp_poset(6), std::out_of_range);
}

TEST_CASE("generic poset toolkit") {
    FinitePoset chain = FinitePoset::from_covers({{1}, {}});
    CHECK(mobius(chain, 0, 1) == -1);
    CHECK(mobius(chain, 1, 0) == 0);
    CHECK(zeta_count(chain, 3) == 4);
    CHECK_THROWS_AS(FinitePoset::from_covers({{1}, {0}}), std::invalid_argument);
    CHECK_THROWS_AS(FinitePoset::from_covers({{1, 2}, {2}, {}}), std::invalid_argument);

    FinitePoset two_tops = FinitePoset::from_covers({{}, {}});
    CHECK_THROWS_AS(whitney(two_tops, WhitneyKind::first, 0), std::invalid_argument);

    // Boolean lattice on two atoms: mu = 1, -1, -1, 1 and 2 maximal chains.
    FinitePoset square = FinitePoset::from_leq(4, [](int a, int b) { return (a & b) == a; });
    CHECK(mobius(square, 0, 3) == 1);
    CHECK(maximal_chains(square).size() == 2);
    CHECK(whitney(square, WhitneyKind::first, 1) == -2);
    CHECK(whitney(square, WhitneyKind::second, 1) == 2);
    CHECK(square.interval(1, 3).size() == 2);

    for (int n = 1; n <= 4; ++n) {
        PPPoset pp = build_pp_poset(n);
        FinitePoset hat = pp.poset.with_top();
        Integer expected = power(n - 1, n - 1);
        if (n % 2) expected = -expected;
        CHECK(mobius(hat, *hat.bottom(), *hat.top()) == expected);
        for (int k = 1; k <= 3; ++k) CHECK(zeta_count(pp.poset, k) == power(n * k + 1, n - 1));
        if (n >= 2)
            CHECK(Integer(maximal_chains(pp.poset).size()) == factorial(n) * power(n, n - 2));
        // An interval below a maximal element is a copy of NC_n.
        int top = pp.poset.maximal_elements().front();
        FinitePoset iv = pp.poset.interval(*pp.poset.bottom(), top);
        CHECK(Integer(iv.size()) == catalan(n));
    }
    FinitePoset hat3 = build_pp_poset(3).poset.with_top();
    CHECK(mobius(hat3, *hat3.bottom(), *hat3.top()) == -4);
    CHECK(zeta_count(build_pp_poset(3).poset, 2) == 49);
}

TEST_CASE("permutahedron faces and right combs") {
    CHECK(permutahedron_face_poset(1).elements.size() == 1);
    CHECK(permutahedron_face_poset(3).elements.size() == 13);
    CHECK(permutahedron_face_poset(4).elements.size() == 75);
    for (int n = 1; n <= 4; ++n) {
        RightCombComparison r = right_comb_subposet(n);
        CHECK(r.combs.size() == r.faces.elements.size());
        CHECK(r.isomorphic);
        for (int i = 0; i < r.faces.poset.size(); ++i)
            CHECK(r.faces.poset.rank(i) == r.comb_poset.rank(r.witness[static_cast<std::size_t>(i)]));
    }
    CHECK_THROWS_AS(permutahedron_face_poset(6), std::out_of_range);
}
