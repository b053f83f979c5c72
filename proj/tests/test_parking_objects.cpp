#include "doctest.h"

#include <algorithm>
#include <set>

#include "ncpark/numbers.hpp"
#include "ncpark/parking.hpp"

using namespace ncpark;

namespace {

ParkingTree node(std::vector<int> label, std::vector<ParkingTree> children) { return {std::move(label), std::move(children)}; }
ParkingTree leaf() { return ParkingTree::leaf(); }

// The element used as the running example: pi = {1,5,6,8}{2,3}{4}{7} with
// images {2,3,4,7}, {5,8}, {1}, {6}.
NC2Triple running_example_triple() {
    NoncrossingPartition pi(8, {{1, 5, 6, 8}, {2, 3}, {4}, {7}});
    SetPartition rho(8, {{2, 3, 4, 7}, {5, 8}, {1}, {6}});
    std::vector<int> lam;
    for (int first : {2, 5, 1, 6}) lam.push_back(rho.block_index(first));
    return {pi, rho, lam};
}

// Brute-force parking condition over all words.
bool parks(const ParkingWord& w) {
    const int n = static_cast<int>(w.size());
    for (int j = 1; j <= n; ++j)
        if (std::count_if(w.begin(), w.end(), [j](int x) { return x <= j; }) < j) return false;
    return true;
}

}  // namespace

TEST_CASE("running example in every representation") {
    NC2Triple t = running_example_triple();
    CHECK(validate_triple(t));
    CHECK(word_str(triple_to_word(t)) == "41112712");
    ParkingObject p = triple_to_pair(t);
    CHECK(p.sigma().str() == "25813467");
    ParkingTree expected = node({2, 3, 4, 7}, {node({5, 8}, {leaf(), node({1}, {leaf()})}), leaf(), node({6}, {leaf()}), leaf()});
    CHECK(pair_to_tree(p) == expected);
    CHECK(word_to_tree(triple_to_word(t)) == expected);
    CHECK(word_to_triple(triple_to_word(t)) == t);
    auto e = eta(p);
    CHECK(e.size() == 8);
    for (const auto& b : p.pi().blocks()) CHECK(std::count(e.begin(), e.end(), b) == static_cast<long>(b.size()));
    CHECK(e[0] == Block{4});
    CHECK(e[1] == Block{1, 5, 6, 8});
}

TEST_CASE("word 1325271 as composition and tree") {
    ParkingWord w{1, 3, 2, 5, 2, 7, 1};
    auto c = word_to_composition(w, 8);
    std::vector<std::vector<int>> expected{{1, 7}, {3, 5}, {2}, {}, {4}, {}, {6}, {}};
    CHECK(c == expected);
    ParkingTree t = word_to_tree(w);
    CHECK(t.str() == "{1,7}[{3,5}[{2}[.],{4}[.]],{6}[.]]");
    CHECK(tree_to_word(t) == w);
    CHECK(pair_to_tree(triple_to_pair(word_to_triple(w))) == t);
}

TEST_CASE("twelve-point element in four representations") {
    NoncrossingPartition pi(12, {{1, 5, 6, 8}, {2, 4}, {3}, {7}, {9, 10, 12}, {11}});
    Permutation sigma({2, 6, 5, 12, 9, 10, 7, 11, 3, 4, 1, 8});
    ParkingObject p(pi, sigma);
    ParkingWord w{11, 1, 9, 9, 3, 2, 7, 9, 1, 1, 1, 2};
    ParkingTree t = node({2, 9, 10, 11}, {node({6, 12}, {node({5}, {leaf()}), leaf()}), leaf(), node({7}, {leaf()}),
                                          node({3, 4, 8}, {leaf(), node({1}, {leaf()}), leaf()})});
    CHECK(validate_word(w));
    CHECK(validate_tree(t, 12));
    CHECK(p.word() == w);
    CHECK(p.tree() == t);
    CHECK(word_to_tree(w) == t);
    CHECK(tree_to_pair(t) == p);
    CHECK(triple_to_pair(word_to_triple(w)) == p);
    // The word as printed in the figure does not park: it has no letter 11 slot.
    ParkingWord printed{12, 1, 10, 10, 3, 2, 7, 10, 1, 1, 1, 2};
    CHECK_FALSE(validate_word(printed));
}

TEST_CASE("validation diagnostics") {
    CHECK(validate_word({1, 1, 1}));
    auto bad = validate_word({1, 3, 3});
    CHECK_FALSE(bad);
    CHECK(bad.diagnostic.find("word") != std::string::npos);
    auto arity = validate_tree(node({1, 2}, {leaf(), leaf(), leaf()}), 2);
    CHECK_FALSE(arity);
    CHECK(arity.diagnostic.find("arity") != std::string::npos);
    CHECK_FALSE(validate_pair(NoncrossingPartition::zero(2), Permutation({2, 1})));
    CHECK_FALSE(validate(AnyRepresentation{ParkingWord{2, 2}}));
    CHECK_THROWS_AS(ParkingObject(NoncrossingPartition::zero(2), Permutation({2, 1})), std::invalid_argument);
    CHECK_THROWS_AS(word_to_tree({2, 2}), std::invalid_argument);
}

TEST_CASE("cardinality of every representation") {
    for (int n = 1; n <= 5; ++n) {
        const Integer expected = power(n + 1, n - 1);
        CHECK(Integer(enumerate_parking_objects(n).size()) == expected);
        CHECK(Integer(enumerate_triples(n).size()) == expected);
        CHECK(Integer(enumerate_parking_words(n).size()) == expected);
        CHECK(Integer(enumerate_parking_trees(n).size()) == expected);
        // Oracle: every word over {1..n} filtered by the parking condition.
        std::size_t brute = 0;
        std::vector<int> w(static_cast<std::size_t>(n), 1);
        while (true) {
            if (parks(w)) ++brute;
            std::size_t i = 0;
            while (i < w.size() && ++w[i] > n) w[i++] = 1;
            if (i == w.size()) break;
        }
        CHECK(Integer(brute) == expected);
    }
}

TEST_CASE("conversions compose to the identity") {
    const std::vector<Representation> reps{Representation::triple, Representation::pair, Representation::word,
                                           Representation::tree};
    for (int n = 1; n <= 4; ++n) {
        std::set<ParkingWord> words;
        std::set<ParkingTree> trees;
        for (const auto& p : enumerate_parking_objects(n)) {
            AnyRepresentation x = p;
            for (auto a : reps) {
                AnyRepresentation xa = convert(x, a);
                for (auto b : reps) CHECK(to_pair(convert(xa, b)) == p);
            }
            words.insert(std::get<ParkingWord>(convert(x, Representation::word)));
            trees.insert(std::get<ParkingTree>(convert(x, Representation::tree)));
        }
        CHECK(words.size() == enumerate_parking_words(n).size());
        CHECK(trees.size() == enumerate_parking_trees(n).size());
    }
}

TEST_CASE("symmetric group action") {
    Permutation s = Permutation::transposition(3, 1, 2);
    CHECK(act(s, ParkingWord{1, 1, 2}) == ParkingWord{1, 1, 2});
    CHECK(act(s, ParkingWord{1, 2, 1}) == ParkingWord{2, 1, 1});
    for (const auto& p : enumerate_parking_objects(3)) CHECK(act(Permutation::identity(3), p) == p);

    const std::vector<Representation> reps{Representation::triple, Representation::pair, Representation::word,
                                           Representation::tree};
    for (int n = 1; n <= 4; ++n) {
        auto perms = all_permutations(n);
        for (const auto& p : enumerate_parking_objects(n)) {
            NC2Triple t = p.triple();
            ParkingWord w = p.word();
            ParkingTree tr = p.tree();
            for (const auto& s2 : perms) {
                ParkingObject moved = act(s2, p);
                CHECK(triple_to_pair(act(s2, t)) == moved);
                CHECK(triple_to_pair(word_to_triple(act(s2, w))) == moved);
                CHECK(tree_to_pair(act(s2, tr)) == moved);
            }
        }
        // Associativity on words.
        for (const auto& w : enumerate_parking_words(n))
            for (const auto& a : perms)
                for (const auto& b : perms) CHECK(act(a * b, w) == act(a, act(b, w)));
    }
    // Orbit of a triple (pi, pi, id): its size is n! divided by the permutations fixing every block.
    for (const auto& pi : enumerate_noncrossing(3)) {
        std::vector<int> lam;
        for (int b = 0; b < pi.block_count(); ++b) lam.push_back(b);
        NC2Triple t{pi, pi, lam};
        std::set<ParkingObject> orbit;
        int stabilizer = 0;
        for (const auto& s2 : all_permutations(3)) {
            orbit.insert(triple_to_pair(act(s2, t)));
            bool fixes_blocks = true;
            for (const auto& b : pi.blocks()) {
                Block moved = b;
                for (int& v : moved) v = s2(v);
                std::sort(moved.begin(), moved.end());
                if (moved != b) fixes_blocks = false;
            }
            if (fixes_blocks) ++stabilizer;
        }
        CHECK(static_cast<int>(orbit.size()) * stabilizer == 6);
        if (pi == NoncrossingPartition::zero(3)) CHECK(orbit.size() == 1);
    }
    CHECK_THROWS_AS(act(Permutation::identity(2), ParkingWord{1, 1, 1}), std::invalid_argument);
}

TEST_CASE("fixed points of the action") {
    for (int n = 1; n <= 5; ++n) {
        auto words = enumerate_parking_words(n);
        for (const auto& type : integer_partitions(n)) {
            Permutation s = permutation_of_cycle_type(type);
            long fixed = std::count_if(words.begin(), words.end(), [&](const ParkingWord& w) { return act(s, w) == w; });
            CHECK(Integer(fixed) == power(n + 1, s.cycle_count() - 1));
        }
    }
}

TEST_CASE("eta sequences") {
    for (int n = 1; n <= 4; ++n) {
        auto mn = ParkingObject::minimum(n);
        for (const auto& b : eta(mn)) CHECK(b == NoncrossingPartition::zero(n).block(0));
        for (const auto& s : all_permutations(n)) {
            auto e = eta(ParkingObject::maximal(s));
            Permutation inv = s.inverse();
            for (int k = 1; k <= n; ++k) CHECK(e[static_cast<std::size_t>(k - 1)] == Block{inv(k)});
        }
        for (const auto& p : enumerate_parking_objects(n)) {
            auto e = eta(p);
            for (const auto& b : p.pi().blocks()) CHECK(std::count(e.begin(), e.end(), b) == static_cast<long>(b.size()));
            CHECK(from_eta(p.pi(), eta_indices(p)) == p);
        }
    }
}

TEST_CASE("prime elements") {
    std::set<ParkingWord> primes3;
    for (const auto& p : enumerate_parking_objects(3))
        if (is_prime(p)) primes3.insert(p.word());
    CHECK(primes3 == std::set<ParkingWord>{{1, 1, 1}, {2, 1, 1}, {1, 2, 1}, {1, 1, 2}});
    for (int n = 1; n <= 5; ++n) {
        int count = 0;
        for (const auto& p : enumerate_parking_objects(n)) {
            bool a = is_prime(p);
            CHECK(a == is_prime_word(p.word()));
            CHECK(a == is_prime_tree(p.tree()));
            count += a;
        }
        if (n >= 2) CHECK(Integer(count) == power(n - 1, n - 1));
        if (n >= 2)
            for (const auto& s : all_permutations(n)) CHECK_FALSE(is_prime(ParkingObject::maximal(s)));
    }
    CHECK(power(3, 3) == 27);
}

TEST_CASE("orbit representatives") {
    CHECK(orbit_representative_check({1, 1, 1}));
    CHECK(orbit_representative_check({1, 2, 3}));
    for (int n = 1; n <= 5; ++n) {
        auto words = enumerate_parking_words(n);
        long reps = std::count_if(words.begin(), words.end(), orbit_representative_check);
        CHECK(Integer(reps) == catalan(n));
        // Each representative is the word of some (pi, pi, id).
        std::set<ParkingWord> from_partitions;
        for (const auto& pi : enumerate_noncrossing(n)) {
            std::vector<int> lam;
            for (int b = 0; b < pi.block_count(); ++b) lam.push_back(b);
            from_partitions.insert(triple_to_word({pi, pi, lam}));
        }
        for (const auto& w : words) CHECK(orbit_representative_check(w) == (from_partitions.count(w) == 1));
    }
}

TEST_CASE("nilpotent partial functions") {
    CHECK(tree_to_nilpotent(node({1, 2}, {leaf(), leaf()}), 2) == std::vector<int>{0, 0});
    ParkingTree t = word_to_tree({1, 1, 2});
    CHECK(t == node({1, 2}, {node({3}, {leaf()}), leaf()}));
    CHECK(tree_to_nilpotent(t, 3) == std::vector<int>{0, 0, 1});
    for (int n = 1; n <= 4; ++n)
        for (const auto& tr : enumerate_parking_trees(n)) {
            auto f = tree_to_nilpotent(tr, n);
            CHECK(nilpotent_to_tree(f) == tr);
            std::set<int> image(f.begin(), f.end());
            image.erase(0);
            CHECK(static_cast<int>(image.size()) + 1 == tr.internal_count());
        }
    CHECK_THROWS_AS(nilpotent_to_tree({2, 1}), std::invalid_argument);
}

TEST_CASE("right combs and set compositions") {
    CHECK(right_comb_to_composition(node({1, 2, 3}, {leaf(), leaf(), leaf()})) == std::vector<std::vector<int>>{{1, 2, 3}});
    std::vector<std::vector<int>> c{{2}, {1, 3}};
    ParkingTree comb = composition_to_right_comb(c, 3);
    CHECK(is_right_comb(comb));
    CHECK(right_comb_to_composition(comb) == c);
    for (int n = 1; n <= 4; ++n) {
        std::set<std::vector<std::vector<int>>> seen;
        for (const auto& tr : enumerate_parking_trees(n))
            if (is_right_comb(tr)) {
                auto comp = right_comb_to_composition(tr);
                CHECK(composition_to_right_comb(comp, n) == tr);
                seen.insert(comp);
            }
        CHECK(seen.size() == enumerate_set_compositions(n).size());
    }
    CHECK(enumerate_set_compositions(3).size() == 13);
    CHECK_THROWS_AS(right_comb_to_composition(word_to_tree({1, 1, 2})), std::invalid_argument);
}
