#include "ncpark/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "ncpark/enumeration.hpp"
#include "ncpark/kdivisible.hpp"
#include "ncpark/pp_poset.hpp"
#include "ncpark/series.hpp"
#include "ncpark/shelling.hpp"
#include "ncpark/topology.hpp"

namespace ncpark {

namespace {

// Collects the first failure and a short account of what was checked.
class Checker {
public:
    void expect(bool ok, const std::string& what) {
        ++checks_;
        if (!ok && failure_.empty()) failure_ = what;
    }
    template <class A, class B>
    void equal(const A& got, const B& want, const std::string& what) {
        ++checks_;
        if (!(got == want) && failure_.empty()) {
            std::ostringstream os;
            os << what << ": got " << got << ", expected " << want;
            failure_ = os.str();
        }
    }
    void note(const std::string& s) { notes_ += (notes_.empty() ? "" : "; ") + s; }
    bool ok() const { return failure_.empty(); }
    std::string detail() const {
        if (!ok()) return failure_;
        return notes_ + (notes_.empty() ? "" : "; ") + std::to_string(checks_) + " checks";
    }

private:
    long long checks_ = 0;
    std::string failure_;
    std::string notes_;
};

std::string range(int lo, int hi) {
    if (hi < lo) return "none";
    return lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi);
}

std::string nk(int n, int k) { return "n=" + std::to_string(n) + " k=" + std::to_string(k); }

int sign_of(int e) { return e % 2 == 0 ? 1 : -1; }

// l! binom(m, l) S_2(n, l+1), evaluated from the three factors.
Integer chain_formula(int n, int m, int l) { return factorial(l) * binomial(Integer(m), l) * stirling2(n, l + 1); }

double elapsed(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

template <class T>
bool strictly_sorted(const std::vector<T>& v) {
    return std::adjacent_find(v.begin(), v.end(), [](const T& a, const T& b) { return !(a < b); }) == v.end();
}

// ---------------------------------------------------------------- criteria

void cardinality(Checker& c, int cap) {
    auto start = std::chrono::steady_clock::now();
    const int top = std::min(6, cap);
    for (int n = 2; n <= top; ++n) {
        const Integer want = power(Integer(n + 1), n - 1);
        auto pairs = enumerate_parking_objects(n);
        auto triples = enumerate_triples(n);
        auto words = enumerate_parking_words(n);
        auto trees = enumerate_parking_trees(n);
        const std::string at = "n=" + std::to_string(n);
        c.equal(Integer(pairs.size()), want, "pairs at " + at);
        c.equal(Integer(triples.size()), want, "triples at " + at);
        c.equal(Integer(words.size()), want, "words at " + at);
        c.equal(Integer(trees.size()), want, "trees at " + at);
        c.expect(strictly_sorted(pairs) && strictly_sorted(words) && strictly_sorted(trees), "repeated element at " + at);
        bool valid = true;
        for (const auto& x : pairs) valid = valid && validate(AnyRepresentation(x)).ok;
        for (const auto& x : triples) valid = valid && validate(AnyRepresentation(x)).ok;
        for (const auto& x : words) valid = valid && validate(AnyRepresentation(x)).ok;
        for (const auto& x : trees) valid = valid && validate(AnyRepresentation(x)).ok;
        c.expect(valid, "invalid element at " + at);
    }
    const double s = elapsed(start);
    c.expect(s < 60, "enumeration took longer than 60 s");
    c.note("n=" + range(2, top) + " in four representations");
}

void whitney_second(Checker& c, int cap) {
    const int top = std::min(5, cap);
    for (int n = 1; n <= top; ++n) {
        auto sizes = build_pp_poset(n).poset.rank_sizes();
        c.equal(static_cast<int>(sizes.size()), n, "number of ranks at n=" + std::to_string(n));
        for (int l = 0; l < n && l < static_cast<int>(sizes.size()); ++l)
            c.equal(Integer(sizes[static_cast<std::size_t>(l)]), chain_formula(n, n, l),
                    "rank " + std::to_string(l) + " at n=" + std::to_string(n));
    }
    c.note("n=" + range(1, top));
}

void chain_formula_check(Checker& c, int cap) {
    const int top = std::min(4, cap);
    for (int n = 1; n <= top; ++n)
        for (int k = 1; k <= 3; ++k) {
            auto counts = chain_count_oracle(n, k);
            Integer sum = 0;
            for (int l = 0; l < n; ++l) {
                c.equal(counts[static_cast<std::size_t>(l)], chain_formula(n, k * n, l),
                        "top rank " + std::to_string(l) + " at " + nk(n, k));
                sum += counts[static_cast<std::size_t>(l)];
            }
            c.equal(sum, power(Integer(n * k + 1), n - 1), "total at " + nk(n, k));
        }
    c.note("n=" + range(1, top) + ", k=1..3");
}

void whitney_first(Checker& c, int cap) {
    const int top = std::min(5, cap);
    for (int n = 1; n <= top; ++n) {
        auto w = whitney_first_oracle(n);
        for (int l = 0; l < n; ++l)
            c.equal(w[static_cast<std::size_t>(l)], sign_of(l) * chain_formula(n, n + l - 1, l),
                    "w_" + std::to_string(l) + " at n=" + std::to_string(n));
    }
    for (int n = 2; n <= top; ++n) {
        FinitePoset hat = build_pp_poset(n).poset.with_top();
        c.equal(mobius(hat, *hat.bottom(), *hat.top()), sign_of(n) * power(Integer(n - 1), n - 1),
                "mu of the bounded poset at n=" + std::to_string(n));
    }
    c.note("n=" + range(1, top));
}

void shelling(Checker& c, int cap) {
    auto start = std::chrono::steady_clock::now();
    const int top = std::min(4, cap);
    const long long chains[] = {0, 1, 2, 18, 384};
    for (int n = 1; n <= top; ++n) {
        ShellingReport r = verify_shelling(n, false);
        c.expect(r.passed(), "shelling at n=" + std::to_string(n) + ": " + r.counterexample);
        c.equal(r.chains, chains[n], "maximal chains at n=" + std::to_string(n));
        KeyLemmaReport k = verify_key_lemma(n);
        c.expect(k.passed(), "key lemma at n=" + std::to_string(n) + ": " + k.counterexample);
        for (const auto& l : verify_support_lemmas(n))
            c.expect(l.ok(), l.name + " at n=" + std::to_string(n) + ": " + l.counterexample);
    }
    c.expect(recursive_atom_counterexample().holds(), "six-point configuration");
    c.expect(elapsed(start) < 600, "shelling suite took longer than 10 min");
    c.note("n=" + range(1, top));
}

void homology(Checker& c, int cap) {
    auto start = std::chrono::steady_clock::now();
    const int top = std::min(4, cap);
    for (int n = 3; n <= top; ++n) {
        PosetHomology h = poset_homology(build_pp_poset(n).poset);
        c.expect(boundary_squared_zero(h.chains), "boundary squared at n=" + std::to_string(n));
        for (int m = -1; m < n - 1; ++m) {
            const Integer want = m == n - 2 ? power(Integer(n - 1), n - 1) : Integer(0);
            c.equal(Integer(h.ranks[static_cast<std::size_t>(m + 1)]), want,
                    "rank in degree " + std::to_string(m) + " at n=" + std::to_string(n));
        }
    }
    c.expect(elapsed(start) < 300, "homology took longer than 5 min");
    c.note("n=" + range(3, top));
}

void characters(Checker& c, int cap) {
    const int top = std::min(4, cap);
    for (int n = 3; n <= top; ++n) {
        PPPoset pp = build_pp_poset(n);
        PosetHomology h = poset_homology(pp.poset);
        for (const auto& type : integer_partitions(n)) {
            Permutation s = permutation_of_cycle_type(type);
            const int z = s.cycle_count();
            Integer chi = homology_character(h, pp_action_map(pp, s));
            c.equal(chi, sign_of(n - z) * power(Integer(n - 1), z - 1), "Lefschetz character at n=" + std::to_string(n));
            c.equal(chi, sign_of(n - z) * character_oracle(CharacterKind::park_prime, 1, s),
                    "sign times prime fixed points at n=" + std::to_string(n));
        }
    }
    for (int n = 1; n <= top; ++n)
        for (const auto& type : integer_partitions(n)) {
            Permutation s = permutation_of_cycle_type(type);
            const int z = s.cycle_count();
            for (int k = 1; k <= 3; ++k)
                c.equal(character_oracle(CharacterKind::park_k, k, s), power(Integer(k * n + 1), z - 1),
                        "fixed k-multichains at " + nk(n, k));
            c.equal(character_oracle(CharacterKind::park_prime, 1, s), power(Integer(n - 1), z - 1),
                    "fixed primes at n=" + std::to_string(n));
        }
    if (top >= 3)
        for (int k = 1; k <= 3; ++k) {
            PPKPoset p = build_pp_k(3, k);
            for (const auto& type : integer_partitions(3)) {
                Permutation s = permutation_of_cycle_type(type);
                const Integer want = power(Integer(3 * k - 1), s.cycle_count() - 1);
                c.equal(k_prime_fixed_count(p, PrimeReading::smallest, s), want, "fixed prime k-chains at " + nk(3, k));
                c.equal(character_oracle(CharacterKind::park_prime_k, k, s), want, "prime k-chain oracle at " + nk(3, k));
            }
        }
    c.note("characters at n=" + range(3, top) + ", fixed points at n=" + range(1, top) + ", k=1..3");
}

void series(Checker& c, int cap) {
    const int top = std::min(6, cap);
    for (int k = 1; k <= 3; ++k) {
        TruncatedSeries s = chain_series(k, top, top);
        for (int n = 1; n <= top; ++n) {
            std::vector<Integer> brute;
            if (n <= 4) brute = chain_count_oracle(n, k);
            for (int l = 0; l <= top; ++l) {
                const Integer want = l < n ? chain_formula(n, k * n, l) : Integer(0);
                c.equal(s.exponential(n, l), Rational(want), "coefficient (" + std::to_string(n) + "," + std::to_string(l) + ")");
                if (l < n && !brute.empty())
                    c.equal(s.exponential(n, l), Rational(brute[static_cast<std::size_t>(l)]), "brute-force chains at " + nk(n, k));
            }
        }
        c.expect(chain_series_by_inversion(k, top, top) == s, "compositional inverse at k=" + std::to_string(k));
        for (int i = 1; i <= k; ++i)
            c.expect(chain_series_recomposed(k, i, top, top) == s,
                     "recomposed equation at k=" + std::to_string(k) + " i=" + std::to_string(i));
    }
    c.note("order " + std::to_string(top) + ", k=1..3");
}

void k_trees(Checker& c, int cap) {
    if (cap < 3) {
        c.note("skipped below n=3");
        return;
    }
    auto trees = enumerate_k_trees(3, 2);
    c.equal(trees.size(), std::size_t{49}, "2-parking trees of size 3");
    for (const auto& t : trees) {
        KTreeCode code = ktree_code(t, 2);
        c.expect(code_to_ktree(code, 2) == t, "tree " + t.str() + " through its code");
    }
    std::size_t codes = 0;
    for (int l = 0; l <= 2; ++l)
        for (const auto& code : enumerate_ktree_codes(3, 2, l)) {
            ++codes;
            c.expect(ktree_code(code_to_ktree(code, 2), 2) == code, "code through its tree");
        }
    c.equal(codes, std::size_t{49}, "codes of size 3");
    auto chains = enumerate_k_multichains(3, 2);
    c.equal(chains.size(), std::size_t{49}, "2-multichains of size 3");
    for (const auto& ch : chains) {
        ParkingTree t = chain_to_ktree(ch);
        c.expect(validate_k_tree(t, 3, 2).ok, "image of a chain is a 2-parking tree");
        c.expect(ktree_to_chain(t, 2) == ch, "chain through its 2-tree");
        for (const auto& s : all_permutations(3)) {
            c.expect(chain_to_ktree(act(s, ch)) == act(s, t), "chain bijection commutes with the action");
            ParkingWord w = k_tree_to_word(t, 2);
            c.expect(k_tree_to_word(act(s, t), 2) == act(s, w), "word bijection commutes with the action");
        }
    }
    c.note("n=3, k=2");
}

void associahedron(Checker& c, int cap) {
    const int top = std::min(7, cap);
    for (int n = 1; n <= top; ++n)
        c.equal(Integer(forest_complex(n).complex.facets().size()), catalan(n - 1), "facets at n=" + std::to_string(n));
    const int fibers = std::min(5, cap);
    for (int n = 1; n <= fibers; ++n) {
        ForestComplex d = forest_complex(n);
        for (const auto& pi : enumerate_noncrossing(n)) {
            Integer want = 1;
            for (const auto& b : pi.blocks()) want *= catalan(static_cast<int>(b.size()) - 1);
            c.equal(forest_fiber_count(d, pi), want, "fiber of " + pi.str());
        }
    }
    const int cl = std::min(4, cap);
    for (int n = 3; n <= cl; ++n) {
        ClusterComplex cc = cluster_complex(n);
        PPPoset pp = build_pp_poset(n);
        auto w = cluster_whitney(cc);
        for (int l = 0; l < n; ++l)
            c.equal(w[static_cast<std::size_t>(l)], sign_of(l) * whitney(pp.poset, WhitneyKind::first, l),
                    "W_" + std::to_string(l) + " at n=" + std::to_string(n));
        auto ranks = homology_ranks(chain_complex(cc.complex));
        auto order = poset_homology(pp.poset).ranks;
        c.expect(ranks == order, "cluster homology against the order complex at n=" + std::to_string(n));
        c.equal(Integer(ranks.back()), power(Integer(n - 1), n - 1), "top homology at n=" + std::to_string(n));
    }
    c.note("facets n=" + range(1, top) + ", fibers n=" + range(1, fibers) + ", cluster n=" + range(3, cl));
}

void k_divisible(Checker& c, int cap) {
    const int top = std::min(4, cap);
    for (int n = 1; n <= top; ++n)
        for (int k = 1; k <= 3; ++k)
            c.equal(Integer(build_pp_k(n, k).poset.size()), power(Integer(n * k + 1), n - 1), "size at " + nk(n, k));
    for (auto [n, k] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}}) {
        if (n > cap) continue;
        DivisibleNC e = edelman_divisible_nc(n, k);
        NCKPoset a = build_nc_k(n, k);
        c.equal(e.poset.size(), a.poset.size(), "k-divisible partitions at " + nk(n, k));
        c.expect(e.poset.rank_sizes() == a.poset.rank_sizes(), "rank counts at " + nk(n, k));
    }
    if (top >= 3) {
        PosetHomology h = poset_homology(build_pp_k(3, 2).poset);
        c.expect(h.ranks == std::vector<int>{0, 0, 25}, "homology of the 2-divisible poset of size 3");
    }
    c.note("n=" + range(1, top) + ", k=1..3");
}

void permutahedron(Checker& c, int cap) {
    const int top = std::min(4, cap);
    const std::size_t faces[] = {0, 1, 3, 13, 75};
    for (int n = 1; n <= top; ++n) {
        RightCombComparison r = right_comb_subposet(n);
        c.equal(r.faces.elements.size(), faces[n], "faces at n=" + std::to_string(n));
        c.expect(r.isomorphic, "right combs at n=" + std::to_string(n));
        c.expect(is_order_isomorphism(r.faces.poset, r.comb_poset, r.witness), "witness at n=" + std::to_string(n));
    }
    c.note("n=" + range(1, top));
}

struct Criterion {
    const char* title;
    void (*run)(Checker&, int);
};

const Criterion kCriteria[kAcceptanceCriteria] = {
    {"cardinality of the 2-partitions", cardinality},
    {"rank census against the closed form", whitney_second},
    {"multichain counts against the closed form", chain_formula_check},
    {"Whitney numbers of the first kind and Moebius number", whitney_first},
    {"shelling and its lemmas", shelling},
    {"homology of the proper part", homology},
    {"characters and fixed points", characters},
    {"generating series", series},
    {"k-parking trees and codes", k_trees},
    {"associahedron side", associahedron},
    {"k-divisible posets", k_divisible},
    {"permutahedron faces", permutahedron},
};

}  // namespace

CriterionResult run_criterion(int id, int n_cap) {
    if (id < 1 || id > kAcceptanceCriteria) throw std::out_of_range("run_criterion: no criterion " + std::to_string(id));
    if (n_cap < 1) throw std::out_of_range("run_criterion: the size cap must be positive");
    const Criterion& crit = kCriteria[id - 1];
    CriterionResult r;
    r.id = id;
    r.title = crit.title;
    auto start = std::chrono::steady_clock::now();
    Checker c;
    try {
        crit.run(c, n_cap);
        r.passed = c.ok();
        r.detail = c.detail();
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = elapsed(start);
    return r;
}

std::string format_result(const CriterionResult& r) {
    char time[32];
    std::snprintf(time, sizeof time, "%.2f s", r.seconds);
    return std::string(r.passed ? "[PASS]" : "[FAIL]") + " criterion " + std::to_string(r.id) + ": " + r.title + " (" +
           r.detail + ", " + time + ")";
}

}  // namespace ncpark
