#include "ncpark/kdivisible.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ncpark/enumeration.hpp"

namespace ncpark {

namespace {

void check_nk(int n, int k, const char* what) {
    if (n < 1 || n > kMaxKDivisibleN || k < 1 || k > kMaxKDivisibleK)
        throw std::out_of_range(std::string(what) + ": requires 1 <= n <= 4 and 1 <= k <= 3");
}

// All weakly increasing sequences of length k along the order of p.
std::vector<std::vector<int>> index_multichains(const FinitePoset& p, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto grow = [&](auto&& self, int last) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int y = 0; y < p.size(); ++y)
            if (last < 0 || p.leq(last, y)) {
                cur.push_back(y);
                self(self, y);
                cur.pop_back();
            }
    };
    grow(grow, -1);
    return out;
}

}  // namespace

NCKPoset build_nc_k(int n, int k) {
    check_nk(n, k, "build_nc_k");
    NCKPoset p;
    p.n = n;
    p.k = k;
    p.nc = build_nc_poset(n);
    for (const auto& ids : index_multichains(p.nc.poset, k)) {
        std::vector<NoncrossingPartition> chain;
        for (int i : ids) chain.push_back(p.nc.elements[static_cast<std::size_t>(i)]);
        p.elements.push_back(std::move(chain));
    }
    std::sort(p.elements.begin(), p.elements.end());
    std::vector<std::string> labels;
    for (std::size_t x = 0; x < p.elements.size(); ++x) {
        const auto& chain = p.elements[x];
        p.index[chain] = static_cast<int>(x);
        std::vector<int> comp;
        NoncrossingPartition prev = NoncrossingPartition::zero(n);
        std::string label;
        for (const auto& pi : chain) {
            comp.push_back(p.nc.id(relative_kreweras(prev, pi)));
            prev = pi;
            label += (label.empty() ? "" : " <= ") + pi.str();
        }
        p.complements.push_back(std::move(comp));
        labels.push_back(std::move(label));
    }
    p.poset = FinitePoset::from_leq(static_cast<int>(p.elements.size()), [&](int a, int b) { return nc_k_leq(p, a, b); },
                                    std::move(labels));
    return p;
}

bool nc_k_leq(const NCKPoset& p, int a, int b) {
    const auto& ka = p.complements[static_cast<std::size_t>(a)];
    const auto& kb = p.complements[static_cast<std::size_t>(b)];
    for (std::size_t i = 0; i < ka.size(); ++i)
        if (!p.nc.poset.leq(kb[i], ka[i])) return false;
    return true;
}

const ParkingObject& PPKPoset::top(int x) const {
    return pp.elements[static_cast<std::size_t>(chains[static_cast<std::size_t>(x)].back())];
}

std::vector<ParkingObject> PPKPoset::chain(int x) const {
    std::vector<ParkingObject> out;
    for (int i : chains[static_cast<std::size_t>(x)]) out.push_back(pp.elements[static_cast<std::size_t>(i)]);
    return out;
}

PPKPoset build_pp_k(int n, int k) {
    check_nk(n, k, "build_pp_k");
    PPKPoset p;
    p.n = n;
    p.k = k;
    p.pp = build_pp_poset(n);
    p.nck = build_nc_k(n, k);
    p.chains = index_multichains(p.pp.poset, k);
    std::sort(p.chains.begin(), p.chains.end());
    std::vector<std::string> labels;
    for (std::size_t x = 0; x < p.chains.size(); ++x) {
        p.index[p.chains[x]] = static_cast<int>(x);
        std::vector<NoncrossingPartition> pis;
        std::string label;
        for (int i : p.chains[x]) {
            pis.push_back(p.pp.elements[static_cast<std::size_t>(i)].pi());
            label += (label.empty() ? "" : " <= ") + p.pp.poset.label(i);
        }
        p.projection.push_back(p.nck.id(pis));
        labels.push_back(std::move(label));
    }
    auto leq = [&](int a, int b) {
        return p.nck.poset.leq(p.projection[static_cast<std::size_t>(a)], p.projection[static_cast<std::size_t>(b)]) &&
               p.pp.poset.leq(p.chains[static_cast<std::size_t>(a)].back(), p.chains[static_cast<std::size_t>(b)].back());
    };
    p.poset = FinitePoset::from_leq(static_cast<int>(p.chains.size()), leq, std::move(labels));
    return p;
}

bool compact_encoding_check(const PPKPoset& p) {
    std::set<std::pair<int, int>> seen;
    for (int x = 0; x < p.poset.size(); ++x) {
        const ParkingObject& top = p.top(x);
        for (const auto& phi : p.chain(x))
            if (pp_descend(top, phi.pi()) != phi) return false;
        if (!seen.emplace(p.projection[static_cast<std::size_t>(x)], p.chains[static_cast<std::size_t>(x)].back()).second)
            return false;
    }
    return true;
}

bool unique_descent_check(const PPKPoset& p) {
    for (int x = 0; x < p.poset.size(); ++x) {
        const int px = p.projection[static_cast<std::size_t>(x)];
        std::vector<int> hits(static_cast<std::size_t>(p.nck.poset.size()), 0);
        const auto& down = p.poset.down_set(x);
        for (auto y = down.find_first(); y != boost::dynamic_bitset<>::npos; y = down.find_next(y))
            ++hits[static_cast<std::size_t>(p.projection[y])];
        for (int c = 0; c < p.nck.poset.size(); ++c) {
            int expect = p.nck.poset.leq(c, px) ? 1 : 0;
            if (hits[static_cast<std::size_t>(c)] != expect) return false;
        }
    }
    return true;
}

std::vector<int> pp_k_action_map(const PPKPoset& p, const Permutation& sigma) {
    if (sigma.size() != p.n) throw std::invalid_argument("pp_k_action_map: permutation size differs from n");
    std::vector<int> on_pp;
    for (const auto& x : p.pp.elements) on_pp.push_back(p.pp.id(act(sigma, x)));
    std::vector<int> out;
    for (const auto& c : p.chains) {
        std::vector<int> img;
        for (int i : c) img.push_back(on_pp[static_cast<std::size_t>(i)]);
        out.push_back(p.index.at(img));
    }
    return out;
}

// ---------------------------------------------------------------- Edelman's definition

namespace {

bool blocks_divisible(const SetPartition& pi, int k) {
    for (const auto& b : pi.blocks())
        if (b.size() % static_cast<std::size_t>(k) != 0) return false;
    return true;
}

}  // namespace

DivisibleNC edelman_divisible_nc(int n, int k) {
    if (n < 1 || k < 1 || n * k > 8) throw std::out_of_range("edelman_divisible_nc: requires n, k >= 1 and kn <= 8");
    DivisibleNC d;
    d.n = n;
    d.k = k;
    std::vector<std::string> labels;
    for (const auto& pi : enumerate_noncrossing(n * k))
        if (blocks_divisible(pi, k)) {
            d.elements.push_back(pi);
            labels.push_back(pi.str());
        }
    d.poset = FinitePoset::from_leq(
        static_cast<int>(d.elements.size()),
        [&](int a, int b) { return nc_leq(d.elements[static_cast<std::size_t>(a)], d.elements[static_cast<std::size_t>(b)]); },
        std::move(labels));
    return d;
}

DivisiblePP edelman_divisible_pp(int n, int k) {
    if (n < 1 || k < 1 || n * k > 6) throw std::out_of_range("edelman_divisible_pp: requires n, k >= 1 and kn <= 6");
    DivisiblePP d;
    d.n = n;
    d.k = k;
    std::vector<std::string> labels;
    for (const auto& x : enumerate_parking_objects(n * k))
        if (blocks_divisible(x.pi(), k)) {
            d.elements.push_back(x);
            labels.push_back(word_str(x.word()));
        }
    d.poset = FinitePoset::from_leq(
        static_cast<int>(d.elements.size()),
        [&](int a, int b) { return pp_leq(d.elements[static_cast<std::size_t>(a)], d.elements[static_cast<std::size_t>(b)]); },
        std::move(labels));
    return d;
}

// ---------------------------------------------------------------- primes

std::vector<int> k_prime_elements(const PPKPoset& p, PrimeReading reading) {
    std::vector<int> out;
    for (int x = 0; x < p.poset.size(); ++x) {
        const auto& c = p.chains[static_cast<std::size_t>(x)];
        int pick = reading == PrimeReading::largest ? c.back() : c.front();
        if (is_prime(p.pp.elements[static_cast<std::size_t>(pick)])) out.push_back(x);
    }
    return out;
}

Integer k_prime_fixed_count(const PPKPoset& p, PrimeReading reading, const Permutation& sigma) {
    auto f = pp_k_action_map(p, sigma);
    Integer count = 0;
    for (int x : k_prime_elements(p, reading))
        if (f[static_cast<std::size_t>(x)] == x) ++count;
    return count;
}

bool k_prime_word_agreement(const PPKPoset& p) {
    auto primes = k_prime_elements(p, PrimeReading::largest);
    std::set<int> prime_set(primes.begin(), primes.end());
    for (int x = 0; x < p.poset.size(); ++x) {
        KChain c;
        for (const auto& phi : p.chain(x)) c.push_back(pair_to_tree(phi));
        ParkingWord w = k_tree_to_word(chain_to_ktree(c), p.k);
        if (is_prime_k_word(w, p.k) != (prime_set.count(x) > 0)) return false;
    }
    return true;
}

}  // namespace ncpark
