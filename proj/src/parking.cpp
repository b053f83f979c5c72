#include "ncpark/parking.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace ncpark {

// ---------------------------------------------------------------- trees

std::strong_ordering operator<=>(const ParkingTree& a, const ParkingTree& b) {
    if (auto c = a.label <=> b.label; c != 0) return c;
    return std::lexicographical_compare_three_way(a.children.begin(), a.children.end(), b.children.begin(),
                                                  b.children.end());
}

bool operator==(const ParkingTree& a, const ParkingTree& b) {
    return a.label == b.label && a.children == b.children;
}

int ParkingTree::internal_count() const {
    if (is_leaf()) return 0;
    int c = 1;
    for (const auto& ch : children) c += ch.internal_count();
    return c;
}

int ParkingTree::label_count() const {
    int c = static_cast<int>(label.size());
    for (const auto& ch : children) c += ch.label_count();
    return c;
}

std::string ParkingTree::str() const {
    if (is_leaf()) return ".";
    std::string s = "{";
    for (std::size_t i = 0; i < label.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(label[i]);
    }
    s += "}[";
    for (std::size_t i = 0; i < children.size(); ++i) {
        if (i) s += ',';
        s += children[i].str();
    }
    return s + "]";
}

std::string word_str(const ParkingWord& w) {
    bool small = std::all_of(w.begin(), w.end(), [](int x) { return x >= 0 && x <= 9; });
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!small && i) s += ' ';
        s += std::to_string(w[i]);
    }
    return s;
}

// ---------------------------------------------------------------- validation

Validation validate_pair(const NoncrossingPartition& pi, const Permutation& sigma) {
    if (pi.size() != sigma.size()) return {false, "pair: partition and permutation sizes differ"};
    if (!pi.is_noncrossing()) return {false, "pair: partition is crossing"};
    for (const auto& b : pi.blocks())
        for (std::size_t i = 0; i + 1 < b.size(); ++i)
            if (sigma(b[i]) > sigma(b[i + 1]))
                return {false, "pair: sigma is not increasing on block starting at " + std::to_string(b.front())};
    return {};
}

Validation validate_triple(const NC2Triple& t) {
    if (t.pi.size() != t.rho.size()) return {false, "triple: pi and rho sizes differ"};
    if (!t.pi.is_noncrossing()) return {false, "triple: pi is crossing"};
    if (static_cast<int>(t.lam.size()) != t.pi.block_count() || t.pi.block_count() != t.rho.block_count())
        return {false, "triple: lambda is not a bijection on blocks"};
    std::vector<char> used(t.lam.size(), 0);
    for (std::size_t b = 0; b < t.lam.size(); ++b) {
        int r = t.lam[b];
        if (r < 0 || r >= t.rho.block_count() || used[static_cast<std::size_t>(r)])
            return {false, "triple: lambda is not a bijection on blocks"};
        used[static_cast<std::size_t>(r)] = 1;
        if (t.rho.block(r).size() != t.pi.block(static_cast<int>(b)).size())
            return {false, "triple: lambda does not preserve block sizes"};
    }
    return {};
}

Validation validate_word(const ParkingWord& w) {
    std::vector<int> s = w;
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 1) return {false, "word: letters must be positive"};
        if (s[i] > static_cast<int>(i) + 1)
            return {false, "word: sorted entry " + std::to_string(i + 1) + " exceeds " + std::to_string(i + 1)};
    }
    return {};
}

namespace {

Validation validate_tree_rec(const ParkingTree& t, int k, std::vector<char>& seen) {
    if (t.is_leaf()) {
        if (!t.children.empty()) return {false, "tree: leaf with children"};
        return {};
    }
    for (std::size_t i = 0; i < t.label.size(); ++i) {
        int v = t.label[i];
        if (i && t.label[i - 1] >= v) return {false, "tree: label not sorted"};
        if (v < 1 || v >= static_cast<int>(seen.size())) return {false, "tree: label out of range"};
        if (seen[static_cast<std::size_t>(v)]) return {false, "tree: labels are not disjoint"};
        seen[static_cast<std::size_t>(v)] = 1;
    }
    if (t.children.size() != static_cast<std::size_t>(k) * t.label.size())
        return {false, "tree: vertex " + t.str() + " violates the arity rule"};
    for (const auto& c : t.children) {
        auto v = validate_tree_rec(c, k, seen);
        if (!v) return v;
    }
    return {};
}

}  // namespace

Validation validate_tree(const ParkingTree& t, int n, int k) {
    if (n >= 1 && t.is_leaf()) return {false, "tree: root is a leaf"};
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    auto v = validate_tree_rec(t, k, seen);
    if (!v) return v;
    for (int i = 1; i <= n; ++i)
        if (!seen[static_cast<std::size_t>(i)]) return {false, "tree: labels do not cover the ground set"};
    return {};
}

Validation validate(const AnyRepresentation& x) {
    return std::visit(
        [](const auto& v) -> Validation {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, NC2Triple>) return validate_triple(v);
            else if constexpr (std::is_same_v<T, ParkingObject>) return validate_pair(v.pi(), v.sigma());
            else if constexpr (std::is_same_v<T, ParkingWord>) return validate_word(v);
            else return validate_tree(v, v.label_count(), 1);
        },
        x);
}

// ---------------------------------------------------------------- pair form

ParkingObject::ParkingObject(NoncrossingPartition pi, Permutation sigma)
    : pi_(std::move(pi)), sigma_(std::move(sigma)) {
    auto v = validate_pair(pi_, sigma_);
    if (!v) throw std::invalid_argument(v.diagnostic);
}

ParkingObject ParkingObject::minimum(int n) {
    return ParkingObject(NoncrossingPartition::zero(n), Permutation::identity(n));
}

ParkingObject ParkingObject::maximal(const Permutation& s) {
    return ParkingObject(NoncrossingPartition::one(s.size()), s);
}

NC2Triple ParkingObject::triple() const { return pair_to_triple(*this); }
ParkingWord ParkingObject::word() const { return triple_to_word(triple()); }
ParkingTree ParkingObject::tree() const { return pair_to_tree(*this); }

// ---------------------------------------------------------------- bijections

NC2Triple pair_to_triple(const ParkingObject& p) {
    SetPartition rho = p.pi().image(p.sigma());
    std::vector<int> lam;
    lam.reserve(static_cast<std::size_t>(p.pi().block_count()));
    for (const auto& b : p.pi().blocks()) lam.push_back(rho.block_index(p.sigma()(b.front())));
    return {p.pi(), std::move(rho), std::move(lam)};
}

ParkingObject triple_to_pair(const NC2Triple& t) {
    auto v = validate_triple(t);
    if (!v) throw std::invalid_argument(v.diagnostic);
    std::vector<int> w(static_cast<std::size_t>(t.pi.size()));
    for (int b = 0; b < t.pi.block_count(); ++b) {
        const Block& src = t.pi.block(b);
        const Block& dst = t.rho.block(t.lam[static_cast<std::size_t>(b)]);
        for (std::size_t i = 0; i < src.size(); ++i) w[static_cast<std::size_t>(src[i] - 1)] = dst[i];
    }
    return ParkingObject(t.pi, Permutation(std::move(w)));
}

ParkingWord triple_to_word(const NC2Triple& t) {
    auto v = validate_triple(t);
    if (!v) throw std::invalid_argument(v.diagnostic);
    ParkingWord w(static_cast<std::size_t>(t.pi.size()));
    for (int b = 0; b < t.pi.block_count(); ++b)
        for (int i : t.rho.block(t.lam[static_cast<std::size_t>(b)]))
            w[static_cast<std::size_t>(i - 1)] = t.pi.block(b).front();
    return w;
}

NC2Triple word_to_triple(const ParkingWord& w) {
    auto v = validate_word(w);
    if (!v) throw std::invalid_argument(v.diagnostic);
    const int n = static_cast<int>(w.size());
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    for (int x : w) ++a[static_cast<std::size_t>(x - 1)];
    NoncrossingPartition pi = lukasiewicz_decode(a);
    std::vector<Block> rho_blocks;
    for (const auto& b : pi.blocks()) {
        Block r;
        for (int i = 1; i <= n; ++i)
            if (w[static_cast<std::size_t>(i - 1)] == b.front()) r.push_back(i);
        rho_blocks.push_back(std::move(r));
    }
    SetPartition rho(n, rho_blocks);
    std::vector<int> lam;
    for (const auto& r : rho_blocks) lam.push_back(rho.block_index(r.front()));
    return {std::move(pi), std::move(rho), std::move(lam)};
}

namespace {

ParkingTree arch_tree(const ParkingObject& p, int lo, int hi) {
    if (lo > hi) return ParkingTree::leaf();
    const Block& e = p.pi().block_of(lo);
    if (e.back() > hi) throw std::logic_error("arch decomposition: block leaves its interval");
    ParkingTree t;
    for (int x : e) t.label.push_back(p.sigma()(x));
    std::sort(t.label.begin(), t.label.end());
    for (std::size_t j = 0; j < e.size(); ++j) {
        int a = e[j] + 1;
        int b = (j + 1 < e.size()) ? e[j + 1] - 1 : hi;
        t.children.push_back(arch_tree(p, a, b));
    }
    return t;
}

// Places the vertices of t on the interval starting at lo; returns its length.
int unarch(const ParkingTree& t, int lo, std::vector<Block>& blocks, std::vector<int>& sigma) {
    if (t.is_leaf()) return 0;
    if (t.children.size() != t.label.size()) throw std::invalid_argument("tree: arity rule violated");
    Block e;
    int pos = lo;
    for (std::size_t j = 0; j < t.label.size(); ++j) {
        e.push_back(pos);
        if (pos < 1 || pos > static_cast<int>(sigma.size())) throw std::invalid_argument("tree: too many labels");
        sigma[static_cast<std::size_t>(pos - 1)] = t.label[j];
        int len = unarch(t.children[j], pos + 1, blocks, sigma);
        pos += 1 + len;
    }
    blocks.push_back(std::move(e));
    return pos - lo;
}

}  // namespace

ParkingTree pair_to_tree(const ParkingObject& p) { return arch_tree(p, 1, p.size()); }

ParkingTree interval_tree(const ParkingObject& p, int lo, int hi) {
    if (lo <= hi && (lo < 1 || hi > p.size())) throw std::out_of_range("interval_tree: interval outside 1..n");
    for (int i = lo; i <= hi; ++i) {
        const Block& b = p.pi().block_of(i);
        if (b.front() < lo || b.back() > hi) throw std::invalid_argument("interval_tree: interval cuts a block");
    }
    return arch_tree(p, lo, hi);
}

ParkingObject tree_to_pair(const ParkingTree& t) {
    const int n = t.label_count();
    auto v = validate_tree(t, n, 1);
    if (!v) throw std::invalid_argument(v.diagnostic);
    std::vector<Block> blocks;
    std::vector<int> sigma(static_cast<std::size_t>(n), 0);
    unarch(t, 1, blocks, sigma);
    return ParkingObject(NoncrossingPartition(n, std::move(blocks)), Permutation(std::move(sigma)));
}

std::vector<std::vector<int>> word_to_composition(const ParkingWord& w, int length) {
    std::vector<std::vector<int>> c(static_cast<std::size_t>(length));
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] < 1 || w[i] > length) throw std::invalid_argument("word letter outside the composition frame");
        c[static_cast<std::size_t>(w[i] - 1)].push_back(static_cast<int>(i) + 1);
    }
    return c;
}

ParkingWord composition_to_word(const std::vector<std::vector<int>>& c, int n) {
    ParkingWord w(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        for (int j : c[i]) {
            if (j < 1 || j > n || w[static_cast<std::size_t>(j - 1)] != 0)
                throw std::invalid_argument("composition is not a weak set composition of {1..n}");
            w[static_cast<std::size_t>(j - 1)] = static_cast<int>(i) + 1;
        }
    for (int x : w)
        if (x == 0) throw std::invalid_argument("composition does not cover {1..n}");
    return w;
}

namespace {
void prefix_read(const ParkingTree& t, std::vector<std::vector<int>>& out) {
    out.push_back(t.label);
    for (const auto& c : t.children) prefix_read(c, out);
}
}  // namespace

std::vector<std::vector<int>> tree_to_composition(const ParkingTree& t) {
    std::vector<std::vector<int>> out;
    prefix_read(t, out);
    return out;
}

ParkingTree composition_to_tree(const std::vector<std::vector<int>>& c, int k) {
    if (c.empty()) throw std::invalid_argument("composition_to_tree: empty composition");
    std::vector<std::vector<std::size_t>> kids(c.size());
    std::vector<std::pair<std::size_t, std::size_t>> open;  // vertex, free slots
    if (!c[0].empty()) open.emplace_back(0, static_cast<std::size_t>(k) * c[0].size());
    for (std::size_t i = 1; i < c.size(); ++i) {
        if (open.empty()) throw std::invalid_argument("composition_to_tree: no vertex left to graft on");
        auto& top = open.back();
        kids[top.first].push_back(i);
        if (--top.second == 0) open.pop_back();
        if (!c[i].empty()) open.emplace_back(i, static_cast<std::size_t>(k) * c[i].size());
    }
    if (!open.empty()) throw std::invalid_argument("composition_to_tree: some vertex lacks children");
    std::function<ParkingTree(std::size_t)> build = [&](std::size_t i) {
        ParkingTree t;
        t.label = c[i];
        std::sort(t.label.begin(), t.label.end());
        for (std::size_t ch : kids[i]) t.children.push_back(build(ch));
        return t;
    };
    return build(0);
}

ParkingTree word_to_tree(const ParkingWord& w) {
    auto v = validate_word(w);
    if (!v) throw std::invalid_argument(v.diagnostic);
    const int n = static_cast<int>(w.size());
    return composition_to_tree(word_to_composition(w, n + 1), 1);
}

ParkingWord tree_to_word(const ParkingTree& t) {
    const int n = t.label_count();
    auto v = validate_tree(t, n, 1);
    if (!v) throw std::invalid_argument(v.diagnostic);
    return composition_to_word(tree_to_composition(t), n);
}

ParkingObject to_pair(const AnyRepresentation& x) {
    return std::visit(
        [](const auto& v) -> ParkingObject {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, NC2Triple>) return triple_to_pair(v);
            else if constexpr (std::is_same_v<T, ParkingObject>) return v;
            else if constexpr (std::is_same_v<T, ParkingWord>) return triple_to_pair(word_to_triple(v));
            else return tree_to_pair(v);
        },
        x);
}

AnyRepresentation convert(const AnyRepresentation& x, Representation target) {
    // Direct edges are used whenever they exist: triple-pair, triple-word,
    // word-tree and pair-tree. Remaining routes pass through one neighbour.
    auto v = validate(x);
    if (!v) throw std::invalid_argument(v.diagnostic);
    if (const auto* w = std::get_if<ParkingWord>(&x)) {
        switch (target) {
            case Representation::word: return *w;
            case Representation::tree: return word_to_tree(*w);
            case Representation::triple: return word_to_triple(*w);
            case Representation::pair: return triple_to_pair(word_to_triple(*w));
        }
    }
    if (const auto* t = std::get_if<ParkingTree>(&x)) {
        switch (target) {
            case Representation::tree: return *t;
            case Representation::word: return tree_to_word(*t);
            case Representation::pair: return tree_to_pair(*t);
            case Representation::triple: return pair_to_triple(tree_to_pair(*t));
        }
    }
    if (const auto* t = std::get_if<NC2Triple>(&x)) {
        switch (target) {
            case Representation::triple: return *t;
            case Representation::pair: return triple_to_pair(*t);
            case Representation::word: return triple_to_word(*t);
            case Representation::tree: return pair_to_tree(triple_to_pair(*t));
        }
    }
    const auto& p = std::get<ParkingObject>(x);
    switch (target) {
        case Representation::pair: return p;
        case Representation::triple: return pair_to_triple(p);
        case Representation::tree: return pair_to_tree(p);
        case Representation::word: return triple_to_word(pair_to_triple(p));
    }
    throw std::invalid_argument("convert: unknown target");
}

// ---------------------------------------------------------------- action

ParkingWord act(const Permutation& s, const ParkingWord& w) {
    if (s.size() != static_cast<int>(w.size())) throw std::invalid_argument("act: size mismatch");
    Permutation inv = s.inverse();
    ParkingWord out(w.size());
    for (int i = 1; i <= s.size(); ++i) out[static_cast<std::size_t>(i - 1)] = w[static_cast<std::size_t>(inv(i) - 1)];
    return out;
}

NC2Triple act(const Permutation& s, const NC2Triple& t) {
    if (s.size() != t.rho.size()) throw std::invalid_argument("act: size mismatch");
    SetPartition rho = t.rho.image(s);
    std::vector<int> lam;
    for (int r : t.lam) lam.push_back(rho.block_index(s(t.rho.block(r).front())));
    return {t.pi, std::move(rho), std::move(lam)};
}

ParkingObject act(const Permutation& s, const ParkingObject& p) { return triple_to_pair(act(s, pair_to_triple(p))); }

ParkingTree act(const Permutation& s, const ParkingTree& t) {
    ParkingTree out;
    for (int x : t.label) {
        if (x > s.size()) throw std::invalid_argument("act: size mismatch");
        out.label.push_back(s(x));
    }
    std::sort(out.label.begin(), out.label.end());
    for (const auto& c : t.children) out.children.push_back(act(s, c));
    return out;
}

// ---------------------------------------------------------------- eta

std::vector<int> eta_indices(const ParkingObject& p) {
    Permutation inv = p.sigma().inverse();
    std::vector<int> e(static_cast<std::size_t>(p.size()));
    for (int k = 1; k <= p.size(); ++k) e[static_cast<std::size_t>(k - 1)] = p.pi().block_index(inv(k));
    return e;
}

std::vector<Block> eta(const ParkingObject& p) {
    std::vector<Block> out;
    for (int b : eta_indices(p)) out.push_back(p.pi().block(b));
    return out;
}

ParkingObject from_eta(const NoncrossingPartition& pi, const std::vector<int>& eta_idx) {
    const int n = pi.size();
    if (static_cast<int>(eta_idx.size()) != n) throw std::invalid_argument("from_eta: length mismatch");
    std::vector<Block> images(static_cast<std::size_t>(pi.block_count()));
    for (int k = 1; k <= n; ++k) {
        int b = eta_idx[static_cast<std::size_t>(k - 1)];
        if (b < 0 || b >= pi.block_count()) throw std::invalid_argument("from_eta: bad block index");
        images[static_cast<std::size_t>(b)].push_back(k);
    }
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int b = 0; b < pi.block_count(); ++b) {
        const Block& src = pi.block(b);
        const Block& dst = images[static_cast<std::size_t>(b)];
        if (src.size() != dst.size()) throw std::invalid_argument("from_eta: block multiplicity mismatch");
        for (std::size_t i = 0; i < src.size(); ++i) w[static_cast<std::size_t>(src[i] - 1)] = dst[i];
    }
    return ParkingObject(pi, Permutation(std::move(w)));
}

// ---------------------------------------------------------------- primes

bool is_prime(const ParkingObject& p) { return p.pi().block_index(1) == p.pi().block_index(p.size()); }

bool is_prime_word(const ParkingWord& w) {
    const int n = static_cast<int>(w.size());
    for (int j = 1; j < n; ++j) {
        int c = static_cast<int>(std::count_if(w.begin(), w.end(), [j](int x) { return x <= j; }));
        if (c <= j) return false;
    }
    return true;
}

bool is_prime_tree(const ParkingTree& t) { return !t.is_leaf() && t.children.back().is_leaf(); }

bool orbit_representative_check(const ParkingWord& w) {
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] > static_cast<int>(i) + 1) return false;
    ParkingWord cand = w;
    std::sort(cand.begin(), cand.end());
    ParkingWord best;
    do {
        bool ok = true;
        for (std::size_t i = 0; i < cand.size() && ok; ++i) ok = cand[i] <= static_cast<int>(i) + 1;
        if (ok && (best.empty() || cand > best)) best = cand;
    } while (std::next_permutation(cand.begin(), cand.end()));
    return best == w;
}

// ---------------------------------------------------------------- nilpotent view

namespace {
void nilpotent_rec(const ParkingTree& t, int parent_element, std::vector<int>& f) {
    if (t.is_leaf()) return;
    for (int x : t.label) f[static_cast<std::size_t>(x - 1)] = parent_element;
    for (std::size_t j = 0; j < t.children.size(); ++j) nilpotent_rec(t.children[j], t.label[j], f);
}
}  // namespace

std::vector<int> tree_to_nilpotent(const ParkingTree& t, int n) {
    auto v = validate_tree(t, n, 1);
    if (!v) throw std::invalid_argument(v.diagnostic);
    std::vector<int> f(static_cast<std::size_t>(n), 0);
    nilpotent_rec(t, 0, f);
    return f;
}

ParkingTree nilpotent_to_tree(const std::vector<int>& f) {
    const int n = static_cast<int>(f.size());
    for (int i = 1; i <= n; ++i) {
        int x = i;
        for (int step = 0; step <= n && x != 0; ++step) {
            int y = f[static_cast<std::size_t>(x - 1)];
            if (y < 0 || y > n) throw std::invalid_argument("nilpotent_to_tree: value out of range");
            x = y;
        }
        if (x != 0) throw std::invalid_argument("nilpotent_to_tree: function is not nilpotent");
    }
    std::vector<std::vector<int>> fiber(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) fiber[static_cast<std::size_t>(f[static_cast<std::size_t>(i - 1)])].push_back(i);
    std::function<ParkingTree(const std::vector<int>&)> build = [&](const std::vector<int>& label) {
        ParkingTree t;
        t.label = label;
        for (int x : label) {
            const auto& fib = fiber[static_cast<std::size_t>(x)];
            t.children.push_back(fib.empty() ? ParkingTree::leaf() : build(fib));
        }
        return t;
    };
    if (fiber[0].empty()) throw std::invalid_argument("nilpotent_to_tree: empty root");
    return build(fiber[0]);
}

// ---------------------------------------------------------------- right combs

bool is_right_comb(const ParkingTree& t) {
    const ParkingTree* node = &t;
    while (!node->is_leaf()) {
        for (std::size_t j = 0; j + 1 < node->children.size(); ++j)
            if (!node->children[j].is_leaf()) return false;
        node = &node->children.back();
    }
    return true;
}

std::vector<std::vector<int>> right_comb_to_composition(const ParkingTree& t) {
    if (!is_right_comb(t)) throw std::invalid_argument("right_comb_to_composition: not a right comb");
    std::vector<std::vector<int>> c;
    for (const ParkingTree* node = &t; !node->is_leaf(); node = &node->children.back()) c.push_back(node->label);
    return c;
}

ParkingTree composition_to_right_comb(const std::vector<std::vector<int>>& c, int n) {
    std::vector<Block> blocks;
    std::vector<int> sigma(static_cast<std::size_t>(n), 0);
    int next = 1;
    for (const auto& part : c) {
        if (part.empty()) throw std::invalid_argument("composition_to_right_comb: empty part");
        std::vector<int> sorted = part;
        std::sort(sorted.begin(), sorted.end());
        Block b;
        for (int x : sorted) {
            if (next > n) throw std::invalid_argument("composition_to_right_comb: too many elements");
            b.push_back(next);
            sigma[static_cast<std::size_t>(next - 1)] = x;
            ++next;
        }
        blocks.push_back(std::move(b));
    }
    if (next != n + 1) throw std::invalid_argument("composition_to_right_comb: composition does not cover {1..n}");
    return pair_to_tree(ParkingObject(NoncrossingPartition(n, std::move(blocks)), Permutation(std::move(sigma))));
}

// ---------------------------------------------------------------- enumerations

namespace {

void assign_images(const NoncrossingPartition& pi, std::size_t b, std::vector<char>& used, std::vector<int>& w,
                   std::vector<ParkingObject>& out) {
    if (b == pi.blocks().size()) {
        out.emplace_back(pi, Permutation(w));
        return;
    }
    const Block& blk = pi.blocks()[b];
    const int n = pi.size();
    std::vector<int> avail;
    for (int v = 1; v <= n; ++v)
        if (!used[static_cast<std::size_t>(v)]) avail.push_back(v);
    const std::size_t r = blk.size();
    std::vector<char> pick(avail.size(), 0);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(r), 1);
    // Iterate over r-subsets of the available values.
    std::sort(pick.begin(), pick.end());
    do {
        std::vector<int> img;
        for (std::size_t i = 0; i < avail.size(); ++i)
            if (pick[i]) img.push_back(avail[i]);
        for (std::size_t i = 0; i < r; ++i) {
            w[static_cast<std::size_t>(blk[i] - 1)] = img[i];
            used[static_cast<std::size_t>(img[i])] = 1;
        }
        assign_images(pi, b + 1, used, w, out);
        for (int v : img) used[static_cast<std::size_t>(v)] = 0;
    } while (std::next_permutation(pick.begin(), pick.end()));
}

void word_rec(int n, ParkingWord& w, std::vector<ParkingWord>& out) {
    if (static_cast<int>(w.size()) == n) {
        if (validate_word(w)) out.push_back(w);
        return;
    }
    for (int v = 1; v <= n; ++v) {
        w.push_back(v);
        word_rec(n, w, out);
        w.pop_back();
    }
}

std::vector<ParkingTree> trees_on(const std::vector<int>& labels) {
    std::vector<ParkingTree> out;
    const std::size_t m = labels.size();
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        std::vector<int> root, rest;
        for (std::size_t i = 0; i < m; ++i) (mask & (1u << i) ? root : rest).push_back(labels[i]);
        const std::size_t r = root.size();
        // Every map rest -> {0..r-1} distributes the remaining labels among the children.
        std::vector<std::size_t> f(rest.size(), 0);
        while (true) {
            std::vector<std::vector<int>> parts(r);
            for (std::size_t i = 0; i < rest.size(); ++i) parts[f[i]].push_back(rest[i]);
            std::vector<std::vector<ParkingTree>> options;
            for (const auto& part : parts)
                options.push_back(part.empty() ? std::vector<ParkingTree>{ParkingTree::leaf()} : trees_on(part));
            std::vector<std::size_t> idx(r, 0);
            while (true) {
                ParkingTree t;
                t.label = root;
                for (std::size_t j = 0; j < r; ++j) t.children.push_back(options[j][idx[j]]);
                out.push_back(std::move(t));
                std::size_t j = 0;
                while (j < r && ++idx[j] == options[j].size()) idx[j++] = 0;
                if (j == r) break;
            }
            std::size_t i = 0;
            while (i < rest.size() && ++f[i] == r) f[i++] = 0;
            if (i == rest.size()) break;
        }
    }
    return out;
}

void triple_rec(const NoncrossingPartition& pi, const SetPartition& rho, std::size_t b, std::vector<char>& used,
                std::vector<int>& lam, std::vector<NC2Triple>& out) {
    if (b == lam.size()) {
        out.push_back({pi, rho, lam});
        return;
    }
    for (int r = 0; r < rho.block_count(); ++r) {
        if (used[static_cast<std::size_t>(r)] || rho.block(r).size() != pi.blocks()[b].size()) continue;
        used[static_cast<std::size_t>(r)] = 1;
        lam[b] = r;
        triple_rec(pi, rho, b + 1, used, lam, out);
        used[static_cast<std::size_t>(r)] = 0;
    }
}

}  // namespace

std::vector<ParkingObject> enumerate_parking_objects(int n) {
    std::vector<ParkingObject> out;
    for (const auto& pi : enumerate_noncrossing(n)) {
        std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
        std::vector<int> w(static_cast<std::size_t>(n), 0);
        assign_images(pi, 0, used, w, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<NC2Triple> enumerate_triples(int n) {
    std::vector<NC2Triple> out;
    auto rhos = enumerate_set_partitions(n);
    for (const auto& pi : enumerate_noncrossing(n)) {
        for (const auto& rho : rhos) {
            if (rho.block_count() != pi.block_count()) continue;
            std::vector<char> used(static_cast<std::size_t>(rho.block_count()), 0);
            std::vector<int> lam(static_cast<std::size_t>(pi.block_count()), 0);
            triple_rec(pi, rho, 0, used, lam, out);
        }
    }
    return out;
}

std::vector<ParkingWord> enumerate_parking_words(int n) {
    std::vector<ParkingWord> out;
    ParkingWord w;
    word_rec(n, w, out);
    return out;
}

std::vector<ParkingTree> enumerate_parking_trees(int n) {
    std::vector<int> labels;
    for (int i = 1; i <= n; ++i) labels.push_back(i);
    auto out = trees_on(labels);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<std::vector<int>>> enumerate_set_compositions(int n) {
    std::vector<std::vector<std::vector<int>>> out;
    for (const auto& p : enumerate_set_partitions(n)) {
        std::vector<std::size_t> order(p.blocks().size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        do {
            std::vector<std::vector<int>> c;
            for (std::size_t i : order) c.push_back(p.blocks()[i]);
            out.push_back(std::move(c));
        } while (std::next_permutation(order.begin(), order.end()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace ncpark
