#include "ncpark/enumeration.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "ncpark/partition.hpp"
#include "ncpark/poset.hpp"
#include "ncpark/pp_poset.hpp"

namespace ncpark {

// ---------------------------------------------------------------- closed forms

Integer chain_count_closed(int n, int k, int l) {
    if (n < 1 || l < 0 || l > n - 1) throw std::out_of_range("chain_count_closed: rank outside 0..n-1");
    return factorial(l) * binomial(Integer(k) * n, l) * stirling2(n, l + 1);
}

Integer whitney_first_closed(int n, int l) { return chain_count_closed(n, -1, l); }

namespace {

void check_oracle_size(int n, const char* what) {
    if (n < 1 || n > kMaxPosetN) throw std::out_of_range(std::string(what) + ": n outside 1..5");
}

}  // namespace

std::vector<Integer> chain_count_oracle(int n, int k) {
    check_oracle_size(n, "chain_count_oracle");
    if (k < 1) throw std::out_of_range("chain_count_oracle: k must be positive");
    return multichains_by_top_rank(build_pp_poset(n).poset, k);
}

std::vector<Integer> whitney_first_oracle(int n) {
    check_oracle_size(n, "whitney_first_oracle");
    const PPPoset pp = build_pp_poset(n);
    std::vector<Integer> out;
    for (int l = 0; l <= pp.poset.max_rank(); ++l) out.push_back(whitney(pp.poset, WhitneyKind::first, l));
    return out;
}

// ---------------------------------------------------------------- k-parking objects

Validation validate_k_word(const ParkingWord& w, int k) {
    if (k < 1) return {false, "k-word: k must be positive"};
    std::vector<int> s(w.begin(), w.end());
    std::sort(s.begin(), s.end());
    for (std::size_t j = 0; j < s.size(); ++j) {
        if (s[j] < 1) return {false, "k-word: letters must be positive"};
        if (s[j] > k * static_cast<int>(j) + 1)
            return {false, "k-word: fewer than " + std::to_string(j + 1) + " letters are at most " +
                               std::to_string(k * static_cast<int>(j) + 1)};
    }
    return {};
}

Validation validate_k_tree(const ParkingTree& t, int n, int k) {
    if (k < 1) return {false, "k-tree: k must be positive"};
    return validate_tree(t, n, k);
}

ParkingTree k_word_to_tree(const ParkingWord& w, int k) {
    auto v = validate_k_word(w, k);
    if (!v) throw std::invalid_argument(v.diagnostic);
    const int n = static_cast<int>(w.size());
    return composition_to_tree(word_to_composition(w, k * n + 1), k);
}

ParkingWord k_tree_to_word(const ParkingTree& t, int k) {
    const int n = t.label_count();
    auto v = validate_k_tree(t, n, k);
    if (!v) throw std::invalid_argument(v.diagnostic);
    return composition_to_word(tree_to_composition(t), n);
}

const ParkingTree& brood_child(const ParkingTree& t, int k, int j, int i) {
    if (j < 1 || j > static_cast<int>(t.label.size()) || i < 1 || i > k ||
        t.children.size() != static_cast<std::size_t>(k) * t.label.size())
        throw std::out_of_range("brood_child: no such brood position");
    return t.children[static_cast<std::size_t>((j - 1) * k + (i - 1))];
}

std::vector<ParkingWord> enumerate_k_words(int n, int k) {
    if (n < 1 || k < 1) throw std::out_of_range("enumerate_k_words: n and k must be positive");
    const int top = k * (n - 1) + 1;
    double total = 1;
    for (int i = 0; i < n; ++i) total *= top;
    if (total > 1e7) throw std::out_of_range("enumerate_k_words: too many candidate words");
    std::vector<ParkingWord> out;
    ParkingWord w(static_cast<std::size_t>(n), 1);
    while (true) {
        if (validate_k_word(w, k)) out.push_back(w);
        std::size_t i = w.size();
        while (i > 0 && w[i - 1] == top) w[--i] = 1;
        if (i == 0) break;
        ++w[i - 1];
    }
    return out;
}

namespace {

std::vector<ParkingTree> k_trees_on(const std::vector<int>& labels, int k) {
    std::vector<ParkingTree> out;
    const std::size_t m = labels.size();
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        std::vector<int> root, rest;
        for (std::size_t i = 0; i < m; ++i) (mask & (1u << i) ? root : rest).push_back(labels[i]);
        const std::size_t slots = static_cast<std::size_t>(k) * root.size();
        // Every map rest -> {0..slots-1} distributes the remaining labels among the children.
        std::vector<std::size_t> f(rest.size(), 0);
        while (true) {
            std::vector<std::vector<int>> parts(slots);
            for (std::size_t i = 0; i < rest.size(); ++i) parts[f[i]].push_back(rest[i]);
            std::vector<std::vector<ParkingTree>> options;
            for (const auto& part : parts)
                options.push_back(part.empty() ? std::vector<ParkingTree>{ParkingTree::leaf()} : k_trees_on(part, k));
            std::vector<std::size_t> idx(slots, 0);
            while (true) {
                ParkingTree t;
                t.label = root;
                for (std::size_t j = 0; j < slots; ++j) t.children.push_back(options[j][idx[j]]);
                out.push_back(std::move(t));
                std::size_t j = 0;
                while (j < slots && ++idx[j] == options[j].size()) idx[j++] = 0;
                if (j == slots) break;
            }
            std::size_t i = 0;
            while (i < rest.size() && ++f[i] == slots) f[i++] = 0;
            if (i == rest.size()) break;
        }
    }
    return out;
}

}  // namespace

std::vector<ParkingTree> enumerate_k_trees(int n, int k) {
    if (n < 1 || n > 5 || k < 1) throw std::out_of_range("enumerate_k_trees: n outside 1..5 or k not positive");
    std::vector<int> labels(static_cast<std::size_t>(n));
    std::iota(labels.begin(), labels.end(), 1);
    auto out = k_trees_on(labels, k);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// #{i : w_i <= bound(j)} > j for every j in 1..n-1.
template <class Bound>
bool exceeds_bounds(const ParkingWord& w, int k, Bound bound) {
    if (!validate_k_word(w, k)) return false;
    const int n = static_cast<int>(w.size());
    for (int j = 1; j <= n - 1; ++j) {
        int c = 0;
        for (int x : w)
            if (x <= bound(j)) ++c;
        if (c <= j) return false;
    }
    return true;
}

}  // namespace

bool is_prime_k_word(const ParkingWord& w, int k) {
    return exceeds_bounds(w, k, [k](int j) { return k * (j - 1) + 1; });
}

bool is_rational_prime_k_word(const ParkingWord& w, int k) {
    return exceeds_bounds(w, k, [k](int j) { return k * j; });
}

// ---------------------------------------------------------------- chains and k-trees

bool is_k_multichain(const KChain& c) {
    if (c.empty()) return false;
    const int n = c.front().label_count();
    std::vector<ParkingObject> pairs;
    for (const auto& t : c) {
        if (t.label_count() != n || !validate_tree(t, n, 1)) return false;
        pairs.push_back(tree_to_pair(t));
    }
    for (std::size_t i = 0; i + 1 < pairs.size(); ++i)
        if (!pp_leq(pairs[i], pairs[i + 1])) return false;
    return true;
}

std::vector<KChain> enumerate_k_multichains(int n, int k) {
    if (n < 1 || n > 4 || k < 1) throw std::out_of_range("enumerate_k_multichains: n outside 1..4 or k not positive");
    const PPPoset pp = build_pp_poset(n);
    std::vector<ParkingTree> trees;
    for (const auto& e : pp.elements) trees.push_back(e.tree());
    std::vector<KChain> out;
    KChain cur;
    std::function<void(int)> extend = [&](int last) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int y = 0; y < pp.poset.size(); ++y) {
            if (last >= 0 && !pp.poset.leq(last, y)) continue;
            cur.push_back(trees[static_cast<std::size_t>(y)]);
            extend(y);
            cur.pop_back();
        }
    };
    extend(-1);
    return out;
}

KChain act(const Permutation& s, const KChain& c) {
    KChain out;
    for (const auto& t : c) out.push_back(act(s, t));
    return out;
}

namespace {

// Replaces the rightmost leaf of t by sub.
void graft_rightmost(ParkingTree& t, ParkingTree sub) {
    ParkingTree* node = &t;
    while (!node->is_leaf()) node = &node->children.back();
    *node = std::move(sub);
}

// Labels and broods of v after merging every child of index > i, recursively.
// The broods of a merged child follow the brood it came from, in index order.
void collect(const ParkingTree& v, int k, int i, std::vector<int>& labels,
             std::vector<const ParkingTree*>& broods) {
    labels.insert(labels.end(), v.label.begin(), v.label.end());
    for (std::size_t j = 0; j < v.label.size(); ++j) {
        const ParkingTree* brood = &v.children[j * static_cast<std::size_t>(k)];
        broods.push_back(brood);
        for (int p = i + 1; p <= k; ++p)
            if (!brood[p - 1].is_leaf()) collect(brood[p - 1], k, i, labels, broods);
    }
}

ParkingTree level_tree(const ParkingTree& v, int k, int i) {
    std::vector<int> labels;
    std::vector<const ParkingTree*> broods;
    collect(v, k, i, labels, broods);
    ParkingTree out;
    out.label = std::move(labels);
    std::sort(out.label.begin(), out.label.end());
    for (const ParkingTree* brood : broods) {
        ParkingTree chain = ParkingTree::leaf();
        for (int p = 1; p <= i; ++p) {
            if (brood[p - 1].is_leaf()) continue;
            ParkingTree sub = level_tree(brood[p - 1], k, i);
            if (chain.is_leaf()) chain = std::move(sub);
            else graft_rightmost(chain, std::move(sub));
        }
        out.children.push_back(std::move(chain));
    }
    return out;
}

// Vertex of each label in every tree of a chain: owner[i][x] identifies the
// vertex of c[i] holding x.
struct ChainIndex {
    std::vector<std::vector<int>> owner;

    explicit ChainIndex(const KChain& c) {
        const int n = c.front().label_count();
        for (const auto& t : c) {
            std::vector<int> own(static_cast<std::size_t>(n) + 1, -1);
            int next = 0;
            std::function<void(const ParkingTree&)> walk = [&](const ParkingTree& u) {
                if (u.is_leaf()) return;
                for (int x : u.label) own[static_cast<std::size_t>(x)] = next;
                ++next;
                for (const auto& ch : u.children) walk(ch);
            };
            walk(t);
            owner.push_back(std::move(own));
        }
    }

    // First level (1-based) at which the vertices holding a and b are apart.
    int split_time(int a, int b) const {
        for (std::size_t i = 0; i < owner.size(); ++i)
            if (owner[i][static_cast<std::size_t>(a)] != owner[i][static_cast<std::size_t>(b)])
                return static_cast<int>(i) + 1;
        return static_cast<int>(owner.size()) + 1;
    }
};

// Builds the k-tree vertex for u, a subtree of the last tree of the chain in
// which rightmost branches may already have been cut.
ParkingTree cut_build(const ParkingTree& u, int k, const ChainIndex& index) {
    ParkingTree out;
    out.label = u.label;
    for (const ParkingTree& s : u.children) {
        std::vector<ParkingTree> brood(static_cast<std::size_t>(k), ParkingTree::leaf());
        // Walk down the rightmost branch of s and record where a vertex splits
        // from u strictly later than every vertex above it on the branch.
        std::vector<std::pair<int, int>> cuts;  // depth along the branch, index
        int depth = 0;
        int last = 0;
        for (const ParkingTree* d = &s; !d->is_leaf(); d = &d->children.back(), ++depth) {
            int time = index.split_time(u.label.front(), d->label.front());
            if (time > k) throw std::logic_error("chain_to_ktree: vertex never splits from its parent");
            if (time > last) {
                cuts.emplace_back(depth, time);
                last = time;
            }
        }
        for (std::size_t c = 0; c < cuts.size(); ++c) {
            const ParkingTree* root = &s;
            for (int step = 0; step < cuts[c].first; ++step) root = &root->children.back();
            ParkingTree piece = *root;
            if (c + 1 < cuts.size()) {
                ParkingTree* node = &piece;
                for (int step = cuts[c].first; step < cuts[c + 1].first; ++step) node = &node->children.back();
                *node = ParkingTree::leaf();
            }
            brood[static_cast<std::size_t>(cuts[c].second - 1)] = cut_build(piece, k, index);
        }
        for (auto& b : brood) out.children.push_back(std::move(b));
    }
    return out;
}

}  // namespace

KChain ktree_to_chain(const ParkingTree& t, int k) {
    const int n = t.label_count();
    auto v = validate_k_tree(t, n, k);
    if (!v) throw std::invalid_argument(v.diagnostic);
    KChain out;
    for (int i = 1; i <= k; ++i) out.push_back(level_tree(t, k, i));
    return out;
}

ParkingTree chain_to_ktree(const KChain& c) {
    if (!is_k_multichain(c)) throw std::invalid_argument("chain_to_ktree: not a multichain of parking trees");
    const int k = static_cast<int>(c.size());
    ParkingTree t = cut_build(c.back(), k, ChainIndex(c));
    if (ktree_to_chain(t, k) != c) throw std::logic_error("chain_to_ktree: cutting procedure is not inverse");
    return t;
}

// ---------------------------------------------------------------- Prufer codes

namespace {

struct FlatVertex {
    std::vector<int> label;
    int parent = -1;      // index of the parent vertex
    int parent_slot = -1; // child position in the parent
    std::vector<int> child_at;  // vertex index per slot, -1 for a leaf
};

void flatten(const ParkingTree& t, int parent, int slot, std::vector<FlatVertex>& out) {
    const int id = static_cast<int>(out.size());
    out.push_back({t.label, parent, slot, std::vector<int>(t.children.size(), -1)});
    if (parent >= 0) out[static_cast<std::size_t>(parent)].child_at[static_cast<std::size_t>(slot)] = id;
    for (std::size_t s = 0; s < t.children.size(); ++s)
        if (!t.children[s].is_leaf()) flatten(t.children[s], id, static_cast<int>(s), out);
}

}  // namespace

KTreeCode ktree_code(const ParkingTree& t, int k) {
    const int n = t.label_count();
    auto v = validate_k_tree(t, n, k);
    if (!v) throw std::invalid_argument(v.diagnostic);
    std::vector<FlatVertex> flat;
    flatten(t, -1, -1, flat);
    const std::size_t count = flat.size();
    // Vertices ordered by their minima; offsets give global half-edge numbers.
    std::vector<int> order(count);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return flat[static_cast<std::size_t>(a)].label.front() < flat[static_cast<std::size_t>(b)].label.front(); });
    std::vector<int> offset(count, 0);
    int running = 0;
    std::vector<Block> blocks;
    for (int id : order) {
        offset[static_cast<std::size_t>(id)] = running;
        running += k * static_cast<int>(flat[static_cast<std::size_t>(id)].label.size());
        blocks.push_back(flat[static_cast<std::size_t>(id)].label);
    }
    auto half_edge = [&](int id) {
        const FlatVertex& f = flat[static_cast<std::size_t>(id)];
        return offset[static_cast<std::size_t>(f.parent)] + f.parent_slot + 1;
    };
    KTreeCode code;
    code.vertices = SetPartition(n, blocks);
    for (std::size_t id = 1; id < count; ++id) code.used_half_edges.push_back(half_edge(static_cast<int>(id)));
    std::sort(code.used_half_edges.begin(), code.used_half_edges.end());
    // Delete the smallest leaf until only the root is left.
    std::vector<int> remaining(count, 0);
    for (std::size_t id = 1; id < count; ++id) ++remaining[static_cast<std::size_t>(flat[id].parent)];
    std::vector<char> deleted(count, 0);
    for (std::size_t step = 0; step + 1 < count; ++step) {
        int best = -1;
        for (int id : order)
            if (id != 0 && !deleted[static_cast<std::size_t>(id)] && remaining[static_cast<std::size_t>(id)] == 0) {
                best = id;
                break;
            }
        if (best < 0) throw std::logic_error("ktree_code: no leaf to delete");
        deleted[static_cast<std::size_t>(best)] = 1;
        --remaining[static_cast<std::size_t>(flat[static_cast<std::size_t>(best)].parent)];
        auto pos = std::lower_bound(code.used_half_edges.begin(), code.used_half_edges.end(), half_edge(best));
        code.word.push_back(static_cast<int>(pos - code.used_half_edges.begin()) + 1);
    }
    return code;
}

ParkingTree code_to_ktree(const KTreeCode& code, int k) {
    const int n = code.vertices.size();
    if (n < 1 || k < 1) throw std::invalid_argument("code_to_ktree: empty ground set or k not positive");
    const auto& blocks = code.vertices.blocks();
    const std::size_t count = blocks.size();
    const std::size_t l = count - 1;
    if (code.used_half_edges.size() != l || code.word.size() != l)
        throw std::invalid_argument("code_to_ktree: code sizes do not match the number of vertices");
    for (std::size_t i = 0; i < l; ++i) {
        int h = code.used_half_edges[i];
        if (h < 1 || h > k * n || (i && code.used_half_edges[i - 1] >= h))
            throw std::invalid_argument("code_to_ktree: half-edges must increase within 1..kn");
    }
    std::vector<int> sorted = code.word;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < l; ++i)
        if (sorted[i] != static_cast<int>(i) + 1) throw std::invalid_argument("code_to_ktree: word is not a permutation");
    // Owner vertex and slot of every global half-edge.
    std::vector<std::pair<int, int>> owner;
    for (std::size_t v = 0; v < count; ++v)
        for (int s = 0; s < k * static_cast<int>(blocks[v].size()); ++s) owner.emplace_back(static_cast<int>(v), s);
    std::vector<std::vector<int>> child_at(count);
    for (std::size_t v = 0; v < count; ++v) child_at[v].assign(static_cast<std::size_t>(k) * blocks[v].size(), -1);
    // Pending letters per tree, indexed by the root of the tree.
    std::vector<int> parent(count, -1);
    auto root_of = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] >= 0) v = parent[static_cast<std::size_t>(v)];
        return v;
    };
    std::vector<int> pending(count, 0);
    for (int h : code.used_half_edges) ++pending[static_cast<std::size_t>(owner[static_cast<std::size_t>(h - 1)].first)];
    std::vector<char> available(count, 0);
    for (std::size_t v = 0; v < count; ++v) available[v] = pending[v] == 0;
    for (int letter : code.word) {
        // Blocks are sorted by their minima, so the first available index is the smallest root.
        auto it = std::find(available.begin(), available.end(), 1);
        if (it == available.end()) throw std::invalid_argument("code_to_ktree: no complete tree to graft");
        const int t0 = static_cast<int>(it - available.begin());
        *it = 0;
        const auto [u, slot] = owner[static_cast<std::size_t>(code.used_half_edges[static_cast<std::size_t>(letter - 1)] - 1)];
        const int r = root_of(u);
        if (r == t0) throw std::invalid_argument("code_to_ktree: grafting would close a cycle");
        child_at[static_cast<std::size_t>(u)][static_cast<std::size_t>(slot)] = t0;
        parent[static_cast<std::size_t>(t0)] = u;
        if (--pending[static_cast<std::size_t>(r)] == 0) available[static_cast<std::size_t>(r)] = 1;
    }
    int root = root_of(0);
    std::function<ParkingTree(int)> build = [&](int v) {
        ParkingTree t;
        t.label = blocks[static_cast<std::size_t>(v)];
        for (int c : child_at[static_cast<std::size_t>(v)]) t.children.push_back(c < 0 ? ParkingTree::leaf() : build(c));
        return t;
    };
    return build(root);
}

std::vector<KTreeCode> enumerate_ktree_codes(int n, int k, int l) {
    if (n < 1 || n > 4 || k < 1 || l < 0 || l > n - 1)
        throw std::out_of_range("enumerate_ktree_codes: arguments outside the supported range");
    std::vector<KTreeCode> out;
    for (const auto& sp : enumerate_set_partitions(n)) {
        if (sp.block_count() != l + 1) continue;
        const int slots = k * n;
        std::vector<char> pick(static_cast<std::size_t>(slots), 0);
        std::fill(pick.begin(), pick.begin() + l, 1);
        do {
            std::vector<int> used;
            for (int h = 0; h < slots; ++h)
                if (pick[static_cast<std::size_t>(h)]) used.push_back(h + 1);
            std::vector<int> word(static_cast<std::size_t>(l));
            std::iota(word.begin(), word.end(), 1);
            do out.push_back({sp, used, word});
            while (std::next_permutation(word.begin(), word.end()));
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return out;
}

// ---------------------------------------------------------------- characters

Integer character_eval(CharacterKind kind, int k, const Permutation& sigma) {
    const int n = sigma.size();
    const int z = sigma.cycle_count();
    if (n < 1) throw std::invalid_argument("character_eval: empty permutation");
    switch (kind) {
        case CharacterKind::park_k: return power(Integer(k * n + 1), z - 1);
        case CharacterKind::park_prime: return power(Integer(n - 1), z - 1);
        case CharacterKind::park_prime_k: return power(Integer(k * n - 1), z - 1);
    }
    throw std::invalid_argument("character_eval: unsupported kind");
}

Integer character_oracle(CharacterKind kind, int k, const Permutation& sigma) {
    const int n = sigma.size();
    check_oracle_size(n, "character_oracle");
    if (k < 1) throw std::out_of_range("character_oracle: k must be positive");
    const PPPoset pp = build_pp_poset(n);
    std::vector<int> fixed;
    for (int i = 0; i < pp.poset.size(); ++i)
        if (act(sigma, pp.elements[static_cast<std::size_t>(i)]) == pp.elements[static_cast<std::size_t>(i)])
            fixed.push_back(i);
    if (kind == CharacterKind::park_prime) {
        Integer c = 0;
        for (int i : fixed)
            if (is_prime(pp.elements[static_cast<std::size_t>(i)])) ++c;
        return c;
    }
    if (kind != CharacterKind::park_k && kind != CharacterKind::park_prime_k)
        throw std::invalid_argument("character_oracle: unsupported kind");
    // A multichain is fixed iff each of its elements is fixed. Primeness is
    // read on the smallest element of the chain.
    std::vector<Integer> ending(fixed.size(), 1);
    if (kind == CharacterKind::park_prime_k)
        for (std::size_t x = 0; x < fixed.size(); ++x)
            ending[x] = is_prime(pp.elements[static_cast<std::size_t>(fixed[x])]) ? 1 : 0;
    for (int step = 1; step < k; ++step) {
        std::vector<Integer> next(fixed.size(), 0);
        for (std::size_t y = 0; y < fixed.size(); ++y)
            for (std::size_t x = 0; x < fixed.size(); ++x)
                if (pp.poset.leq(fixed[x], fixed[y])) next[y] += ending[x];
        ending = std::move(next);
    }
    Integer total = 0;
    for (const auto& e : ending) total += e;
    return total;
}

Integer dimension_identity_sum(int n, int k) {
    if (n < 1 || n > kMaxNCPosetN) throw std::out_of_range("dimension_identity_sum: n outside 1..9");
    Integer total = 0;
    for (const auto& pi : enumerate_noncrossing(n)) {
        Integer weight = factorial(n);
        for (const auto& b : pi.blocks()) weight /= factorial(static_cast<int>(b.size()));
        const NoncrossingPartition kp = kreweras(pi);
        for (const auto& b : kp.blocks()) weight *= fuss_catalan(static_cast<int>(b.size()), k);
        total += weight;
    }
    return total;
}

bool dimension_identity_check(int n, int k) {
    return dimension_identity_sum(n, k) == power(Integer(k * n + 1), n - 1);
}

}  // namespace ncpark
