#include "ncpark/pp_poset.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncpark {

bool pp_leq(const ParkingObject& a, const ParkingObject& b) {
    if (a.size() != b.size()) throw std::invalid_argument("pp_leq: size mismatch");
    auto ea = eta(a);
    auto eb = eta(b);
    for (std::size_t k = 0; k < ea.size(); ++k)
        if (!std::includes(ea[k].begin(), ea[k].end(), eb[k].begin(), eb[k].end())) return false;
    return true;
}

bool pp_leq_definition(const ParkingObject& a, const ParkingObject& b) {
    if (a.size() != b.size()) throw std::invalid_argument("pp_leq_definition: size mismatch");
    NC2Triple ta = a.triple();
    NC2Triple tb = b.triple();
    if (!tb.pi.refines(ta.pi) || !tb.rho.refines(ta.rho)) return false;
    std::vector<Block> unions(static_cast<std::size_t>(ta.pi.block_count()));
    for (int i = 0; i < tb.pi.block_count(); ++i) {
        int outer = ta.pi.block_index(tb.pi.block(i).front());
        const Block& img = tb.rho.block(tb.lam[static_cast<std::size_t>(i)]);
        auto& u = unions[static_cast<std::size_t>(outer)];
        u.insert(u.end(), img.begin(), img.end());
    }
    for (int o = 0; o < ta.pi.block_count(); ++o) {
        auto& u = unions[static_cast<std::size_t>(o)];
        std::sort(u.begin(), u.end());
        if (u != ta.rho.block(ta.lam[static_cast<std::size_t>(o)])) return false;
    }
    return true;
}

std::vector<ParkingObject> pp_upper_covers_direct(const ParkingObject& a) {
    std::vector<ParkingObject> out;
    const int n = a.size();
    const auto& blocks = a.pi().blocks();
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
        const Block& b = blocks[bi];
        const std::size_t s = b.size();
        if (s < 2) continue;
        std::vector<int> images;
        for (int x : b) images.push_back(a.sigma()(x));
        std::sort(images.begin(), images.end());
        // The part containing min b is described by a mask over the other elements.
        for (unsigned mask = 0; mask + 1 < (1u << (s - 1)); ++mask) {
            Block b1{b[0]}, b2;
            for (std::size_t j = 1; j < s; ++j) (mask & (1u << (j - 1)) ? b1 : b2).push_back(b[j]);
            Block l1{1}, l2;
            for (std::size_t j = 1; j < s; ++j) (mask & (1u << (j - 1)) ? l1 : l2).push_back(static_cast<int>(j) + 1);
            if (!SetPartition(static_cast<int>(s), {l1, l2}).is_noncrossing()) continue;
            std::vector<char> pick(s, 0);
            std::fill(pick.end() - static_cast<std::ptrdiff_t>(b1.size()), pick.end(), 1);
            do {
                std::vector<int> t1, t2;
                for (std::size_t j = 0; j < s; ++j) (pick[j] ? t1 : t2).push_back(images[j]);
                std::vector<int> w = a.sigma().one_line();
                for (std::size_t j = 0; j < b1.size(); ++j) w[static_cast<std::size_t>(b1[j] - 1)] = t1[j];
                for (std::size_t j = 0; j < b2.size(); ++j) w[static_cast<std::size_t>(b2[j] - 1)] = t2[j];
                std::vector<Block> nb;
                for (std::size_t o = 0; o < blocks.size(); ++o)
                    if (o != bi) nb.push_back(blocks[o]);
                nb.push_back(b1);
                nb.push_back(b2);
                out.emplace_back(NoncrossingPartition(n, std::move(nb)), Permutation(std::move(w)));
            } while (std::next_permutation(pick.begin(), pick.end()));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

ParkingTree graft_rightmost(const ParkingTree& t, const ParkingTree& node) {
    if (t.is_leaf()) return node;
    ParkingTree copy = t;
    copy.children.back() = graft_rightmost(t.children.back(), node);
    return copy;
}

void surgery(const ParkingTree& t, std::vector<ParkingTree>& out) {
    if (t.is_leaf()) return;
    const std::size_t a = t.label.size();
    for (unsigned mask = 1; mask + 1 < (1u << a); ++mask) {
        std::vector<int> a1, a2;
        for (std::size_t i = 0; i < a; ++i) (mask & (1u << i) ? a2 : a1).push_back(t.label[i]);
        const std::size_t b = a2.size();
        for (std::size_t j = 1; j + b <= a; ++j) {
            ParkingTree split;
            split.label = a2;
            split.children.assign(t.children.begin() + static_cast<std::ptrdiff_t>(j),
                                  t.children.begin() + static_cast<std::ptrdiff_t>(j + b));
            ParkingTree root;
            root.label = a1;
            root.children.assign(t.children.begin(), t.children.begin() + static_cast<std::ptrdiff_t>(j));
            root.children.back() = graft_rightmost(root.children.back(), split);
            root.children.insert(root.children.end(), t.children.begin() + static_cast<std::ptrdiff_t>(j + b),
                                 t.children.end());
            out.push_back(std::move(root));
        }
    }
    for (std::size_t c = 0; c < t.children.size(); ++c) {
        std::vector<ParkingTree> sub;
        surgery(t.children[c], sub);
        for (auto& s : sub) {
            ParkingTree copy = t;
            copy.children[c] = std::move(s);
            out.push_back(std::move(copy));
        }
    }
}

}  // namespace

std::vector<ParkingTree> tree_upper_covers(const ParkingTree& t) {
    std::vector<ParkingTree> out;
    surgery(t, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<ParkingObject> pp_upper_covers(const ParkingObject& a) {
    std::vector<ParkingObject> out;
    for (const auto& t : tree_upper_covers(pair_to_tree(a))) out.push_back(tree_to_pair(t));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out != pp_upper_covers_direct(a))
        throw std::logic_error("pp_upper_covers: tree surgery disagrees with block splitting");
    return out;
}

ParkingObject pp_descend(const ParkingObject& phi, const NoncrossingPartition& pi2) {
    if (!nc_leq(pi2, phi.pi())) throw std::invalid_argument("pp_descend: partition is not below pi");
    std::vector<int> idx;
    for (const auto& b : eta(phi)) idx.push_back(pi2.block_index(b.front()));
    return from_eta(pi2, idx);
}

std::vector<ParkingObject> pp_ideal(const ParkingObject& phi) {
    std::vector<ParkingObject> out;
    for (const auto& p : enumerate_noncrossing(phi.size()))
        if (nc_leq(p, phi.pi())) out.push_back(pp_descend(phi, p));
    std::sort(out.begin(), out.end());
    return out;
}

bool hat_leq(const HatElement& a, const HatElement& b) {
    if (!b) return true;
    if (!a) return false;
    return pp_leq(*a, *b);
}

HatElement pp_join(const HatElement& a, const HatElement& b) {
    if (!a || !b) return std::nullopt;
    if (a->size() != b->size()) throw std::invalid_argument("pp_join: size mismatch");
    const int n = a->size();
    auto ea = eta(*a);
    auto eb = eta(*b);
    std::vector<Block> inter(static_cast<std::size_t>(n));
    for (std::size_t k = 0; k < inter.size(); ++k) {
        std::set_intersection(ea[k].begin(), ea[k].end(), eb[k].begin(), eb[k].end(), std::back_inserter(inter[k]));
        if (inter[k].empty()) return std::nullopt;
    }
    std::map<Block, int> count;
    for (const auto& b : inter) ++count[b];
    std::vector<Block> blocks;
    for (const auto& [blk, c] : count) {
        if (c != static_cast<int>(blk.size())) return std::nullopt;
        blocks.push_back(blk);
    }
    NoncrossingPartition pi(n, std::move(blocks));
    std::vector<int> idx;
    for (const auto& b : inter) idx.push_back(pi.block_index(b.front()));
    ParkingObject j = from_eta(pi, idx);
    if (!pp_leq(*a, j) || !pp_leq(*b, j)) throw std::logic_error("pp_join: result is not an upper bound");
    return j;
}

HatElement pp_meet(const HatElement& a, const HatElement& b) {
    if (!a) return b;
    if (!b) return a;
    HatElement acc;
    bool first = true;
    for (const auto& x : pp_ideal(*a)) {
        if (!pp_leq(x, *b)) continue;
        acc = first ? HatElement(x) : pp_join(acc, x);
        first = false;
    }
    if (first) throw std::logic_error("pp_meet: no common lower bound");
    return acc;
}

PPPoset build_pp_poset(int n) {
    if (n < 1 || n > kMaxPosetN) throw std::out_of_range("build_pp_poset: n must lie in 1..5");
    PPPoset out;
    out.n = n;
    out.elements = enumerate_parking_objects(n);
    for (std::size_t i = 0; i < out.elements.size(); ++i) out.index.emplace(out.elements[i], static_cast<int>(i));
    std::vector<std::vector<int>> upper(out.elements.size());
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < out.elements.size(); ++i) {
        for (const auto& c : pp_upper_covers(out.elements[i])) upper[i].push_back(out.index.at(c));
        labels.push_back(word_str(out.elements[i].word()));
    }
    out.poset = FinitePoset::from_covers(std::move(upper), std::move(labels));
    return out;
}

int NCPoset::id(const NoncrossingPartition& p) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), p);
    if (it == elements.end() || !(*it == p)) throw std::invalid_argument("NCPoset::id: partition not in the poset");
    return static_cast<int>(it - elements.begin());
}

NCPoset build_nc_poset(int n) {
    if (n < 1 || n > kMaxNCPosetN) throw std::out_of_range("build_nc_poset: n must lie in 1..9");
    NCPoset out;
    out.n = n;
    out.elements = enumerate_noncrossing(n);
    std::vector<std::string> labels;
    for (const auto& p : out.elements) labels.push_back(p.str());
    out.poset = FinitePoset::from_leq(
        static_cast<int>(out.elements.size()),
        [&](int i, int j) { return nc_leq(out.elements[static_cast<std::size_t>(i)], out.elements[static_cast<std::size_t>(j)]); },
        std::move(labels));
    return out;
}

namespace {
std::string composition_str(const std::vector<std::vector<int>>& c) {
    std::string s;
    for (const auto& part : c) {
        s += '{';
        for (std::size_t i = 0; i < part.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(part[i]);
        }
        s += '}';
    }
    return s;
}
}  // namespace

CompositionPoset permutahedron_face_poset(int n) {
    if (n < 1 || n > kMaxPosetN) throw std::out_of_range("permutahedron_face_poset: n must lie in 1..5");
    CompositionPoset out;
    out.elements = enumerate_set_compositions(n);
    std::map<std::vector<std::vector<int>>, int> index;
    for (std::size_t i = 0; i < out.elements.size(); ++i) index.emplace(out.elements[i], static_cast<int>(i));
    std::vector<std::vector<int>> upper(out.elements.size());
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < out.elements.size(); ++i) {
        const auto& c = out.elements[i];
        labels.push_back(composition_str(c));
        for (std::size_t l = 0; l + 1 < c.size(); ++l) {
            auto merged = c;
            merged[l].insert(merged[l].end(), c[l + 1].begin(), c[l + 1].end());
            std::sort(merged[l].begin(), merged[l].end());
            merged.erase(merged.begin() + static_cast<std::ptrdiff_t>(l + 1));
            upper[static_cast<std::size_t>(index.at(merged))].push_back(static_cast<int>(i));
        }
    }
    out.poset = FinitePoset::from_covers(std::move(upper), std::move(labels));
    return out;
}

RightCombComparison right_comb_subposet(int n) {
    RightCombComparison out;
    out.faces = permutahedron_face_poset(n);
    for (const auto& p : enumerate_parking_objects(n))
        if (is_right_comb(pair_to_tree(p))) out.combs.push_back(p);
    std::vector<std::string> labels;
    for (const auto& p : out.combs) labels.push_back(word_str(p.word()));
    out.comb_poset = FinitePoset::from_leq(
        static_cast<int>(out.combs.size()),
        [&](int i, int j) { return pp_leq(out.combs[static_cast<std::size_t>(i)], out.combs[static_cast<std::size_t>(j)]); },
        std::move(labels));
    for (const auto& c : out.faces.elements) {
        ParkingObject p = tree_to_pair(composition_to_right_comb(c, n));
        auto it = std::lower_bound(out.combs.begin(), out.combs.end(), p);
        out.witness.push_back(it != out.combs.end() && *it == p ? static_cast<int>(it - out.combs.begin()) : -1);
    }
    out.isomorphic = is_order_isomorphism(out.faces.poset, out.comb_poset, out.witness);
    return out;
}

}  // namespace ncpark
