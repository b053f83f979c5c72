#include "ncpark/topology.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace ncpark {

// ---------------------------------------------------------------- linear algebra

namespace {

using Column = std::vector<std::pair<int, Integer>>;

void normalize(Column& c) {
    Integer g = 0;
    for (const auto& e : c) g = gcd(g, e.second);
    if (g > 1)
        for (auto& e : c) e.second /= g;
}

// a * x - b * y, dropping zero entries.
Column combine(const Column& x, const Integer& a, const Column& y, const Integer& b) {
    Column out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        int r;
        Integer v;
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            r = x[i].first;
            v = a * x[i++].second;
        } else if (i == x.size() || y[j].first < x[i].first) {
            r = y[j].first;
            v = -b * y[j++].second;
        } else {
            r = x[i].first;
            v = a * x[i++].second - b * y[j++].second;
        }
        if (v != 0) out.emplace_back(r, std::move(v));
    }
    return out;
}

}  // namespace

int exact_rank(const SparseMatrix& m) {
    std::unordered_map<int, Column> pivots;  // lowest row -> reduced column
    int rank = 0;
    for (const auto& src : m.columns) {
        Column c;
        c.reserve(src.size());
        for (const auto& [r, v] : src)
            if (v != 0) c.emplace_back(r, Integer(v));
        while (!c.empty()) {
            auto it = pivots.find(c.back().first);
            if (it == pivots.end()) {
                normalize(c);
                pivots.emplace(c.back().first, std::move(c));
                ++rank;
                break;
            }
            const Column& p = it->second;
            Integer a = p.back().second, b = c.back().second;
            Integer g = gcd(a, b);
            c = combine(c, a / g, p, b / g);
            normalize(c);
        }
    }
    return rank;
}

bool product_is_zero(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("product_is_zero: shape mismatch");
    for (const auto& col : b.columns) {
        std::map<int, long long> acc;
        for (const auto& [k, v] : col)
            for (const auto& [r, w] : a.columns[static_cast<std::size_t>(k)]) acc[r] += static_cast<long long>(v) * w;
        for (const auto& e : acc)
            if (e.second != 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------- complexes

namespace {

bool face_order(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_faces(int vertex_count, std::vector<std::vector<int>> faces,
                                                std::vector<std::string> labels) {
    if (vertex_count < 0) throw std::invalid_argument("SimplicialComplex: negative vertex count");
    for (auto& f : faces) {
        std::sort(f.begin(), f.end());
        if (std::adjacent_find(f.begin(), f.end()) != f.end())
            throw std::invalid_argument("SimplicialComplex: repeated vertex in a face");
        for (int v : f)
            if (v < 0 || v >= vertex_count) throw std::invalid_argument("SimplicialComplex: vertex out of range");
    }
    faces.emplace_back();
    std::sort(faces.begin(), faces.end(), face_order);
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::set<std::vector<int>> present(faces.begin(), faces.end());
    for (const auto& f : faces)
        for (std::size_t i = 0; i < f.size(); ++i) {
            std::vector<int> g = f;
            g.erase(g.begin() + static_cast<std::ptrdiff_t>(i));
            if (!present.count(g)) throw std::invalid_argument("SimplicialComplex: face set is not closed under subsets");
        }
    if (!labels.empty() && static_cast<int>(labels.size()) != vertex_count)
        throw std::invalid_argument("SimplicialComplex: one label per vertex expected");
    SimplicialComplex c;
    c.vertex_count = vertex_count;
    c.faces = std::move(faces);
    c.vertex_labels = std::move(labels);
    return c;
}

SimplicialComplex SimplicialComplex::generated_by(int vertex_count, const std::vector<std::vector<int>>& faces,
                                                 std::vector<std::string> labels) {
    std::set<std::vector<int>> all;
    for (auto f : faces) {
        std::sort(f.begin(), f.end());
        if (f.size() > 20) throw std::out_of_range("SimplicialComplex::generated_by: face with more than 20 vertices");
        const std::size_t subsets = std::size_t{1} << f.size();
        for (std::size_t mask = 0; mask < subsets; ++mask) {
            std::vector<int> g;
            for (std::size_t i = 0; i < f.size(); ++i)
                if (mask >> i & 1) g.push_back(f[i]);
            all.insert(std::move(g));
        }
    }
    return from_faces(vertex_count, std::vector<std::vector<int>>(all.begin(), all.end()), std::move(labels));
}

int SimplicialComplex::dimension() const { return faces.empty() ? -1 : static_cast<int>(faces.back().size()) - 1; }

std::vector<std::vector<int>> SimplicialComplex::facets() const {
    std::set<std::vector<int>> covered;
    for (const auto& f : faces)
        for (std::size_t i = 0; i < f.size(); ++i) {
            std::vector<int> g = f;
            g.erase(g.begin() + static_cast<std::ptrdiff_t>(i));
            covered.insert(std::move(g));
        }
    std::vector<std::vector<int>> out;
    for (const auto& f : faces)
        if (!covered.count(f)) out.push_back(f);
    return out;
}

int ChainComplex::dim(int m) const {
    if (m < -1 || m > top()) return 0;
    return static_cast<int>(bases[static_cast<std::size_t>(m + 1)].size());
}

SparseMatrix ChainComplex::boundary(int m) const {
    if (m >= 0 && m <= top()) return boundaries[static_cast<std::size_t>(m)];
    SparseMatrix z;
    z.rows = dim(m - 1);
    z.cols = dim(m);
    z.columns.assign(static_cast<std::size_t>(z.cols), {});
    return z;
}

ChainComplex chain_complex(const SimplicialComplex& c) {
    ChainComplex out;
    for (const auto& f : c.faces) {
        std::size_t slot = f.size();
        if (out.bases.size() <= slot) out.bases.resize(slot + 1);
        out.bases[slot].push_back(f);
    }
    if (out.bases.empty()) out.bases.resize(1);
    std::vector<std::map<std::vector<int>, int>> index(out.bases.size());
    for (std::size_t s = 0; s < out.bases.size(); ++s)
        for (std::size_t i = 0; i < out.bases[s].size(); ++i) index[s][out.bases[s][i]] = static_cast<int>(i);
    for (int m = 0; m <= out.top(); ++m) {
        SparseMatrix d;
        d.rows = out.dim(m - 1);
        d.cols = out.dim(m);
        const auto& rows = index[static_cast<std::size_t>(m)];
        for (const auto& f : out.bases[static_cast<std::size_t>(m + 1)]) {
            std::vector<std::pair<int, int>> col;
            for (std::size_t i = 0; i < f.size(); ++i) {
                std::vector<int> g = f;
                g.erase(g.begin() + static_cast<std::ptrdiff_t>(i));
                // Position i+1 in the 1-based numbering carries (-1)^(i+1).
                col.emplace_back(rows.at(g), (i % 2 == 0) ? -1 : 1);
            }
            std::sort(col.begin(), col.end());
            d.columns.push_back(std::move(col));
        }
        out.boundaries.push_back(std::move(d));
    }
    return out;
}

bool boundary_squared_zero(const ChainComplex& c) {
    for (int m = 1; m <= c.top(); ++m)
        if (!product_is_zero(c.boundary(m - 1), c.boundary(m))) return false;
    return true;
}

std::vector<int> homology_ranks(const ChainComplex& c) {
    std::vector<int> rk(static_cast<std::size_t>(c.top() + 2), 0);  // rk[m] = rank d_m
    for (int m = 0; m <= c.top(); ++m) rk[static_cast<std::size_t>(m)] = exact_rank(c.boundary(m));
    std::vector<int> out;
    for (int m = -1; m <= c.top(); ++m) {
        int in = m >= 0 ? rk[static_cast<std::size_t>(m)] : 0;
        int from_above = rk[static_cast<std::size_t>(m + 1)];
        out.push_back(c.dim(m) - in - from_above);
    }
    return out;
}

Integer reduced_euler_characteristic(const ChainComplex& c) {
    Integer chi = 0;
    for (int m = -1; m <= c.top(); ++m) chi += (m % 2 == 0 ? 1 : -1) * Integer(c.dim(m));
    return chi;
}

Integer lefschetz_number(const SimplicialComplex& c, const std::vector<int>& vertex_map) {
    if (static_cast<int>(vertex_map.size()) != c.vertex_count)
        throw std::invalid_argument("lefschetz_number: vertex map has the wrong length");
    std::set<std::vector<int>> present(c.faces.begin(), c.faces.end());
    Integer total = 0;
    for (const auto& f : c.faces) {
        std::vector<int> img;
        img.reserve(f.size());
        for (int v : f) {
            if (v < 0 || v >= c.vertex_count) throw std::invalid_argument("lefschetz_number: face out of range");
            int w = vertex_map[static_cast<std::size_t>(v)];
            if (w < 0 || w >= c.vertex_count) throw std::invalid_argument("lefschetz_number: image out of range");
            img.push_back(w);
        }
        std::vector<int> sorted = img;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || !present.count(sorted))
            throw std::invalid_argument("lefschetz_number: vertex map is not a simplicial automorphism");
        if (sorted != f) continue;
        // Sign of the permutation i -> position of img[i] in f.
        std::vector<int> pos(f.size());
        for (std::size_t i = 0; i < f.size(); ++i)
            pos[i] = static_cast<int>(std::lower_bound(f.begin(), f.end(), img[i]) - f.begin());
        int sign = 1;
        std::vector<bool> seen(f.size(), false);
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (seen[i]) continue;
            std::size_t len = 0;
            for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(pos[j])) {
                seen[j] = true;
                ++len;
            }
            if (len % 2 == 0) sign = -sign;
        }
        int dim = static_cast<int>(f.size()) - 1;
        total += (dim % 2 == 0 ? 1 : -1) * sign;
    }
    return total;
}

Integer concentrated_character(const SimplicialComplex& c, const std::vector<int>& ranks,
                               const std::vector<int>& vertex_map) {
    int degree = -2;
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        if (ranks[i] == 0) continue;
        if (degree != -2) throw std::invalid_argument("concentrated_character: homology is not concentrated in one degree");
        degree = static_cast<int>(i) - 1;
    }
    if (degree == -2) return 0;
    Integer l = lefschetz_number(c, vertex_map);
    return (degree % 2 == 0) ? l : Integer(-l);
}

// ---------------------------------------------------------------- order complexes

OrderComplex order_complex(const FinitePoset& p) {
    if (p.size() > kMaxOrderComplexPoset) throw std::out_of_range("order_complex: poset larger than 1500 elements");
    auto bottom = p.bottom();
    if (!bottom) throw std::invalid_argument("order_complex: poset has no bottom to remove");
    auto top = p.top();
    OrderComplex oc;
    oc.vertex_of_element.assign(static_cast<std::size_t>(p.size()), -1);
    for (int x : p.linear_extension()) {
        if (x == *bottom || (top && x == *top)) continue;
        oc.vertex_of_element[static_cast<std::size_t>(x)] = static_cast<int>(oc.element_of_vertex.size());
        oc.element_of_vertex.push_back(x);
    }
    const int nv = static_cast<int>(oc.element_of_vertex.size());
    std::vector<std::vector<int>> above(static_cast<std::size_t>(nv));
    for (int v = 0; v < nv; ++v)
        for (int w = v + 1; w < nv; ++w)
            if (p.less(oc.element_of_vertex[static_cast<std::size_t>(v)], oc.element_of_vertex[static_cast<std::size_t>(w)]))
                above[static_cast<std::size_t>(v)].push_back(w);
    std::vector<std::vector<int>> faces;
    std::vector<int> chain;
    auto grow = [&](auto&& self, int v) -> void {
        chain.push_back(v);
        if (static_cast<long long>(faces.size()) >= kMaxSimplices)
            throw std::out_of_range("order_complex: more than 2000000 simplices");
        faces.push_back(chain);
        for (int w : above[static_cast<std::size_t>(v)]) self(self, w);
        chain.pop_back();
    };
    for (int v = 0; v < nv; ++v) grow(grow, v);
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(nv));
    for (int x : oc.element_of_vertex) labels.push_back(p.label(x));
    // Chains are closed under subsets by construction; sorting is all that is needed.
    faces.emplace_back();
    std::sort(faces.begin(), faces.end(), face_order);
    oc.complex.vertex_count = nv;
    oc.complex.faces = std::move(faces);
    oc.complex.vertex_labels = std::move(labels);
    return oc;
}

PosetHomology poset_homology(const FinitePoset& p) {
    PosetHomology h;
    h.order = order_complex(p);
    h.chains = chain_complex(h.order.complex);
    h.ranks = homology_ranks(h.chains);
    return h;
}

Integer homology_character(const PosetHomology& h, const std::vector<int>& element_map) {
    const auto& oc = h.order;
    if (element_map.size() != oc.vertex_of_element.size())
        throw std::invalid_argument("homology_character: element map has the wrong length");
    std::vector<int> vmap;
    vmap.reserve(oc.element_of_vertex.size());
    for (int x : oc.element_of_vertex) {
        int y = element_map[static_cast<std::size_t>(x)];
        if (y < 0 || y >= static_cast<int>(oc.vertex_of_element.size()) || oc.vertex_of_element[static_cast<std::size_t>(y)] < 0)
            throw std::invalid_argument("homology_character: map does not preserve the proper part");
        vmap.push_back(oc.vertex_of_element[static_cast<std::size_t>(y)]);
    }
    return concentrated_character(oc.complex, h.ranks, vmap);
}

std::vector<int> pp_action_map(const PPPoset& p, const Permutation& sigma) {
    if (sigma.size() != p.n) throw std::invalid_argument("pp_action_map: permutation size differs from n");
    std::vector<int> out;
    out.reserve(p.elements.size());
    for (const auto& x : p.elements) out.push_back(p.id(act(sigma, x)));
    return out;
}

Integer homology_character_formula(int k, const Permutation& sigma) {
    const int n = sigma.size();
    const int z = sigma.cycle_count();
    Integer v = power(Integer(k) * n - 1, z - 1);
    return ((n - z) % 2 == 0) ? v : Integer(-v);
}

// ---------------------------------------------------------------- Whitney modules

std::vector<Integer> whitney_module_dims(int n) {
    if (n < 1 || n > 5) throw std::out_of_range("whitney_module_dims: n outside 1..5");
    std::vector<Integer> dims(static_cast<std::size_t>(n), 0);
    for (const auto& pi : enumerate_noncrossing(n)) {
        Integer term = factorial(n);
        for (const auto& b : pi.blocks()) term /= factorial(static_cast<int>(b.size()));
        const NoncrossingPartition k = kreweras(pi);
        for (const auto& b : k.blocks()) term *= catalan(static_cast<int>(b.size()) - 1);
        dims[static_cast<std::size_t>(pi.block_count() - 1)] += term;
    }
    return dims;
}

Integer whitney_module_alternating_sum(int n) {
    auto dims = whitney_module_dims(n);
    Integer s = 0;
    for (std::size_t l = 0; l < dims.size(); ++l) s += (l % 2 == 0) ? dims[l] : Integer(-dims[l]);
    return (n % 2 == 1) ? s : Integer(-s);
}

bool kreweras_mobius_check(int n) {
    NCPoset nc = build_nc_poset(n);
    auto bottom = nc.poset.bottom();
    if (!bottom) throw std::logic_error("kreweras_mobius_check: NC_n without bottom");
    auto mu = mobius_from(nc.poset, *bottom);
    for (std::size_t i = 0; i < nc.elements.size(); ++i) {
        Integer prod = 1;
        const NoncrossingPartition k = kreweras(nc.elements[i]);
        for (const auto& b : k.blocks()) prod *= catalan(static_cast<int>(b.size()) - 1);
        if (abs(mu[i]) != prod) return false;
    }
    return true;
}

// ---------------------------------------------------------------- alternating forests

namespace {

// {i,j} then {k,l} with i < k <= j < l.
bool forbidden(const std::pair<int, int>& a, const std::pair<int, int>& b) {
    return a.first < b.first && b.first <= a.second && a.second < b.second;
}

int find_root(std::vector<int>& parent, int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
}

}  // namespace

bool edges_compatible(const std::pair<int, int>& a, const std::pair<int, int>& b) {
    return !forbidden(a, b) && !forbidden(b, a);
}

bool is_alternating_forest(const Forest& f, int n) {
    std::vector<int> parent(static_cast<std::size_t>(n + 1));
    std::iota(parent.begin(), parent.end(), 0);
    for (std::size_t a = 0; a < f.size(); ++a) {
        auto [i, j] = f[a];
        if (i < 1 || j > n || i >= j) return false;
        for (std::size_t b = 0; b < a; ++b)
            if (f[b] == f[a] || !edges_compatible(f[a], f[b])) return false;
        int ri = find_root(parent, i), rj = find_root(parent, j);
        if (ri == rj) return false;
        parent[static_cast<std::size_t>(ri)] = rj;
    }
    return true;
}

NoncrossingPartition underline(const Forest& f, int n) {
    std::vector<int> parent(static_cast<std::size_t>(n + 1));
    std::iota(parent.begin(), parent.end(), 0);
    for (auto [i, j] : f) {
        if (i < 1 || j > n || i == j) throw std::invalid_argument("underline: edge outside 1..n");
        parent[static_cast<std::size_t>(find_root(parent, i))] = find_root(parent, j);
    }
    std::map<int, Block> comp;
    for (int x = 1; x <= n; ++x) comp[find_root(parent, x)].push_back(x);
    std::vector<Block> blocks;
    for (auto& e : comp) blocks.push_back(std::move(e.second));
    return NoncrossingPartition(n, std::move(blocks));
}

Forest ForestComplex::forest(const std::vector<int>& face) const {
    Forest f;
    for (int v : face) f.push_back(edges[static_cast<std::size_t>(v)]);
    std::sort(f.begin(), f.end());
    return f;
}

ForestComplex forest_complex(int n, bool boundary) {
    if (n < 1 || n > kMaxForestN) throw std::out_of_range("forest_complex: n outside 1..7");
    ForestComplex c;
    c.n = n;
    c.boundary = boundary;
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            if (boundary && i == 1 && j == n) continue;
            c.edges.emplace_back(i, j);
            labels.push_back(std::to_string(i) + "-" + std::to_string(j));
        }
    const int nv = static_cast<int>(c.edges.size());
    std::vector<std::vector<int>> faces;
    std::vector<int> face;
    // Edges are added in increasing vertex order; the union-find state is
    // copied per branch since n is small.
    auto grow = [&](auto&& self, int from, std::vector<int> parent) -> void {
        faces.push_back(face);
        for (int v = from; v < nv; ++v) {
            const auto& e = c.edges[static_cast<std::size_t>(v)];
            bool ok = true;
            for (int u : face)
                if (!edges_compatible(c.edges[static_cast<std::size_t>(u)], e)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            std::vector<int> next = parent;
            int ri = find_root(next, e.first), rj = find_root(next, e.second);
            if (ri == rj) continue;
            next[static_cast<std::size_t>(ri)] = rj;
            face.push_back(v);
            self(self, v + 1, std::move(next));
            face.pop_back();
        }
    };
    std::vector<int> parent(static_cast<std::size_t>(n + 1));
    std::iota(parent.begin(), parent.end(), 0);
    grow(grow, 0, parent);
    std::sort(faces.begin(), faces.end(), face_order);
    c.complex.vertex_count = nv;
    c.complex.faces = std::move(faces);
    c.complex.vertex_labels = std::move(labels);
    return c;
}

Integer forest_fiber_count(const ForestComplex& c, const NoncrossingPartition& pi) {
    if (pi.size() != c.n) throw std::invalid_argument("forest_fiber_count: partition size differs from n");
    Integer count = 0;
    for (const auto& f : c.complex.faces)
        if (underline(c.forest(f), c.n) == pi) ++count;
    return count;
}

Integer forest_fiber_formula(const NoncrossingPartition& pi) {
    Integer prod = 1;
    for (const auto& b : pi.blocks()) prod *= catalan(static_cast<int>(b.size()) - 1);
    return prod;
}

int right_branch_size(const ParkingTree& t) {
    int count = 0;
    for (const ParkingTree* v = &t; !v->is_leaf(); v = &v->children.back()) ++count;
    return count;
}

ParkingTree kreweras_block_tree(const ParkingObject& p, const Block& b) {
    if (b.empty()) throw std::invalid_argument("kreweras_block_tree: empty block");
    // Point j of K(pi) sits between positions j-1 and j of pi, so the arches
    // of b enclose the positions b_1 .. b_s - 1.
    return interval_tree(p, b.front(), b.back() - 1);
}

bool right_branch_check(int n) {
    if (n < 1 || n > 4) throw std::out_of_range("right_branch_check: n outside 1..4");
    for (const auto& p : enumerate_parking_objects(n)) {
        const NoncrossingPartition k = kreweras(p.pi());
        for (const auto& b : k.blocks())
            if (static_cast<int>(b.size()) != right_branch_size(kreweras_block_tree(p, b)) + 1) return false;
    }
    return true;
}

// ---------------------------------------------------------------- cluster parking functions

ClusterComplex cluster_complex(int n) {
    if (n < 1 || n > kMaxClusterN) throw std::out_of_range("cluster_complex: n outside 1..4");
    ForestComplex delta = forest_complex(n);
    PPPoset pp = build_pp_poset(n);
    std::map<NoncrossingPartition, std::vector<int>> by_pi;
    for (std::size_t i = 0; i < pp.elements.size(); ++i) by_pi[pp.elements[i].pi()].push_back(static_cast<int>(i));

    struct Raw {
        Forest f;
        int phi;
    };
    std::vector<Raw> raw;
    for (const auto& face : delta.complex.faces) {
        Forest f = delta.forest(face);
        auto it = by_pi.find(kreweras(underline(f, n)));
        if (it == by_pi.end()) continue;
        for (int phi : it->second) raw.push_back({f, phi});
    }
    std::sort(raw.begin(), raw.end(), [&](const Raw& a, const Raw& b) {
        if (a.f.size() != b.f.size()) return a.f.size() < b.f.size();
        if (a.f != b.f) return a.f < b.f;
        return a.phi < b.phi;
    });

    ClusterComplex c;
    c.n = n;
    std::vector<std::string> labels;
    for (const auto& r : raw) {
        c.elements.emplace_back(r.f, pp.elements[static_cast<std::size_t>(r.phi)]);
        std::string s = "{";
        for (std::size_t i = 0; i < r.f.size(); ++i)
            s += (i ? "," : "") + std::to_string(r.f[i].first) + std::to_string(r.f[i].second);
        labels.push_back(s + "}:" + pp.poset.label(r.phi));
    }
    auto leq = [&](int x, int y) {
        const Raw& a = raw[static_cast<std::size_t>(x)];
        const Raw& b = raw[static_cast<std::size_t>(y)];
        return std::includes(b.f.begin(), b.f.end(), a.f.begin(), a.f.end()) && pp.poset.leq(a.phi, b.phi);
    };
    c.poset = FinitePoset::from_leq(static_cast<int>(raw.size()), leq, std::move(labels));

    for (int x = 0; x < c.poset.size(); ++x)
        if (c.poset.rank(x) == 1) c.vertices.push_back(x);
    std::vector<std::vector<int>> faces;
    for (int x = 0; x < c.poset.size(); ++x) {
        std::vector<int> s;
        for (std::size_t v = 0; v < c.vertices.size(); ++v)
            if (c.poset.leq(c.vertices[v], x)) s.push_back(static_cast<int>(v));
        c.support.push_back(s);
        faces.push_back(std::move(s));
    }
    if (!cluster_support_injective(c)) throw std::logic_error("cluster_complex: two elements share a support");
    std::vector<std::string> vlabels;
    for (int v : c.vertices) vlabels.push_back(c.poset.label(v));
    c.complex = SimplicialComplex::from_faces(static_cast<int>(c.vertices.size()), std::move(faces), std::move(vlabels));
    return c;
}

bool cluster_support_injective(const ClusterComplex& c) {
    std::set<std::vector<int>> seen(c.support.begin(), c.support.end());
    return seen.size() == c.support.size();
}

bool cluster_ideals_boolean(const ClusterComplex& c) {
    for (int x = 0; x < c.poset.size(); ++x) {
        const auto& sx = c.support[static_cast<std::size_t>(x)];
        const int r = c.poset.rank(x);
        if (static_cast<int>(sx.size()) != r) return false;
        const auto& down = c.poset.down_set(x);
        if (down.count() != (std::size_t{1} << r)) return false;
        // Supports below x are distinct subsets of sx, hence all of them;
        // the order must match inclusion.
        std::vector<int> ideal;
        for (auto y = down.find_first(); y != boost::dynamic_bitset<>::npos; y = down.find_next(y)) ideal.push_back(static_cast<int>(y));
        std::set<std::vector<int>> subsets;
        for (int y : ideal) {
            const auto& sy = c.support[static_cast<std::size_t>(y)];
            if (!std::includes(sx.begin(), sx.end(), sy.begin(), sy.end())) return false;
            subsets.insert(sy);
        }
        if (subsets.size() != ideal.size()) return false;
        for (int y : ideal)
            for (int z : ideal) {
                const auto& sy = c.support[static_cast<std::size_t>(y)];
                const auto& sz = c.support[static_cast<std::size_t>(z)];
                if (c.poset.leq(y, z) != std::includes(sz.begin(), sz.end(), sy.begin(), sy.end())) return false;
            }
    }
    return true;
}

std::vector<Integer> cluster_whitney(const ClusterComplex& c) {
    std::vector<Integer> out;
    for (int x = 0; x < c.poset.size(); ++x) {
        auto r = static_cast<std::size_t>(c.poset.rank(x));
        if (out.size() <= r) out.resize(r + 1, 0);
        out[r] += 1;
    }
    return out;
}

}  // namespace ncpark
