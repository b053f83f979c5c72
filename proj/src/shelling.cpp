#include "ncpark/shelling.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ncpark {

std::vector<int> code(const ParkingObject& p) { return permutation_code(p.sigma()); }

int p0_from_code(const ParkingObject& p) {
    auto c = code(p);
    int k = 0;
    while (k < static_cast<int>(c.size()) && c[static_cast<std::size_t>(k)] == 0) ++k;
    return k;
}

int p0_from_eta(const ParkingObject& p) {
    const int n = p.size();
    auto e = eta(p);
    int k = 0;
    while (k < n) {
        const int i = n - k;
        const Block& b = e[static_cast<std::size_t>(i - 1)];
        if (!std::binary_search(b.begin(), b.end(), i)) break;
        ++k;
    }
    return k;
}

std::pair<int, int> el_label(const NoncrossingPartition& x, const NoncrossingPartition& y) {
    if (x.size() != y.size() || y.block_count() != x.block_count() + 1 || !nc_leq(x, y))
        throw std::invalid_argument("el_label: not a cover relation");
    // x^{-1} applied first, then y.
    Permutation t = embed_permutation(y) * embed_permutation(x).inverse();
    std::vector<int> moved;
    for (int i = 1; i <= t.size(); ++i)
        if (t(i) != i) moved.push_back(i);
    if (moved.size() != 2) throw std::logic_error("el_label: label of a cover is not a transposition");
    return {moved[0], moved[1]};
}

namespace {

LemmaReport named_report(std::string name) {
    LemmaReport r;
    r.name = std::move(name);
    return r;
}

bool is_cover(const ParkingObject& phi, const ParkingObject& psi) {
    return psi.size() == phi.size() && psi.rank() == phi.rank() + 1 && pp_leq(phi, psi);
}

// m-statistic from the two codes (entry 0 holds c_n).
int m_from_codes(const std::vector<int>& a, const std::vector<int>& b) {
    const int n = static_cast<int>(a.size());
    for (int idx = 0; idx < n; ++idx)
        if (a[static_cast<std::size_t>(idx)] < b[static_cast<std::size_t>(idx)]) return n - idx;
    return 0;
}

Block split_block(const ParkingObject& phi, const ParkingObject& psi) {
    for (const auto& b : phi.pi().blocks()) {
        const Block& other = psi.pi().block_of(b.front());
        if (other != b) return b;
    }
    throw std::logic_error("split_block: no block is split");
}

std::string chain_str(const std::vector<int>& ids, const PPPoset& pp) {
    std::string s;
    for (int id : ids) {
        if (!s.empty()) s += " < ";
        s += id == static_cast<int>(pp.elements.size()) ? std::string("top") : word_str(pp.elements[static_cast<std::size_t>(id)].word());
    }
    return s;
}

// Element tables shared by the exhaustive checks. Indices follow PPPoset;
// the adjoined top gets index size().
struct Context {
    PPPoset pp;
    FinitePoset hat;
    int top = 0;
    std::vector<std::vector<int>> codes;
    std::vector<std::vector<int>> order;  // upper covers in the bounded poset, in cover order
    std::vector<int> p0;
    std::vector<char> tied;               // two covers of the element share a key
    std::map<std::pair<int, int>, int> join_cache;

    explicit Context(int n) : pp(build_pp_poset(n)) {
        hat = pp.poset.with_top();
        top = static_cast<int>(pp.elements.size());
        for (const auto& e : pp.elements) {
            codes.push_back(code(e));
            p0.push_back(p0_from_code(e));
        }
        order.resize(pp.elements.size());
        tied.assign(pp.elements.size(), 0);
        for (int x = 0; x < top; ++x) {
            const ParkingObject& phi = pp.elements[static_cast<std::size_t>(x)];
            if (pp.poset.upper_covers(x).empty()) {
                order[static_cast<std::size_t>(x)] = {top};
                continue;
            }
            std::vector<std::pair<CoverKey, int>> keyed;
            for (int y : pp.poset.upper_covers(x)) keyed.emplace_back(cover_key(phi, pp.elements[static_cast<std::size_t>(y)]), y);
            std::sort(keyed.begin(), keyed.end());
            for (std::size_t i = 0; i + 1 < keyed.size(); ++i)
                if (keyed[i].first == keyed[i + 1].first) tied[static_cast<std::size_t>(x)] = 1;
            for (const auto& [k, y] : keyed) order[static_cast<std::size_t>(x)].push_back(y);
        }
    }

    const ParkingObject& el(int id) const { return pp.elements[static_cast<std::size_t>(id)]; }
    const std::vector<int>& code_of(int id) const { return codes[static_cast<std::size_t>(id)]; }
    int m(int u, int v) const { return m_from_codes(code_of(u), code_of(v)); }
    Block split(int u, int v) const { return split_block(el(u), el(v)); }
    bool covers(int u, int v) const { return hat.covers(u, v); }
    bool leq(int u, int v) const { return hat.leq(u, v); }

    int join(int a, int b) {
        if (a > b) std::swap(a, b);
        if (b == top) return top;
        auto [it, fresh] = join_cache.try_emplace({a, b}, 0);
        if (fresh) {
            HatElement j = pp_join(el(a), el(b));
            it->second = j ? pp.id(*j) : top;
        }
        return it->second;
    }

    // Position of y in the cover order at x, or -1.
    int position(int x, int y) const {
        const auto& o = order[static_cast<std::size_t>(x)];
        auto it = std::find(o.begin(), o.end(), y);
        return it == o.end() ? -1 : static_cast<int>(it - o.begin());
    }
};

void chains_dfs(const Context& c, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (cur.back() == c.top) {
        out.push_back(cur);
        return;
    }
    for (int y : c.order[static_cast<std::size_t>(cur.back())]) {
        cur.push_back(y);
        chains_dfs(c, cur, out);
        cur.pop_back();
    }
}

MaximalChain to_chain(const Context& c, const std::vector<int>& ids) {
    MaximalChain out;
    for (int id : ids) out.push_back(id == c.top ? HatElement() : HatElement(c.el(id)));
    return out;
}

}  // namespace

CoverKey cover_key(const ParkingObject& phi, const ParkingObject& psi) {
    if (!is_cover(phi, psi)) throw std::invalid_argument("cover_key: not a cover relation");
    return {code(psi), el_label(phi.pi(), psi.pi())};
}

std::vector<HatElement> cover_order(const ParkingObject& phi) {
    if (phi.rank() == phi.size() - 1) return {HatElement()};
    std::vector<std::pair<CoverKey, ParkingObject>> keyed;
    for (const auto& y : pp_upper_covers(phi)) keyed.emplace_back(cover_key(phi, y), y);
    std::sort(keyed.begin(), keyed.end());
    for (std::size_t i = 0; i + 1 < keyed.size(); ++i)
        if (keyed[i].first == keyed[i + 1].first) throw std::logic_error("cover_order: two covers share a key");
    std::vector<HatElement> out;
    for (auto& [k, y] : keyed) out.emplace_back(std::move(y));
    return out;
}

bool cover_precedes(const ParkingObject& phi, const HatElement& a, const HatElement& b) {
    if (!a || !b) {
        if (phi.rank() != phi.size() - 1 || a || b) throw std::invalid_argument("cover_precedes: not upper covers");
        return false;
    }
    return cover_key(phi, *a) < cover_key(phi, *b);
}

std::strong_ordering lex_compare(const MaximalChain& a, const MaximalChain& b) {
    if (a.size() != b.size() || a.empty() || a.front() != b.front())
        throw std::invalid_argument("lex_compare: chains of different posets");
    for (std::size_t j = 0; j + 1 < a.size(); ++j) {
        if (a[j + 1] == b[j + 1]) continue;
        if (a[j] != b[j] || !a[j] || !a[j + 1] || !b[j + 1]) throw std::invalid_argument("lex_compare: not maximal chains");
        CoverKey ka = cover_key(*a[j], *a[j + 1]);
        CoverKey kb = cover_key(*a[j], *b[j + 1]);
        if (ka == kb) throw std::logic_error("lex_compare: two covers share a key");
        return ka < kb ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::vector<MaximalChain> lex_maximal_chains(int n) {
    Context c(n);
    std::vector<std::vector<int>> ids;
    std::vector<int> cur{c.pp.id(ParkingObject::minimum(n))};
    chains_dfs(c, cur, ids);
    std::vector<MaximalChain> out;
    for (const auto& v : ids) out.push_back(to_chain(c, v));
    return out;
}


ShellingReport verify_shelling(int n, bool keep_witnesses) {
    Context c(n);
    ShellingReport rep;
    rep.n = n;
    std::vector<std::vector<int>> chains;
    std::vector<int> cur{c.pp.id(ParkingObject::minimum(n))};
    chains_dfs(c, cur, chains);
    rep.chains = static_cast<long long>(chains.size());

    for (std::size_t i = 0; i + 1 < chains.size(); ++i)
        if (lex_compare(to_chain(c, chains[i]), to_chain(c, chains[i + 1])) != std::strong_ordering::less)
            rep.order_consistent = false;

    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < chains.size(); ++i) index.emplace(chains[i], static_cast<int>(i));

    for (std::size_t b = 0; b < chains.size(); ++b) {
        const auto& p = chains[b];
        // earlier[r]: an earlier chain differing from p exactly at rank r, or -1.
        std::vector<int> earlier(p.size(), -1);
        for (std::size_t r = 1; r + 1 < p.size(); ++r) {
            for (int q : c.order[static_cast<std::size_t>(p[r - 1])]) {
                if (q == p[r] || !c.covers(q, p[r + 1])) continue;
                auto alt = p;
                alt[r] = q;
                int idx = index.at(alt);
                if (idx < static_cast<int>(b) && (earlier[r] < 0 || idx < earlier[r])) earlier[r] = idx;
            }
        }
        for (std::size_t a = 0; a < b; ++a) {
            ++rep.pairs_checked;
            int witness = -1;
            for (std::size_t r = 1; r + 1 < p.size() && witness < 0; ++r)
                if (earlier[r] >= 0 && chains[a][r] != p[r]) witness = earlier[r];
            if (witness < 0) {
                if (rep.counterexample.empty())
                    rep.counterexample = chain_str(chains[a], c.pp) + " before " + chain_str(p, c.pp);
                continue;
            }
            ++rep.witnessed;
            if (keep_witnesses) rep.witnesses.push_back({static_cast<int>(a), static_cast<int>(b), witness});
        }
    }
    return rep;
}

KeyLemmaReport verify_key_lemma(int n) {
    Context c(n);
    KeyLemmaReport rep;
    rep.n = n;
    for (int x = 0; x < c.top; ++x) {
        const auto& ox = c.order[static_cast<std::size_t>(x)];
        for (std::size_t yi = 0; yi < ox.size(); ++yi) {
            const int y = ox[yi];
            if (y == c.top) continue;
            const auto& oy = c.order[static_cast<std::size_t>(y)];
            for (std::size_t zi = 0; zi < oy.size(); ++zi) {
                const int z = oy[zi];
                if (z == c.top) continue;
                bool a_holds = false;
                for (std::size_t k = 0; k < yi && !a_holds; ++k) a_holds = c.covers(ox[k], z);
                for (std::size_t yp = 0; yp < yi; ++yp) {
                    const int y_prime = ox[yp];
                    ++rep.quadruples;
                    bool b_holds = false;
                    const int j = c.join(y_prime, z);
                    for (std::size_t k = 0; k < zi && !b_holds; ++k) b_holds = c.leq(oy[k], j);
                    if (a_holds) ++rep.branch_a;
                    if (b_holds) ++rep.branch_b;
                    if (b_holds && !a_holds) ++rep.only_branch_b;
                    if (!a_holds && !b_holds && rep.counterexample.empty())
                        rep.counterexample = chain_str({x, y, z}, c.pp) + " with y' = " + chain_str({y_prime}, c.pp);
                }
            }
        }
    }
    return rep;
}

CoverStats cover_stats(const ParkingObject& phi, const ParkingObject& psi) {
    if (!is_cover(phi, psi)) throw std::invalid_argument("cover_stats: not a cover relation");
    return {split_block(phi, psi), m_from_codes(code(phi), code(psi)), p0_from_code(phi), p0_from_code(psi)};
}

std::vector<LemmaReport> verify_support_lemmas(int n) {
    if (n < 1 || n > 4) throw std::out_of_range("verify_support_lemmas: n must lie in 1..4");
    Context c(n);
    const int size = c.top;
    auto fail = [](LemmaReport& r, const std::string& what) {
        if (r.counterexample.empty()) r.counterexample = what;
    };
    auto tick = [&](LemmaReport& r, bool ok, const std::string& what) {
        ++r.domain;
        if (ok) ++r.passed;
        else fail(r, what);
    };
    auto w = [&](int id) { return chain_str({id}, c.pp); };

    LemmaReport mono = named_report("code monotonicity");
    LemmaReport equal_join = named_report("join of equal codes");
    LemmaReport p0eta = named_report("p0 through eta");
    LemmaReport p0join = named_report("p0 of a join");
    for (int a = 0; a < size; ++a) {
        tick(p0eta, c.p0[static_cast<std::size_t>(a)] == p0_from_eta(c.el(a)), w(a));
        for (int b = 0; b < size; ++b) {
            if (c.leq(a, b)) tick(mono, c.code_of(a) <= c.code_of(b), w(a) + " <= " + w(b));
            if (b <= a) continue;
            const int j = c.join(a, b);
            if (c.code_of(a) == c.code_of(b))
                tick(equal_join, j != c.top && c.code_of(j) == c.code_of(a), w(a) + " v " + w(b));
            if (j != c.top)
                tick(p0join, c.p0[static_cast<std::size_t>(j)] ==
                                 std::min(c.p0[static_cast<std::size_t>(a)], c.p0[static_cast<std::size_t>(b)]),
                     w(a) + " v " + w(b));
        }
    }

    LemmaReport diamond = named_report("four-element intervals");
    LemmaReport bound = named_report("m bound inside one split block");
    LemmaReport increasing = named_report("increasing m");
    LemmaReport m_code = named_report("m against codes");
    LemmaReport total = named_report("cover orders are total");
    for (int x = 0; x < size; ++x) {
        tick(total, !c.tied[static_cast<std::size_t>(x)], w(x));
        const auto& up = c.pp.poset.upper_covers(x);
        for (int y1 : up)
            for (int y2 : up) {
                if (y1 == y2) continue;
                const int m1 = c.m(x, y1), m2 = c.m(x, y2);
                const bool lt = c.code_of(y1) < c.code_of(y2);
                bool ok = !(m1 < m2) || lt;
                if (m1 != m2 && lt) ok = ok && m1 < m2;
                tick(m_code, ok, w(x) + " : " + w(y1) + ", " + w(y2));
                if (y2 < y1) continue;
                const int j = c.join(y1, y2);
                const std::string where = w(x) + " : " + w(y1) + ", " + w(y2);
                if (c.split(x, y1) != c.split(x, y2)) {
                    bool ok4 = j != c.top && c.pp.poset.rank(j) == c.pp.poset.rank(x) + 2;
                    if (ok4) {
                        auto between = c.pp.poset.interval_elements(x, j);
                        std::vector<int> expect{x, y1, y2, j};
                        std::sort(expect.begin(), expect.end());
                        ok4 = between == expect && c.m(x, y1) == c.m(y2, j) && c.m(x, y2) == c.m(y1, j) &&
                              (m1 != m2 || (m1 == 0 && m2 == 0));
                    }
                    tick(diamond, ok4, where);
                } else if (j != c.top) {
                    const int limit = std::max(m1, m2);
                    for (int u : c.pp.poset.interval_elements(x, j))
                        for (int v : c.pp.poset.upper_covers(u))
                            if (c.leq(v, j)) tick(bound, c.m(u, v) <= limit, where + " at " + w(u) + " < " + w(v));
                }
            }
        const auto& ox = c.order[static_cast<std::size_t>(x)];
        for (std::size_t ci = 0; ci < ox.size(); ++ci) {
            const int chi = ox[ci];
            if (chi == c.top) continue;
            for (int psi : c.pp.poset.upper_covers(chi)) {
                bool earlier = false;
                for (std::size_t k = 0; k < ci && !earlier; ++k) earlier = c.covers(ox[k], psi);
                if (earlier) continue;
                tick(increasing, c.m(x, chi) <= c.m(chi, psi), w(x) + " < " + w(chi) + " < " + w(psi));
            }
        }
    }
    return {mono, equal_join, p0eta, p0join, diamond, bound, increasing, m_code, total};
}

namespace {

// Maximal chains of the interval [x, y] of a poset as label sequences.
void interval_labels(const NCPoset& nc, int x, int y, std::vector<std::pair<int, int>>& cur,
                     std::vector<std::vector<std::pair<int, int>>>& out,
                     std::map<std::pair<int, int>, std::pair<int, int>>& cache) {
    if (x == y) {
        out.push_back(cur);
        return;
    }
    for (int v : nc.poset.upper_covers(x)) {
        if (!nc.poset.leq(v, y)) continue;
        auto [it, fresh] = cache.try_emplace({x, v});
        if (fresh)
            it->second = el_label(nc.elements[static_cast<std::size_t>(x)], nc.elements[static_cast<std::size_t>(v)]);
        cur.push_back(it->second);
        interval_labels(nc, v, y, cur, out, cache);
        cur.pop_back();
    }
}

}  // namespace

LemmaReport verify_el_increasing(int n) {
    if (n < 1 || n > 6) throw std::out_of_range("verify_el_increasing: n must lie in 1..6");
    NCPoset nc = build_nc_poset(n);
    LemmaReport rep = named_report("unique increasing chain in every interval");
    std::map<std::pair<int, int>, std::pair<int, int>> cache;
    for (int x = 0; x < nc.poset.size(); ++x)
        for (int y = 0; y < nc.poset.size(); ++y) {
            if (x == y || !nc.poset.leq(x, y)) continue;
            std::vector<std::pair<int, int>> cur;
            std::vector<std::vector<std::pair<int, int>>> seqs;
            interval_labels(nc, x, y, cur, seqs, cache);
            int increasing = 0;
            std::size_t inc_index = 0;
            for (std::size_t i = 0; i < seqs.size(); ++i)
                if (std::adjacent_find(seqs[i].begin(), seqs[i].end(), std::greater_equal<>()) == seqs[i].end()) {
                    ++increasing;
                    inc_index = i;
                }
            bool ok = increasing == 1;
            if (ok)
                for (std::size_t i = 0; i < seqs.size(); ++i)
                    if (i != inc_index && !(seqs[inc_index] < seqs[i])) ok = false;
            ++rep.domain;
            if (ok) ++rep.passed;
            else if (rep.counterexample.empty())
                rep.counterexample = nc.elements[static_cast<std::size_t>(x)].str() + " to " + nc.elements[static_cast<std::size_t>(y)].str();
        }
    return rep;
}

LemmaReport verify_el_distinct(int n) {
    if (n < 1 || n > 7) throw std::out_of_range("verify_el_distinct: n must lie in 1..7");
    NCPoset nc = build_nc_poset(n);
    LemmaReport rep = named_report("distinct labels on the covers of an element");
    for (int x = 0; x < nc.poset.size(); ++x) {
        std::vector<std::pair<int, int>> labels;
        for (int v : nc.poset.upper_covers(x))
            labels.push_back(el_label(nc.elements[static_cast<std::size_t>(x)], nc.elements[static_cast<std::size_t>(v)]));
        std::sort(labels.begin(), labels.end());
        ++rep.domain;
        if (std::adjacent_find(labels.begin(), labels.end()) == labels.end()) ++rep.passed;
        else if (rep.counterexample.empty()) rep.counterexample = nc.elements[static_cast<std::size_t>(x)].str();
    }
    return rep;
}

namespace {
std::optional<ParkingObject> checked(int n, std::vector<Block> blocks, std::vector<int> sigma) {
    NoncrossingPartition pi(n, std::move(blocks));
    Permutation s(std::move(sigma));
    if (!validate_pair(pi, s)) return std::nullopt;
    return ParkingObject(pi, s);
}
}  // namespace

AtomOrderingCounterexample recursive_atom_counterexample() {
    AtomOrderingCounterexample out;
    auto y = checked(6, {{1, 2, 3}, {4, 5, 6}}, {1, 2, 4, 3, 5, 6});
    auto z = checked(6, {{1, 3}, {2}, {4, 5, 6}}, {1, 4, 2, 3, 5, 6});
    auto yp = checked(6, {{1, 4, 5, 6}, {2, 3}}, {3, 1, 2, 4, 5, 6});
    auto zp = checked(6, {{1}, {2, 3}, {4, 5, 6}}, {4, 1, 2, 3, 5, 6});
    out.x = ParkingObject::minimum(6);
    out.all_valid = y && z && yp && zp;
    if (!out.all_valid) return out;
    out.y = *y;
    out.z = *z;
    out.y_prime = *yp;
    out.z_prime = *zp;

    std::vector<ParkingObject> below_z;
    for (const auto& w : pp_ideal(out.z))
        if (w.rank() + 1 == out.z.rank()) below_z.push_back(w);
    bool y_first = below_z.size() == 2 && std::find(below_z.begin(), below_z.end(), out.y) != below_z.end();
    for (const auto& w : below_z)
        if (w != out.y && !cover_precedes(out.x, out.y, w)) y_first = false;
    out.y_first_below_z = y_first;
    out.z_before_z_prime = is_cover(out.y, out.z) && is_cover(out.y, out.z_prime) && cover_precedes(out.y, out.z, out.z_prime);
    out.z_prime_covers_y_prime = is_cover(out.y_prime, out.z_prime);
    out.y_prime_before_y = cover_precedes(out.x, out.y_prime, out.y);
    return out;
}

}  // namespace ncpark
