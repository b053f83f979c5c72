#include "ncpark/poset.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ncpark {

FinitePoset FinitePoset::from_covers(std::vector<std::vector<int>> upper, std::vector<std::string> labels) {
    FinitePoset p;
    const std::size_t n = upper.size();
    for (auto& u : upper) {
        std::sort(u.begin(), u.end());
        u.erase(std::unique(u.begin(), u.end()), u.end());
        for (int j : u)
            if (j < 0 || static_cast<std::size_t>(j) >= n)
                throw std::invalid_argument("FinitePoset::from_covers: cover index out of range");
    }
    p.upper_ = std::move(upper);
    if (labels.empty())
        for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    if (labels.size() != n) throw std::invalid_argument("FinitePoset::from_covers: label count mismatch");
    p.labels_ = std::move(labels);
    p.finish();
    return p;
}

void FinitePoset::finish() {
    const std::size_t n = upper_.size();
    lower_.assign(n, {});
    for (std::size_t i = 0; i < n; ++i)
        for (int j : upper_[i]) lower_[static_cast<std::size_t>(j)].push_back(static_cast<int>(i));

    // Kahn's algorithm over the cover digraph.
    std::vector<int> indeg(n, 0);
    for (std::size_t i = 0; i < n; ++i) indeg[i] = static_cast<int>(lower_[i].size());
    topo_.clear();
    std::vector<int> queue;
    for (std::size_t i = 0; i < n; ++i)
        if (indeg[i] == 0) queue.push_back(static_cast<int>(i));
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int i = queue[head];
        topo_.push_back(i);
        for (int j : upper_[static_cast<std::size_t>(i)])
            if (--indeg[static_cast<std::size_t>(j)] == 0) queue.push_back(j);
    }
    if (topo_.size() != n) throw std::invalid_argument("FinitePoset: cover digraph has a cycle");

    rank_.assign(n, -1);
    graded_ = true;
    for (int i : topo_) {
        auto& r = rank_[static_cast<std::size_t>(i)];
        if (lower_[static_cast<std::size_t>(i)].empty()) r = 0;
        for (int j : lower_[static_cast<std::size_t>(i)]) {
            int cand = rank_[static_cast<std::size_t>(j)] + 1;
            if (r == -1) r = cand;
            else if (r != cand) {
                graded_ = false;
                r = std::max(r, cand);
            }
        }
    }

    up_.assign(n, boost::dynamic_bitset<>(n));
    down_.assign(n, boost::dynamic_bitset<>(n));
    for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
        auto i = static_cast<std::size_t>(*it);
        up_[i].set(i);
        for (int j : upper_[i]) up_[i] |= up_[static_cast<std::size_t>(j)];
    }
    for (int i : topo_) {
        auto ii = static_cast<std::size_t>(i);
        down_[ii].set(ii);
        for (int j : lower_[ii]) down_[ii] |= down_[static_cast<std::size_t>(j)];
    }
    // A cover must not be implied by a longer path.
    for (std::size_t i = 0; i < n; ++i)
        for (int j : upper_[i]) {
            boost::dynamic_bitset<> between = up_[i] & down_[static_cast<std::size_t>(j)];
            if (between.count() != 2) throw std::invalid_argument("FinitePoset: listed cover is not a cover relation");
        }
}

bool FinitePoset::covers(int i, int j) const {
    const auto& u = upper_[static_cast<std::size_t>(i)];
    return std::binary_search(u.begin(), u.end(), j);
}

int FinitePoset::max_rank() const {
    int m = -1;
    for (int r : rank_) m = std::max(m, r);
    return m;
}

std::vector<int> FinitePoset::rank_sizes() const {
    std::vector<int> out(static_cast<std::size_t>(max_rank() + 1), 0);
    for (int r : rank_) ++out[static_cast<std::size_t>(r)];
    return out;
}

std::vector<int> FinitePoset::minimal_elements() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (lower_[static_cast<std::size_t>(i)].empty()) out.push_back(i);
    return out;
}

std::vector<int> FinitePoset::maximal_elements() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (upper_[static_cast<std::size_t>(i)].empty()) out.push_back(i);
    return out;
}

std::optional<int> FinitePoset::bottom() const {
    auto m = minimal_elements();
    if (m.size() == 1) return m.front();
    return std::nullopt;
}

std::optional<int> FinitePoset::top() const {
    auto m = maximal_elements();
    if (m.size() == 1) return m.front();
    return std::nullopt;
}

FinitePoset FinitePoset::with_top(const std::string& label) const {
    auto upper = upper_;
    const int t = size();
    for (int m : maximal_elements()) upper[static_cast<std::size_t>(m)].push_back(t);
    upper.emplace_back();
    auto labels = labels_;
    labels.push_back(label);
    return from_covers(std::move(upper), std::move(labels));
}

FinitePoset FinitePoset::induced(const std::vector<int>& elements) const {
    const int m = static_cast<int>(elements.size());
    std::vector<std::string> labels;
    for (int e : elements) labels.push_back(labels_[static_cast<std::size_t>(e)]);
    return from_leq(
        m, [&](int a, int b) { return leq(elements[static_cast<std::size_t>(a)], elements[static_cast<std::size_t>(b)]); },
        std::move(labels));
}

std::vector<int> FinitePoset::interval_elements(int x, int y) const {
    std::vector<int> out;
    boost::dynamic_bitset<> b = up_[static_cast<std::size_t>(x)] & down_[static_cast<std::size_t>(y)];
    for (auto i = b.find_first(); i != boost::dynamic_bitset<>::npos; i = b.find_next(i)) out.push_back(static_cast<int>(i));
    return out;
}

FinitePoset FinitePoset::interval(int x, int y) const { return induced(interval_elements(x, y)); }

std::vector<std::pair<int, int>> FinitePoset::cover_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < size(); ++i)
        for (int j : upper_[static_cast<std::size_t>(i)]) out.emplace_back(i, j);
    return out;
}

std::vector<Integer> mobius_from(const FinitePoset& p, int x) {
    std::vector<Integer> mu(static_cast<std::size_t>(p.size()), 0);
    mu[static_cast<std::size_t>(x)] = 1;
    const auto& upx = p.up_set(x);
    for (int y : p.linear_extension()) {
        if (y == x || !upx.test(static_cast<std::size_t>(y))) continue;
        Integer s = 0;
        boost::dynamic_bitset<> between = upx & p.down_set(y);
        for (auto z = between.find_first(); z != boost::dynamic_bitset<>::npos; z = between.find_next(z))
            if (static_cast<int>(z) != y) s += mu[z];
        mu[static_cast<std::size_t>(y)] = -s;
    }
    return mu;
}

Integer mobius(const FinitePoset& p, int x, int y) {
    if (!p.leq(x, y)) return 0;
    return mobius_from(p, x)[static_cast<std::size_t>(y)];
}

namespace {
std::vector<Integer> multichain_ends(const FinitePoset& p, int k) {
    if (k < 1) throw std::invalid_argument("multichain count: k must be positive");
    std::vector<Integer> f(static_cast<std::size_t>(p.size()), 1);
    for (int step = 1; step < k; ++step) {
        std::vector<Integer> g(f.size(), 0);
        for (int y = 0; y < p.size(); ++y) {
            const auto& d = p.down_set(y);
            Integer s = 0;
            for (auto x = d.find_first(); x != boost::dynamic_bitset<>::npos; x = d.find_next(x)) s += f[x];
            g[static_cast<std::size_t>(y)] = s;
        }
        f = std::move(g);
    }
    return f;
}
}  // namespace

Integer zeta_count(const FinitePoset& p, int k) {
    Integer total = 0;
    for (const auto& v : multichain_ends(p, k)) total += v;
    return total;
}

std::vector<Integer> multichains_by_top_rank(const FinitePoset& p, int k) {
    auto f = multichain_ends(p, k);
    std::vector<Integer> out(static_cast<std::size_t>(p.max_rank() + 1), 0);
    for (int y = 0; y < p.size(); ++y) out[static_cast<std::size_t>(p.rank(y))] += f[static_cast<std::size_t>(y)];
    return out;
}

Integer whitney(const FinitePoset& p, WhitneyKind kind, int l) {
    if (kind == WhitneyKind::second) {
        Integer c = 0;
        for (int i = 0; i < p.size(); ++i)
            if (p.rank(i) == l) ++c;
        return c;
    }
    auto b = p.bottom();
    if (!b) throw std::invalid_argument("whitney: first kind requires a bottom element");
    auto mu = mobius_from(p, *b);
    Integer s = 0;
    for (int i = 0; i < p.size(); ++i)
        if (p.rank(i) == l) s += mu[static_cast<std::size_t>(i)];
    return s;
}

namespace {
void chains_rec(const FinitePoset& p, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    const auto& up = p.upper_covers(cur.back());
    if (up.empty()) {
        out.push_back(cur);
        return;
    }
    for (int j : up) {
        cur.push_back(j);
        chains_rec(p, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<std::vector<int>> maximal_chains(const FinitePoset& p) {
    std::vector<std::vector<int>> out;
    for (int m : p.minimal_elements()) {
        std::vector<int> cur{m};
        chains_rec(p, cur, out);
    }
    return out;
}

bool is_order_isomorphism(const FinitePoset& a, const FinitePoset& b, const std::vector<int>& f) {
    if (a.size() != b.size() || static_cast<int>(f.size()) != a.size()) return false;
    std::vector<char> hit(f.size(), 0);
    for (int v : f) {
        if (v < 0 || v >= b.size() || hit[static_cast<std::size_t>(v)]) return false;
        hit[static_cast<std::size_t>(v)] = 1;
    }
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j)
            if (a.leq(i, j) != b.leq(f[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(j)])) return false;
    return true;
}

}  // namespace ncpark
