#include "ncpark/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ncpark {

Permutation::Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
    const int n = size();
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : w_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("Permutation: word is not a bijection on {1..n}");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& c : cycles) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            int a = c[i];
            int b = c[(i + 1) % c.size()];
            if (a < 1 || a > n || used[static_cast<std::size_t>(a)])
                throw std::invalid_argument("Permutation::from_cycles: cycles are not disjoint");
            used[static_cast<std::size_t>(a)] = 1;
            w[static_cast<std::size_t>(a - 1)] = b;
        }
    }
    return Permutation(std::move(w));
}

Permutation Permutation::transposition(int n, int i, int j) {
    return from_cycles(n, {{i, j}});
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(w_.size());
    for (std::size_t i = 0; i < w_.size(); ++i)
        inv[static_cast<std::size_t>(w_[i] - 1)] = static_cast<int>(i) + 1;
    Permutation p;
    p.w_ = std::move(inv);
    return p;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw std::invalid_argument("Permutation product: size mismatch");
    Permutation p;
    p.w_.resize(b.w_.size());
    for (std::size_t i = 0; i < b.w_.size(); ++i) p.w_[i] = a(b.w_[i]);
    return p;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(w_.size() + 1, 0);
    for (int start = 1; start <= size(); ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        std::vector<int> c;
        for (int x = start; !seen[static_cast<std::size_t>(x)]; x = (*this)(x)) {
            seen[static_cast<std::size_t>(x)] = 1;
            c.push_back(x);
        }
        out.push_back(std::move(c));
    }
    return out;
}

int Permutation::cycle_count() const { return static_cast<int>(cycles().size()); }

std::vector<int> Permutation::cycle_type() const {
    std::vector<int> t;
    for (const auto& c : cycles()) t.push_back(static_cast<int>(c.size()));
    std::sort(t.rbegin(), t.rend());
    return t;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i] != static_cast<int>(i) + 1) return false;
    return true;
}

std::string Permutation::str() const {
    std::string s;
    for (std::size_t i = 0; i < w_.size(); ++i) {
        if (size() > 9 && i > 0) s += ' ';
        s += std::to_string(w_[i]);
    }
    return s;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

namespace {
void partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<std::vector<int>> integer_partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

Permutation permutation_of_cycle_type(const std::vector<int>& type) {
    int n = 0;
    for (int t : type) n += t;
    std::vector<std::vector<int>> cycles;
    int next = 1;
    for (int t : type) {
        std::vector<int> c;
        for (int i = 0; i < t; ++i) c.push_back(next++);
        cycles.push_back(std::move(c));
    }
    return Permutation::from_cycles(n, cycles);
}

std::vector<int> permutation_code(const Permutation& s) {
    const int n = s.size();
    const Permutation inv = s.inverse();
    std::vector<int> code;
    code.reserve(static_cast<std::size_t>(n));
    for (int i = n; i >= 1; --i) {
        int c = 0;
        for (int j = 1; j < i; ++j)
            if (inv(j) > inv(i)) ++c;
        code.push_back(c);
    }
    return code;
}

}  // namespace ncpark
