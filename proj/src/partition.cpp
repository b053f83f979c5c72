#include "ncpark/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncpark {

SetPartition::SetPartition(int n, std::vector<Block> blocks) : n_(n), blocks_(std::move(blocks)) {
    if (n < 0) throw std::invalid_argument("SetPartition: negative size");
    index_.assign(static_cast<std::size_t>(n), -1);
    for (auto& b : blocks_) {
        if (b.empty()) throw std::invalid_argument("SetPartition: empty block");
        std::sort(b.begin(), b.end());
    }
    std::sort(blocks_.begin(), blocks_.end(),
              [](const Block& x, const Block& y) { return x.front() < y.front(); });
    for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
        for (int v : blocks_[bi]) {
            if (v < 1 || v > n || index_[static_cast<std::size_t>(v - 1)] != -1)
                throw std::invalid_argument("SetPartition: blocks are not a partition of {1..n}");
            index_[static_cast<std::size_t>(v - 1)] = static_cast<int>(bi);
        }
    }
    for (int x : index_)
        if (x < 0) throw std::invalid_argument("SetPartition: blocks do not cover {1..n}");
}

SetPartition SetPartition::one_block(int n) {
    Block b;
    for (int i = 1; i <= n; ++i) b.push_back(i);
    if (n == 0) return SetPartition(0, {});
    return SetPartition(n, {b});
}

SetPartition SetPartition::singletons(int n) {
    std::vector<Block> bs;
    for (int i = 1; i <= n; ++i) bs.push_back({i});
    return SetPartition(n, bs);
}

bool SetPartition::refines(const SetPartition& other) const {
    if (n_ != other.n_) throw std::invalid_argument("SetPartition::refines: size mismatch");
    for (const auto& b : blocks_) {
        int target = other.block_index(b.front());
        for (int v : b)
            if (other.block_index(v) != target) return false;
    }
    return true;
}

bool SetPartition::is_noncrossing() const {
    // Two blocks cross when some gap between consecutive elements of one block
    // contains an element of the other while the other also has an element
    // outside that gap.
    for (const auto& a : blocks_) {
        for (std::size_t i = 0; i + 1 < a.size(); ++i) {
            const int lo = a[i], hi = a[i + 1];
            int inside_block = -1;
            for (int v = lo + 1; v < hi; ++v) {
                int bi = block_index(v);
                if (inside_block == bi) continue;
                inside_block = bi;
                const Block& other = blocks_[static_cast<std::size_t>(bi)];
                if (other.front() < lo || other.back() > hi) return false;
            }
        }
    }
    return true;
}

SetPartition SetPartition::image(const Permutation& s) const {
    if (s.size() != n_) throw std::invalid_argument("SetPartition::image: size mismatch");
    std::vector<Block> bs;
    bs.reserve(blocks_.size());
    for (const auto& b : blocks_) {
        Block nb;
        nb.reserve(b.size());
        for (int v : b) nb.push_back(s(v));
        bs.push_back(std::move(nb));
    }
    return SetPartition(n_, std::move(bs));
}

std::string SetPartition::str() const {
    std::string s;
    for (const auto& b : blocks_) {
        s += '{';
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(b[i]);
        }
        s += '}';
    }
    return s;
}

NoncrossingPartition::NoncrossingPartition(SetPartition p) : SetPartition(std::move(p)) {
    if (!is_noncrossing()) throw std::invalid_argument("NoncrossingPartition: partition is crossing");
}

NoncrossingPartition::NoncrossingPartition(int n, std::vector<Block> blocks)
    : NoncrossingPartition(SetPartition(n, std::move(blocks))) {}

NoncrossingPartition NoncrossingPartition::zero(int n) {
    return NoncrossingPartition(SetPartition::one_block(n));
}

NoncrossingPartition NoncrossingPartition::one(int n) {
    return NoncrossingPartition(SetPartition::singletons(n));
}

namespace {

void set_partitions_rec(int i, int n, std::vector<Block>& cur, std::vector<SetPartition>& out) {
    if (i > n) {
        out.emplace_back(n, cur);
        return;
    }
    for (std::size_t b = 0; b < cur.size(); ++b) {
        cur[b].push_back(i);
        set_partitions_rec(i + 1, n, cur, out);
        cur[b].pop_back();
    }
    cur.push_back({i});
    set_partitions_rec(i + 1, n, cur, out);
    cur.pop_back();
}

// All noncrossing partitions of the interval [lo, hi] as block lists.
std::vector<std::vector<Block>> nc_interval(int lo, int hi) {
    std::vector<std::vector<Block>> out;
    if (lo > hi) {
        out.push_back({});
        return out;
    }
    // The block containing lo is {lo = e_1 < ... < e_r}; the gaps between
    // consecutive elements and the tail after e_r are filled independently.
    const int span = hi - lo;
    for (unsigned mask = 0; mask < (1u << span); ++mask) {
        Block e{lo};
        for (int j = 0; j < span; ++j)
            if (mask & (1u << j)) e.push_back(lo + 1 + j);
        std::vector<std::vector<Block>> partial{{e}};
        for (std::size_t j = 0; j < e.size(); ++j) {
            int a = e[j] + 1;
            int b = (j + 1 < e.size()) ? e[j + 1] - 1 : hi;
            auto sub = nc_interval(a, b);
            std::vector<std::vector<Block>> next;
            next.reserve(partial.size() * sub.size());
            for (const auto& p : partial)
                for (const auto& s : sub) {
                    auto q = p;
                    q.insert(q.end(), s.begin(), s.end());
                    next.push_back(std::move(q));
                }
            partial = std::move(next);
        }
        for (auto& p : partial) out.push_back(std::move(p));
    }
    return out;
}

}  // namespace

std::vector<SetPartition> enumerate_set_partitions(int n) {
    std::vector<SetPartition> out;
    if (n == 0) {
        out.emplace_back(0, std::vector<Block>{});
        return out;
    }
    std::vector<Block> cur;
    set_partitions_rec(1, n, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<NoncrossingPartition> enumerate_noncrossing(int n) {
    if (n < 1 || n > kMaxNoncrossingSize)
        throw std::out_of_range("enumerate_noncrossing: n must lie in 1..12");
    std::vector<NoncrossingPartition> out;
    for (auto& blocks : nc_interval(1, n)) out.emplace_back(SetPartition(n, std::move(blocks)));
    std::sort(out.begin(), out.end());
    return out;
}

bool nc_leq(const SetPartition& p, const SetPartition& q) {
    if (p.size() != q.size()) throw std::invalid_argument("nc_leq: size mismatch");
    return q.refines(p);
}

Permutation embed_permutation(const SetPartition& p) {
    std::vector<std::vector<int>> cycles(p.blocks().begin(), p.blocks().end());
    return Permutation::from_cycles(p.size(), cycles);
}

NoncrossingPartition partition_from_embedding(const Permutation& s) {
    std::vector<Block> blocks = s.cycles();
    SetPartition sp(s.size(), blocks);
    if (!sp.is_noncrossing() || embed_permutation(sp) != s)
        throw std::logic_error("permutation is not the embedding of a noncrossing partition");
    return NoncrossingPartition(std::move(sp));
}

NoncrossingPartition kreweras(const NoncrossingPartition& p) {
    const int n = p.size();
    Permutation c = embed_permutation(SetPartition::one_block(n));
    return partition_from_embedding(c * embed_permutation(p).inverse());
}

NoncrossingPartition relative_kreweras(const NoncrossingPartition& p, const NoncrossingPartition& t) {
    if (!nc_leq(p, t)) throw std::invalid_argument("relative_kreweras: requires p <= t");
    return partition_from_embedding(embed_permutation(p) * embed_permutation(t).inverse());
}

std::vector<int> lukasiewicz_encode(const SetPartition& p) {
    std::vector<int> a(static_cast<std::size_t>(p.size()), 0);
    for (const auto& b : p.blocks()) a[static_cast<std::size_t>(b.front() - 1)] = static_cast<int>(b.size());
    return a;
}

NoncrossingPartition lukasiewicz_decode(const std::vector<int>& a) {
    const int n = static_cast<int>(a.size());
    std::vector<Block> blocks;
    std::vector<std::pair<std::size_t, int>> open;  // block index, remaining slots
    long long sum = 0;
    for (int i = 1; i <= n; ++i) {
        const int ai = a[static_cast<std::size_t>(i - 1)];
        if (ai < 0) throw std::invalid_argument("lukasiewicz_decode: negative entry");
        sum += ai;
        if (sum < i) throw std::invalid_argument("lukasiewicz_decode: prefix sum condition violated");
        if (ai > 0) {
            blocks.push_back({i});
            if (ai > 1) open.emplace_back(blocks.size() - 1, ai - 1);
        } else {
            auto& top = open.back();
            blocks[top.first].push_back(i);
            if (--top.second == 0) open.pop_back();
        }
    }
    if (sum != n) throw std::invalid_argument("lukasiewicz_decode: entries do not sum to n");
    return NoncrossingPartition(n, std::move(blocks));
}

SetPartition restrict_partition(const SetPartition& p, const std::vector<int>& elements) {
    std::vector<int> sorted = elements;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> rank(static_cast<std::size_t>(p.size()) + 1, 0);
    for (std::size_t i = 0; i < sorted.size(); ++i) rank[static_cast<std::size_t>(sorted[i])] = static_cast<int>(i) + 1;
    std::vector<Block> blocks;
    for (const auto& b : p.blocks()) {
        Block nb;
        for (int v : b)
            if (rank[static_cast<std::size_t>(v)] > 0) nb.push_back(rank[static_cast<std::size_t>(v)]);
        if (!nb.empty()) blocks.push_back(std::move(nb));
    }
    return SetPartition(static_cast<int>(sorted.size()), std::move(blocks));
}

}  // namespace ncpark
