#include "dnacode/tree_builders.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>
#include <numeric>
#include <queue>
#include <tuple>

namespace dnacode {

namespace {

struct SortedAlphabet {
    std::vector<SymbolId> ids;
    std::vector<std::uint64_t> weights;
};

// Decreasing frequency, ties by ascending symbol id.
SortedAlphabet sort_by_frequency(const FrequencyTable& table) {
    SortedAlphabet s;
    s.ids.resize(table.size());
    std::iota(s.ids.begin(), s.ids.end(), 0);
    std::sort(s.ids.begin(), s.ids.end(), [&](SymbolId a, SymbolId b) {
        if (table.count(a) != table.count(b)) return table.count(a) > table.count(b);
        return a < b;
    });
    s.weights.reserve(s.ids.size());
    for (SymbolId id : s.ids) s.weights.push_back(table.count(id));
    return s;
}

void require_buildable(const FrequencyTable& table) {
    if (table.empty()) throw InputError("cannot build a code for an empty table");
    if (table.total() == 0)
        throw InputError("cannot build a code for a table with zero total count");
    // Deviations are compared as n*sum - total in signed 64-bit arithmetic.
    if (table.total() > (1ull << 60))
        throw InputError("table total exceeds the supported 2^60 range");
}

}  // namespace

namespace detail {

std::vector<std::size_t> partition_cuts(std::span<const std::uint64_t> weights, int n) {
    const std::size_t m = weights.size();
    const std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(n), m);
    if (k <= 1) return {};

    std::vector<std::uint64_t> prefix(m + 1, 0);
    for (std::size_t i = 0; i < m; ++i) prefix[i + 1] = prefix[i] + weights[i];
    const std::int64_t total = static_cast<std::int64_t>(prefix[m]);

    // Deviation of slice [a,b) from total/n, scaled by n to stay integral.
    auto dev = [&](std::size_t a, std::size_t b) -> std::int64_t {
        std::int64_t d = static_cast<std::int64_t>(n) *
                             static_cast<std::int64_t>(prefix[b] - prefix[a]) -
                         total;
        return d < 0 ? -d : d;
    };

    // suf[j][i]: best achievable max deviation splitting [i,m) into j
    // nonempty slices.
    const std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
    std::vector<std::vector<std::int64_t>> suf(k + 1,
                                               std::vector<std::int64_t>(m + 1, kInf));
    for (std::size_t i = 0; i < m; ++i) suf[1][i] = dev(i, m);
    for (std::size_t j = 2; j <= k; ++j) {
        for (std::size_t i = 0; i + j <= m; ++i) {
            std::int64_t best = kInf;
            for (std::size_t c = i + 1; c + (j - 1) <= m; ++c) {
                std::int64_t v = std::max(dev(i, c), suf[j - 1][c]);
                best = std::min(best, v);
            }
            suf[j][i] = best;
        }
    }

    // Greedy left-to-right reconstruction: the earliest cut that still admits
    // an optimal completion gives the lexicographically smallest cut vector.
    const std::int64_t optimum = suf[k][0];
    std::vector<std::size_t> cuts;
    std::size_t pos = 0;
    for (std::size_t j = k; j >= 2; --j) {
        for (std::size_t c = pos + 1; c + (j - 1) <= m; ++c) {
            if (std::max(dev(pos, c), suf[j - 1][c]) <= optimum) {
                cuts.push_back(c);
                pos = c;
                break;
            }
        }
    }
    return cuts;
}

}  // namespace detail

std::vector<std::vector<SymbolId>> partition(const std::vector<SymbolId>& symbols,
                                             const std::vector<std::uint64_t>& freqs,
                                             int n) {
    if (n != 3 && n != 4) throw ConfigError("partition arity must be 3 or 4");
    if (symbols.size() != freqs.size())
        throw InputError("partition: symbols and freqs differ in length");
    for (std::size_t i = 0; i + 1 < freqs.size(); ++i)
        if (freqs[i] < freqs[i + 1])
            throw InputError("partition requires symbols sorted by decreasing frequency");

    std::vector<std::size_t> cuts = detail::partition_cuts(freqs, n);
    std::vector<std::vector<SymbolId>> slices;
    std::size_t start = 0;
    for (std::size_t cut : cuts) {
        slices.emplace_back(symbols.begin() + start, symbols.begin() + cut);
        start = cut;
    }
    if (!symbols.empty())
        slices.emplace_back(symbols.begin() + start, symbols.end());
    while (slices.size() < static_cast<std::size_t>(n)) slices.emplace_back();
    return slices;
}

namespace {

CodeTree sfc_aux(std::span<const SymbolId> ids, std::span<const std::uint64_t> weights,
                 std::uint32_t depth, std::uint32_t max_hl) {
    if (ids.size() == 1) return CodeTree::leaf(ids[0]);
    const int n = (depth % max_hl == 0) ? 3 : 4;
    std::vector<std::size_t> cuts = detail::partition_cuts(weights, n);
    std::vector<CodeTree> children;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= cuts.size(); ++i) {
        std::size_t end = i < cuts.size() ? cuts[i] : ids.size();
        children.push_back(sfc_aux(ids.subspan(start, end - start),
                                   weights.subspan(start, end - start), depth + 1,
                                   max_hl));
        start = end;
    }
    return merge_trees(children);
}

}  // namespace

CodeTree sfc_build(const FrequencyTable& table, const BuilderConfig& cfg) {
    if (cfg.max_hl < 2) throw ConfigError("max_hl must be at least 2");
    require_buildable(table);
    SortedAlphabet s = sort_by_frequency(table);
    return sfc_aux(s.ids, s.weights, 1, cfg.max_hl);
}

namespace {

struct HeapEntry {
    std::uint64_t count;
    SymbolId min_id;
    std::uint32_t slot;

    bool operator>(const HeapEntry& o) const {
        return std::tie(count, min_id) > std::tie(o.count, o.min_id);
    }
};

}  // namespace

CodeTree huffman_build(const FrequencyTable& table, int arity) {
    if (arity < 2 || arity > 4) throw ConfigError("huffman arity must be 2, 3 or 4");
    require_buildable(table);
    const std::size_t n = table.size();
    if (n == 1) return CodeTree::leaf(0);

    std::size_t padded = n;
    while ((padded - 1) % (arity - 1) != 0) ++padded;

    std::vector<CodeTree> slots;
    slots.reserve(2 * padded);
    std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<>> heap;
    for (std::size_t i = 0; i < padded; ++i) {
        std::uint64_t count = i < n ? table.count(static_cast<SymbolId>(i)) : 0;
        slots.push_back(CodeTree::leaf(static_cast<SymbolId>(i)));
        heap.push({count, static_cast<SymbolId>(i),
                   static_cast<std::uint32_t>(slots.size() - 1)});
    }
    while (heap.size() > 1) {
        std::vector<CodeTree> children;
        std::uint64_t count = 0;
        SymbolId min_id = std::numeric_limits<SymbolId>::max();
        for (int i = 0; i < arity; ++i) {
            HeapEntry e = heap.top();
            heap.pop();
            children.push_back(std::move(slots[e.slot]));
            count += e.count;
            min_id = std::min(min_id, e.min_id);
        }
        slots.push_back(merge_trees(children));
        heap.push({count, min_id, static_cast<std::uint32_t>(slots.size() - 1)});
    }
    const CodeTree& full = slots[heap.top().slot];
    if (padded == n) return full;

    // Prune the dummy padding leaves; label order stays positional.
    std::function<CodeTree(std::uint32_t)> strip = [&](std::uint32_t idx) -> CodeTree {
        const auto& node = full.node(idx);
        if (node.is_leaf()) return CodeTree::leaf(node.symbol);
        std::vector<CodeTree> kept;
        for (std::uint32_t c : node.children) {
            const auto& child = full.node(c);
            if (child.is_leaf() && child.symbol >= static_cast<std::int32_t>(n))
                continue;
            kept.push_back(strip(c));
        }
        if (kept.empty())
            throw InputError("huffman padding produced an all-dummy subtree");
        return merge_trees(kept);
    };
    return strip(full.root());
}

namespace {

// Mutable scratch tree for the constrained fix-up pass.
struct FixNode {
    std::int32_t symbol = -1;
    std::uint64_t count = 0;
    SymbolId min_id = 0;
    std::vector<std::uint32_t> children;
    bool is_leaf() const { return children.empty(); }
};

}  // namespace

CodeTree huffman_constrained_build(const FrequencyTable& table,
                                   const BuilderConfig& cfg) {
    if (cfg.max_hl < 2) throw ConfigError("max_hl must be at least 2");
    CodeTree base = huffman_build(table, 4);
    if (base.single_leaf()) return base;

    std::vector<FixNode> nodes(base.node_count());
    for (std::uint32_t i = 0; i < base.node_count(); ++i) {
        const auto& n = base.node(i);
        nodes[i].symbol = n.symbol;
        nodes[i].children = n.children;
    }
    // Subtree weights bottom-up (node indices in a merge-built tree are
    // always larger than their parent's, so a reverse scan works).
    for (std::uint32_t i = static_cast<std::uint32_t>(nodes.size()); i-- > 0;) {
        if (nodes[i].is_leaf()) {
            nodes[i].count = table.count(nodes[i].symbol);
            nodes[i].min_id = static_cast<SymbolId>(nodes[i].symbol);
        } else {
            nodes[i].count = 0;
            nodes[i].min_id = std::numeric_limits<SymbolId>::max();
            for (std::uint32_t c : nodes[i].children) {
                nodes[i].count += nodes[c].count;
                nodes[i].min_id = std::min(nodes[i].min_id, nodes[c].min_id);
            }
        }
    }

    // Top-down sweep: by the time a node is visited its depth is final, so a
    // single pass restores the schedule.
    std::deque<std::pair<std::uint32_t, std::uint32_t>> queue;  // (index, depth)
    queue.emplace_back(0, 1);
    while (!queue.empty()) {
        auto [idx, depth] = queue.front();
        queue.pop_front();
        FixNode& v = nodes[idx];
        if (!v.is_leaf() && depth % cfg.max_hl == 0 && v.children.size() == 4) {
            auto order = [&](std::uint32_t a, std::uint32_t b) {
                return std::tie(nodes[a].count, nodes[a].min_id) <
                       std::tie(nodes[b].count, nodes[b].min_id);
            };
            std::size_t lo = 0;
            for (std::size_t i = 1; i < 4; ++i)
                if (order(v.children[i], v.children[lo])) lo = i;
            std::size_t lo2 = lo == 0 ? 1 : 0;
            for (std::size_t i = 0; i < 4; ++i)
                if (i != lo && order(v.children[i], v.children[lo2])) lo2 = i;
            std::size_t first = std::min(lo, lo2), second = std::max(lo, lo2);
            FixNode fresh;
            fresh.children = {v.children[first], v.children[second]};
            fresh.count = nodes[v.children[first]].count + nodes[v.children[second]].count;
            fresh.min_id = std::min(nodes[v.children[first]].min_id,
                                    nodes[v.children[second]].min_id);
            nodes.push_back(std::move(fresh));
            std::uint32_t fresh_idx = static_cast<std::uint32_t>(nodes.size() - 1);
            FixNode& v2 = nodes[idx];  // re-borrow after push_back
            v2.children.erase(v2.children.begin() + second);
            v2.children[first] = fresh_idx;
        }
        for (std::uint32_t c : nodes[idx].children) queue.emplace_back(c, depth + 1);
    }

    std::function<CodeTree(std::uint32_t)> rebuild = [&](std::uint32_t idx) -> CodeTree {
        if (nodes[idx].is_leaf()) return CodeTree::leaf(nodes[idx].symbol);
        std::vector<CodeTree> children;
        for (std::uint32_t c : nodes[idx].children) children.push_back(rebuild(c));
        return merge_trees(children);
    };
    return rebuild(0);
}

Codebook sfc_codebook(const FrequencyTable& table, const BuilderConfig& cfg) {
    return codebook_from_tree(sfc_build(table, cfg), "sfc", 4, cfg.max_hl);
}

Codebook huffman_codebook(const FrequencyTable& table, int arity) {
    return codebook_from_tree(huffman_build(table, arity),
                              "huffman" + std::to_string(arity), arity, 0);
}

Codebook huffman_constrained_codebook(const FrequencyTable& table,
                                      const BuilderConfig& cfg) {
    return codebook_from_tree(huffman_constrained_build(table, cfg), "huffman4c", 4,
                              cfg.max_hl);
}

}  // namespace dnacode
