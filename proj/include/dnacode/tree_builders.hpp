#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dnacode/coding_core.hpp"

namespace dnacode {

enum class TieBreak {
    EarliestCut,  // among optimal partitions, lexicographically smallest cuts
};

struct BuilderConfig {
    std::uint32_t max_hl = 3;  // maximum allowed homopolymer length
    TieBreak tie_break = TieBreak::EarliestCut;
};

// Top-down constrained quaternary Shannon-Fano tree. Internal nodes at depths
// that are multiples of max_hl get at most 3 children, all others at most 4.
// Symbols are processed in decreasing-frequency order, ties by ascending id.
CodeTree sfc_build(const FrequencyTable& table, const BuilderConfig& cfg);

// Splits the (decreasing-frequency sorted) symbols into n contiguous slices
// whose sums deviate as little as possible from total/n: the returned split
// minimizes the maximum absolute deviation, exactly, over all contiguous
// splits; ties pick the earliest cut positions. Empty trailing slices appear
// only when there are fewer symbols than slices. n must be 3 or 4.
std::vector<std::vector<SymbolId>> partition(const std::vector<SymbolId>& symbols,
                                             const std::vector<std::uint64_t>& freqs,
                                             int n);

namespace detail {
// Cut positions (slice boundaries) for k = min(n, size) nonempty slices over
// weights[0..size); generalized over n >= 1 for testing.
std::vector<std::size_t> partition_cuts(std::span<const std::uint64_t> weights, int n);
}  // namespace detail

// Optimal b-ary Huffman tree, b in {2,3,4}. The alphabet is padded internally
// with zero-count dummies so every merge takes exactly b nodes; dummies are
// pruned from the result. Merges take the lowest-count nodes first, ties by
// lowest minimum symbol id.
CodeTree huffman_build(const FrequencyTable& table, int arity);

// Quaternary Huffman post-processed to satisfy the same arity schedule as
// sfc_build. Nodes that land 4-ary on a constrained depth are re-split by
// grouping their two smallest children one level down; the sweep proceeds
// top-down until the schedule holds everywhere.
CodeTree huffman_constrained_build(const FrequencyTable& table, const BuilderConfig& cfg);

// Returns a Codebook with builder/radix/max_hl metadata filled in.
Codebook sfc_codebook(const FrequencyTable& table, const BuilderConfig& cfg);
Codebook huffman_codebook(const FrequencyTable& table, int arity);
Codebook huffman_constrained_codebook(const FrequencyTable& table, const BuilderConfig& cfg);

}  // namespace dnacode
