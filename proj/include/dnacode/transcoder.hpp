#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dnacode/coding_core.hpp"

namespace dnacode {

// Fixed quaternary map used at unconstrained codeword positions:
// 0 -> A, 1 -> T, 2 -> C, 3 -> G.
inline constexpr std::array<char, 4> kQuaternaryNt = {'A', 'T', 'C', 'G'};

// Rotating ternary map used at constrained positions and by the Goldman
// coder. Row = previously emitted nucleotide, column = ternary digit; the row
// never contains its own nucleotide.
//                                              0    1    2
inline constexpr char kRotatingNt[4][3] = {{'T', 'C', 'G'},   // prev A
                                           {'A', 'C', 'G'},   // prev T
                                           {'A', 'T', 'G'},   // prev C
                                           {'A', 'T', 'C'}};  // prev G

// Index of a nucleotide in the (A,T,C,G) ordering used by both tables above.
int nt_index(char nt);

// Inverse lookups; return -1 when no digit maps to `nt` (e.g. nt == prev in
// the rotating table).
int quaternary_digit(char nt);
int rotating_digit(char prev, char nt);

// Streams start from this nucleotide state; recorded in output headers.
inline constexpr char kInitialPrev = 'A';

// Carries the sequential transcoding state across one stream.
struct TranscoderState {
    char prev_nucleotide = kInitialPrev;
    std::uint32_t position_in_codeword = 1;
};

// Position-dependent transcoding for codewords built by sfc_build (or any
// builder honoring the same arity schedule): position k within a codeword
// uses the rotating table when k is a multiple of max_hl and the fixed
// quaternary table otherwise. The previous-nucleotide state carries across
// the whole stream; the position counter resets at each codeword boundary.
NucleotideStream sfc_transcode(std::span<const std::string> codewords,
                               std::uint32_t max_hl);
NucleotideStream sfc_transcode(std::span<const SymbolId> message, const Codebook& book);

// Inverse of sfc_transcode: walks the coding tree, inverting the table that
// matches each position. Truncated or mismatched input raises
// CorruptStreamError carrying the stream offset.
std::vector<SymbolId> sfc_detranscode(const NucleotideStream& stream,
                                      const CodeTree& tree, std::uint32_t max_hl);

// Position-independent transcoding through the fixed quaternary table; used
// for unconstrained Huffman books.
NucleotideStream fixed_transcode(std::span<const std::string> codewords);
NucleotideStream fixed_transcode(std::span<const SymbolId> message, const Codebook& book);
std::vector<SymbolId> fixed_detranscode(const NucleotideStream& stream,
                                        const CodeTree& tree);

// Goldman coder: ternary Huffman codewords pushed through the rotating table
// for every position. The output never repeats a nucleotide twice in a row.
NucleotideStream goldman_transcode(std::span<const std::string> codewords);
NucleotideStream goldman_transcode(std::span<const SymbolId> message,
                                   const Codebook& book);
NucleotideStream goldman_encode(std::span<const SymbolId> message,
                                const FrequencyTable& table);
std::vector<SymbolId> goldman_decode(const NucleotideStream& stream,
                                     const CodeTree& tree);

// Length of the longest run of one repeated nucleotide; 0 for empty input.
std::size_t max_homopolymer_run(const NucleotideStream& stream);

}  // namespace dnacode
