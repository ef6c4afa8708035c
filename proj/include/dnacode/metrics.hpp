#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "dnacode/coding_core.hpp"

namespace dnacode {

struct GrayImage;

// Shannon entropy in base-b units (b >= 2). Zero-count symbols contribute 0.
double entropy(const FrequencyTable& table, int base);

// Probability-weighted mean codeword length, in code symbols per source
// symbol (equal to nucleotides per symbol for the length-preserving
// transcoders). Every positive-count symbol must have a codeword.
double expected_length(const Codebook& book, const FrequencyTable& table);

// Source bits divided by emitted nucleotides.
double compression_ratio_bits_per_nt(std::uint64_t source_bits,
                                     const NucleotideStream& stream);

// 10*log10(255^2 / MSE) over 8-bit images of equal dimensions; +infinity
// when the images are identical.
double psnr(const GrayImage& original, const GrayImage& reconstructed);

// One measurement row: entropies of the source table plus per-coder expected
// lengths and observed stream-level homopolymer maxima.
struct RateReport {
    std::uint64_t sample_count = 0;
    std::map<int, double> entropy_b;                       // base -> H_b(X)
    std::map<std::string, double> expected_length;         // coder -> nt/symbol
    std::map<std::string, std::size_t> homopolymer_max;    // coder -> max run
};

}  // namespace dnacode
