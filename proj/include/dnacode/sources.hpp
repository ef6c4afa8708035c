#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dnacode/coding_core.hpp"

namespace dnacode {

struct GaussianSourceConfig {
    std::uint32_t realizations = 100;
    std::uint32_t samples_per_realization = 10000;
    std::uint32_t alphabet_size = 162;
    std::uint64_t seed = 1;
    double sigma = 1.0;
    // The uniform midrise quantizer spans [-r*sigma, +r*sigma]; samples
    // beyond the ends clamp into the outermost bins. Quantizing a Gaussian on
    // a support proportional to sigma is scale-invariant, so this radius is
    // the one knob that sets the source entropy.
    double support_radius = 2.7;
};

struct SourceRealization {
    std::vector<SymbolId> symbols;
    std::uint32_t alphabet_size = 0;
    std::string origin;
};

// i.i.d. Gaussian samples, uniformly quantized. Realization r uses the seed
// cfg.seed + r, so realizations are reproducible independently and the
// harness may generate them in parallel.
std::vector<SourceRealization> gaussian_quantized_source(const GaussianSourceConfig& cfg);
SourceRealization gaussian_realization(const GaussianSourceConfig& cfg,
                                       std::uint32_t index);

// Occurrence counts of every alphabet symbol (zero-count entries included so
// ids stay dense).
FrequencyTable empirical_table(const SourceRealization& realization);

// i.i.d. sampling from a distribution given as a frequency table.
SourceRealization sample_from_table(const FrequencyTable& table, std::size_t samples,
                                    std::uint64_t seed, std::string origin);
SourceRealization ac_frequency_source(const std::string& table_file,
                                      std::size_t samples, std::uint64_t seed);

// Analytic probability of each quantizer bin (Gaussian CDF differences with
// the tail mass clamped into the end bins); used by the sampling tests.
std::vector<double> gaussian_bin_masses(const GaussianSourceConfig& cfg);

}  // namespace dnacode
