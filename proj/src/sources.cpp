#include "dnacode/sources.hpp"

#include <algorithm>
#include <cmath>

#include "dnacode/rng.hpp"

namespace dnacode {

namespace {

void validate(const GaussianSourceConfig& cfg) {
    if (cfg.alphabet_size < 2) throw ConfigError("alphabet size must be at least 2");
    if (cfg.samples_per_realization == 0)
        throw ConfigError("samples per realization must be positive");
    if (cfg.sigma <= 0.0) throw ConfigError("sigma must be positive");
    if (cfg.support_radius <= 0.0) throw ConfigError("support radius must be positive");
}

double gaussian_cdf(double x, double sigma) {
    return 0.5 * std::erfc(-x / (sigma * std::sqrt(2.0)));
}

}  // namespace

SourceRealization gaussian_realization(const GaussianSourceConfig& cfg,
                                       std::uint32_t index) {
    validate(cfg);
    PortableRng rng(cfg.seed + index);
    const double half = cfg.support_radius * cfg.sigma;
    const double delta = 2.0 * half / static_cast<double>(cfg.alphabet_size);
    SourceRealization r;
    r.alphabet_size = cfg.alphabet_size;
    r.origin = "gaussian[seed=" + std::to_string(cfg.seed + index) + "]";
    r.symbols.reserve(cfg.samples_per_realization);
    for (std::uint32_t i = 0; i < cfg.samples_per_realization; ++i) {
        double x = rng.normal() * cfg.sigma;
        auto bin = static_cast<std::int64_t>(std::floor((x + half) / delta));
        bin = std::clamp<std::int64_t>(bin, 0, cfg.alphabet_size - 1);
        r.symbols.push_back(static_cast<SymbolId>(bin));
    }
    return r;
}

std::vector<SourceRealization> gaussian_quantized_source(const GaussianSourceConfig& cfg) {
    validate(cfg);
    std::vector<SourceRealization> out;
    out.reserve(cfg.realizations);
    for (std::uint32_t r = 0; r < cfg.realizations; ++r)
        out.push_back(gaussian_realization(cfg, r));
    return out;
}

FrequencyTable empirical_table(const SourceRealization& realization) {
    if (realization.symbols.empty())
        throw InputError("empirical table of an empty realization");
    std::vector<std::uint64_t> counts(realization.alphabet_size, 0);
    for (SymbolId s : realization.symbols) {
        if (s >= realization.alphabet_size)
            throw InputError("symbol id exceeds the realization alphabet");
        ++counts[s];
    }
    return FrequencyTable(std::move(counts));
}

SourceRealization sample_from_table(const FrequencyTable& table, std::size_t samples,
                                    std::uint64_t seed, std::string origin) {
    if (table.total() == 0) throw InputError("cannot sample from a zero-total table");
    std::vector<std::uint64_t> cumulative(table.size());
    std::uint64_t acc = 0;
    for (SymbolId i = 0; i < table.size(); ++i) {
        acc += table.count(i);
        cumulative[i] = acc;
    }
    PortableRng rng(seed);
    SourceRealization r;
    r.alphabet_size = static_cast<std::uint32_t>(table.size());
    r.origin = std::move(origin);
    r.symbols.reserve(samples);
    for (std::size_t i = 0; i < samples; ++i) {
        std::uint64_t u = rng.next_below(table.total());
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        r.symbols.push_back(static_cast<SymbolId>(it - cumulative.begin()));
    }
    return r;
}

SourceRealization ac_frequency_source(const std::string& table_file,
                                      std::size_t samples, std::uint64_t seed) {
    FrequencyTable table = FrequencyTable::from_csv_file(table_file);
    return sample_from_table(table, samples, seed,
                             "table[" + table_file + ",seed=" + std::to_string(seed) + "]");
}

std::vector<double> gaussian_bin_masses(const GaussianSourceConfig& cfg) {
    validate(cfg);
    const double half = cfg.support_radius * cfg.sigma;
    const double delta = 2.0 * half / static_cast<double>(cfg.alphabet_size);
    std::vector<double> masses(cfg.alphabet_size);
    for (std::uint32_t i = 0; i < cfg.alphabet_size; ++i) {
        double lo = -half + delta * i;
        double hi = lo + delta;
        double mass = gaussian_cdf(hi, cfg.sigma) - gaussian_cdf(lo, cfg.sigma);
        if (i == 0) mass += gaussian_cdf(lo, cfg.sigma);
        if (i + 1 == cfg.alphabet_size) mass += 1.0 - gaussian_cdf(hi, cfg.sigma);
        masses[i] = mass;
    }
    return masses;
}

}  // namespace dnacode
