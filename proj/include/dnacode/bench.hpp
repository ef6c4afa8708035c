#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "dnacode/metrics.hpp"
#include "dnacode/sources.hpp"

namespace dnacode {

// Known coder names, in report column order.
extern const std::vector<std::string> kBenchCoders;

struct BenchSpec {
    enum class SourceKind { Gaussian, TableFile };

    SourceKind kind = SourceKind::Gaussian;
    GaussianSourceConfig gaussian;  // realizations/samples/seed apply to both kinds
    std::string table_file;
    std::vector<std::string> coders = {"sfc", "goldman", "huffman4", "huffman4c"};
    std::uint32_t max_hl = 3;
    int jobs = 1;
};

struct BenchRow {
    std::uint32_t realization = 0;
    RateReport report;
};

struct BenchResult {
    BenchSpec spec;
    std::vector<BenchRow> rows;
    std::map<int, double> mean_entropy, stddev_entropy;
    std::map<std::string, double> mean_length, stddev_length;
    std::map<std::string, std::size_t> max_homopolymer;  // max over realizations
};

// Per realization: empirical table, one codebook per selected coder, expected
// lengths against that table, and the stream-level homopolymer maximum of the
// transcoded realization. Realizations may run on a worker pool; the output
// is identical for any job count.
BenchResult run_bench(const BenchSpec& spec);

// Tabular outputs, schema versioned in the first comment line. The column
// order follows the headline report: H4, L(huffman4), L(sfc), L(huffman4c),
// H3, L(goldman), then the remaining entropies/coders.
void write_bench_csv(std::ostream& out, const BenchResult& result);
void write_bench_json(std::ostream& out, const BenchResult& result);

// Measures one coder on one table (used by the bench loop and tests).
RateReport measure_coders(const FrequencyTable& table,
                          const std::vector<std::string>& coders, std::uint32_t max_hl,
                          const std::vector<SymbolId>& sample_message);

// Name-indexed coder registry shared by the bench harness and the file CLI.
Codebook coder_codebook(const std::string& name, const FrequencyTable& table,
                        std::uint32_t max_hl);
CodeTree coder_tree(const std::string& name, const FrequencyTable& table,
                    std::uint32_t max_hl);
NucleotideStream coder_transcode(const std::string& name, const Codebook& book,
                                 std::span<const SymbolId> message);
std::vector<SymbolId> coder_detranscode(const std::string& name,
                                        const NucleotideStream& stream,
                                        const CodeTree& tree, std::uint32_t max_hl);

}  // namespace dnacode
