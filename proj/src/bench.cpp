#include "dnacode/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <ostream>
#include <thread>

#include "dnacode/transcoder.hpp"
#include "dnacode/tree_builders.hpp"
#include "json.hpp"

namespace dnacode {

const std::vector<std::string> kBenchCoders = {"huffman4", "sfc",      "huffman4c",
                                               "goldman",  "huffman2", "huffman3"};

Codebook coder_codebook(const std::string& name, const FrequencyTable& table,
                        std::uint32_t max_hl) {
    if (name == "sfc") return sfc_codebook(table, BuilderConfig{max_hl});
    if (name == "huffman4c")
        return huffman_constrained_codebook(table, BuilderConfig{max_hl});
    if (name == "goldman") {
        Codebook book = huffman_codebook(table, 3);
        return Codebook("goldman", 3, 0, book.codewords());
    }
    if (name == "huffman2") return huffman_codebook(table, 2);
    if (name == "huffman3") return huffman_codebook(table, 3);
    if (name == "huffman4") return huffman_codebook(table, 4);
    throw ConfigError("unknown coder '" + name + "'");
}

CodeTree coder_tree(const std::string& name, const FrequencyTable& table,
                    std::uint32_t max_hl) {
    if (name == "sfc") return sfc_build(table, BuilderConfig{max_hl});
    if (name == "huffman4c")
        return huffman_constrained_build(table, BuilderConfig{max_hl});
    if (name == "goldman" || name == "huffman3") return huffman_build(table, 3);
    if (name == "huffman2") return huffman_build(table, 2);
    if (name == "huffman4") return huffman_build(table, 4);
    throw ConfigError("unknown coder '" + name + "'");
}

NucleotideStream coder_transcode(const std::string& name, const Codebook& book,
                                 std::span<const SymbolId> message) {
    if (name == "sfc" || name == "huffman4c") return sfc_transcode(message, book);
    if (name == "goldman") return goldman_transcode(message, book);
    return fixed_transcode(message, book);
}

std::vector<SymbolId> coder_detranscode(const std::string& name,
                                        const NucleotideStream& stream,
                                        const CodeTree& tree, std::uint32_t max_hl) {
    if (name == "sfc" || name == "huffman4c")
        return sfc_detranscode(stream, tree, max_hl);
    if (name == "goldman") return goldman_decode(stream, tree);
    return fixed_detranscode(stream, tree);
}

RateReport measure_coders(const FrequencyTable& table,
                          const std::vector<std::string>& coders, std::uint32_t max_hl,
                          const std::vector<SymbolId>& sample_message) {
    RateReport report;
    report.sample_count = table.total();
    for (int b : {2, 3, 4}) report.entropy_b[b] = entropy(table, b);
    for (const std::string& name : coders) {
        Codebook book = coder_codebook(name, table, max_hl);
        report.expected_length[name] = expected_length(book, table);
        if (!sample_message.empty()) {
            NucleotideStream nt = coder_transcode(name, book, sample_message);
            report.homopolymer_max[name] = max_homopolymer_run(nt);
        }
    }
    return report;
}

BenchResult run_bench(const BenchSpec& spec) {
    if (spec.coders.empty()) throw ConfigError("at least one coder must be selected");
    for (const std::string& c : spec.coders)
        if (std::find(kBenchCoders.begin(), kBenchCoders.end(), c) == kBenchCoders.end())
            throw ConfigError("unknown coder '" + c + "'");
    if (spec.max_hl < 2) throw ConfigError("max_hl must be at least 2");
    if (spec.gaussian.realizations == 0)
        throw ConfigError("at least one realization is required");
    if (spec.jobs < 1) throw ConfigError("jobs must be positive");

    FrequencyTable source_table;
    if (spec.kind == BenchSpec::SourceKind::TableFile)
        source_table = FrequencyTable::from_csv_file(spec.table_file);

    BenchResult result;
    result.spec = spec;
    result.rows.resize(spec.gaussian.realizations);

    std::atomic<std::uint32_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            std::uint32_t i = next.fetch_add(1);
            if (i >= spec.gaussian.realizations) return;
            try {
                SourceRealization r =
                    spec.kind == BenchSpec::SourceKind::Gaussian
                        ? gaussian_realization(spec.gaussian, i)
                        : sample_from_table(source_table,
                                            spec.gaussian.samples_per_realization,
                                            spec.gaussian.seed + i,
                                            "table[" + spec.table_file + "]");
                FrequencyTable table = empirical_table(r);
                result.rows[i].realization = i;
                result.rows[i].report =
                    measure_coders(table, spec.coders, spec.max_hl, r.symbols);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    if (spec.jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < spec.jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    const double n = static_cast<double>(result.rows.size());
    for (int b : {2, 3, 4}) {
        double sum = 0, sq = 0;
        for (const BenchRow& row : result.rows) {
            double v = row.report.entropy_b.at(b);
            sum += v;
            sq += v * v;
        }
        result.mean_entropy[b] = sum / n;
        result.stddev_entropy[b] =
            n > 1 ? std::sqrt(std::max(0.0, (sq - sum * sum / n) / (n - 1))) : 0.0;
    }
    for (const std::string& c : spec.coders) {
        double sum = 0, sq = 0;
        std::size_t hp = 0;
        for (const BenchRow& row : result.rows) {
            double v = row.report.expected_length.at(c);
            sum += v;
            sq += v * v;
            auto it = row.report.homopolymer_max.find(c);
            if (it != row.report.homopolymer_max.end()) hp = std::max(hp, it->second);
        }
        result.mean_length[c] = sum / n;
        result.stddev_length[c] =
            n > 1 ? std::sqrt(std::max(0.0, (sq - sum * sum / n) / (n - 1))) : 0.0;
        result.max_homopolymer[c] = hp;
    }
    return result;
}

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

bool selected(const BenchResult& r, const std::string& coder) {
    return std::find(r.spec.coders.begin(), r.spec.coders.end(), coder) !=
           r.spec.coders.end();
}

}  // namespace

void write_bench_csv(std::ostream& out, const BenchResult& r) {
    out << "# schema: dnacode.bench.v1\n";
    if (r.spec.kind == BenchSpec::SourceKind::Gaussian) {
        const auto& g = r.spec.gaussian;
        out << "# source: gaussian seed=" << g.seed << " realizations=" << g.realizations
            << " samples=" << g.samples_per_realization << " alphabet=" << g.alphabet_size
            << " sigma=" << fmt(g.sigma) << " support_radius=" << fmt(g.support_radius)
            << " max_hl=" << r.spec.max_hl << "\n";
    } else {
        out << "# source: table file=" << r.spec.table_file
            << " seed=" << r.spec.gaussian.seed
            << " realizations=" << r.spec.gaussian.realizations
            << " samples=" << r.spec.gaussian.samples_per_realization
            << " max_hl=" << r.spec.max_hl << "\n";
    }
    out << "realization,samples,H4,L_huffman4,L_sfc,L_huffman4c,H3,L_goldman,H2,"
           "L_huffman2,L_huffman3";
    for (const std::string& c : kBenchCoders) out << ",hp_" << c;
    out << "\n";

    auto length_cell = [&](const std::map<std::string, double>& lengths,
                           const std::string& c) {
        return selected(r, c) ? fmt(lengths.at(c)) : std::string();
    };
    for (const BenchRow& row : r.rows) {
        const RateReport& rep = row.report;
        out << row.realization << ',' << rep.sample_count << ','
            << fmt(rep.entropy_b.at(4)) << ','
            << length_cell(rep.expected_length, "huffman4") << ','
            << length_cell(rep.expected_length, "sfc") << ','
            << length_cell(rep.expected_length, "huffman4c") << ','
            << fmt(rep.entropy_b.at(3)) << ','
            << length_cell(rep.expected_length, "goldman") << ','
            << fmt(rep.entropy_b.at(2)) << ','
            << length_cell(rep.expected_length, "huffman2") << ','
            << length_cell(rep.expected_length, "huffman3");
        for (const std::string& c : kBenchCoders) {
            out << ',';
            auto it = rep.homopolymer_max.find(c);
            if (it != rep.homopolymer_max.end()) out << it->second;
        }
        out << "\n";
    }
    for (const std::string& stat : {"mean", "stddev"}) {
        bool mean = stat == std::string("mean");
        const auto& ent = mean ? r.mean_entropy : r.stddev_entropy;
        const auto& len = mean ? r.mean_length : r.stddev_length;
        out << stat << ',' << (mean ? r.rows.size() : 0) << ',' << fmt(ent.at(4)) << ','
            << length_cell(len, "huffman4") << ',' << length_cell(len, "sfc") << ','
            << length_cell(len, "huffman4c") << ',' << fmt(ent.at(3)) << ','
            << length_cell(len, "goldman") << ',' << fmt(ent.at(2)) << ','
            << length_cell(len, "huffman2") << ',' << length_cell(len, "huffman3");
        for (const std::string& c : kBenchCoders) {
            out << ',';
            if (mean && selected(r, c)) out << r.max_homopolymer.at(c);
        }
        out << "\n";
    }
}

void write_bench_json(std::ostream& out, const BenchResult& r) {
    nlohmann::json j;
    j["schema"] = "dnacode.bench.v1";
    if (r.spec.kind == BenchSpec::SourceKind::Gaussian) {
        const auto& g = r.spec.gaussian;
        j["source"] = {{"kind", "gaussian"},         {"seed", g.seed},
                       {"realizations", g.realizations},
                       {"samples", g.samples_per_realization},
                       {"alphabet_size", g.alphabet_size},
                       {"sigma", g.sigma},           {"support_radius", g.support_radius}};
    } else {
        j["source"] = {{"kind", "table"},
                       {"file", r.spec.table_file},
                       {"seed", r.spec.gaussian.seed},
                       {"realizations", r.spec.gaussian.realizations},
                       {"samples", r.spec.gaussian.samples_per_realization}};
    }
    j["max_hl"] = r.spec.max_hl;
    j["coders"] = r.spec.coders;
    j["rows"] = nlohmann::json::array();
    for (const BenchRow& row : r.rows) {
        nlohmann::json jr;
        jr["realization"] = row.realization;
        jr["samples"] = row.report.sample_count;
        for (const auto& [b, v] : row.report.entropy_b)
            jr["entropy"][std::to_string(b)] = v;
        for (const auto& [c, v] : row.report.expected_length) jr["length"][c] = v;
        for (const auto& [c, v] : row.report.homopolymer_max) jr["homopolymer"][c] = v;
        j["rows"].push_back(std::move(jr));
    }
    for (const auto& [b, v] : r.mean_entropy)
        j["aggregate"]["mean"]["entropy"][std::to_string(b)] = v;
    for (const auto& [c, v] : r.mean_length) j["aggregate"]["mean"]["length"][c] = v;
    for (const auto& [b, v] : r.stddev_entropy)
        j["aggregate"]["stddev"]["entropy"][std::to_string(b)] = v;
    for (const auto& [c, v] : r.stddev_length) j["aggregate"]["stddev"]["length"][c] = v;
    for (const auto& [c, v] : r.max_homopolymer) j["aggregate"]["homopolymer_max"][c] = v;
    out << j.dump(2) << "\n";
}

}  // namespace dnacode
