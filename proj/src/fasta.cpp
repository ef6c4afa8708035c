#include "dnacode/fasta.hpp"

#include <fstream>
#include <istream>
#include <ostream>

namespace dnacode {

namespace {
constexpr std::size_t kLineWidth = 80;
}

void write_fasta(std::ostream& out, std::span<const FastaRecord> records) {
    for (const FastaRecord& r : records) {
        out << '>' << r.name;
        if (!r.meta_json.empty()) out << " meta=" << r.meta_json;
        out << '\n';
        const std::string& s = r.seq.bases;
        for (std::size_t i = 0; i < s.size(); i += kLineWidth)
            out << s.substr(i, kLineWidth) << '\n';
    }
}

void write_fasta_file(const std::string& path, std::span<const FastaRecord> records) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    write_fasta(out, records);
}

std::vector<FastaRecord> read_fasta(std::istream& in) {
    std::vector<FastaRecord> records;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '>') {
            FastaRecord r;
            std::string header = line.substr(1);
            auto meta_pos = header.find(" meta=");
            if (meta_pos != std::string::npos) {
                r.name = header.substr(0, meta_pos);
                r.meta_json = header.substr(meta_pos + 6);
            } else {
                r.name = header;
            }
            records.push_back(std::move(r));
            continue;
        }
        if (records.empty())
            throw InputError("FASTA input: sequence data before the first header");
        for (char c : line) {
            if (!is_nucleotide(c))
                throw CorruptStreamError(records.back().seq.size(),
                                         std::string("invalid nucleotide '") + c + "'");
            records.back().seq.bases.push_back(c);
        }
    }
    return records;
}

std::vector<FastaRecord> read_fasta_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    return read_fasta(in);
}

}  // namespace dnacode
