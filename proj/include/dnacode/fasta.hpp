#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "dnacode/coding_core.hpp"

namespace dnacode {

// FASTA-like record: header line ">name meta=<json>", then sequence lines of
// at most 80 characters over ACGT.
struct FastaRecord {
    std::string name;
    std::string meta_json;  // empty when the header carries no meta field
    NucleotideStream seq;
};

void write_fasta(std::ostream& out, std::span<const FastaRecord> records);
void write_fasta_file(const std::string& path, std::span<const FastaRecord> records);
std::vector<FastaRecord> read_fasta(std::istream& in);
std::vector<FastaRecord> read_fasta_file(const std::string& path);

}  // namespace dnacode
