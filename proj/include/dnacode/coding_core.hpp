#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dnacode {

// Error categories; the CLI maps them to exit codes (input 2, corruption 3,
// config 4).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when a nucleotide stream cannot be decoded. Carries the stream
// offset (in nucleotides) at which decoding desynchronized.
class CorruptStreamError : public std::runtime_error {
public:
    CorruptStreamError(std::size_t offset, const std::string& what)
        : std::runtime_error(what + " at stream offset " + std::to_string(offset)),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

using SymbolId = std::uint32_t;

struct Symbol {
    SymbolId id = 0;
    std::string display;  // optional short label, empty if unnamed
};

// Symbol occurrence counts. Symbol ids are dense: entry i is symbol i.
class FrequencyTable {
public:
    FrequencyTable() = default;
    explicit FrequencyTable(std::vector<std::uint64_t> counts,
                            std::vector<std::string> labels = {});

    std::size_t size() const { return counts_.size(); }
    bool empty() const { return counts_.empty(); }
    std::uint64_t count(SymbolId id) const { return counts_.at(id); }
    std::uint64_t total() const { return total_; }
    double probability(SymbolId id) const;
    Symbol symbol(SymbolId id) const;
    const std::vector<std::uint64_t>& counts() const { return counts_; }

    // CSV with header "symbol,count", one row per symbol, '#' lines ignored.
    // Symbol ids must cover 0..n-1 (any row order). Malformed rows raise
    // InputError naming the 1-based line number.
    static FrequencyTable from_csv(std::istream& in);
    static FrequencyTable from_csv_file(const std::string& path);
    void to_csv(std::ostream& out) const;

private:
    std::vector<std::uint64_t> counts_;
    std::vector<std::string> labels_;
    std::uint64_t total_ = 0;
};

// Labeled coding tree of arity <= 4. Edge labels are positional: the edge to
// children[i] carries label i. The root has depth 1.
class CodeTree {
public:
    struct Node {
        std::int32_t symbol = -1;  // leaf payload, -1 for internal nodes
        std::uint32_t depth = 1;
        std::vector<std::uint32_t> children;
        bool is_leaf() const { return children.empty(); }
    };

    static CodeTree leaf(SymbolId symbol);

    const Node& node(std::uint32_t index) const { return nodes_.at(index); }
    std::uint32_t root() const { return 0; }
    std::size_t node_count() const { return nodes_.size(); }
    bool single_leaf() const { return nodes_.size() == 1; }
    std::size_t leaf_count() const;
    std::uint32_t max_depth() const;

    friend CodeTree merge_trees(std::span<const CodeTree> subtrees);

private:
    std::vector<Node> nodes_;  // nodes_[0] is the root
};

// Attaches the given subtrees (1..4, in order) under a fresh root; the edge
// to the i-th subtree carries label i. Depths shift down one level.
CodeTree merge_trees(std::span<const CodeTree> subtrees);

// Symbol -> codeword map over the base alphabet {0,1,2,3} ('0'..'3' chars).
class Codebook {
public:
    Codebook(std::string builder, int radix, std::uint32_t max_hl,
             std::vector<std::string> codewords);

    const std::string& codeword(SymbolId id) const { return codewords_.at(id); }
    std::size_t size() const { return codewords_.size(); }
    const std::string& builder() const { return builder_; }
    int radix() const { return radix_; }
    std::uint32_t max_hl() const { return max_hl_; }  // 0 when unconstrained
    const std::vector<std::string>& codewords() const { return codewords_; }

    // JSON object {builder, max_hl, entries: [{symbol, codeword}]}.
    std::string to_json() const;
    static Codebook from_json(const std::string& text);

private:
    std::string builder_;
    int radix_ = 4;
    std::uint32_t max_hl_ = 0;
    std::vector<std::string> codewords_;
};

// Extracts the root-to-leaf edge labels of every symbol. A tree that is a
// single leaf yields the one-symbol book {"0"} so streams stay decodable.
Codebook codebook_from_tree(const CodeTree& tree, std::string builder = "tree",
                            int radix = 4, std::uint32_t max_hl = 0);

struct PrefixCheck {
    bool prefix_free = false;
    double kraft_sum = 0.0;  // sum of radix^-len over all codewords
};

PrefixCheck validate_prefix_free(const Codebook& book);

// Sequence over the channel alphabet {A,C,G,T}.
struct NucleotideStream {
    std::string bases;

    NucleotideStream() = default;
    explicit NucleotideStream(std::string b) : bases(std::move(b)) {}
    std::size_t size() const { return bases.size(); }
    bool empty() const { return bases.empty(); }
};

bool is_nucleotide(char c);
void validate_stream(const NucleotideStream& stream);

}  // namespace dnacode
