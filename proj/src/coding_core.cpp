#include "dnacode/coding_core.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace dnacode {

FrequencyTable::FrequencyTable(std::vector<std::uint64_t> counts,
                               std::vector<std::string> labels)
    : counts_(std::move(counts)), labels_(std::move(labels)) {
    if (!labels_.empty() && labels_.size() != counts_.size())
        throw InputError("frequency table label count does not match symbol count");
    total_ = 0;
    for (std::uint64_t c : counts_) total_ += c;
}

double FrequencyTable::probability(SymbolId id) const {
    if (total_ == 0) throw InputError("frequency table has zero total count");
    return static_cast<double>(counts_.at(id)) / static_cast<double>(total_);
}

Symbol FrequencyTable::symbol(SymbolId id) const {
    if (id >= counts_.size()) throw InputError("symbol id out of range");
    return Symbol{id, labels_.empty() ? std::string() : labels_[id]};
}

namespace {

std::string strip(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

FrequencyTable FrequencyTable::from_csv(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    bool header_seen = false;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> rows;  // (id, count)
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = strip(line);
        if (t.empty() || t[0] == '#') continue;
        if (!header_seen) {
            std::string h = t;
            h.erase(std::remove_if(h.begin(), h.end(),
                                   [](char c) { return c == ' ' || c == '\t'; }),
                    h.end());
            if (h != "symbol,count")
                throw InputError("line " + std::to_string(lineno) +
                                 ": expected header 'symbol,count'");
            header_seen = true;
            continue;
        }
        auto comma = t.find(',');
        if (comma == std::string::npos)
            throw InputError("line " + std::to_string(lineno) + ": expected 'symbol,count'");
        std::uint64_t id = 0, count = 0;
        try {
            std::size_t used = 0;
            id = std::stoull(strip(t.substr(0, comma)), &used);
            std::string cs = strip(t.substr(comma + 1));
            count = std::stoull(cs, &used);
            if (used != cs.size()) throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            throw InputError("line " + std::to_string(lineno) + ": malformed row '" + t + "'");
        }
        rows.emplace_back(id, count);
    }
    if (!header_seen) throw InputError("empty frequency table CSV");
    std::vector<std::uint64_t> counts(rows.size(), 0);
    std::vector<bool> seen(rows.size(), false);
    for (const auto& [id, count] : rows) {
        if (id >= rows.size())
            throw InputError("symbol id " + std::to_string(id) +
                             " out of range; ids must be dense from 0");
        if (seen[id]) throw InputError("duplicate symbol id " + std::to_string(id));
        seen[id] = true;
        counts[id] = count;
    }
    return FrequencyTable(std::move(counts));
}

FrequencyTable FrequencyTable::from_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open frequency table '" + path + "'");
    return from_csv(in);
}

void FrequencyTable::to_csv(std::ostream& out) const {
    out << "symbol,count\n";
    for (std::size_t i = 0; i < counts_.size(); ++i)
        out << i << ',' << counts_[i] << '\n';
}

CodeTree CodeTree::leaf(SymbolId symbol) {
    CodeTree t;
    Node n;
    n.symbol = static_cast<std::int32_t>(symbol);
    n.depth = 1;
    t.nodes_.push_back(std::move(n));
    return t;
}

std::size_t CodeTree::leaf_count() const {
    std::size_t n = 0;
    for (const auto& node : nodes_)
        if (node.is_leaf()) ++n;
    return n;
}

std::uint32_t CodeTree::max_depth() const {
    std::uint32_t d = 0;
    for (const auto& node : nodes_) d = std::max(d, node.depth);
    return d;
}

CodeTree merge_trees(std::span<const CodeTree> subtrees) {
    if (subtrees.empty())
        throw InputError("merge_trees requires at least one subtree");
    if (subtrees.size() > 4)
        throw InputError("merge_trees accepts at most 4 subtrees");
    CodeTree out;
    CodeTree::Node root;
    root.depth = 1;
    out.nodes_.push_back(std::move(root));
    for (const CodeTree& sub : subtrees) {
        if (sub.node_count() == 0) throw InputError("merge_trees: empty subtree");
        std::uint32_t offset = static_cast<std::uint32_t>(out.nodes_.size());
        out.nodes_[0].children.push_back(offset);
        for (const auto& n : sub.nodes_) {
            CodeTree::Node copy = n;
            copy.depth = n.depth + 1;
            for (auto& c : copy.children) c += offset;
            out.nodes_.push_back(std::move(copy));
        }
    }
    return out;
}

Codebook::Codebook(std::string builder, int radix, std::uint32_t max_hl,
                   std::vector<std::string> codewords)
    : builder_(std::move(builder)),
      radix_(radix),
      max_hl_(max_hl),
      codewords_(std::move(codewords)) {
    if (radix_ < 2 || radix_ > 4) throw ConfigError("codebook radix must be 2, 3 or 4");
    for (const auto& cw : codewords_)
        for (char c : cw)
            if (c < '0' || c >= '0' + radix_)
                throw InputError("codeword digit out of range for radix " +
                                 std::to_string(radix_));
}

std::string Codebook::to_json() const {
    nlohmann::json j;
    j["builder"] = builder_;
    j["max_hl"] = max_hl_;
    j["entries"] = nlohmann::json::array();
    for (std::size_t i = 0; i < codewords_.size(); ++i)
        j["entries"].push_back({{"symbol", i}, {"codeword", codewords_[i]}});
    return j.dump();
}

Codebook Codebook::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    std::string builder = j.at("builder").get<std::string>();
    std::uint32_t max_hl = j.at("max_hl").get<std::uint32_t>();
    const auto& entries = j.at("entries");
    std::vector<std::string> codewords(entries.size());
    for (const auto& e : entries) {
        std::size_t id = e.at("symbol").get<std::size_t>();
        if (id >= codewords.size() || !codewords[id].empty())
            throw InputError("codebook JSON: symbol ids must be dense and unique");
        codewords[id] = e.at("codeword").get<std::string>();
    }
    int radix = 4;
    if (builder.starts_with("huffman2")) radix = 2;
    else if (builder.starts_with("huffman3") || builder == "goldman") radix = 3;
    return Codebook(std::move(builder), radix, max_hl, std::move(codewords));
}

Codebook codebook_from_tree(const CodeTree& tree, std::string builder, int radix,
                            std::uint32_t max_hl) {
    std::int32_t max_symbol = -1;
    std::size_t leaves = 0;
    for (std::uint32_t i = 0; i < tree.node_count(); ++i) {
        const auto& n = tree.node(i);
        if (n.is_leaf()) {
            if (n.symbol < 0) throw InputError("leaf without a symbol");
            max_symbol = std::max(max_symbol, n.symbol);
            ++leaves;
        }
    }
    std::vector<std::string> codewords(static_cast<std::size_t>(max_symbol) + 1);
    std::vector<bool> assigned(codewords.size(), false);

    if (tree.single_leaf()) {
        // Degenerate one-symbol alphabet: a zero-length codeword would not be
        // decodable, emit "0" instead.
        codewords[tree.node(0).symbol] = "0";
        return Codebook(std::move(builder), radix, max_hl, std::move(codewords));
    }

    std::string path;
    std::function<void(std::uint32_t)> walk = [&](std::uint32_t idx) {
        const auto& n = tree.node(idx);
        if (n.is_leaf()) {
            if (assigned[n.symbol])
                throw InputError("symbol " + std::to_string(n.symbol) +
                                 " appears in more than one leaf");
            assigned[n.symbol] = true;
            codewords[n.symbol] = path;
            return;
        }
        if (n.children.size() > 4) throw InputError("node arity exceeds 4");
        for (std::size_t i = 0; i < n.children.size(); ++i) {
            path.push_back(static_cast<char>('0' + i));
            walk(n.children[i]);
            path.pop_back();
        }
    };
    walk(tree.root());
    if (leaves != codewords.size())
        throw InputError("tree leaves do not form a dense symbol alphabet");
    return Codebook(std::move(builder), radix, max_hl, std::move(codewords));
}

PrefixCheck validate_prefix_free(const Codebook& book) {
    PrefixCheck result;
    result.kraft_sum = 0.0;
    for (const auto& cw : book.codewords())
        result.kraft_sum += std::pow(static_cast<double>(book.radix()),
                                     -static_cast<double>(cw.size()));
    std::vector<std::string> sorted = book.codewords();
    std::sort(sorted.begin(), sorted.end());
    result.prefix_free = true;
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
        const auto& a = sorted[i];
        const auto& b = sorted[i + 1];
        if (a.empty() || b.compare(0, a.size(), a) == 0) {
            result.prefix_free = false;
            break;
        }
    }
    if (!sorted.empty() && sorted.size() == 1 && sorted[0].empty())
        result.prefix_free = false;
    return result;
}

bool is_nucleotide(char c) {
    return c == 'A' || c == 'C' || c == 'G' || c == 'T';
}

void validate_stream(const NucleotideStream& stream) {
    for (std::size_t i = 0; i < stream.bases.size(); ++i)
        if (!is_nucleotide(stream.bases[i]))
            throw CorruptStreamError(i, std::string("invalid nucleotide '") +
                                            stream.bases[i] + "'");
}

}  // namespace dnacode
