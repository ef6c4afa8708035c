#include "dnacode/transcoder.hpp"

#include <functional>

#include "dnacode/tree_builders.hpp"

namespace dnacode {

int nt_index(char nt) {
    switch (nt) {
        case 'A': return 0;
        case 'T': return 1;
        case 'C': return 2;
        case 'G': return 3;
        default: return -1;
    }
}

int quaternary_digit(char nt) { return nt_index(nt); }

int rotating_digit(char prev, char nt) {
    int row = nt_index(prev);
    if (row < 0) throw InputError("invalid previous nucleotide");
    for (int d = 0; d < 3; ++d)
        if (kRotatingNt[row][d] == nt) return d;
    return -1;
}

namespace {

void append_sfc_codeword(const std::string& cw, std::uint32_t max_hl, char& prev,
                         std::string& out) {
    for (std::size_t k = 1; k <= cw.size(); ++k) {
        int digit = cw[k - 1] - '0';
        if (digit < 0 || digit > 3)
            throw InputError("codeword contains a digit outside 0..3");
        char nt;
        if (k % max_hl == 0) {
            if (digit > 2)
                throw CorruptStreamError(out.size(),
                                         "digit 3 at a ternary (constrained) position");
            nt = kRotatingNt[nt_index(prev)][digit];
        } else {
            nt = kQuaternaryNt[digit];
        }
        out.push_back(nt);
        prev = nt;
    }
}

using DigitOf = std::function<int(std::uint32_t position, char prev, char nt)>;

std::vector<SymbolId> decode_with(const NucleotideStream& stream, const CodeTree& tree,
                                  const DigitOf& digit_of) {
    if (tree.node_count() == 0) throw InputError("cannot decode with an empty tree");
    std::vector<SymbolId> out;
    char prev = kInitialPrev;
    const std::string& s = stream.bases;
    std::size_t i = 0;

    if (tree.single_leaf()) {
        // One-symbol alphabet: every codeword is the single digit 0.
        while (i < s.size()) {
            if (digit_of(1, prev, s[i]) != 0)
                throw CorruptStreamError(i, "unexpected nucleotide for one-symbol code");
            out.push_back(static_cast<SymbolId>(tree.node(0).symbol));
            prev = s[i];
            ++i;
        }
        return out;
    }

    while (i < s.size()) {
        std::uint32_t node = tree.root();
        while (!tree.node(node).is_leaf()) {
            if (i >= s.size())
                throw CorruptStreamError(i, "stream truncated inside a codeword");
            char c = s[i];
            int digit = digit_of(tree.node(node).depth, prev, c);
            if (digit < 0 ||
                digit >= static_cast<int>(tree.node(node).children.size()))
                throw CorruptStreamError(i, "no tree edge matches nucleotide");
            node = tree.node(node).children[digit];
            prev = c;
            ++i;
        }
        out.push_back(static_cast<SymbolId>(tree.node(node).symbol));
    }
    return out;
}

}  // namespace

NucleotideStream sfc_transcode(std::span<const std::string> codewords,
                               std::uint32_t max_hl) {
    if (max_hl < 2) throw ConfigError("max_hl must be at least 2");
    std::string out;
    char prev = kInitialPrev;
    for (const std::string& cw : codewords) append_sfc_codeword(cw, max_hl, prev, out);
    return NucleotideStream(std::move(out));
}

NucleotideStream sfc_transcode(std::span<const SymbolId> message, const Codebook& book) {
    if (book.max_hl() < 2)
        throw ConfigError("codebook carries no homopolymer constraint");
    std::string out;
    char prev = kInitialPrev;
    for (SymbolId id : message) {
        if (id >= book.size()) throw InputError("message symbol outside codebook");
        append_sfc_codeword(book.codeword(id), book.max_hl(), prev, out);
    }
    return NucleotideStream(std::move(out));
}

std::vector<SymbolId> sfc_detranscode(const NucleotideStream& stream,
                                      const CodeTree& tree, std::uint32_t max_hl) {
    if (max_hl < 2) throw ConfigError("max_hl must be at least 2");
    return decode_with(stream, tree, [max_hl](std::uint32_t pos, char prev, char nt) {
        return pos % max_hl == 0 ? rotating_digit(prev, nt) : quaternary_digit(nt);
    });
}

NucleotideStream fixed_transcode(std::span<const std::string> codewords) {
    std::string out;
    for (const std::string& cw : codewords) {
        for (char c : cw) {
            int digit = c - '0';
            if (digit < 0 || digit > 3)
                throw InputError("codeword contains a digit outside 0..3");
            out.push_back(kQuaternaryNt[digit]);
        }
    }
    return NucleotideStream(std::move(out));
}

NucleotideStream fixed_transcode(std::span<const SymbolId> message,
                                 const Codebook& book) {
    std::string out;
    for (SymbolId id : message) {
        if (id >= book.size()) throw InputError("message symbol outside codebook");
        for (char c : book.codeword(id)) out.push_back(kQuaternaryNt[c - '0']);
    }
    return NucleotideStream(std::move(out));
}

std::vector<SymbolId> fixed_detranscode(const NucleotideStream& stream,
                                        const CodeTree& tree) {
    return decode_with(stream, tree, [](std::uint32_t, char, char nt) {
        return quaternary_digit(nt);
    });
}

NucleotideStream goldman_transcode(std::span<const std::string> codewords) {
    std::string out;
    char prev = kInitialPrev;
    for (const std::string& cw : codewords) {
        for (char c : cw) {
            int digit = c - '0';
            if (digit < 0 || digit > 2)
                throw InputError("goldman codeword contains a digit outside 0..2");
            char nt = kRotatingNt[nt_index(prev)][digit];
            out.push_back(nt);
            prev = nt;
        }
    }
    return NucleotideStream(std::move(out));
}

NucleotideStream goldman_transcode(std::span<const SymbolId> message,
                                   const Codebook& book) {
    std::string out;
    char prev = kInitialPrev;
    for (SymbolId id : message) {
        if (id >= book.size()) throw InputError("message symbol outside codebook");
        for (char c : book.codeword(id)) {
            int digit = c - '0';
            if (digit > 2)
                throw InputError("goldman codeword contains a digit outside 0..2");
            char nt = kRotatingNt[nt_index(prev)][digit];
            out.push_back(nt);
            prev = nt;
        }
    }
    return NucleotideStream(std::move(out));
}

NucleotideStream goldman_encode(std::span<const SymbolId> message,
                                const FrequencyTable& table) {
    Codebook book = huffman_codebook(table, 3);
    std::string out;
    char prev = kInitialPrev;
    for (SymbolId id : message) {
        if (id >= book.size())
            throw InputError("message symbol " + std::to_string(id) +
                             " not covered by the frequency table");
        for (char c : book.codeword(id)) {
            char nt = kRotatingNt[nt_index(prev)][c - '0'];
            out.push_back(nt);
            prev = nt;
        }
    }
    return NucleotideStream(std::move(out));
}

std::vector<SymbolId> goldman_decode(const NucleotideStream& stream,
                                     const CodeTree& tree) {
    return decode_with(stream, tree, [](std::uint32_t, char prev, char nt) {
        return rotating_digit(prev, nt);
    });
}

std::size_t max_homopolymer_run(const NucleotideStream& stream) {
    std::size_t best = 0, run = 0;
    char last = '\0';
    for (char c : stream.bases) {
        run = (c == last) ? run + 1 : 1;
        last = c;
        best = std::max(best, run);
    }
    return best;
}

}  // namespace dnacode
