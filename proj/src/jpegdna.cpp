#include "dnacode/jpegdna.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>

#include "dnacode/transcoder.hpp"
#include "dnacode/tree_builders.hpp"
#include "json.hpp"

namespace dnacode::jpegdna {

namespace {

// JPEG Annex-K luminance quantization matrix, raster order.
constexpr std::array<int, 64> kLuminanceQuant = {
    16, 11, 10, 16, 24,  40,  51,  61,   //
    12, 12, 14, 19, 26,  58,  60,  55,   //
    14, 13, 16, 24, 40,  57,  69,  56,   //
    14, 17, 22, 29, 51,  87,  80,  62,   //
    18, 22, 37, 56, 68,  109, 103, 77,   //
    24, 35, 55, 64, 81,  104, 113, 92,   //
    49, 64, 78, 87, 103, 121, 120, 101,  //
    72, 92, 95, 98, 112, 100, 103, 99};

// kZigzagOrder[k] = raster index of the k-th coefficient in zigzag order.
constexpr std::array<int, 64> kZigzagOrder = {
    0,  1,  8,  16, 9,  2,  3,  10, 17, 24, 32, 25, 18, 11, 4,  5,
    12, 19, 26, 33, 40, 48, 41, 34, 27, 20, 13, 6,  7,  14, 21, 28,
    35, 42, 49, 56, 57, 50, 43, 36, 29, 22, 15, 23, 30, 37, 44, 51,
    58, 59, 52, 45, 38, 31, 39, 46, 53, 60, 61, 54, 47, 55, 62, 63};

constexpr int kMaxCategory = 11;

struct DctBasis {
    double c[8][8];  // c[u][x] = sqrt((u?2:1)/8) * cos((2x+1) u pi / 16)
};

const DctBasis& basis() {
    static const DctBasis b = [] {
        DctBasis m;
        const double pi = std::acos(-1.0);
        for (int u = 0; u < 8; ++u)
            for (int x = 0; x < 8; ++x)
                m.c[u][x] = std::sqrt((u == 0 ? 1.0 : 2.0) / 8.0) *
                            std::cos((2 * x + 1) * u * pi / 16.0);
        return m;
    }();
    return b;
}

void validate_config(const CodecConfig& cfg) {
    if (cfg.quality < 1 || cfg.quality > 100)
        throw ConfigError("quality must be within 1..100");
    if (cfg.max_hl < 2) throw ConfigError("max_hl must be at least 2");
}

}  // namespace

std::string to_string(VlcKind kind) {
    return kind == VlcKind::Sfc ? "sfc" : "goldman";
}

VlcKind vlc_from_string(const std::string& name) {
    if (name == "sfc") return VlcKind::Sfc;
    if (name == "goldman") return VlcKind::Goldman;
    throw ConfigError("unknown vlc kind '" + name + "' (expected sfc or goldman)");
}

std::array<int, 64> quality_scaled_quant(int quality) {
    if (quality < 1 || quality > 100)
        throw ConfigError("quality must be within 1..100");
    int scale = quality < 50 ? 5000 / quality : 200 - 2 * quality;
    std::array<int, 64> q{};
    for (int i = 0; i < 64; ++i)
        q[i] = std::clamp((kLuminanceQuant[i] * scale + 50) / 100, 1, 255);
    return q;
}

std::vector<BlockSpectrum> forward_transform(const GrayImage& image,
                                             const CodecConfig& cfg) {
    validate_config(cfg);
    if (image.width == 0 || image.height == 0)
        throw InputError("cannot transform an empty image");
    const std::array<int, 64> quant = quality_scaled_quant(cfg.quality);
    const DctBasis& b = basis();
    const std::uint32_t bw = (image.width + 7) / 8, bh = (image.height + 7) / 8;
    std::vector<BlockSpectrum> blocks;
    blocks.reserve(static_cast<std::size_t>(bw) * bh);

    for (std::uint32_t by = 0; by < bh; ++by) {
        for (std::uint32_t bx = 0; bx < bw; ++bx) {
            double block[8][8];
            for (int y = 0; y < 8; ++y) {
                std::uint32_t sy = std::min(by * 8 + y, image.height - 1);
                for (int x = 0; x < 8; ++x) {
                    std::uint32_t sx = std::min(bx * 8 + x, image.width - 1);
                    block[y][x] = static_cast<double>(image.at(sx, sy)) - 128.0;
                }
            }
            double tmp[8][8], freq[8][8];
            for (int u = 0; u < 8; ++u)
                for (int x = 0; x < 8; ++x) {
                    double s = 0;
                    for (int y = 0; y < 8; ++y) s += b.c[u][y] * block[y][x];
                    tmp[u][x] = s;
                }
            for (int u = 0; u < 8; ++u)
                for (int v = 0; v < 8; ++v) {
                    double s = 0;
                    for (int x = 0; x < 8; ++x) s += b.c[v][x] * tmp[u][x];
                    freq[u][v] = s;
                }
            BlockSpectrum spec;
            for (int k = 0; k < 64; ++k) {
                int r = kZigzagOrder[k];
                auto coeff = static_cast<std::int32_t>(
                    std::lround(freq[r / 8][r % 8] / quant[r]));
                if (k == 0)
                    spec.dc = coeff;
                else
                    spec.ac[k - 1] = coeff;
            }
            blocks.push_back(spec);
        }
    }
    return blocks;
}

GrayImage inverse_transform(std::span<const BlockSpectrum> blocks, std::uint32_t width,
                            std::uint32_t height, const CodecConfig& cfg) {
    validate_config(cfg);
    if (width == 0 || height == 0) throw InputError("cannot rebuild an empty image");
    const std::uint32_t bw = (width + 7) / 8, bh = (height + 7) / 8;
    if (blocks.size() != static_cast<std::size_t>(bw) * bh)
        throw InputError("block count does not match image dimensions");
    const std::array<int, 64> quant = quality_scaled_quant(cfg.quality);
    const DctBasis& b = basis();
    GrayImage img(width, height);

    for (std::uint32_t by = 0; by < bh; ++by) {
        for (std::uint32_t bx = 0; bx < bw; ++bx) {
            const BlockSpectrum& spec = blocks[static_cast<std::size_t>(by) * bw + bx];
            double freq[8][8];
            for (int k = 0; k < 64; ++k) {
                int r = kZigzagOrder[k];
                std::int32_t c = k == 0 ? spec.dc : spec.ac[k - 1];
                freq[r / 8][r % 8] = static_cast<double>(c) * quant[r];
            }
            double tmp[8][8];
            for (int y = 0; y < 8; ++y)
                for (int v = 0; v < 8; ++v) {
                    double s = 0;
                    for (int u = 0; u < 8; ++u) s += b.c[u][y] * freq[u][v];
                    tmp[y][v] = s;
                }
            for (int y = 0; y < 8; ++y)
                for (int x = 0; x < 8; ++x) {
                    double s = 0;
                    for (int v = 0; v < 8; ++v) s += b.c[v][x] * tmp[y][v];
                    double value = s + 128.0;
                    std::uint32_t px = bx * 8 + x, py = by * 8 + y;
                    if (px < width && py < height)
                        img.at(px, py) = static_cast<std::uint8_t>(
                            std::clamp<long>(std::lround(value), 0, 255));
                }
        }
    }
    return img;
}

int value_category(std::int32_t v) {
    std::uint32_t mag = static_cast<std::uint32_t>(v < 0 ? -static_cast<std::int64_t>(v)
                                                         : v);
    return std::bit_width(mag);
}

std::uint16_t value_index(std::int32_t v, int category) {
    if (category <= 0 || category > kMaxCategory)
        throw InputError("value category out of range");
    if (v >= 0) return static_cast<std::uint16_t>(v);
    return static_cast<std::uint16_t>(v + (1 << category) - 1);
}

std::int32_t value_extend(std::uint16_t index, int category) {
    if (category == 0) return 0;
    if (index < (1u << (category - 1)))
        return static_cast<std::int32_t>(index) - (1 << category) + 1;
    return static_cast<std::int32_t>(index);
}

CategorizedStreams categorize(std::span<const BlockSpectrum> blocks) {
    CategorizedStreams out;
    std::int32_t dc_pred = 0;
    for (const BlockSpectrum& block : blocks) {
        std::int32_t diff = block.dc - dc_pred;
        dc_pred = block.dc;
        int cat = value_category(diff);
        if (cat > kMaxCategory)
            throw InputError("DC difference exceeds category 11 range");
        out.dc_categories.push_back(static_cast<std::uint8_t>(cat));
        if (cat > 0)
            out.dc_values.push_back(
                {static_cast<std::uint8_t>(cat), value_index(diff, cat)});

        int run = 0;
        for (std::int32_t v : block.ac) {
            if (v == 0) {
                ++run;
                continue;
            }
            while (run >= 16) {
                out.ac_symbols.push_back(kZeroRunLength);
                run -= 16;
            }
            int c = value_category(v);
            if (c > kMaxCategory)
                throw InputError("AC coefficient exceeds category 11 range");
            out.ac_symbols.push_back(
                {static_cast<std::uint8_t>(run), static_cast<std::uint8_t>(c)});
            out.ac_values.push_back({static_cast<std::uint8_t>(c), value_index(v, c)});
            run = 0;
        }
        if (run > 0) out.ac_symbols.push_back(kEndOfBlock);
    }
    return out;
}

std::vector<BlockSpectrum> decategorize(const CategorizedStreams& streams,
                                        std::size_t block_count) {
    if (streams.dc_categories.size() != block_count)
        throw InputError("DC category count does not match block count");
    std::vector<BlockSpectrum> blocks(block_count);
    std::int32_t dc_pred = 0;
    std::size_t dcv = 0, acs = 0, acv = 0;
    for (std::size_t bId = 0; bId < block_count; ++bId) {
        BlockSpectrum& block = blocks[bId];
        int cat = streams.dc_categories[bId];
        std::int32_t diff = 0;
        if (cat > 0) {
            if (dcv >= streams.dc_values.size())
                throw InputError("DC value stream exhausted");
            diff = value_extend(streams.dc_values[dcv++].index, cat);
        }
        block.dc = dc_pred + diff;
        dc_pred = block.dc;

        int idx = 0;
        while (idx < 63) {
            if (acs >= streams.ac_symbols.size())
                throw InputError("run/category stream exhausted");
            RunCategory sym = streams.ac_symbols[acs++];
            if (sym == kEndOfBlock) break;
            if (sym == kZeroRunLength) {
                idx += 16;
                if (idx > 63) throw InputError("zero run overflows the block");
                continue;
            }
            idx += sym.run;
            if (idx >= 63) throw InputError("coefficient run overflows the block");
            if (sym.category == 0)
                throw InputError("coefficient symbol with zero category");
            if (acv >= streams.ac_values.size())
                throw InputError("AC value stream exhausted");
            block.ac[idx] = value_extend(streams.ac_values[acv++].index, sym.category);
            ++idx;
        }
    }
    if (dcv != streams.dc_values.size() || acs != streams.ac_symbols.size() ||
        acv != streams.ac_values.size())
        throw InputError("trailing symbols after the last block");
    return blocks;
}

// Non-repeating nucleotide pairs in alphabetical order.
const std::array<std::array<char, 2>, 12> kValuePairs = {{{'A', 'C'},
                                                          {'A', 'G'},
                                                          {'A', 'T'},
                                                          {'C', 'A'},
                                                          {'C', 'G'},
                                                          {'C', 'T'},
                                                          {'G', 'A'},
                                                          {'G', 'C'},
                                                          {'G', 'T'},
                                                          {'T', 'A'},
                                                          {'T', 'C'},
                                                          {'T', 'G'}}};

namespace {

int pair_digit(char a, char b) {
    for (int i = 0; i < 12; ++i)
        if (kValuePairs[i][0] == a && kValuePairs[i][1] == b) return i;
    return -1;
}

}  // namespace

int pairs_for_category(int category) {
    if (category < 0 || category > kMaxCategory)
        throw InputError("value category out of range");
    if (category == 0) return 0;
    long capacity = 1;
    int k = 0;
    while (capacity < (1L << category)) {
        capacity *= 12;
        ++k;
    }
    return k;
}

void append_value_pairs(std::string& out, int category, std::uint16_t index) {
    int k = pairs_for_category(category);
    if (index >= (1u << category)) throw InputError("value index out of range");
    long scale = 1;
    for (int i = 1; i < k; ++i) scale *= 12;
    long rest = index;
    for (int i = 0; i < k; ++i) {
        int digit = static_cast<int>(rest / scale);
        rest %= scale;
        scale /= 12;
        out.push_back(kValuePairs[digit][0]);
        out.push_back(kValuePairs[digit][1]);
    }
}

std::uint16_t read_value_pairs(const std::string& nt, std::size_t& pos, int category) {
    int k = pairs_for_category(category);
    long value = 0;
    for (int i = 0; i < k; ++i) {
        if (pos + 1 >= nt.size())
            throw CorruptStreamError(pos, "value stream truncated");
        int digit = pair_digit(nt[pos], nt[pos + 1]);
        if (digit < 0) throw CorruptStreamError(pos, "invalid value pair");
        value = value * 12 + digit;
        pos += 2;
    }
    if (value >= (1L << category))
        throw CorruptStreamError(pos, "value index outside its category range");
    return static_cast<std::uint16_t>(value);
}

std::string bytes_to_pairs(std::span<const std::uint8_t> bytes) {
    std::string out;
    out.reserve(bytes.size() * 6);
    for (std::uint8_t b : bytes) {
        int digits[3] = {b / 144, (b / 12) % 12, b % 12};
        for (int d : digits) {
            out.push_back(kValuePairs[d][0]);
            out.push_back(kValuePairs[d][1]);
        }
    }
    return out;
}

std::vector<std::uint8_t> pairs_to_bytes(const std::string& nt) {
    if (nt.size() % 6 != 0)
        throw CorruptStreamError(nt.size(), "byte record length is not a multiple of 6");
    std::vector<std::uint8_t> out;
    out.reserve(nt.size() / 6);
    for (std::size_t pos = 0; pos < nt.size(); pos += 6) {
        int v = 0;
        for (int i = 0; i < 3; ++i) {
            int digit = pair_digit(nt[pos + 2 * i], nt[pos + 2 * i + 1]);
            if (digit < 0) throw CorruptStreamError(pos + 2 * i, "invalid byte pair");
            v = v * 12 + digit;
        }
        if (v > 255) throw CorruptStreamError(pos, "byte value out of range");
        out.push_back(static_cast<std::uint8_t>(v));
    }
    return out;
}

namespace {

struct DenseAlphabet {
    std::vector<int> keys;                 // sorted original symbol values
    std::map<int, SymbolId> to_dense;      // original value -> dense id
    FrequencyTable table;
};

DenseAlphabet make_dense(const std::map<int, std::uint64_t>& counts) {
    DenseAlphabet a;
    std::vector<std::uint64_t> c;
    for (const auto& [key, count] : counts) {
        a.to_dense[key] = static_cast<SymbolId>(a.keys.size());
        a.keys.push_back(key);
        c.push_back(count);
    }
    a.table = FrequencyTable(std::move(c));
    return a;
}

NucleotideStream vlc_encode(std::span<const SymbolId> ids, const FrequencyTable& table,
                            const CodecConfig& cfg) {
    if (cfg.vlc == VlcKind::Sfc) {
        Codebook book = sfc_codebook(table, BuilderConfig{cfg.max_hl});
        return sfc_transcode(ids, book);
    }
    return goldman_encode(ids, table);
}

std::vector<SymbolId> vlc_decode(const NucleotideStream& stream,
                                 const FrequencyTable& table, const CodecConfig& cfg) {
    if (cfg.vlc == VlcKind::Sfc) {
        CodeTree tree = sfc_build(table, BuilderConfig{cfg.max_hl});
        return sfc_detranscode(stream, tree, cfg.max_hl);
    }
    CodeTree tree = huffman_build(table, 3);
    return goldman_decode(stream, tree);
}

const FastaRecord& find_record(std::span<const FastaRecord> records,
                               const std::string& name) {
    for (const FastaRecord& r : records)
        if (r.name == name) return r;
    throw InputError("compressed stream is missing the '" + name + "' record");
}

}  // namespace

EncodedImage encode_image(const GrayImage& image, const CodecConfig& cfg) {
    std::vector<BlockSpectrum> blocks = forward_transform(image, cfg);
    CategorizedStreams streams = categorize(blocks);

    std::map<int, std::uint64_t> dc_counts, ac_counts;
    for (std::uint8_t c : streams.dc_categories) ++dc_counts[c];
    for (const RunCategory& s : streams.ac_symbols) ++ac_counts[s.packed()];
    DenseAlphabet dc_alpha = make_dense(dc_counts);
    DenseAlphabet ac_alpha = make_dense(ac_counts);

    std::vector<SymbolId> dc_ids, ac_ids;
    dc_ids.reserve(streams.dc_categories.size());
    for (std::uint8_t c : streams.dc_categories) dc_ids.push_back(dc_alpha.to_dense[c]);
    ac_ids.reserve(streams.ac_symbols.size());
    for (const RunCategory& s : streams.ac_symbols)
        ac_ids.push_back(ac_alpha.to_dense[s.packed()]);

    NucleotideStream dc_nt = vlc_encode(dc_ids, dc_alpha.table, cfg);
    NucleotideStream ac_nt = vlc_encode(ac_ids, ac_alpha.table, cfg);

    std::string value_nt;
    for (const ValueBits& v : streams.dc_values)
        append_value_pairs(value_nt, v.category, v.index);
    for (const ValueBits& v : streams.ac_values)
        append_value_pairs(value_nt, v.category, v.index);

    nlohmann::json header;
    header["format"] = "dnacode.jpegdna.v1";
    header["width"] = image.width;
    header["height"] = image.height;
    header["quality"] = cfg.quality;
    header["max_hl"] = cfg.max_hl;
    header["vlc"] = to_string(cfg.vlc);
    header["prev_init"] = std::string(1, kInitialPrev);
    header["value_coder"] = "pair12";
    auto table_json = [](const DenseAlphabet& a) {
        nlohmann::json arr = nlohmann::json::array();
        for (std::size_t i = 0; i < a.keys.size(); ++i)
            arr.push_back({a.keys[i], a.table.count(static_cast<SymbolId>(i))});
        return arr;
    };
    header["dc_table"] = table_json(dc_alpha);
    header["ac_table"] = table_json(ac_alpha);
    std::string header_text = header.dump();
    std::string header_nt = bytes_to_pairs(std::span(
        reinterpret_cast<const std::uint8_t*>(header_text.data()), header_text.size()));

    EncodedImage out;
    out.records.push_back({"header", "{\"format\":\"dnacode.jpegdna.v1\"}",
                           NucleotideStream(std::move(header_nt))});
    out.records.push_back({"dc", "", std::move(dc_nt)});
    out.records.push_back({"ac", "", std::move(ac_nt)});
    out.records.push_back({"values", "", NucleotideStream(std::move(value_nt))});

    out.source_bits = static_cast<std::uint64_t>(image.width) * image.height * 8;
    for (const FastaRecord& r : out.records) out.total_nucleotides += r.seq.size();

    nlohmann::json manifest;
    manifest["schema"] = "dnacode.jpegdna.manifest.v1";
    manifest["width"] = image.width;
    manifest["height"] = image.height;
    manifest["quality"] = cfg.quality;
    manifest["vlc"] = to_string(cfg.vlc);
    manifest["max_hl"] = cfg.max_hl;
    manifest["nt"] = {{"header", out.records[0].seq.size()},
                      {"dc", out.records[1].seq.size()},
                      {"ac", out.records[2].seq.size()},
                      {"values", out.records[3].seq.size()},
                      {"total", out.total_nucleotides}};
    manifest["source_bits"] = out.source_bits;
    manifest["bits_per_nt"] =
        static_cast<double>(out.source_bits) / static_cast<double>(out.total_nucleotides);
    out.manifest_json = manifest.dump();
    return out;
}

DecodedImage decode_image_full(std::span<const FastaRecord> records) {
    const FastaRecord& header_rec = find_record(records, "header");
    const FastaRecord& dc_rec = find_record(records, "dc");
    const FastaRecord& ac_rec = find_record(records, "ac");
    const FastaRecord& values_rec = find_record(records, "values");

    std::vector<std::uint8_t> header_bytes = pairs_to_bytes(header_rec.seq.bases);
    nlohmann::json header;
    try {
        header = nlohmann::json::parse(header_bytes.begin(), header_bytes.end());
    } catch (const nlohmann::json::exception&) {
        throw CorruptStreamError(0, "image header does not parse");
    }

    CodecConfig cfg;
    std::uint32_t width = 0, height = 0;
    std::vector<std::pair<int, std::uint64_t>> dc_entries, ac_entries;
    try {
        if (header.at("format").get<std::string>() != "dnacode.jpegdna.v1")
            throw InputError("unsupported compressed image format");
        width = header.at("width").get<std::uint32_t>();
        height = header.at("height").get<std::uint32_t>();
        cfg.quality = header.at("quality").get<int>();
        cfg.max_hl = header.at("max_hl").get<std::uint32_t>();
        cfg.vlc = vlc_from_string(header.at("vlc").get<std::string>());
        for (const auto& e : header.at("dc_table"))
            dc_entries.emplace_back(e.at(0).get<int>(), e.at(1).get<std::uint64_t>());
        for (const auto& e : header.at("ac_table"))
            ac_entries.emplace_back(e.at(0).get<int>(), e.at(1).get<std::uint64_t>());
    } catch (const nlohmann::json::exception&) {
        throw CorruptStreamError(0, "image header is missing required fields");
    }
    if (width == 0 || height == 0)
        throw InputError("compressed stream describes an empty (0x0) image");

    auto rebuild = [](const std::vector<std::pair<int, std::uint64_t>>& entries) {
        std::vector<int> keys;
        std::vector<std::uint64_t> counts;
        for (const auto& [k, c] : entries) {
            if (!keys.empty() && k <= keys.back())
                throw CorruptStreamError(0, "header table keys not strictly increasing");
            keys.push_back(k);
            counts.push_back(c);
        }
        return std::pair(keys, FrequencyTable(std::move(counts)));
    };
    auto [dc_keys, dc_table] = rebuild(dc_entries);
    auto [ac_keys, ac_table] = rebuild(ac_entries);

    const std::size_t block_count =
        static_cast<std::size_t>((width + 7) / 8) * ((height + 7) / 8);

    std::vector<SymbolId> dc_ids = vlc_decode(dc_rec.seq, dc_table, cfg);
    if (dc_ids.size() != block_count)
        throw CorruptStreamError(dc_rec.seq.size(),
                                 "DC stream does not hold one category per block");
    std::vector<SymbolId> ac_ids = vlc_decode(ac_rec.seq, ac_table, cfg);

    CategorizedStreams streams;
    streams.dc_categories.reserve(dc_ids.size());
    for (SymbolId id : dc_ids)
        streams.dc_categories.push_back(static_cast<std::uint8_t>(dc_keys.at(id)));
    streams.ac_symbols.reserve(ac_ids.size());
    for (SymbolId id : ac_ids) {
        int packed = ac_keys.at(id);
        streams.ac_symbols.push_back({static_cast<std::uint8_t>(packed / 16),
                                      static_cast<std::uint8_t>(packed % 16)});
    }

    std::size_t pos = 0;
    for (std::uint8_t cat : streams.dc_categories)
        if (cat > 0)
            streams.dc_values.push_back(
                {cat, read_value_pairs(values_rec.seq.bases, pos, cat)});
    for (const RunCategory& sym : streams.ac_symbols)
        if (sym.category > 0)
            streams.ac_values.push_back(
                {sym.category, read_value_pairs(values_rec.seq.bases, pos, sym.category)});
    if (pos != values_rec.seq.size())
        throw CorruptStreamError(pos, "trailing data in the value stream");

    DecodedImage out;
    out.cfg = cfg;
    try {
        out.coefficients = decategorize(streams, block_count);
    } catch (const InputError& e) {
        throw CorruptStreamError(0, e.what());
    }
    out.image = inverse_transform(out.coefficients, width, height, cfg);
    return out;
}

GrayImage decode_image(std::span<const FastaRecord> records) {
    return decode_image_full(records).image;
}

FrequencyTable ac_runcategory_table(const GrayImage& image, int quality) {
    CodecConfig cfg;
    cfg.quality = quality;
    CategorizedStreams streams = categorize(forward_transform(image, cfg));
    std::map<int, std::uint64_t> counts;
    for (const RunCategory& s : streams.ac_symbols) ++counts[s.packed()];
    std::vector<std::uint64_t> c;
    c.reserve(counts.size());
    for (const auto& [key, count] : counts) c.push_back(count);
    return FrequencyTable(std::move(c));
}

}  // namespace dnacode::jpegdna
