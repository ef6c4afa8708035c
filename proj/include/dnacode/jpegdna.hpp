#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dnacode/coding_core.hpp"
#include "dnacode/fasta.hpp"
#include "dnacode/image.hpp"

namespace dnacode::jpegdna {

enum class VlcKind { Sfc, Goldman };

std::string to_string(VlcKind kind);
VlcKind vlc_from_string(const std::string& name);

struct CodecConfig {
    int quality = 50;  // 1..100, scales the quantization matrix
    VlcKind vlc = VlcKind::Sfc;
    std::uint32_t max_hl = 3;
    static constexpr int kBlockSize = 8;
};

// Quantized spectrum of one 8x8 block; AC coefficients in zigzag order.
struct BlockSpectrum {
    std::int32_t dc = 0;
    std::array<std::int32_t, 63> ac{};
};

// Annex-K luminance matrix scaled by the usual quality-factor formula
// (quality 50 keeps the base table).
std::array<int, 64> quality_scaled_quant(int quality);

// Level shift, orthonormal 2-D DCT, quantize, zigzag; the image is padded to
// block multiples by edge replication.
std::vector<BlockSpectrum> forward_transform(const GrayImage& image,
                                             const CodecConfig& cfg);
GrayImage inverse_transform(std::span<const BlockSpectrum> blocks, std::uint32_t width,
                            std::uint32_t height, const CodecConfig& cfg);

// JPEG-style symbol layer.
struct RunCategory {
    std::uint8_t run = 0;       // zeros preceding the coefficient, 0..15
    std::uint8_t category = 0;  // magnitude-bit count, 0..11
    std::uint8_t packed() const { return static_cast<std::uint8_t>(run * 16 + category); }
    bool operator==(const RunCategory&) const = default;
};
inline constexpr RunCategory kEndOfBlock{0, 0};
inline constexpr RunCategory kZeroRunLength{15, 0};  // sixteen zeros

struct ValueBits {
    std::uint8_t category = 0;
    std::uint16_t index = 0;  // within-category magnitude index, < 2^category
};

struct CategorizedStreams {
    std::vector<std::uint8_t> dc_categories;  // one per block (difference coding)
    std::vector<ValueBits> dc_values;         // one per nonzero DC difference
    std::vector<RunCategory> ac_symbols;
    std::vector<ValueBits> ac_values;  // one per nonzero AC coefficient
};

int value_category(std::int32_t v);
std::uint16_t value_index(std::int32_t v, int category);
std::int32_t value_extend(std::uint16_t index, int category);

CategorizedStreams categorize(std::span<const BlockSpectrum> blocks);
std::vector<BlockSpectrum> decategorize(const CategorizedStreams& streams,
                                        std::size_t block_count);

// Fixed-length quaternary value coder: a dictionary of the 12 non-repeating
// nucleotide pairs; a category-c index takes the smallest number of pairs
// whose base-12 capacity covers 2^c, most significant digit first.
extern const std::array<std::array<char, 2>, 12> kValuePairs;
int pairs_for_category(int category);
void append_value_pairs(std::string& out, int category, std::uint16_t index);
std::uint16_t read_value_pairs(const std::string& nt, std::size_t& pos, int category);

// Byte serialization through the same pair dictionary, three digits per byte.
std::string bytes_to_pairs(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> pairs_to_bytes(const std::string& nt);

struct EncodedImage {
    std::vector<FastaRecord> records;  // header, dc, ac, values
    std::string manifest_json;
    std::uint64_t total_nucleotides = 0;
    std::uint64_t source_bits = 0;
};

struct DecodedImage {
    GrayImage image;
    std::vector<BlockSpectrum> coefficients;
    CodecConfig cfg;
};

EncodedImage encode_image(const GrayImage& image, const CodecConfig& cfg);
DecodedImage decode_image_full(std::span<const FastaRecord> records);
GrayImage decode_image(std::span<const FastaRecord> records);

// Frequency table of the AC run/category symbols an image produces; the
// statistics pass behind the shipped table fixture.
FrequencyTable ac_runcategory_table(const GrayImage& image, int quality);

}  // namespace dnacode::jpegdna
