#include "dnacode/metrics.hpp"

#include <cmath>
#include <limits>

#include "dnacode/image.hpp"

namespace dnacode {

double entropy(const FrequencyTable& table, int base) {
    if (base < 2) throw ConfigError("entropy base must be at least 2");
    if (table.total() == 0) throw InputError("entropy of a zero-total table");
    const double total = static_cast<double>(table.total());
    double nats = 0.0;
    for (SymbolId i = 0; i < table.size(); ++i) {
        std::uint64_t c = table.count(i);
        if (c == 0) continue;
        double p = static_cast<double>(c) / total;
        nats -= p * std::log(p);
    }
    return nats / std::log(static_cast<double>(base));
}

double expected_length(const Codebook& book, const FrequencyTable& table) {
    if (table.total() == 0) throw InputError("expected length of a zero-total table");
    double sum = 0.0;
    for (SymbolId i = 0; i < table.size(); ++i) {
        std::uint64_t c = table.count(i);
        if (c == 0) continue;
        if (i >= book.size() || book.codeword(i).empty())
            throw InputError("codebook does not cover symbol " + std::to_string(i));
        sum += static_cast<double>(c) * static_cast<double>(book.codeword(i).size());
    }
    return sum / static_cast<double>(table.total());
}

double compression_ratio_bits_per_nt(std::uint64_t source_bits,
                                     const NucleotideStream& stream) {
    if (stream.empty())
        throw InputError("compression ratio of an empty nucleotide stream");
    return static_cast<double>(source_bits) / static_cast<double>(stream.size());
}

double psnr(const GrayImage& original, const GrayImage& reconstructed) {
    if (original.width != reconstructed.width || original.height != reconstructed.height)
        throw InputError("psnr requires images of identical dimensions");
    if (original.pixels.empty()) throw InputError("psnr of an empty image");
    double se = 0.0;
    for (std::size_t i = 0; i < original.pixels.size(); ++i) {
        double d = static_cast<double>(original.pixels[i]) -
                   static_cast<double>(reconstructed.pixels[i]);
        se += d * d;
    }
    double mse = se / static_cast<double>(original.pixels.size());
    if (mse == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(255.0 * 255.0 / mse);
}

}  // namespace dnacode
