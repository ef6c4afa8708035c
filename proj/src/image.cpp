#include "dnacode/image.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>

#include "dnacode/rng.hpp"

namespace dnacode {

namespace {

// Reads the next whitespace-delimited PGM token, skipping '#' comments.
std::string pgm_token(std::istream& in) {
    std::string tok;
    int c;
    while ((c = in.get()) != EOF) {
        if (c == '#') {
            while ((c = in.get()) != EOF && c != '\n') {}
            continue;
        }
        if (std::isspace(c)) {
            if (!tok.empty()) return tok;
            continue;
        }
        tok.push_back(static_cast<char>(c));
    }
    return tok;
}

}  // namespace

GrayImage read_pgm(std::istream& in) {
    if (pgm_token(in) != "P5") throw InputError("not a binary PGM (P5) file");
    std::uint32_t w = 0, h = 0, maxval = 0;
    try {
        w = std::stoul(pgm_token(in));
        h = std::stoul(pgm_token(in));
        maxval = std::stoul(pgm_token(in));
    } catch (const std::exception&) {
        throw InputError("malformed PGM header");
    }
    if (w == 0 || h == 0) throw InputError("PGM with zero dimension");
    if (maxval != 255) throw InputError("only 8-bit PGM (maxval 255) is supported");
    GrayImage img(w, h);
    in.read(reinterpret_cast<char*>(img.pixels.data()),
            static_cast<std::streamsize>(img.pixels.size()));
    if (in.gcount() != static_cast<std::streamsize>(img.pixels.size()))
        throw InputError("PGM pixel data truncated");
    return img;
}

void write_pgm(std::ostream& out, const GrayImage& img) {
    out << "P5\n" << img.width << ' ' << img.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.pixels.data()),
              static_cast<std::streamsize>(img.pixels.size()));
}

void write_pgm_file(const std::string& path, const GrayImage& img) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    write_pgm(out, img);
}

GrayImage read_png_file(const std::string& path) {
    std::FILE* fp = std::fopen(path.c_str(), "rb");
    if (!fp) throw InputError("cannot open '" + path + "'");
    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr,
                                             nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
        if (png) png_destroy_read_struct(&png, &info, nullptr);
        std::fclose(fp);
        throw InputError("libpng initialization failed");
    }
    GrayImage img;
    std::vector<png_bytep> row_ptrs;
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        std::fclose(fp);
        throw InputError("failed to decode PNG '" + path + "'");
    }
    png_init_io(png, fp);
    png_read_info(png, info);

    png_byte color = png_get_color_type(png, info);
    png_byte depth = png_get_bit_depth(png, info);
    if (color == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (color == PNG_COLOR_TYPE_GRAY && depth < 8) png_set_expand_gray_1_2_4_to_8(png);
    if (depth == 16) png_set_strip_16(png);
    if (color & PNG_COLOR_MASK_ALPHA) png_set_strip_alpha(png);
    if (png_get_valid(png, info, PNG_INFO_tRNS)) {
        png_set_tRNS_to_alpha(png);
        png_set_strip_alpha(png);
    }
    if (color == PNG_COLOR_TYPE_RGB || color == PNG_COLOR_TYPE_RGB_ALPHA ||
        color == PNG_COLOR_TYPE_PALETTE)
        png_set_rgb_to_gray_fixed(png, 1 /*silent*/, 29900, 58700);  // BT.601
    png_read_update_info(png, info);

    img.width = png_get_image_width(png, info);
    img.height = png_get_image_height(png, info);
    if (img.width == 0 || img.height == 0) longjmp(png_jmpbuf(png), 1);
    img.pixels.assign(static_cast<std::size_t>(img.width) * img.height, 0);
    row_ptrs.resize(img.height);
    for (std::uint32_t y = 0; y < img.height; ++y)
        row_ptrs[y] = img.pixels.data() + static_cast<std::size_t>(y) * img.width;
    png_read_image(png, row_ptrs.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);
    std::fclose(fp);
    return img;
}

GrayImage read_image_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    char magic[2] = {0, 0};
    in.read(magic, 2);
    in.seekg(0);
    if (magic[0] == 'P' && magic[1] == '5') return read_pgm(in);
    if (static_cast<unsigned char>(magic[0]) == 0x89 && magic[1] == 'P') {
        in.close();
        return read_png_file(path);
    }
    throw InputError("'" + path + "' is neither PGM (P5) nor PNG");
}

namespace {

double smoothstep(double t) { return t * t * (3.0 - 2.0 * t); }

// One octave of value noise: random lattice values, smooth bilinear blend.
void add_value_noise(std::vector<double>& field, std::uint32_t w, std::uint32_t h,
                     std::uint32_t cell, double amplitude, PortableRng& rng) {
    std::uint32_t gw = w / cell + 2, gh = h / cell + 2;
    std::vector<double> lattice(static_cast<std::size_t>(gw) * gh);
    for (double& v : lattice) v = 2.0 * rng.uniform01() - 1.0;
    for (std::uint32_t y = 0; y < h; ++y) {
        double fy = static_cast<double>(y) / cell;
        std::uint32_t y0 = static_cast<std::uint32_t>(fy);
        double ty = smoothstep(fy - y0);
        for (std::uint32_t x = 0; x < w; ++x) {
            double fx = static_cast<double>(x) / cell;
            std::uint32_t x0 = static_cast<std::uint32_t>(fx);
            double tx = smoothstep(fx - x0);
            auto lat = [&](std::uint32_t gx, std::uint32_t gy) {
                return lattice[static_cast<std::size_t>(gy) * gw + gx];
            };
            double top = lat(x0, y0) * (1 - tx) + lat(x0 + 1, y0) * tx;
            double bot = lat(x0, y0 + 1) * (1 - tx) + lat(x0 + 1, y0 + 1) * tx;
            field[static_cast<std::size_t>(y) * w + x] +=
                amplitude * (top * (1 - ty) + bot * ty);
        }
    }
}

}  // namespace

GrayImage synth_natural_image(std::uint64_t seed, std::uint32_t width,
                              std::uint32_t height) {
    if (width == 0 || height == 0) throw InputError("image dimensions must be positive");
    PortableRng rng(seed);
    std::vector<double> field(static_cast<std::size_t>(width) * height, 0.0);

    double amplitude = 1.0;
    for (std::uint32_t cell = 128; cell >= 4; cell /= 2) {
        add_value_noise(field, width, height, cell, amplitude, rng);
        amplitude *= 0.55;
    }

    // Large-scale illumination gradient.
    double gx = 2.0 * rng.uniform01() - 1.0;
    double gy = 2.0 * rng.uniform01() - 1.0;
    for (std::uint32_t y = 0; y < height; ++y)
        for (std::uint32_t x = 0; x < width; ++x)
            field[static_cast<std::size_t>(y) * width + x] +=
                0.8 * (gx * x / width + gy * y / height);

    // A few soft disks to provide edges and occlusion-like structure.
    int disks = 3 + static_cast<int>(rng.next_below(3));
    for (int d = 0; d < disks; ++d) {
        double cx = rng.uniform01() * width;
        double cy = rng.uniform01() * height;
        double radius = (0.08 + 0.17 * rng.uniform01()) * std::min(width, height);
        double strength = (rng.uniform01() - 0.5) * 1.6;
        double edge = radius * 0.15;
        for (std::uint32_t y = 0; y < height; ++y) {
            for (std::uint32_t x = 0; x < width; ++x) {
                double dist = std::hypot(x - cx, y - cy);
                if (dist >= radius + edge) continue;
                double t = dist <= radius - edge
                               ? 1.0
                               : 1.0 - smoothstep((dist - radius + edge) / (2 * edge));
                field[static_cast<std::size_t>(y) * width + x] += strength * t;
            }
        }
    }

    auto [mn, mx] = std::minmax_element(field.begin(), field.end());
    double lo = *mn, span = *mx - *mn;
    if (span <= 0.0) span = 1.0;
    GrayImage img(width, height);
    for (std::size_t i = 0; i < field.size(); ++i) {
        double v = (field[i] - lo) / span;
        img.pixels[i] = static_cast<std::uint8_t>(std::lround(v * 255.0));
    }
    return img;
}

}  // namespace dnacode
