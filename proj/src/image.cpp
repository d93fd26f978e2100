#include "vxb/image.hpp"

#include "vxb/errors.hpp"

#include <png.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fnmatch.h>
#include <fstream>
#include <memory>
#include <string_view>

namespace vxb {
namespace {

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

GrayFrame load_png(const std::filesystem::path& file) {
    FilePtr fp(std::fopen(file.c_str(), "rb"));
    if (!fp) throw IoError("cannot open " + file.string());

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw IoError("libpng initialization failed for " + file.string());
    }

    std::vector<std::uint8_t> interleaved;
    int width = 0, height = 0, channels = 0;
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw IoError("corrupt PNG: " + file.string());
    }
    png_init_io(png, fp.get());
    png_read_info(png, info);

    // normalize to 8-bit gray or RGB
    png_set_strip_16(png);
    png_set_packing(png);
    const png_byte color_type = png_get_color_type(png, info);
    if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (color_type == PNG_COLOR_TYPE_GRAY && png_get_bit_depth(png, info) < 8) {
        png_set_expand_gray_1_2_4_to_8(png);
    }
    if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
    png_set_strip_alpha(png);
    png_read_update_info(png, info);

    width = static_cast<int>(png_get_image_width(png, info));
    height = static_cast<int>(png_get_image_height(png, info));
    channels = static_cast<int>(png_get_channels(png, info));
    if (channels != 1 && channels != 3) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw IoError("unsupported PNG channel layout in " + file.string());
    }

    interleaved.resize(std::size_t(width) * height * channels);
    std::vector<png_bytep> rows(height);
    for (int y = 0; y < height; ++y) {
        rows[y] = interleaved.data() + std::size_t(y) * width * channels;
    }
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);

    GrayFrame frame;
    frame.width = width;
    frame.height = height;
    frame.pixels.resize(std::size_t(width) * height);
    if (channels == 1) {
        frame.pixels = std::move(interleaved);
    } else {
        for (std::size_t i = 0; i < frame.pixels.size(); ++i) {
            const double r = interleaved[3 * i];
            const double g = interleaved[3 * i + 1];
            const double b = interleaved[3 * i + 2];
            frame.pixels[i] =
                static_cast<std::uint8_t>(std::lround(0.299 * r + 0.587 * g + 0.114 * b));
        }
    }
    return frame;
}

GrayFrame load_pgm(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw IoError("cannot open " + file.string());

    auto next_token = [&in, &file]() -> std::string {
        std::string tok;
        int c;
        while ((c = in.get()) != EOF) {
            if (c == '#') { // comment to end of line
                while ((c = in.get()) != EOF && c != '\n') {
                }
                continue;
            }
            if (std::isspace(c)) {
                if (!tok.empty()) return tok;
                continue;
            }
            tok.push_back(static_cast<char>(c));
        }
        if (tok.empty()) throw IoError("truncated PGM header: " + file.string());
        return tok;
    };

    if (next_token() != "P5") throw IoError("not a binary PGM (P5): " + file.string());
    GrayFrame frame;
    frame.width = std::stoi(next_token());
    frame.height = std::stoi(next_token());
    const int maxval = std::stoi(next_token());
    if (frame.width < 1 || frame.height < 1) throw IoError("bad PGM size: " + file.string());
    if (maxval <= 0 || maxval > 255) throw IoError("PGM must be 8-bit: " + file.string());

    frame.pixels.resize(std::size_t(frame.width) * frame.height);
    in.read(reinterpret_cast<char*>(frame.pixels.data()),
            static_cast<std::streamsize>(frame.pixels.size()));
    if (in.gcount() != static_cast<std::streamsize>(frame.pixels.size())) {
        throw IoError("truncated PGM data: " + file.string());
    }
    return frame;
}

} // namespace

GrayFrame load_image(const std::filesystem::path& file) {
    std::ifstream probe(file, std::ios::binary);
    if (!probe) throw IoError("cannot open " + file.string());
    unsigned char magic[8] = {};
    probe.read(reinterpret_cast<char*>(magic), sizeof magic);
    probe.close();

    static const unsigned char png_sig[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
    if (std::memcmp(magic, png_sig, 8) == 0) return load_png(file);
    if (magic[0] == 'P' && magic[1] == '5') return load_pgm(file);
    throw IoError("unsupported image format (need PNG or binary PGM): " + file.string());
}

bool natural_less(const std::string& a, const std::string& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
        const bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
        if (da && db) {
            std::size_t i2 = i, j2 = j;
            while (i2 < a.size() && std::isdigit(static_cast<unsigned char>(a[i2]))) ++i2;
            while (j2 < b.size() && std::isdigit(static_cast<unsigned char>(b[j2]))) ++j2;
            // compare digit runs numerically: by length ignoring leading zeros
            const std::string_view na(a.data() + i, i2 - i);
            const std::string_view nb(b.data() + j, j2 - j);
            const std::string_view ta = na.substr(std::min(na.find_first_not_of('0'), na.size()));
            const std::string_view tb = nb.substr(std::min(nb.find_first_not_of('0'), nb.size()));
            if (ta.size() != tb.size()) return ta.size() < tb.size();
            if (ta != tb) return ta < tb;
            i = i2;
            j = j2;
            continue;
        }
        if (a[i] != b[j]) return a[i] < b[j];
        ++i;
        ++j;
    }
    if (a.size() - i != b.size() - j) return a.size() - i < b.size() - j;
    return a < b; // stable tie-break ("fr01" vs "fr1")
}

std::vector<GrayFrame> load_frames(const std::filesystem::path& dir, const std::string& pattern) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw IoError("frames directory not found: " + dir.string());

    std::vector<std::string> names;
    for (const fs::directory_entry& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        const std::string name = entry.path().filename().string();
        if (fnmatch(pattern.c_str(), name.c_str(), 0) == 0) names.push_back(name);
    }
    if (names.empty()) {
        throw IoError("no frames matched pattern '" + pattern + "' in " + dir.string());
    }
    std::sort(names.begin(), names.end(), natural_less);

    std::vector<GrayFrame> frames;
    frames.reserve(names.size());
    for (std::size_t i = 0; i < names.size(); ++i) {
        GrayFrame f = load_image(dir / names[i]);
        f.index = static_cast<int>(i);
        frames.push_back(std::move(f));
    }
    return frames;
}

int otsu_threshold(const GrayFrame& frame) {
    std::array<std::uint64_t, 256> hist = {};
    for (std::uint8_t v : frame.pixels) ++hist[v];
    const double total = static_cast<double>(frame.pixels.size());

    double sum_all = 0;
    for (int v = 0; v < 256; ++v) sum_all += double(v) * hist[v];

    double best = -1.0;
    int best_lo = 0, best_hi = 0;
    double w0 = 0, sum0 = 0;
    for (int t = 0; t < 256; ++t) {
        w0 += hist[t];
        sum0 += double(t) * hist[t];
        const double w1 = total - w0;
        double variance = 0.0;
        if (w0 > 0 && w1 > 0) {
            const double mu0 = sum0 / w0;
            const double mu1 = (sum_all - sum0) / w1;
            variance = (w0 / total) * (w1 / total) * (mu0 - mu1) * (mu0 - mu1);
        }
        if (variance > best) {
            best = variance;
            best_lo = best_hi = t;
        } else if (variance == best && t == best_hi + 1) {
            best_hi = t; // extend the first maximal plateau
        }
    }
    return (best_lo + best_hi) / 2;
}

BinaryFrame binarize(const GrayFrame& frame, Threshold method) {
    BinaryFrame bf;
    bf.width = frame.width;
    bf.height = frame.height;
    bf.source_index = frame.index;
    bf.threshold = method.use_otsu ? otsu_threshold(frame)
                                   : std::clamp(method.value, 0, 255);
    bf.mask.resize(frame.pixels.size());
    for (std::size_t i = 0; i < frame.pixels.size(); ++i) {
        bf.mask[i] = frame.pixels[i] <= bf.threshold ? 1 : 0;
    }
    return bf;
}

void write_pgm(const std::filesystem::path& file, const GrayFrame& frame) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw IoError("cannot write " + file.string());
    out << "P5\n" << frame.width << " " << frame.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(frame.pixels.data()),
              static_cast<std::streamsize>(frame.pixels.size()));
    if (!out) throw IoError("short write to " + file.string());
}

} // namespace vxb
