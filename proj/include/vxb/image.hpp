#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace vxb {

/// 8-bit grayscale frame, row-major.
struct GrayFrame {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;
    int index = 0; // frame ordinal within the loaded sequence

    std::uint8_t at(int x, int y) const { return pixels[std::size_t(y) * width + x]; }
    std::uint8_t& at(int x, int y) { return pixels[std::size_t(y) * width + x]; }
};

/// Thresholded frame; mask value 1 marks a dark (hole) pixel.
struct BinaryFrame {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> mask;
    int threshold = 0;
    int source_index = 0;

    bool dark(int x, int y) const { return mask[std::size_t(y) * width + x] != 0; }
};

/// Binarization method: a fixed intensity threshold or Otsu's method.
struct Threshold {
    bool use_otsu = true;
    int value = 0;

    static Threshold fixed(int t) { return {false, t}; }
    static Threshold otsu() { return {true, 0}; }
};

/// Loads one image file (PNG or binary PGM, by content). RGB inputs are
/// converted with luma = round(0.299 R + 0.587 G + 0.114 B). Throws IoError
/// on unreadable or unsupported files.
GrayFrame load_image(const std::filesystem::path& file);

/// Loads every file in dir matching the glob pattern, in natural filename
/// order (digit runs compare numerically); indices are assigned 0..f-1.
/// Throws IoError when the directory is missing, no file matches, or any
/// match fails to load.
std::vector<GrayFrame> load_frames(const std::filesystem::path& dir, const std::string& pattern);

/// Otsu threshold of a frame: maximizes the between-class variance of the
/// dark (<= t) / light (> t) split; plateaus resolve to their midpoint.
int otsu_threshold(const GrayFrame& frame);

/// mask = (intensity <= threshold), with the applied threshold recorded.
BinaryFrame binarize(const GrayFrame& frame, Threshold method);

/// Writes an 8-bit binary PGM (P5). Used by tooling and tests.
void write_pgm(const std::filesystem::path& file, const GrayFrame& frame);

/// Natural-order comparison used for frame filenames: digit runs compare as
/// numbers ("fr2" < "fr10"), everything else byte-wise.
bool natural_less(const std::string& a, const std::string& b);

} // namespace vxb
