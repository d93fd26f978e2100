#pragma once

#include "vxb/vortex.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace vxb {

/// Betti-number barcode over a frame sequence: one column per frame, one row
/// per distinct Betti value. A frame with d vortex nerves contributes d
/// values to its column; frames with no nerve have empty columns.
struct Barcode {
    int frame_count = 0;
    std::map<int, std::vector<int>> entries; // frame -> sorted multiset of Betti values
    std::vector<int> betti_domain;           // sorted distinct values

    bool frame_has(int frame, int betti) const;
    bool operator==(const Barcode&) const = default;
};

/// Maximal run of consecutive frames whose columns all contain betti_value.
struct PersistenceInterval {
    int betti_value = 0;
    int start_frame = 0;
    int end_frame = 0; // inclusive
    int length = 0;    // end - start + 1

    bool operator==(const PersistenceInterval&) const = default;
};

/// Frames retained when shrinking to a target Betti value.
struct ShrinkPlan {
    int target_betti = 0;
    std::vector<int> retained_frames; // sorted
    int min_run_length = 0;
};

/// Builds the barcode from per-frame results. Rows with empty value lists
/// mark frames that produced no nerve. frame_count becomes max index + 1.
/// Throws Error on a duplicate frame index.
Barcode assemble_barcode(const std::vector<std::pair<int, std::vector<BettiResult>>>& per_frame);

/// All maximal runs, sorted by (betti_value, start_frame).
std::vector<PersistenceInterval> persistence_intervals(const Barcode& bc);

/// Union of all intervals of target_betti with length >= min_run_length.
ShrinkPlan shrink(const Barcode& bc, int target_betti, int min_run_length);

enum class BarcodeFormat { Csv, Json };

/// CSV: header "frame,betti", one row per (frame, value), sorted.
std::string barcode_to_csv(const Barcode& bc);
Barcode barcode_from_csv(const std::string& text);

/// JSON: {"frame_count": N, "entries": [[frame, [values...]], ...]}.
std::string barcode_to_json(const Barcode& bc);
Barcode barcode_from_json(const std::string& text);

/// File wrappers; throw IoError with the path on failure.
void write_barcode(const Barcode& bc, const std::filesystem::path& file, BarcodeFormat format);
Barcode read_barcode(const std::filesystem::path& file, BarcodeFormat format);

} // namespace vxb
