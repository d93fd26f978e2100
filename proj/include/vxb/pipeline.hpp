#pragma once

#include "vxb/barcode.hpp"
#include "vxb/holes.hpp"
#include "vxb/image.hpp"
#include "vxb/svg_render.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace vxb {

enum class MncPolicy { First, All };

struct PipelineConfig {
    std::filesystem::path frames_dir;
    std::string pattern = "*";
    Threshold threshold = Threshold::otsu();
    int min_hole_area = 9;
    int max_rings = 8;
    MncPolicy mnc_policy = MncPolicy::All;
    std::optional<int> betti_target;
    int min_run = 2;
    std::filesystem::path out_dir = ".";
    std::optional<unsigned> seed; // bench reproducibility; unused by the frame pipeline
    bool render_barcode = false;
    bool render_frames = false;
    int jobs = 0; // worker threads; 0 = hardware concurrency
    RenderStyle style;
};

enum class FrameStatus { Ok, Degenerate, NoVortex };

const char* to_string(FrameStatus s);

/// Per-frame outcome, recorded whether or not the frame produced a nerve.
struct FrameReport {
    int frame_index = 0;
    int centroid_count = 0;
    int mnc_count = 0;
    std::vector<BettiResult> betti;
    FrameStatus status = FrameStatus::Degenerate;
    double elapsed_ms = 0.0;
};

/// Full state from analyzing one frame; the triangulation and nerves are
/// kept for rendering and debugging.
struct FrameAnalysis {
    FrameReport report;
    std::optional<Triangulation> triangulation;
    std::vector<VortexNerve> nerves;
};

/// binarize -> label_holes -> compute_centroids -> triangulate ->
/// maximal_nerves -> vortex nerves (per mnc_policy) -> Betti numbers.
/// Geometric degeneracy is recorded in the report, never thrown.
FrameAnalysis analyze_frame(const GrayFrame& frame, const PipelineConfig& cfg);

struct PipelineResult {
    Barcode barcode;
    std::vector<FrameReport> reports;

    bool any_nerve() const;
};

/// Runs the whole pipeline over a frame directory and writes barcode.csv,
/// barcode.json, optional SVGs, and the shrink plan (plan.txt) into out_dir.
/// Frames are processed by a worker pool; results merge by frame index.
PipelineResult run_pipeline(const PipelineConfig& cfg);

/// Copies the frame files selected by a shrink plan into out_dir.
/// Returns the copied filenames in frame order.
std::vector<std::string> copy_retained_frames(const std::filesystem::path& frames_dir,
                                              const std::string& pattern,
                                              const std::vector<int>& retained_frames,
                                              const std::filesystem::path& out_dir);

/// Applies "key=value" lines (# comments allowed) to a config. Keys match
/// the CLI flags: frames, pattern, threshold, min-hole-area, max-rings,
/// mnc-policy, betti, min-run, out, jobs, seed.
void apply_config_file(PipelineConfig& cfg, const std::filesystem::path& file);
void apply_config_entry(PipelineConfig& cfg, const std::string& key, const std::string& value);

} // namespace vxb
