// vxb: vortex-nerve barcode pipeline over image frame sequences.
//
// Subcommands:
//   barcode  full pipeline over a frame directory
//   frame    single-frame debug: overlay SVG plus a report
//   shrink   copy the frames retained by a shrink plan
//   bench    scaling study over random point sets

#include "vxb/bench.hpp"
#include "vxb/errors.hpp"
#include "vxb/pipeline.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitNoNerve = 3;

struct CommonOpts {
    std::string config_file;
    std::string threshold = "otsu";
};

void add_pipeline_options(CLI::App* cmd, vxb::PipelineConfig& cfg, CommonOpts& opts) {
    cmd->add_option("--frames", cfg.frames_dir, "directory with PNG/PGM frames")->required();
    cmd->add_option("--pattern", cfg.pattern, "glob for frame filenames (default *)");
    cmd->add_option("--threshold", opts.threshold, "binarization: otsu or a value 0..255");
    cmd->add_option("--min-hole-area", cfg.min_hole_area, "smallest dark region kept (pixels)");
    cmd->add_option("--max-rings", cfg.max_rings, "vortex ring budget per nerve")
        ->check(CLI::PositiveNumber);
    cmd->add_option_function<std::string>(
           "--mnc-policy",
           [&cfg](const std::string& v) {
               vxb::apply_config_entry(cfg, "mnc-policy", v);
           },
           "first|all: vortex nerves attempted per frame")
        ->check(CLI::IsMember({"first", "all"}));
    cmd->add_option("--jobs", cfg.jobs, "worker threads (0 = hardware)");
    cmd->add_option("--out", cfg.out_dir, "output directory");
    cmd->add_option("--config", opts.config_file, "key=value config file (flags win)");
}

void finalize_config(vxb::PipelineConfig& cfg, const CommonOpts& opts, const CLI::App* cmd) {
    // config file first, then explicit flags on top
    if (!opts.config_file.empty()) {
        vxb::PipelineConfig from_file = cfg;
        vxb::apply_config_file(from_file, opts.config_file);
        // flags that were actually passed override the file
        vxb::PipelineConfig merged = from_file;
        if (cmd->count("--frames")) merged.frames_dir = cfg.frames_dir;
        if (cmd->count("--pattern")) merged.pattern = cfg.pattern;
        if (cmd->count("--min-hole-area")) merged.min_hole_area = cfg.min_hole_area;
        if (cmd->count("--max-rings")) merged.max_rings = cfg.max_rings;
        if (cmd->count("--mnc-policy")) merged.mnc_policy = cfg.mnc_policy;
        if (cmd->count("--jobs")) merged.jobs = cfg.jobs;
        if (cmd->count("--out")) merged.out_dir = cfg.out_dir;
        cfg = merged;
    }
    if (cmd->count("--threshold") || !opts.config_file.empty()) {
        if (cmd->count("--threshold")) {
            vxb::apply_config_entry(cfg, "threshold", opts.threshold);
        }
    }
}

void print_report(const vxb::FrameReport& r) {
    std::printf("frame %4d: status=%-10s centroids=%-4d mncs=%-3d betti=[", r.frame_index,
                vxb::to_string(r.status), r.centroid_count, r.mnc_count);
    for (std::size_t i = 0; i < r.betti.size(); ++i) {
        std::printf("%s%d", i ? " " : "", r.betti[i].value);
    }
    std::printf("] %.2f ms\n", r.elapsed_ms);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"vortex-nerve barcode pipeline for video frame sequences"};
    app.require_subcommand(1);

    vxb::PipelineConfig cfg;
    CommonOpts opts;

    CLI::App* barcode_cmd = app.add_subcommand("barcode", "run the full pipeline");
    add_pipeline_options(barcode_cmd, cfg, opts);
    int betti_target = -1;
    barcode_cmd->add_option("--betti", betti_target, "Betti value for the shrink plan");
    barcode_cmd->add_option("--min-run", cfg.min_run, "shortest persistent run retained");
    barcode_cmd->add_flag("--render-barcode", cfg.render_barcode, "write barcode.svg");
    barcode_cmd->add_flag("--render-frames", cfg.render_frames, "write overlay_<i>.svg per frame");

    CLI::App* frame_cmd = app.add_subcommand("frame", "analyze a single frame");
    vxb::PipelineConfig frame_cfg;
    CommonOpts frame_opts;
    add_pipeline_options(frame_cmd, frame_cfg, frame_opts);
    int frame_index = 0;
    frame_cmd->add_option("--index", frame_index, "frame index within the sequence");

    CLI::App* shrink_cmd = app.add_subcommand("shrink", "copy retained frames");
    std::string shrink_frames, shrink_pattern = "*", shrink_barcode, shrink_out = "shrunk";
    int shrink_betti = 0, shrink_min_run = 2;
    shrink_cmd->add_option("--frames", shrink_frames, "frame directory")->required();
    shrink_cmd->add_option("--pattern", shrink_pattern, "frame filename glob");
    shrink_cmd->add_option("--barcode", shrink_barcode, "barcode.csv or barcode.json")->required();
    shrink_cmd->add_option("--betti", shrink_betti, "target Betti value")->required();
    shrink_cmd->add_option("--min-run", shrink_min_run, "shortest run retained");
    shrink_cmd->add_option("--out", shrink_out, "destination directory");

    CLI::App* bench_cmd = app.add_subcommand("bench", "complexity study on random points");
    std::vector<int> bench_n = {200, 400, 800, 1600, 3200};
    unsigned bench_seed = 7;
    int bench_repeats = 5, bench_m_target = 0;
    std::string bench_out = ".";
    bench_cmd->add_option("--n", bench_n, "ascending point counts")->delimiter(',');
    bench_cmd->add_option("--seed", bench_seed, "point generator seed");
    bench_cmd->add_option("--repeats", bench_repeats, "timing repeats per size");
    bench_cmd->add_option("--m-target", bench_m_target, "cap on nerves per run (0 = all)");
    bench_cmd->add_option("--out", bench_out, "output directory for timings.csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (barcode_cmd->parsed()) {
            finalize_config(cfg, opts, barcode_cmd);
            if (barcode_cmd->count("--betti")) cfg.betti_target = betti_target;
            const vxb::PipelineResult result = vxb::run_pipeline(cfg);
            for (const vxb::FrameReport& r : result.reports) print_report(r);
            std::printf("barcode: %d frames, %zu distinct Betti values -> %s\n",
                        result.barcode.frame_count, result.barcode.betti_domain.size(),
                        cfg.out_dir.string().c_str());
            if (!result.any_nerve()) {
                std::fprintf(stderr, "no frame produced a vortex nerve\n");
                return kExitNoNerve;
            }
            return kExitOk;
        }
        if (frame_cmd->parsed()) {
            finalize_config(frame_cfg, frame_opts, frame_cmd);
            const std::vector<vxb::GrayFrame> frames =
                vxb::load_frames(frame_cfg.frames_dir, frame_cfg.pattern);
            if (frame_index < 0 || frame_index >= static_cast<int>(frames.size())) {
                std::fprintf(stderr, "frame index %d out of range (0..%zu)\n", frame_index,
                             frames.size() - 1);
                return kExitUsage;
            }
            const vxb::FrameAnalysis fa = vxb::analyze_frame(frames[frame_index], frame_cfg);
            print_report(fa.report);
            if (fa.triangulation) {
                std::filesystem::create_directories(frame_cfg.out_dir);
                char name[32];
                std::snprintf(name, sizeof name, "overlay_%05d.svg", frame_index);
                std::ofstream out(frame_cfg.out_dir / name, std::ios::binary);
                out << vxb::render_frame_overlay_svg(*fa.triangulation, fa.nerves,
                                                     frame_cfg.style);
                std::printf("wrote %s\n", (frame_cfg.out_dir / name).string().c_str());
            }
            return fa.report.status == vxb::FrameStatus::Ok ? kExitOk : kExitNoNerve;
        }
        if (shrink_cmd->parsed()) {
            const vxb::BarcodeFormat format =
                shrink_barcode.ends_with(".json") ? vxb::BarcodeFormat::Json
                                                  : vxb::BarcodeFormat::Csv;
            const vxb::Barcode bc = vxb::read_barcode(shrink_barcode, format);
            const vxb::ShrinkPlan plan = vxb::shrink(bc, shrink_betti, shrink_min_run);
            const std::vector<std::string> copied = vxb::copy_retained_frames(
                shrink_frames, shrink_pattern, plan.retained_frames, shrink_out);
            std::printf("retained %zu of %d frames -> %s\n", copied.size(), bc.frame_count,
                        shrink_out.c_str());
            return kExitOk;
        }
        if (bench_cmd->parsed()) {
            const vxb::BenchResult result =
                vxb::bench_complexity(bench_n, bench_m_target, bench_seed, bench_repeats);
            std::filesystem::create_directories(bench_out);
            vxb::write_timings_csv(result, std::filesystem::path(bench_out) / "timings.csv");
            const std::string summary = vxb::format_fit_summary(result);
            std::ofstream fit(std::filesystem::path(bench_out) / "fit.txt", std::ios::binary);
            fit << summary;
            for (const vxb::BenchRow& row : result.rows) {
                std::printf("n=%-6d m=%-3d median=%.6f s\n", row.n, row.m, row.median_seconds);
            }
            std::fputs(summary.c_str(), stdout);
            return kExitOk;
        }
    } catch (const vxb::IoError& e) {
        std::fprintf(stderr, "I/O error: %s\n", e.what());
        return kExitIo;
    } catch (const vxb::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return kExitUsage;
    }
    return kExitUsage;
}
