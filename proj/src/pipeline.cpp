#include "vxb/pipeline.hpp"

#include "vxb/errors.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fnmatch.h>
#include <fstream>
#include <thread>

namespace vxb {

const char* to_string(FrameStatus s) {
    switch (s) {
    case FrameStatus::Ok: return "ok";
    case FrameStatus::Degenerate: return "degenerate";
    case FrameStatus::NoVortex: return "no_vortex";
    }
    return "?";
}

bool PipelineResult::any_nerve() const {
    return std::any_of(reports.begin(), reports.end(),
                       [](const FrameReport& r) { return r.status == FrameStatus::Ok; });
}

FrameAnalysis analyze_frame(const GrayFrame& frame, const PipelineConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    FrameAnalysis fa;
    fa.report.frame_index = frame.index;

    const BinaryFrame bf = binarize(frame, cfg.threshold);
    const std::vector<HoleRegion> holes = label_holes(bf, cfg.min_hole_area);
    const std::vector<Centroid> centroids = compute_centroids(holes);
    fa.report.centroid_count = static_cast<int>(centroids.size());

    try {
        fa.triangulation = delaunay_triangulate(centroid_points(centroids));
    } catch (const FrameDegenerate&) {
        fa.report.status = FrameStatus::Degenerate;
    }

    if (fa.triangulation) {
        const MncSelection mncs = maximal_nerves(*fa.triangulation);
        fa.report.mnc_count = static_cast<int>(mncs.nerves.size());
        for (const AlexandroffNerve& nerve : mncs.nerves) {
            try {
                VortexNerve vn = build_vortex_nerve(nerve, *fa.triangulation, cfg.max_rings);
                fa.report.betti.push_back(betti_number(vn));
                fa.nerves.push_back(std::move(vn));
                if (cfg.mnc_policy == MncPolicy::First) break;
            } catch (const NerveTooSmall&) {
            } catch (const RingOpen&) {
                // fall through to the next MNC in nucleus order
            }
        }
        fa.report.status = fa.report.betti.empty() ? FrameStatus::NoVortex : FrameStatus::Ok;
    }

    fa.report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return fa;
}

PipelineResult run_pipeline(const PipelineConfig& cfg) {
    namespace fs = std::filesystem;
    const std::vector<GrayFrame> frames = load_frames(cfg.frames_dir, cfg.pattern);

    std::error_code ec;
    fs::create_directories(cfg.out_dir, ec);
    if (!fs::is_directory(cfg.out_dir)) {
        throw IoError("cannot create output directory " + cfg.out_dir.string());
    }

    std::vector<FrameAnalysis> analyses(frames.size());
    std::vector<std::exception_ptr> failures(frames.size());

    const int hw = static_cast<int>(std::thread::hardware_concurrency());
    const int jobs = std::clamp(cfg.jobs > 0 ? cfg.jobs : (hw > 0 ? hw : 1), 1,
                                std::max(1, static_cast<int>(frames.size())));
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next.fetch_add(1); i < frames.size(); i = next.fetch_add(1)) {
            try {
                analyses[i] = analyze_frame(frames[i], cfg);
                if (cfg.render_frames && analyses[i].triangulation) {
                    char name[32];
                    std::snprintf(name, sizeof name, "overlay_%05d.svg", frames[i].index);
                    std::ofstream out(cfg.out_dir / name, std::ios::binary);
                    out << render_frame_overlay_svg(*analyses[i].triangulation,
                                                    analyses[i].nerves, cfg.style);
                    if (!out) throw IoError(std::string("cannot write ") + name);
                }
            } catch (...) {
                failures[i] = std::current_exception();
            }
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    for (const std::exception_ptr& e : failures) {
        if (e) std::rethrow_exception(e);
    }

    PipelineResult result;
    std::vector<std::pair<int, std::vector<BettiResult>>> per_frame;
    per_frame.reserve(frames.size());
    for (const FrameAnalysis& fa : analyses) {
        result.reports.push_back(fa.report);
        per_frame.emplace_back(fa.report.frame_index, fa.report.betti);
    }
    result.barcode = assemble_barcode(per_frame);

    write_barcode(result.barcode, cfg.out_dir / "barcode.csv", BarcodeFormat::Csv);
    write_barcode(result.barcode, cfg.out_dir / "barcode.json", BarcodeFormat::Json);
    if (cfg.render_barcode) {
        std::ofstream out(cfg.out_dir / "barcode.svg", std::ios::binary);
        out << render_barcode_svg(result.barcode, cfg.style);
        if (!out) throw IoError("cannot write barcode.svg");
    }
    if (cfg.betti_target) {
        const ShrinkPlan plan = shrink(result.barcode, *cfg.betti_target, cfg.min_run);
        std::ofstream out(cfg.out_dir / "plan.txt", std::ios::binary);
        if (!out) throw IoError("cannot write plan.txt");
        for (int f : plan.retained_frames) out << f << "\n";
    }
    return result;
}

std::vector<std::string> copy_retained_frames(const std::filesystem::path& frames_dir,
                                              const std::string& pattern,
                                              const std::vector<int>& retained_frames,
                                              const std::filesystem::path& out_dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(frames_dir)) {
        throw IoError("frames directory not found: " + frames_dir.string());
    }
    std::vector<std::string> names;
    for (const fs::directory_entry& entry : fs::directory_iterator(frames_dir)) {
        if (!entry.is_regular_file()) continue;
        const std::string name = entry.path().filename().string();
        if (fnmatch(pattern.c_str(), name.c_str(), 0) == 0) names.push_back(name);
    }
    if (names.empty()) throw IoError("no frames matched pattern '" + pattern + "'");
    std::sort(names.begin(), names.end(), natural_less);

    std::error_code ec;
    fs::create_directories(out_dir, ec);
    std::vector<std::string> copied;
    for (int f : retained_frames) {
        if (f < 0 || f >= static_cast<int>(names.size())) {
            throw IoError("shrink plan references frame " + std::to_string(f) +
                          " but only " + std::to_string(names.size()) + " frames matched");
        }
        fs::copy_file(frames_dir / names[f], out_dir / names[f],
                      fs::copy_options::overwrite_existing, ec);
        if (ec) throw IoError("cannot copy " + names[f] + ": " + ec.message());
        copied.push_back(names[f]);
    }
    return copied;
}

void apply_config_entry(PipelineConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "frames") {
        cfg.frames_dir = value;
    } else if (key == "pattern") {
        cfg.pattern = value;
    } else if (key == "threshold") {
        cfg.threshold = (value == "otsu") ? Threshold::otsu() : Threshold::fixed(std::stoi(value));
    } else if (key == "min-hole-area") {
        cfg.min_hole_area = std::stoi(value);
    } else if (key == "max-rings") {
        cfg.max_rings = std::stoi(value);
    } else if (key == "mnc-policy") {
        if (value == "first") {
            cfg.mnc_policy = MncPolicy::First;
        } else if (value == "all") {
            cfg.mnc_policy = MncPolicy::All;
        } else {
            throw Error("config: mnc-policy must be 'first' or 'all'");
        }
    } else if (key == "betti") {
        cfg.betti_target = std::stoi(value);
    } else if (key == "min-run") {
        cfg.min_run = std::stoi(value);
    } else if (key == "out") {
        cfg.out_dir = value;
    } else if (key == "jobs") {
        cfg.jobs = std::stoi(value);
    } else if (key == "seed") {
        cfg.seed = static_cast<unsigned>(std::stoul(value));
    } else {
        throw Error("config: unknown key '" + key + "'");
    }
}

void apply_config_file(PipelineConfig& cfg, const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw IoError("cannot read config file " + file.string());
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        line = line.substr(first, last - first + 1);
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw Error("config: line " + std::to_string(lineno) + " is not key=value");
        }
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t");
            const auto e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        apply_config_entry(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
}

} // namespace vxb
