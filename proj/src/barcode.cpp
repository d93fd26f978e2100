#include "vxb/barcode.hpp"

#include "vxb/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace vxb {
namespace {

void rebuild_domain(Barcode& bc) {
    bc.betti_domain.clear();
    for (const auto& [frame, values] : bc.entries) {
        (void)frame;
        for (int v : values) bc.betti_domain.push_back(v);
    }
    std::sort(bc.betti_domain.begin(), bc.betti_domain.end());
    bc.betti_domain.erase(std::unique(bc.betti_domain.begin(), bc.betti_domain.end()),
                          bc.betti_domain.end());
}

} // namespace

bool Barcode::frame_has(int frame, int betti) const {
    const auto it = entries.find(frame);
    if (it == entries.end()) return false;
    return std::binary_search(it->second.begin(), it->second.end(), betti);
}

Barcode assemble_barcode(const std::vector<std::pair<int, std::vector<BettiResult>>>& per_frame) {
    Barcode bc;
    std::vector<char> seen;
    for (const auto& [frame, results] : per_frame) {
        if (frame < 0) throw Error("assemble_barcode: negative frame index");
        if (frame >= static_cast<int>(seen.size())) seen.resize(frame + 1, 0);
        if (seen[frame]) throw Error("assemble_barcode: duplicate frame index " + std::to_string(frame));
        seen[frame] = 1;
        bc.frame_count = std::max(bc.frame_count, frame + 1);
        if (results.empty()) continue; // failed frame: empty column
        std::vector<int>& column = bc.entries[frame];
        for (const BettiResult& r : results) column.push_back(r.value);
        std::sort(column.begin(), column.end());
    }
    rebuild_domain(bc);
    return bc;
}

std::vector<PersistenceInterval> persistence_intervals(const Barcode& bc) {
    std::vector<PersistenceInterval> intervals;
    for (int value : bc.betti_domain) {
        int run_start = -1;
        for (int frame = 0; frame <= bc.frame_count; ++frame) {
            const bool present = frame < bc.frame_count && bc.frame_has(frame, value);
            if (present && run_start < 0) run_start = frame;
            if (!present && run_start >= 0) {
                intervals.push_back({value, run_start, frame - 1, frame - run_start});
                run_start = -1;
            }
        }
    }
    return intervals; // already sorted: betti_domain ascending, frames ascending
}

ShrinkPlan shrink(const Barcode& bc, int target_betti, int min_run_length) {
    ShrinkPlan plan;
    plan.target_betti = target_betti;
    plan.min_run_length = min_run_length;
    for (const PersistenceInterval& iv : persistence_intervals(bc)) {
        if (iv.betti_value != target_betti || iv.length < min_run_length) continue;
        for (int f = iv.start_frame; f <= iv.end_frame; ++f) plan.retained_frames.push_back(f);
    }
    return plan;
}

std::string barcode_to_csv(const Barcode& bc) {
    std::ostringstream out;
    out << "frame,betti\n";
    for (const auto& [frame, values] : bc.entries) {
        for (int v : values) out << frame << "," << v << "\n";
    }
    return out.str();
}

Barcode barcode_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "frame,betti") {
        throw Error("barcode CSV: missing 'frame,betti' header");
    }
    Barcode bc;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const std::size_t comma = line.find(',');
        if (comma == std::string::npos) throw Error("barcode CSV: malformed row '" + line + "'");
        const int frame = std::stoi(line.substr(0, comma));
        const int value = std::stoi(line.substr(comma + 1));
        bc.entries[frame].push_back(value);
        bc.frame_count = std::max(bc.frame_count, frame + 1);
    }
    for (auto& [frame, values] : bc.entries) {
        (void)frame;
        std::sort(values.begin(), values.end());
    }
    rebuild_domain(bc);
    return bc;
}

std::string barcode_to_json(const Barcode& bc) {
    nlohmann::ordered_json doc;
    doc["frame_count"] = bc.frame_count;
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const auto& [frame, values] : bc.entries) {
        entries.push_back(nlohmann::ordered_json::array({frame, values}));
    }
    doc["entries"] = std::move(entries);
    return doc.dump(2) + "\n";
}

Barcode barcode_from_json(const std::string& text) {
    Barcode bc;
    try {
        const nlohmann::json doc = nlohmann::json::parse(text);
        bc.frame_count = doc.at("frame_count").get<int>();
        for (const nlohmann::json& entry : doc.at("entries")) {
            const int frame = entry.at(0).get<int>();
            std::vector<int> values = entry.at(1).get<std::vector<int>>();
            std::sort(values.begin(), values.end());
            if (bc.entries.count(frame)) throw Error("barcode JSON: duplicate frame");
            if (!values.empty()) bc.entries[frame] = std::move(values);
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("barcode JSON: ") + e.what());
    }
    rebuild_domain(bc);
    return bc;
}

void write_barcode(const Barcode& bc, const std::filesystem::path& file, BarcodeFormat format) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw IoError("cannot write " + file.string());
    out << (format == BarcodeFormat::Csv ? barcode_to_csv(bc) : barcode_to_json(bc));
    if (!out) throw IoError("short write to " + file.string());
}

Barcode read_barcode(const std::filesystem::path& file, BarcodeFormat format) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw IoError("cannot read " + file.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return format == BarcodeFormat::Csv ? barcode_from_csv(buf.str())
                                        : barcode_from_json(buf.str());
}

} // namespace vxb
