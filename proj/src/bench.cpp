#include "vxb/bench.hpp"

#include "vxb/delaunay.hpp"
#include "vxb/errors.hpp"
#include "vxb/nerve.hpp"
#include "vxb/vortex.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

namespace vxb {
namespace {

std::vector<Point2> random_points(unsigned seed, int n) {
    // the set depends only on (seed, n) so repeats time identical geometry
    std::mt19937_64 rng(static_cast<std::uint64_t>(seed) * 0x9e3779b97f4a7c15ULL +
                        static_cast<std::uint64_t>(n));
    std::uniform_real_distribution<double> coord(0.0, 1000.0);
    std::vector<Point2> pts;
    pts.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double x = coord(rng);
        const double y = coord(rng);
        pts.emplace_back(x, y);
    }
    return pts;
}

// triangulate -> maximal nerves -> vortex construction; returns (seconds, m)
std::pair<double, int> run_instance(const std::vector<Point2>& pts, int m_target,
                                    int max_rings) {
    const auto start = std::chrono::steady_clock::now();
    const Triangulation tri = delaunay_triangulate(pts);
    const MncSelection mncs = maximal_nerves(tri);
    int processed = 0;
    int betti_sink = 0;
    for (const AlexandroffNerve& nerve : mncs.nerves) {
        if (m_target > 0 && processed >= m_target) break;
        ++processed;
        try {
            const VortexNerve vn = build_vortex_nerve(nerve, tri, max_rings);
            betti_sink += betti_number(vn).value;
        } catch (const NerveTooSmall&) {
        } catch (const RingOpen&) {
        }
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    // keep the accumulated value alive so the loop cannot be optimized out
    if (betti_sink < 0) throw Error("bench: negative Betti sum");
    return {seconds, processed};
}

} // namespace

BenchResult bench_complexity(const std::vector<int>& n_values, int m_target, unsigned seed,
                             int repeats) {
    if (repeats < 1) throw Error("bench_complexity: repeats must be >= 1");
    if (!std::is_sorted(n_values.begin(), n_values.end())) {
        throw Error("bench_complexity: n_values must be ascending");
    }

    constexpr int kMaxRings = 8;
    BenchResult result;
    for (int n : n_values) {
        const std::vector<Point2> pts = random_points(seed, n);
        BenchRow row;
        row.n = n;
        for (int r = 0; r < repeats; ++r) {
            const auto [seconds, m] = run_instance(pts, m_target, kMaxRings);
            row.repeat_seconds.push_back(seconds);
            row.m = m; // identical geometry across repeats
        }
        std::vector<double> sorted = row.repeat_seconds;
        std::sort(sorted.begin(), sorted.end());
        row.median_seconds = sorted[sorted.size() / 2];
        result.rows.push_back(std::move(row));
    }

    // least squares scale for t ~ k * m * n^2
    double sxx = 0, sxt = 0, mean_t = 0;
    for (const BenchRow& row : result.rows) {
        const double x = double(row.m) * double(row.n) * double(row.n);
        sxx += x * x;
        sxt += x * row.median_seconds;
        mean_t += row.median_seconds;
    }
    mean_t /= result.rows.empty() ? 1 : result.rows.size();
    result.k = sxx > 0 ? sxt / sxx : 0.0;

    double ss_res = 0, ss_tot = 0;
    for (const BenchRow& row : result.rows) {
        const double x = double(row.m) * double(row.n) * double(row.n);
        const double err = row.median_seconds - result.k * x;
        ss_res += err * err;
        ss_tot += (row.median_seconds - mean_t) * (row.median_seconds - mean_t);
    }
    result.r_squared = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;

    // log-log slope of t vs n
    double slx = 0, sly = 0, slxx = 0, slxy = 0;
    const double cnt = static_cast<double>(result.rows.size());
    for (const BenchRow& row : result.rows) {
        const double lx = std::log(double(row.n));
        const double ly = std::log(std::max(row.median_seconds, 1e-12));
        slx += lx;
        sly += ly;
        slxx += lx * lx;
        slxy += lx * ly;
    }
    const double denom = cnt * slxx - slx * slx;
    result.loglog_slope = denom != 0 ? (cnt * slxy - slx * sly) / denom : 0.0;
    return result;
}

void write_timings_csv(const BenchResult& result, const std::filesystem::path& file) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw IoError("cannot write " + file.string());
    std::size_t repeats = 0;
    for (const BenchRow& row : result.rows) repeats = std::max(repeats, row.repeat_seconds.size());
    out << "n,m,median_seconds";
    for (std::size_t r = 0; r < repeats; ++r) out << ",run" << r;
    out << "\n";
    for (const BenchRow& row : result.rows) {
        out << row.n << "," << row.m << "," << row.median_seconds;
        for (double s : row.repeat_seconds) out << "," << s;
        out << "\n";
    }
}

std::string format_fit_summary(const BenchResult& result) {
    std::ostringstream out;
    out << "fit t ~ k*m*n^2\n";
    out << "k = " << result.k << " s\n";
    out << "r_squared = " << result.r_squared << "\n";
    out << "loglog_slope = " << result.loglog_slope << "\n";
    return out.str();
}

} // namespace vxb
