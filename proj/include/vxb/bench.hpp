#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace vxb {

/// One measured problem size.
struct BenchRow {
    int n = 0;               // centroid count
    int m = 0;               // maximal nerves processed
    double median_seconds = 0.0;
    std::vector<double> repeat_seconds;
};

/// Scaling study result: per-n medians plus the k*m*n^2 least-squares fit
/// and the log-log slope of time vs n.
struct BenchResult {
    std::vector<BenchRow> rows;
    double k = 0.0;            // fitted scale of t ~ k * m * n^2
    double r_squared = 0.0;    // goodness of the k*m*n^2 fit
    double loglog_slope = 0.0; // slope of ln t vs ln n
};

/// Runs triangulate -> maximal_nerves -> vortex construction over seeded
/// uniform random point sets of each size in n_values. The point set for a
/// given (seed, n) is identical across repeats; the reported time per n is
/// the median of `repeats` runs. m_target > 0 caps how many maximal nerves
/// are processed per run (0 = all). No image I/O is involved.
BenchResult bench_complexity(const std::vector<int>& n_values, int m_target, unsigned seed,
                             int repeats);

/// timings.csv: "n,m,median_seconds" plus one column per repeat.
void write_timings_csv(const BenchResult& result, const std::filesystem::path& file);

std::string format_fit_summary(const BenchResult& result);

} // namespace vxb
