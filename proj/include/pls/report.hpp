#pragma once

#include "pls/experiment.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace pls {

inline constexpr const char* kCsvHeader =
    "scheme,M,K,Ne,band,snr_db,rho,csi_error_var,n,mean_sum_secrecy,ci_halfwidth,outage_prob,"
    "mean_ee,mean_precoder_time_s";

/// Header plus one row per cell, six significant digits, cells in grid order.
std::string format_csv(const std::vector<AggregateCell>& cells);
void emit_csv(const std::vector<AggregateCell>& cells, const std::filesystem::path& path);

/// Writes cdf_<index>_<scheme>.csv for every cell (sorted sum secrecy and its
/// empirical CDF). Index matches the cell's row in results.csv. Returns the paths.
std::vector<std::filesystem::path> emit_cdf_files(const std::vector<AggregateCell>& cells,
                                                  const std::filesystem::path& dir);

struct MetricSummary {
    double mean = 0.0;
    std::optional<double> ci95;
};

struct SchemeSummary {
    SchemeId scheme = SchemeId::MRT;
    std::size_t n = 0;
    MetricSummary sum_secrecy;
    MetricSummary outage;
    MetricSummary ee;
};

struct EffectSize {
    SchemeId scheme = SchemeId::MRT;
    std::optional<double> cohens_d;
    std::optional<double> welch_t;
    std::optional<double> p_value;
};

struct SummaryReport {
    SchemeId baseline = SchemeId::MRT;
    std::vector<SchemeSummary> schemes;  // in order of first appearance
    std::vector<EffectSize> effects;     // each scheme vs baseline, sum secrecy
};

/// Pools per-trial samples of each scheme across its cells. Throws MissingScheme
/// when fewer than two schemes are present or the baseline is absent.
SummaryReport build_summary(const std::vector<AggregateCell>& cells, SchemeId baseline);

std::string format_summary(const SummaryReport& report);
void emit_summary(const std::vector<AggregateCell>& cells, SchemeId baseline,
                  const std::filesystem::path& path);

}  // namespace pls
