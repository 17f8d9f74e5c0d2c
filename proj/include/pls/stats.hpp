#pragma once

#include <span>
#include <vector>

namespace pls::stats {

struct SampleSummary {
    std::size_t n = 0;
    double mean = 0.0;
    double stddev = 0.0;  // n-1 denominator; 0 when n == 1
};

SampleSummary summarize(std::span<const double> samples);

struct MeanCi {
    double mean = 0.0;
    double halfwidth = 0.0;
};

/// Two-sided 97.5% Student-t quantile. Tabulated for df < 200 (linear in 1/df
/// between table points); beyond that, the normal quantile with a second-order
/// Cornish-Fisher correction (relative error below 1e-6).
double t_quantile_975(std::size_t df);

inline constexpr double kNormalQuantile975 = 1.959963984540054;

/// Mean and 95% confidence half-width t * s / sqrt(n). Needs n >= 2.
MeanCi mean_ci95(std::span<const double> samples);

/// Pooled-standard-deviation effect size (mean(a) - mean(b)) / s_pooled.
double cohens_d(std::span<const double> a, std::span<const double> b);

struct WelchResult {
    double t = 0.0;
    double p_value = 1.0;  // two-sided, normal tail
};

WelchResult welch_t(std::span<const double> a, std::span<const double> b);

/// F(x) = #{samples <= x} / n at every grid point (grid must be sorted).
std::vector<double> empirical_cdf(std::span<const double> samples, std::span<const double> grid);

}  // namespace pls::stats
