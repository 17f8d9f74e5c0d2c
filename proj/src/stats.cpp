#include "pls/stats.hpp"

#include "pls/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace pls::stats {

namespace {

struct TPoint {
    std::size_t df;
    double q;
};

constexpr std::array<TPoint, 34> kTTable{{
    {1, 12.706205}, {2, 4.302653},  {3, 3.182446},  {4, 2.776445},  {5, 2.570582},
    {6, 2.446912},  {7, 2.364624},  {8, 2.306004},  {9, 2.262157},  {10, 2.228139},
    {11, 2.200985}, {12, 2.178813}, {13, 2.160369}, {14, 2.144787}, {15, 2.131450},
    {16, 2.119905}, {17, 2.109816}, {18, 2.100922}, {19, 2.093024}, {20, 2.085963},
    {21, 2.079614}, {22, 2.073873}, {23, 2.068658}, {24, 2.063899}, {25, 2.059539},
    {26, 2.055529}, {27, 2.051831}, {28, 2.048407}, {29, 2.045230}, {30, 2.042272},
    {40, 2.021075}, {60, 2.000298}, {120, 1.979930}, {199, 1.971957},
}};

double mean_of(std::span<const double> x) {
    double sum = 0.0;
    for (double v : x) sum += v;
    return sum / static_cast<double>(x.size());
}

// Sum of squared deviations from the mean.
double centered_ss(std::span<const double> x, double mean) {
    double ss = 0.0;
    for (double v : x) ss += (v - mean) * (v - mean);
    return ss;
}

}  // namespace

SampleSummary summarize(std::span<const double> samples) {
    if (samples.empty()) {
        throw Error(ErrorKind::EmptySamples, "summarize: no samples");
    }
    SampleSummary s;
    s.n = samples.size();
    s.mean = mean_of(samples);
    if (s.n > 1) {
        s.stddev = std::sqrt(centered_ss(samples, s.mean) / static_cast<double>(s.n - 1));
    }
    return s;
}

double t_quantile_975(std::size_t df) {
    if (df == 0) {
        throw Error(ErrorKind::InsufficientSamples, "t quantile needs df >= 1");
    }
    if (df >= 200) {
        // Cornish-Fisher expansion around the normal quantile.
        const double z = kNormalQuantile975;
        const double v = static_cast<double>(df);
        const double z3 = z * z * z;
        const double z5 = z3 * z * z;
        return z + (z3 + z) / (4.0 * v) + (5.0 * z5 + 16.0 * z3 + 3.0 * z) / (96.0 * v * v);
    }
    auto hi = std::lower_bound(kTTable.begin(), kTTable.end(), df,
                               [](const TPoint& p, std::size_t d) { return p.df < d; });
    if (hi->df == df) return hi->q;
    const auto lo = std::prev(hi);
    const double x = 1.0 / static_cast<double>(df);
    const double x0 = 1.0 / static_cast<double>(lo->df);
    const double x1 = 1.0 / static_cast<double>(hi->df);
    return lo->q + (hi->q - lo->q) * (x - x0) / (x1 - x0);
}

MeanCi mean_ci95(std::span<const double> samples) {
    if (samples.size() < 2) {
        throw Error(ErrorKind::InsufficientSamples,
                    "confidence interval needs n >= 2, got " + std::to_string(samples.size()));
    }
    const SampleSummary s = summarize(samples);
    const double t = t_quantile_975(s.n - 1);
    return {s.mean, t * s.stddev / std::sqrt(static_cast<double>(s.n))};
}

double cohens_d(std::span<const double> a, std::span<const double> b) {
    if (a.size() < 2 || b.size() < 2) {
        throw Error(ErrorKind::InsufficientSamples, "cohens_d needs at least 2 samples per group");
    }
    const double ma = mean_of(a);
    const double mb = mean_of(b);
    const double pooled_var = (centered_ss(a, ma) + centered_ss(b, mb)) /
                              static_cast<double>(a.size() + b.size() - 2);
    if (pooled_var <= 0.0) {
        if (ma == mb) return 0.0;
        throw Error(ErrorKind::DegenerateVariance, "cohens_d: zero pooled variance with distinct means");
    }
    return (ma - mb) / std::sqrt(pooled_var);
}

WelchResult welch_t(std::span<const double> a, std::span<const double> b) {
    if (a.size() < 2 || b.size() < 2) {
        throw Error(ErrorKind::InsufficientSamples, "welch_t needs at least 2 samples per group");
    }
    const SampleSummary sa = summarize(a);
    const SampleSummary sb = summarize(b);
    const double se2 = sa.stddev * sa.stddev / static_cast<double>(sa.n) +
                       sb.stddev * sb.stddev / static_cast<double>(sb.n);
    WelchResult r;
    if (se2 <= 0.0) {
        if (sa.mean == sb.mean) return r;
        throw Error(ErrorKind::DegenerateVariance, "welch_t: zero variance with distinct means");
    }
    r.t = (sa.mean - sb.mean) / std::sqrt(se2);
    r.p_value = std::erfc(std::abs(r.t) / std::sqrt(2.0));
    return r;
}

std::vector<double> empirical_cdf(std::span<const double> samples, std::span<const double> grid) {
    if (samples.empty()) {
        throw Error(ErrorKind::EmptySamples, "empirical_cdf: no samples");
    }
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    std::vector<double> out;
    out.reserve(grid.size());
    for (double x : grid) {
        const auto count = std::upper_bound(sorted.begin(), sorted.end(), x) - sorted.begin();
        out.push_back(static_cast<double>(count) / n);
    }
    return out;
}

}  // namespace pls::stats
