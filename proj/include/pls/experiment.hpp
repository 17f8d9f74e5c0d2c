#pragma once

#include "pls/channel.hpp"
#include "pls/link.hpp"
#include "pls/precoding.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pls {

/// Factorial sweep: every combination of the list axes, for every scheme.
/// Scalar parameters (K, target rate, CSI model, seed, trial count, ...) live
/// in `base`; its list-axis fields are overwritten per grid point.
struct SweepSpec {
    std::string scenario;  // informational, empty for a hand-built spec
    SystemConfig base;
    std::vector<int> m_values{128};
    std::vector<double> snr_values{-10, 0, 10, 20, 30, 40, 50};
    std::vector<double> rho_values{0.8};
    std::vector<int> ne_values{1};
    std::vector<double> csi_values{0.01};
    std::vector<BandProfile> bands{band_sub6()};
    std::vector<SchemeId> schemes{kAllSchemes[0], kAllSchemes[1], kAllSchemes[2], kAllSchemes[3]};

    bool operator==(const SweepSpec&) const = default;
};

/// Throws ConfigError for empty axes or any invalid grid point.
void validate(const SweepSpec& spec);

struct GridPoint {
    SystemConfig config;
    SchemeId scheme = SchemeId::MRT;
};

/// Grid points in emission order: band, M, Ne, CSI error, rho, SNR, scheme
/// (scheme varies fastest).
std::vector<GridPoint> expand_grid(const SweepSpec& spec);

struct AggregateCell {
    GridPoint point;
    std::size_t n = 0;
    double mean_sum_secrecy = 0.0;
    std::optional<double> ci_halfwidth;  // absent when n < 2
    double outage_prob = 0.0;
    double mean_ee = 0.0;
    double mean_precoder_time = 0.0;
    std::vector<double> secrecy_samples;  // sorted ascending
    std::vector<double> trial_outage;     // per trial, fraction of users in outage
    std::vector<double> trial_ee;         // per trial, trial order
    std::vector<double> trial_sum_secrecy;  // per trial, trial order
};

/// One Monte Carlo trial. Channels come from RngStream(master_seed, trial_index)
/// (attempt > 0 selects a fresh child stream for a retry), so the draw is shared
/// by every scheme and SNR evaluated at the same trial index.
LinkSample run_trial(const SystemConfig& cfg, SchemeId scheme, int trial_index, int attempt = 0);

struct RunOptions {
    unsigned threads = 0;  // 0: hardware concurrency
};

/// Runs and aggregates every cell. Reduction is in trial order, so the result
/// does not depend on thread count or scheduling.
std::vector<AggregateCell> run_grid(const SweepSpec& spec, const RunOptions& options = {});

/// Reduces per-trial samples (trial order) into a cell.
AggregateCell aggregate(const GridPoint& point, const std::vector<LinkSample>& samples,
                        double target_secrecy_rate);

inline constexpr const char* kScenarioNames[] = {"snr_sweep",       "outage_sweep", "ee_sweep",
                                                 "antenna_scaling", "cdf",          "heatmap",
                                                 "eve_antennas",    "band_compare", "summary"};

/// Default spec with the axes of the named scenario. Throws UnknownScenario.
SweepSpec scenario_preset(const std::string& name);

}  // namespace pls
