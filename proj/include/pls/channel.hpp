#pragma once

#include "pls/numerics.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pls {

/// Large-scale propagation parameters of one carrier band. The path-loss
/// coefficients are linear power gains applied to unit-variance fading.
struct BandProfile {
    std::string name;
    double carrier_frequency_hz = 0.0;
    double user_pathloss_coeff = 1.0;
    double eve_pathloss_coeff = 1.0;
    double noise_figure_db = 0.0;

    bool operator==(const BandProfile&) const = default;
};

BandProfile band_sub6();
BandProfile band_mmwave();
/// "sub6" or "mmwave"; throws ConfigError otherwise.
BandProfile band_by_name(const std::string& name);

enum class PathlossMode { FixedCoefficient, DistanceBased };
enum class CsiModel { ErrorInjection, Pilot };

struct DistanceParams {
    std::vector<double> user_distances_m{100.0};  // one per user, or one shared value
    double eve_distance_m = 100.0;
    double reference_distance_m = 100.0;
    double exponent = 3.0;

    bool operator==(const DistanceParams&) const = default;
};

/// One fully resolved grid point of the experiment.
struct SystemConfig {
    int m = 128;
    int k = 4;
    int ne = 1;
    BandProfile band = band_sub6();
    double snr_db = 20.0;
    double rho = 0.8;
    double csi_error_var = 0.01;
    CsiModel csi_model = CsiModel::ErrorInjection;
    double pilot_power = 1.0;
    double target_secrecy_rate = 0.5;
    double circuit_power_per_antenna = 0.1;
    double robust_alpha_scale = 1.0;
    std::uint64_t master_seed = 42;
    int num_trials = 1000;
    PathlossMode pathloss_mode = PathlossMode::FixedCoefficient;
    DistanceParams distance;
    bool record_timing = false;

    bool operator==(const SystemConfig&) const = default;
};

/// Throws ConfigError naming the offending field and its accepted range.
void validate(const SystemConfig& cfg);

/// Per-user large-scale gains for cfg (length K).
std::vector<double> user_betas(const SystemConfig& cfg);
double eve_beta(const SystemConfig& cfg);

/// Channels of one coherence block. G never reaches the precoder.
struct ChannelSet {
    ComplexMatrix h;      // M x K, true user channels
    ComplexMatrix g;      // M x Ne, true eavesdropper channels
    ComplexMatrix h_hat;  // M x K, base-station estimate of h
};

double pathloss_beta(double distance, double reference_distance, double exponent);

ComplexMatrix draw_user_channels(const SystemConfig& cfg, RngStream& rng);
ComplexMatrix draw_eve_channels(const SystemConfig& cfg, RngStream& rng);

/// Linear MMSE estimate from one unit-norm pilot observation:
///   H_hat = a H + b N,  a = p/(p+s2),  b = sqrt(p) s2/(p+s2),  N ~ CN(0,1).
ComplexMatrix estimate_via_pilots(const ComplexMatrix& h, double pilot_power, double noise_var,
                                  RngStream& rng);

/// H + E with E ~ CN(0, error_var) entrywise.
ComplexMatrix inject_csi_error(const ComplexMatrix& h, double error_var, RngStream& rng);

/// Linear receiver noise power relative to a 0 dB noise-figure reference.
double noise_power(const BandProfile& band);

/// Estimation error variance the base station sees for cfg's CSI model.
double effective_csi_error_var(const SystemConfig& cfg);

/// Draws H, G and H_hat for one trial. Each matrix comes from its own child stream.
ChannelSet draw_channel_set(const SystemConfig& cfg, const RngStream& trial_rng);

}  // namespace pls
