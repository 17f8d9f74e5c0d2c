#include "pls/channel.hpp"

#include "pls/error.hpp"

#include <cmath>
#include <string>

namespace pls {

namespace {

enum StreamTag : std::uint64_t { kUserStream = 1, kEveStream = 2, kCsiStream = 3 };

[[noreturn]] void config_error(const std::string& field, const std::string& range) {
    throw Error(ErrorKind::ConfigError, field + " must be " + range);
}

}  // namespace

BandProfile band_sub6() { return {"sub6", 3.5e9, 1.0, 0.5, 7.0}; }

BandProfile band_mmwave() { return {"mmwave", 28e9, 0.3, 0.8, 9.0}; }

BandProfile band_by_name(const std::string& name) {
    if (name == "sub6") return band_sub6();
    if (name == "mmwave") return band_mmwave();
    throw Error(ErrorKind::ConfigError, "band must be one of {sub6, mmwave}, got '" + name + "'");
}

void validate(const SystemConfig& cfg) {
    if (cfg.k < 1) config_error("k", ">= 1");
    if (cfg.m < cfg.k) config_error("m", ">= k (" + std::to_string(cfg.k) + ")");
    if (cfg.ne < 1) config_error("ne", ">= 1");
    if (cfg.num_trials < 1) config_error("num_trials", ">= 1");
    if (!(cfg.rho >= 0.0 && cfg.rho <= 1.0)) config_error("rho", "in [0,1]");
    if (!(cfg.csi_error_var >= 0.0) || !std::isfinite(cfg.csi_error_var))
        config_error("csi_error_var", ">= 0");
    if (!std::isfinite(cfg.snr_db)) config_error("snr_db", "finite");
    if (!(cfg.pilot_power > 0.0) && cfg.csi_model == CsiModel::Pilot)
        config_error("pilot_power", "> 0");
    if (!(cfg.target_secrecy_rate >= 0.0)) config_error("target_secrecy_rate", ">= 0");
    if (!(cfg.circuit_power_per_antenna >= 0.0))
        config_error("circuit_power_per_antenna", ">= 0");
    if (!(cfg.robust_alpha_scale >= 0.0)) config_error("robust_alpha_scale", ">= 0");
    const auto& b = cfg.band;
    if (!(b.user_pathloss_coeff > 0.0 && b.user_pathloss_coeff <= 1.0))
        config_error("band.user_pathloss_coeff", "in (0,1]");
    if (!(b.eve_pathloss_coeff > 0.0 && b.eve_pathloss_coeff <= 1.0))
        config_error("band.eve_pathloss_coeff", "in (0,1]");
    if (!(b.noise_figure_db >= 0.0)) config_error("band.noise_figure_db", ">= 0");
    if (cfg.pathloss_mode == PathlossMode::DistanceBased) {
        const auto& d = cfg.distance;
        if (d.user_distances_m.size() != 1 &&
            d.user_distances_m.size() != static_cast<std::size_t>(cfg.k))
            config_error("user_distances", "a single value or one value per user");
        for (double x : d.user_distances_m)
            if (!(x > 0.0)) config_error("user_distances", "> 0");
        if (!(d.eve_distance_m > 0.0)) config_error("eve_distance", "> 0");
        if (!(d.reference_distance_m > 0.0)) config_error("reference_distance", "> 0");
        if (!(d.exponent >= 2.0 && d.exponent <= 4.0)) config_error("pathloss_exponent", "in [2,4]");
    }
}

std::vector<double> user_betas(const SystemConfig& cfg) {
    std::vector<double> betas(static_cast<std::size_t>(cfg.k), cfg.band.user_pathloss_coeff);
    if (cfg.pathloss_mode == PathlossMode::DistanceBased) {
        const auto& d = cfg.distance;
        for (std::size_t i = 0; i < betas.size(); ++i) {
            const double dist =
                d.user_distances_m.size() == 1 ? d.user_distances_m.front() : d.user_distances_m[i];
            betas[i] = pathloss_beta(dist, d.reference_distance_m, d.exponent);
        }
    }
    return betas;
}

double eve_beta(const SystemConfig& cfg) {
    if (cfg.pathloss_mode == PathlossMode::DistanceBased) {
        const auto& d = cfg.distance;
        return pathloss_beta(d.eve_distance_m, d.reference_distance_m, d.exponent);
    }
    return cfg.band.eve_pathloss_coeff;
}

double pathloss_beta(double distance, double reference_distance, double exponent) {
    if (!(distance > 0.0) || !(reference_distance > 0.0)) {
        throw Error(ErrorKind::InvalidGeometry, "distances must be positive, got d=" +
                                                    std::to_string(distance) +
                                                    " d0=" + std::to_string(reference_distance));
    }
    return std::pow(distance / reference_distance, -exponent);
}

ComplexMatrix draw_user_channels(const SystemConfig& cfg, RngStream& rng) {
    ComplexMatrix h = sample_complex_gaussian(rng, cfg.m, cfg.k, 1.0);
    const auto betas = user_betas(cfg);
    for (int k = 0; k < cfg.k; ++k) {
        h.col(k) *= std::sqrt(betas[static_cast<std::size_t>(k)]);
    }
    return h;
}

ComplexMatrix draw_eve_channels(const SystemConfig& cfg, RngStream& rng) {
    return sample_complex_gaussian(rng, cfg.m, cfg.ne, eve_beta(cfg));
}

ComplexMatrix estimate_via_pilots(const ComplexMatrix& h, double pilot_power, double noise_var,
                                  RngStream& rng) {
    if (!(pilot_power > 0.0)) {
        throw Error(ErrorKind::InvalidPower,
                    "pilot_power must be positive, got " + std::to_string(pilot_power));
    }
    if (noise_var <= 0.0) {
        return h;
    }
    const double denom = pilot_power + noise_var;
    const double signal_gain = pilot_power / denom;
    const double noise_gain = std::sqrt(pilot_power) * noise_var / denom;
    const ComplexMatrix n = sample_complex_gaussian(rng, h.rows(), h.cols(), 1.0);
    return signal_gain * h + noise_gain * n;
}

ComplexMatrix inject_csi_error(const ComplexMatrix& h, double error_var, RngStream& rng) {
    if (error_var <= 0.0) {
        return h;
    }
    return h + sample_complex_gaussian(rng, h.rows(), h.cols(), error_var);
}

double noise_power(const BandProfile& band) {
    return std::pow(10.0, band.noise_figure_db / 10.0);
}

double effective_csi_error_var(const SystemConfig& cfg) {
    if (cfg.csi_model == CsiModel::Pilot) {
        const double s2 = noise_power(cfg.band);
        return s2 / (cfg.pilot_power + s2);
    }
    return cfg.csi_error_var;
}

ChannelSet draw_channel_set(const SystemConfig& cfg, const RngStream& trial_rng) {
    RngStream user_rng = trial_rng.child(kUserStream);
    RngStream eve_rng = trial_rng.child(kEveStream);
    RngStream csi_rng = trial_rng.child(kCsiStream);

    ChannelSet set;
    set.h = draw_user_channels(cfg, user_rng);
    set.g = draw_eve_channels(cfg, eve_rng);
    if (cfg.csi_model == CsiModel::Pilot) {
        set.h_hat = estimate_via_pilots(set.h, cfg.pilot_power, noise_power(cfg.band), csi_rng);
    } else {
        set.h_hat = inject_csi_error(set.h, cfg.csi_error_var, csi_rng);
    }
    return set;
}

}  // namespace pls
