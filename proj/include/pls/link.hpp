#pragma once

#include "pls/channel.hpp"
#include "pls/numerics.hpp"
#include "pls/precoding.hpp"

#include <span>
#include <vector>

namespace pls {

/// Transmit power budget of one trial, in units of the 0 dB noise-figure
/// reference noise power.
struct PowerAllocation {
    double p_total = 1.0;
    double rho = 1.0;
    double p_s = 0.25;  // per-user signal power
    double p_an = 0.0;
    double noise_var = 1.0;

    /// p_total = 10^(snr_db/10); p_s = rho p_total / K; p_an = (1-rho) p_total.
    static PowerAllocation from_snr(double snr_db, double rho, int k, double noise_var);
};

/// Schemes other than MRT_AN spend the whole budget on data.
PowerAllocation allocation_for(const SystemConfig& cfg, SchemeId scheme);

struct LinkSample {
    std::vector<double> user_sinr;
    std::vector<double> eve_sinr_worst;
    std::vector<double> secrecy_rate;
    std::vector<bool> outage_flags;
    double sum_secrecy = 0.0;
    double energy_efficiency = 0.0;
    SchemeId scheme = SchemeId::MRT;
    double precoder_time = 0.0;

    bool operator==(const LinkSample&) const = default;
};

/// (p_an/(M-K)) U0 U0^H, the covariance of the sampled artificial noise.
ComplexMatrix scaled_an_covariance(const ComplexMatrix& u0, double p_an);

/// SINR of user k. an_cov_scaled may be null when no artificial noise is sent.
double user_sinr(const ComplexMatrix& h, const ComplexMatrix& w, int k,
                 const PowerAllocation& alloc, const ComplexMatrix* an_cov_scaled = nullptr);

/// SINR of user k's stream at eavesdropper antenna e.
double eve_sinr_at(const ComplexMatrix& g, const ComplexMatrix& w, int k, int e,
                   const PowerAllocation& alloc, const ComplexMatrix* an_cov_scaled = nullptr);

/// Best single-antenna eavesdropper SINR for user k's stream.
double eve_sinr_worst(const ComplexMatrix& g, const ComplexMatrix& w, int k,
                      const PowerAllocation& alloc, const ComplexMatrix* an_cov_scaled = nullptr);

/// max{0, log2(1+gamma_user) - log2(1+gamma_eve)} in bits/s/Hz.
double secrecy_rate(double gamma_user, double gamma_eve_worst);

/// Sum secrecy rate per watt of transmit plus circuit power.
double energy_efficiency(double sum_secrecy, const PowerAllocation& alloc, int m,
                         double circuit_power_per_antenna);

/// Large-antenna limit of the user SINR from large-scale gains only.
double asymptotic_user_sinr(std::span<const double> beta, int k, const PowerAllocation& alloc);

/// Evaluates every metric of one trial against the true channels.
LinkSample evaluate_link(const ChannelSet& channels, const PrecoderOutput& precoder,
                         const PowerAllocation& alloc, double target_secrecy_rate,
                         double circuit_power_per_antenna);

struct HardeningEstimate {
    double simulated = 0.0;
    double asymptotic = 0.0;
    double relative_gap = 0.0;
};

/// Monte Carlo MRT SINR under the channel-hardening normalization, compared
/// with asymptotic_user_sinr.
///
/// Beams are scaled by 1/sqrt(M) instead of by their instantaneous norm, the
/// signal gain is divided by M, and the SINR is formed from trial-averaged
/// terms. With g = |h_k|^2/M:
///
///   E[g^2] / (sum_{j!=k} beta_j E[g] + (p_an/p_s) beta_k + s2/p_s)
///
/// beta_j |h_k|^2/M is the mean of |h_k^H h_j|^2/M over h_j. That cross term
/// does not harden, so averaging it in closed form leaves only the hardening
/// quantity g to simulate. With equal gains beta, E[g^2] = beta^2 (1 + 1/M)
/// and the gap to the asymptotic formula closes like 1/M.
/// CSI is perfect, so no artificial noise reaches the user in simulation.
HardeningEstimate hardened_mrt_sinr(int m, std::span<const double> beta, int k,
                                    const PowerAllocation& alloc, int trials,
                                    const RngStream& rng);

}  // namespace pls
