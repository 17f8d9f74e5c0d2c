#include "pls/link.hpp"

#include "pls/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace pls {

namespace {

void check_dims(const ComplexMatrix& ch, const ComplexMatrix& w, int k,
                const ComplexMatrix* an_cov, const char* what) {
    const bool bad = ch.rows() != w.rows() || k < 0 || k >= w.cols() ||
                     (an_cov != nullptr &&
                      (an_cov->rows() != ch.rows() || an_cov->cols() != ch.rows()));
    if (bad) {
        throw Error(ErrorKind::DimensionMismatch, std::string(what) + ": inconsistent dimensions");
    }
}

// p_s |c^H w_k|^2 / (sum_{j!=k} p_s |c^H w_j|^2 + c^H Q c + s2) for one receive channel c.
double sinr_for_channel(const ComplexMatrix& w, Eigen::Index k, const auto& c,
                        const PowerAllocation& alloc, const ComplexMatrix* an_cov) {
    const Eigen::RowVectorXcd gains = c.adjoint() * w;
    const double signal = alloc.p_s * std::norm(gains(k));
    double interference = 0.0;
    for (Eigen::Index j = 0; j < gains.size(); ++j) {
        if (j != k) interference += alloc.p_s * std::norm(gains(j));
    }
    double an_leak = 0.0;
    if (an_cov != nullptr) {
        an_leak = std::max(0.0, (c.adjoint() * (*an_cov) * c)(0, 0).real());
    }
    if (signal == 0.0) return 0.0;
    return signal / (interference + an_leak + alloc.noise_var);
}

}  // namespace

PowerAllocation PowerAllocation::from_snr(double snr_db, double rho, int k, double noise_var) {
    PowerAllocation a;
    a.p_total = std::pow(10.0, snr_db / 10.0);
    a.rho = rho;
    a.p_s = rho * a.p_total / static_cast<double>(k);
    a.p_an = (1.0 - rho) * a.p_total;
    a.noise_var = noise_var;
    return a;
}

PowerAllocation allocation_for(const SystemConfig& cfg, SchemeId scheme) {
    const double rho = scheme == SchemeId::MRT_AN ? cfg.rho : 1.0;
    return PowerAllocation::from_snr(cfg.snr_db, rho, cfg.k, noise_power(cfg.band));
}

ComplexMatrix scaled_an_covariance(const ComplexMatrix& u0, double p_an) {
    if (u0.cols() == 0) {
        return ComplexMatrix::Zero(u0.rows(), u0.rows());
    }
    return (p_an / static_cast<double>(u0.cols())) * (u0 * u0.adjoint());
}

double user_sinr(const ComplexMatrix& h, const ComplexMatrix& w, int k,
                 const PowerAllocation& alloc, const ComplexMatrix* an_cov_scaled) {
    check_dims(h, w, k, an_cov_scaled, "user_sinr");
    if (k >= h.cols()) {
        throw Error(ErrorKind::DimensionMismatch, "user_sinr: user index out of range");
    }
    return sinr_for_channel(w, k, h.col(k), alloc, an_cov_scaled);
}

double eve_sinr_at(const ComplexMatrix& g, const ComplexMatrix& w, int k, int e,
                   const PowerAllocation& alloc, const ComplexMatrix* an_cov_scaled) {
    check_dims(g, w, k, an_cov_scaled, "eve_sinr_at");
    if (e < 0 || e >= g.cols()) {
        throw Error(ErrorKind::DimensionMismatch, "eve_sinr_at: antenna index out of range");
    }
    return sinr_for_channel(w, k, g.col(e), alloc, an_cov_scaled);
}

double eve_sinr_worst(const ComplexMatrix& g, const ComplexMatrix& w, int k,
                      const PowerAllocation& alloc, const ComplexMatrix* an_cov_scaled) {
    check_dims(g, w, k, an_cov_scaled, "eve_sinr_worst");
    if (g.cols() == 0) {
        throw Error(ErrorKind::DimensionMismatch, "eve_sinr_worst: no eavesdropper antennas");
    }
    double worst = 0.0;
    for (Eigen::Index e = 0; e < g.cols(); ++e) {
        worst = std::max(worst, sinr_for_channel(w, k, g.col(e), alloc, an_cov_scaled));
    }
    return worst;
}

double secrecy_rate(double gamma_user, double gamma_eve_worst) {
    return std::max(0.0, std::log2(1.0 + gamma_user) - std::log2(1.0 + gamma_eve_worst));
}

double energy_efficiency(double sum_secrecy, const PowerAllocation& alloc, int m,
                         double circuit_power_per_antenna) {
    const double consumed = alloc.p_total + static_cast<double>(m) * circuit_power_per_antenna;
    if (sum_secrecy <= 0.0 || consumed <= 0.0) return 0.0;
    return sum_secrecy / consumed;
}

double asymptotic_user_sinr(std::span<const double> beta, int k, const PowerAllocation& alloc) {
    if (k < 0 || static_cast<std::size_t>(k) >= beta.size()) {
        throw Error(ErrorKind::DimensionMismatch, "asymptotic_user_sinr: user index out of range");
    }
    if (alloc.p_s <= 0.0) return 0.0;
    const double bk = beta[static_cast<std::size_t>(k)];
    double interference = 0.0;
    for (std::size_t j = 0; j < beta.size(); ++j) {
        if (j != static_cast<std::size_t>(k)) interference += beta[j];
    }
    return bk * bk / (interference + (alloc.p_an / alloc.p_s) * bk + alloc.noise_var / alloc.p_s);
}

LinkSample evaluate_link(const ChannelSet& channels, const PrecoderOutput& precoder,
                         const PowerAllocation& alloc, double target_secrecy_rate,
                         double circuit_power_per_antenna) {
    const int k_users = static_cast<int>(channels.h.cols());
    std::optional<ComplexMatrix> an_cov;
    if (precoder.u0 && alloc.p_an > 0.0) {
        an_cov = scaled_an_covariance(*precoder.u0, alloc.p_an);
    }
    const ComplexMatrix* an_ptr = an_cov ? &*an_cov : nullptr;

    LinkSample s;
    s.scheme = precoder.scheme;
    s.user_sinr.resize(static_cast<std::size_t>(k_users));
    s.eve_sinr_worst.resize(static_cast<std::size_t>(k_users));
    s.secrecy_rate.resize(static_cast<std::size_t>(k_users));
    s.outage_flags.resize(static_cast<std::size_t>(k_users));
    for (int k = 0; k < k_users; ++k) {
        const auto i = static_cast<std::size_t>(k);
        s.user_sinr[i] = user_sinr(channels.h, precoder.w, k, alloc, an_ptr);
        s.eve_sinr_worst[i] = eve_sinr_worst(channels.g, precoder.w, k, alloc, an_ptr);
        s.secrecy_rate[i] = secrecy_rate(s.user_sinr[i], s.eve_sinr_worst[i]);
        s.outage_flags[i] = s.secrecy_rate[i] < target_secrecy_rate;
        s.sum_secrecy += s.secrecy_rate[i];
    }
    s.energy_efficiency = energy_efficiency(s.sum_secrecy, alloc,
                                            static_cast<int>(channels.h.rows()),
                                            circuit_power_per_antenna);
    return s;
}

HardeningEstimate hardened_mrt_sinr(int m, std::span<const double> beta, int k,
                                    const PowerAllocation& alloc, int trials,
                                    const RngStream& rng) {
    if (k < 0 || static_cast<std::size_t>(k) >= beta.size() || m < 1 || trials < 1) {
        throw Error(ErrorKind::DimensionMismatch, "hardened_mrt_sinr: bad arguments");
    }
    const double md = static_cast<double>(m);
    const double bk = beta[static_cast<std::size_t>(k)];
    double others = 0.0;
    for (std::size_t j = 0; j < beta.size(); ++j) {
        if (j != static_cast<std::size_t>(k)) others += beta[j];
    }
    double signal_sum = 0.0;
    double interference_sum = 0.0;
    for (int t = 0; t < trials; ++t) {
        RngStream trial_rng = rng.child(static_cast<std::uint64_t>(t));
        const double gain = sample_complex_gaussian(trial_rng, m, 1, bk).squaredNorm() / md;
        signal_sum += gain * gain;
        interference_sum += others * gain;
    }
    HardeningEstimate est;
    est.asymptotic = asymptotic_user_sinr(beta, k, alloc);
    if (alloc.p_s > 0.0) {
        const double n = static_cast<double>(trials);
        est.simulated = (signal_sum / n) / (interference_sum / n + (alloc.p_an / alloc.p_s) * bk +
                                            alloc.noise_var / alloc.p_s);
    }
    est.relative_gap =
        est.asymptotic > 0.0 ? std::abs(est.simulated - est.asymptotic) / est.asymptotic : 0.0;
    return est;
}

}  // namespace pls
