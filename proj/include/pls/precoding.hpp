#pragma once

#include "pls/numerics.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pls {

enum class SchemeId { MRT, ZF, MRT_AN, ROBUST };

inline constexpr SchemeId kAllSchemes[] = {SchemeId::MRT, SchemeId::ZF, SchemeId::MRT_AN,
                                           SchemeId::ROBUST};

std::string_view to_string(SchemeId scheme);
/// Accepts the canonical names case-insensitively; throws ConfigError otherwise.
SchemeId scheme_from_string(std::string_view name);

struct PrecoderOutput {
    ComplexMatrix w;                  // M x K, one beam per user
    std::optional<ComplexMatrix> u0;  // M x (M-K), only for MRT_AN
    SchemeId scheme = SchemeId::MRT;
};

inline constexpr double kZeroChannelTolerance = 1e-14;

PrecoderOutput mrt(const ComplexMatrix& h_hat);

/// Zero-forcing with each column of H_hat (H_hat^H H_hat)^{-1} scaled to unit norm.
PrecoderOutput zf(const ComplexMatrix& h_hat);

/// w_k = h_k / sqrt(|h_k|^2 + alpha_k). Not renormalized, so beams shrink as alpha grows.
PrecoderOutput robust(const ComplexMatrix& h_hat, std::span<const double> alpha);

/// Orthonormal basis of the null space of H_hat^H (M > K required).
ComplexMatrix an_basis(const ComplexMatrix& h_hat);

/// One artificial-noise realization U0 v with v ~ CN(0, an_power/(M-K)).
ComplexMatrix an_sample(const ComplexMatrix& u0, double an_power, RngStream& rng);

/// MRT beams plus the null-space AN basis.
PrecoderOutput mrt_an(const ComplexMatrix& h_hat);

/// Per-user regularizer used by ROBUST: scale * M * csi_error_var.
std::vector<double> robust_alpha(int m, int k, double csi_error_var, double scale);

PrecoderOutput build_precoder(SchemeId scheme, const ComplexMatrix& h_hat,
                              std::span<const double> robust_alpha);

}  // namespace pls
