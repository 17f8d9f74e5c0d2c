#include "pls/precoding.hpp"

#include "pls/error.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

namespace pls {

std::string_view to_string(SchemeId scheme) {
    switch (scheme) {
        case SchemeId::MRT: return "MRT";
        case SchemeId::ZF: return "ZF";
        case SchemeId::MRT_AN: return "MRT_AN";
        case SchemeId::ROBUST: return "ROBUST";
    }
    return "?";
}

SchemeId scheme_from_string(std::string_view name) {
    std::string upper(name);
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    for (SchemeId s : kAllSchemes) {
        if (upper == to_string(s)) return s;
    }
    throw Error(ErrorKind::ConfigError,
                "scheme must be one of {MRT, ZF, MRT_AN, ROBUST}, got '" + std::string(name) + "'");
}

PrecoderOutput mrt(const ComplexMatrix& h_hat) {
    PrecoderOutput out{h_hat, std::nullopt, SchemeId::MRT};
    for (Eigen::Index k = 0; k < h_hat.cols(); ++k) {
        const double norm = h_hat.col(k).norm();
        if (norm < kZeroChannelTolerance) {
            throw Error(ErrorKind::ZeroChannel, "user " + std::to_string(k) + " has a zero channel");
        }
        out.w.col(k) /= norm;
    }
    return out;
}

PrecoderOutput zf(const ComplexMatrix& h_hat) {
    PrecoderOutput out{zf_directions(h_hat), std::nullopt, SchemeId::ZF};
    for (Eigen::Index k = 0; k < out.w.cols(); ++k) {
        out.w.col(k).normalize();
    }
    return out;
}

PrecoderOutput robust(const ComplexMatrix& h_hat, std::span<const double> alpha) {
    if (alpha.size() != static_cast<std::size_t>(h_hat.cols())) {
        throw Error(ErrorKind::DimensionMismatch, "robust: need one alpha per user");
    }
    PrecoderOutput out{h_hat, std::nullopt, SchemeId::ROBUST};
    for (Eigen::Index k = 0; k < h_hat.cols(); ++k) {
        const double a = alpha[static_cast<std::size_t>(k)];
        if (!(a >= 0.0)) {
            throw Error(ErrorKind::ConfigError, "robust: alpha must be nonnegative");
        }
        const double denom_sq = h_hat.col(k).squaredNorm() + a;
        if (denom_sq < kZeroChannelTolerance) {
            throw Error(ErrorKind::ZeroChannel, "user " + std::to_string(k) + " has a zero channel");
        }
        out.w.col(k) /= std::sqrt(denom_sq);
    }
    return out;
}

ComplexMatrix an_basis(const ComplexMatrix& h_hat) {
    if (h_hat.rows() <= h_hat.cols()) {
        throw Error(ErrorKind::NoNullspace, "artificial noise needs M > K");
    }
    return nullspace_basis(h_hat);
}

ComplexMatrix an_sample(const ComplexMatrix& u0, double an_power, RngStream& rng) {
    const Eigen::Index dims = u0.cols();
    if (an_power <= 0.0 || dims == 0) {
        return ComplexMatrix::Zero(u0.rows(), 1);
    }
    const ComplexMatrix v = sample_complex_gaussian(rng, dims, 1, an_power / static_cast<double>(dims));
    return u0 * v;
}

PrecoderOutput mrt_an(const ComplexMatrix& h_hat) {
    PrecoderOutput out = mrt(h_hat);
    out.scheme = SchemeId::MRT_AN;
    out.u0 = an_basis(h_hat);
    return out;
}

std::vector<double> robust_alpha(int m, int k, double csi_error_var, double scale) {
    return std::vector<double>(static_cast<std::size_t>(k),
                               scale * static_cast<double>(m) * csi_error_var);
}

PrecoderOutput build_precoder(SchemeId scheme, const ComplexMatrix& h_hat,
                              std::span<const double> alpha) {
    switch (scheme) {
        case SchemeId::MRT: return mrt(h_hat);
        case SchemeId::ZF: return zf(h_hat);
        case SchemeId::MRT_AN: return mrt_an(h_hat);
        case SchemeId::ROBUST: return robust(h_hat, alpha);
    }
    throw Error(ErrorKind::ConfigError, "unknown scheme");
}

}  // namespace pls
