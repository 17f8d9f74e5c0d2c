#include "pls/numerics.hpp"

#include "pls/error.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace pls {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) noexcept {
    std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t mix(std::uint64_t a, std::uint64_t b) noexcept {
    std::uint64_t s = a;
    std::uint64_t h = splitmix64(s);
    s = h ^ b;
    return splitmix64(s);
}

constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
}

void check_rank(const Eigen::VectorXd& singular, const char* what) {
    const double largest = singular.size() > 0 ? singular.maxCoeff() : 0.0;
    const double smallest = singular.size() > 0 ? singular.minCoeff() : 0.0;
    if (!(largest > 0.0) || smallest < kRankTolerance * largest) {
        throw Error(ErrorKind::RankDeficient,
                    std::string(what) + ": smallest singular value " + std::to_string(smallest) +
                        " below tolerance relative to " + std::to_string(largest));
    }
}

}  // namespace

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_index)
    : RngStream(master_seed, stream_index, mix(master_seed, stream_index)) {}

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_index, std::uint64_t key)
    : master_seed_(master_seed), stream_index_(stream_index), key_(key) {
    seed_state(key);
}

void RngStream::seed_state(std::uint64_t key) noexcept {
    std::uint64_t x = key;
    for (auto& word : s_) {
        word = splitmix64(x);
    }
}

RngStream RngStream::child(std::uint64_t tag) const {
    return RngStream(master_seed_, stream_index_, mix(key_, tag + 0x632be59bd9b4e019ULL));
}

std::uint64_t RngStream::next_u64() noexcept {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double RngStream::uniform() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::pair<double, double> RngStream::normal_pair() noexcept {
    // 1 - u lies in (0, 1], so the log is finite.
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(theta), r * std::sin(theta)};
}

ComplexMatrix sample_complex_gaussian(RngStream& rng, Eigen::Index rows, Eigen::Index cols,
                                      double variance) {
    ComplexMatrix out = ComplexMatrix::Zero(rows, cols);
    if (variance <= 0.0) {
        return out;
    }
    const double scale = std::sqrt(variance / 2.0);
    for (Eigen::Index r = 0; r < rows; ++r) {
        for (Eigen::Index c = 0; c < cols; ++c) {
            const auto [x, y] = rng.normal_pair();
            out(r, c) = cdouble(scale * x, scale * y);
        }
    }
    return out;
}

ComplexMatrix nullspace_basis(const ComplexMatrix& a) {
    const Eigen::Index m = a.rows();
    const Eigen::Index k = a.cols();
    if (m <= k) {
        throw Error(ErrorKind::NoNullspace, "need more rows than columns, got " +
                                                std::to_string(m) + "x" + std::to_string(k));
    }
    Eigen::JacobiSVD<ComplexMatrix> svd(a, Eigen::ComputeFullU);
    check_rank(svd.singularValues(), "nullspace_basis");
    return svd.matrixU().rightCols(m - k);
}

ComplexMatrix zf_directions(const ComplexMatrix& h) {
    const Eigen::Index m = h.rows();
    const Eigen::Index k = h.cols();
    if (m < k || k == 0) {
        throw Error(ErrorKind::RankDeficient,
                    "zf_directions needs M >= K >= 1, got " + std::to_string(m) + "x" +
                        std::to_string(k));
    }
    Eigen::JacobiSVD<ComplexMatrix> svd(h);
    check_rank(svd.singularValues(), "zf_directions");

    const ComplexMatrix gram = h.adjoint() * h;
    Eigen::LLT<ComplexMatrix> llt(gram);
    if (llt.info() != Eigen::Success) {
        throw Error(ErrorKind::SingularGram, "Cholesky factorization of H^H H failed");
    }
    ComplexMatrix w = h * llt.solve(ComplexMatrix::Identity(k, k));

    const ComplexMatrix residual = h.adjoint() * w - ComplexMatrix::Identity(k, k);
    if (!(max_abs(residual) < 1e-9)) {
        throw Error(ErrorKind::SingularGram,
                    "H^H W deviates from identity by " + std::to_string(max_abs(residual)));
    }
    return w;
}

double herm_quadratic(const ComplexMatrix& v, const ComplexMatrix& q) {
    if (v.cols() != 1 || q.rows() != q.cols() || q.rows() != v.rows()) {
        throw Error(ErrorKind::DimensionMismatch,
                    "herm_quadratic: v is " + std::to_string(v.rows()) + "x" +
                        std::to_string(v.cols()) + ", Q is " + std::to_string(q.rows()) + "x" +
                        std::to_string(q.cols()));
    }
    return (v.adjoint() * q * v)(0, 0).real();
}

double max_abs(const ComplexMatrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace pls
