#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>

namespace pls {

using cdouble = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Relative singular-value threshold below which a matrix is treated as rank deficient.
inline constexpr double kRankTolerance = 1e-10;

/// Deterministic random stream identified by (master_seed, stream_index).
///
/// Streams are derived by hashing the pair into a xoshiro256** state, so trial i
/// can be generated on any thread in any order and still reproduce the same
/// numbers. child() derives a further independent stream from this one's key,
/// which is how a trial splits into separate sources for users, eavesdroppers
/// and CSI errors.
class RngStream {
public:
    RngStream(std::uint64_t master_seed, std::uint64_t stream_index);

    std::uint64_t master_seed() const noexcept { return master_seed_; }
    std::uint64_t stream_index() const noexcept { return stream_index_; }

    RngStream child(std::uint64_t tag) const;

    std::uint64_t next_u64() noexcept;
    /// Uniform on [0, 1).
    double uniform() noexcept;
    /// Standard normal via Box-Muller; one call consumes two uniforms and
    /// returns both variates.
    std::pair<double, double> normal_pair() noexcept;

private:
    RngStream(std::uint64_t master_seed, std::uint64_t stream_index, std::uint64_t key);
    void seed_state(std::uint64_t key) noexcept;

    std::uint64_t master_seed_;
    std::uint64_t stream_index_;
    std::uint64_t key_;
    std::uint64_t s_[4];
};

/// Fills a rows x cols matrix with i.i.d. CN(0, variance) entries, in row-major
/// draw order so that the leading rows of a taller draw coincide with a shorter one.
ComplexMatrix sample_complex_gaussian(RngStream& rng, Eigen::Index rows, Eigen::Index cols,
                                      double variance);

/// Orthonormal basis of the orthogonal complement of span(A), taken from the
/// trailing left singular vectors of a full SVD. A is M x K with M > K.
ComplexMatrix nullspace_basis(const ComplexMatrix& a);

/// H (H^H H)^{-1}; columns are the unnormalized zero-forcing directions.
ComplexMatrix zf_directions(const ComplexMatrix& h);

/// Re(v^H Q v) for a Hermitian positive semidefinite Q.
double herm_quadratic(const ComplexMatrix& v, const ComplexMatrix& q);

/// Largest entry magnitude.
double max_abs(const ComplexMatrix& m);

}  // namespace pls
