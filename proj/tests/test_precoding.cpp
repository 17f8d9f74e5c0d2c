#include "pls/error.hpp"
#include "pls/precoding.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace pls;
using pls::testing::random_matrix;

TEST_SUITE("precoding") {

TEST_CASE("scheme names round-trip") {
    for (SchemeId s : kAllSchemes) CHECK(scheme_from_string(to_string(s)) == s);
    CHECK(scheme_from_string("mrt_an") == SchemeId::MRT_AN);
    CHECK_THROWS_AS(scheme_from_string("MMSE"), Error);
}

TEST_CASE("mrt normalization") {
    ComplexMatrix h(2, 1);
    h << 1.0, 0.0;
    CHECK(max_abs(mrt(h).w - h) == 0.0);

    h << cdouble(3, 4), 0.0;
    const ComplexMatrix w = mrt(h).w;
    CHECK(std::abs(w(0, 0) - cdouble(0.6, 0.8)) < 1e-15);
    CHECK(std::abs(w(1, 0)) == 0.0);

    try {
        mrt(ComplexMatrix::Zero(4, 2));
        FAIL("expected ZeroChannel");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ZeroChannel);
    }
}

TEST_CASE("mrt beats random unit probes") {
    RngStream probes(9, 9);
    for (int trial = 0; trial < 20; ++trial) {
        const ComplexMatrix h = random_matrix(200 + trial, 16, 1);
        const double best = std::abs((h.adjoint() * mrt(h).w)(0, 0));
        for (int i = 0; i < 1000; ++i) {
            ComplexMatrix u = sample_complex_gaussian(probes, 16, 1, 1.0);
            u /= u.norm();
            CHECK_LE(std::abs((h.adjoint() * u)(0, 0)), best + 1e-12);
        }
    }
}

TEST_CASE("zf special cases") {
    SUBCASE("orthonormal users reduce to mrt") {
        const ComplexMatrix q = random_matrix(3, 16, 4).householderQr().householderQ() *
                                ComplexMatrix::Identity(16, 4);
        CHECK(max_abs(zf(q).w - mrt(q).w) < 1e-12);
    }
    SUBCASE("single user reduces to mrt") {
        const ComplexMatrix h = random_matrix(4, 16, 1);
        CHECK(max_abs(zf(h).w - mrt(h).w) < 1e-14);
    }
    SUBCASE("rank deficiency propagates") {
        ComplexMatrix h = random_matrix(5, 16, 3);
        h.col(2) = h.col(0);
        try {
            zf(h);
            FAIL("expected RankDeficient");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::RankDeficient);
        }
    }
}

TEST_CASE("zf nulls inter-user interference under perfect CSI") {
    std::uint64_t seed = 300;
    for (int m : {8, 64, 256}) {
        for (int k : {2, 4, 8}) {
            const ComplexMatrix h = random_matrix(seed++, m, k);
            const ComplexMatrix w = zf(h).w;
            const ComplexMatrix gains = h.adjoint() * w;
            for (int c = 0; c < k; ++c) {
                CHECK(std::abs(w.col(c).norm() - 1.0) < 1e-12);
                double leak = 0.0;
                double leak_max = 0.0;
                for (int r = 0; r < k; ++r) {
                    if (r == c) continue;
                    leak += std::norm(gains(r, c));
                    leak_max = std::max(leak_max, std::abs(gains(r, c)));
                }
                CHECK(leak < 1e-18);
                CHECK(leak_max < 1e-9 * std::abs(gains(c, c)));
            }
        }
    }
}

TEST_CASE("unit-norm beams for MRT, ZF and MRT_AN") {
    const ComplexMatrix h = random_matrix(17, 32, 4, 0.5);
    for (const auto& w : {mrt(h).w, zf(h).w, mrt_an(h).w}) {
        for (Eigen::Index c = 0; c < w.cols(); ++c) CHECK(std::abs(w.col(c).norm() - 1.0) < 1e-12);
    }
}

TEST_CASE("robust regularization") {
    const ComplexMatrix h = random_matrix(21, 16, 3);
    const std::vector<double> zero(3, 0.0);
    CHECK(max_abs(robust(h, zero).w - mrt(h).w) < 1e-15);

    ComplexMatrix single(3, 1);
    single << 1.0, 1.0, 1.0;  // |h|^2 = 3
    const std::vector<double> one{1.0};
    CHECK(robust(single, one).w.norm() == doctest::Approx(0.8660254037844386).epsilon(1e-14).scale(0));

    const std::vector<double> huge{1e12};
    CHECK(robust(single, huge).w.norm() < 1e-5);

    const std::vector<double> mixed{0.0, 2.0, 50.0};
    const ComplexMatrix wr = robust(h, mixed).w;
    const ComplexMatrix wm = mrt(h).w;
    CHECK(std::abs(wr.col(0).norm() - wm.col(0).norm()) < 1e-15);
    CHECK(wr.col(1).norm() < wm.col(1).norm());
    CHECK(wr.col(2).norm() < wr.col(1).norm());

    CHECK_THROWS_AS(robust(h, one), Error);
    CHECK(robust_alpha(128, 4, 0.01, 1.0) == std::vector<double>(4, 1.28));
}

TEST_CASE("artificial-noise basis") {
    ComplexMatrix h(2, 1);
    h << 1.0, 0.0;
    const ComplexMatrix u0 = an_basis(h);
    const ComplexMatrix q = u0 * u0.adjoint();
    CHECK(std::abs(q(0, 0)) < 1e-15);
    CHECK(std::abs(q(1, 1) - 1.0) < 1e-15);
    CHECK(std::abs(q(0, 1)) < 1e-15);

    try {
        an_basis(random_matrix(1, 4, 4));
        FAIL("expected NoNullspace");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NoNullspace);
    }

    const ComplexMatrix hr = random_matrix(22, 32, 4);
    CHECK(max_abs(hr.adjoint() * an_basis(hr)) < 1e-10);

    const PrecoderOutput out = mrt_an(hr);
    REQUIRE(out.u0.has_value());
    CHECK(out.u0->cols() == 28);
    CHECK(max_abs(out.w - mrt(hr).w) == 0.0);
    CHECK_FALSE(mrt(hr).u0.has_value());
}

TEST_CASE("artificial-noise samples") {
    const ComplexMatrix h = random_matrix(23, 8, 2);
    const ComplexMatrix u0 = an_basis(h);
    RngStream rng(3, 3);
    CHECK(max_abs(an_sample(u0, 0.0, rng)) == 0.0);

    const double power = 2.5;
    double acc = 0.0;
    double leak = 0.0;
    const int draws = 100000;
    for (int i = 0; i < draws; ++i) {
        const ComplexMatrix n = an_sample(u0, power, rng);
        acc += n.squaredNorm();
        leak = std::max(leak, max_abs(h.adjoint() * n));
    }
    CHECK(acc / draws == doctest::Approx(power).epsilon(0.02).scale(0));
    CHECK(leak < 1e-10);
}

}
