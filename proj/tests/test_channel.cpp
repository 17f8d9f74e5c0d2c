#include "pls/channel.hpp"
#include "pls/error.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <cmath>

using namespace pls;
using pls::testing::mean_power;

namespace {

SystemConfig small_config(BandProfile band = band_sub6()) {
    SystemConfig cfg;
    cfg.m = 64;
    cfg.k = 4;
    cfg.ne = 2;
    cfg.band = band;
    return cfg;
}

// Pools many independent draws into one power estimate.
template <typename Draw>
double pooled_power(const SystemConfig& cfg, int draws, Draw&& draw) {
    double acc = 0.0;
    double count = 0.0;
    for (int t = 0; t < draws; ++t) {
        RngStream rng(cfg.master_seed, static_cast<std::uint64_t>(t));
        const ComplexMatrix x = draw(cfg, rng);
        acc += x.cwiseAbs2().sum();
        count += static_cast<double>(x.size());
    }
    return acc / count;
}

}  // namespace

TEST_SUITE("channel") {

TEST_CASE("band profiles") {
    const auto s = band_sub6();
    CHECK(s.carrier_frequency_hz == 3.5e9);
    CHECK(s.user_pathloss_coeff == 1.0);
    CHECK(s.eve_pathloss_coeff == 0.5);
    CHECK(s.noise_figure_db == 7.0);
    const auto w = band_mmwave();
    CHECK(w.carrier_frequency_hz == 28e9);
    CHECK(w.user_pathloss_coeff == 0.3);
    CHECK(w.eve_pathloss_coeff == 0.8);
    CHECK(w.noise_figure_db == 9.0);
    CHECK(band_by_name("mmwave") == w);
    CHECK_THROWS_AS(band_by_name("thz"), Error);
}

TEST_CASE("pathloss_beta") {
    CHECK(pathloss_beta(50.0, 50.0, 3.0) == 1.0);
    CHECK(pathloss_beta(20.0, 10.0, 2.0) == doctest::Approx(0.25).epsilon(1e-15).scale(0));
    CHECK(pathloss_beta(100.0, 10.0, 3.0) == doctest::Approx(1e-3).epsilon(1e-15).scale(0));
    try {
        pathloss_beta(0.0, 10.0, 2.0);
        FAIL("expected InvalidGeometry");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidGeometry);
    }
}

TEST_CASE("user channel column norms harden to beta * M") {
    const SystemConfig cfg = small_config();
    double acc = 0.0;
    const int trials = 10000;
    for (int t = 0; t < trials; ++t) {
        RngStream rng(42, static_cast<std::uint64_t>(t));
        const ComplexMatrix h = draw_user_channels(cfg, rng);
        acc += h.col(0).squaredNorm() / cfg.m;
    }
    CHECK(std::abs(acc / trials - 1.0) < 0.02);
}

TEST_CASE("per-entry power follows the band coefficients") {
    SystemConfig quarter = small_config();
    quarter.band.user_pathloss_coeff = 0.25;
    CHECK(pooled_power(quarter, 500, draw_user_channels) == doctest::Approx(0.25).epsilon(0.02).scale(0));
    CHECK(pooled_power(small_config(band_mmwave()), 500, draw_user_channels) ==
          doctest::Approx(0.3).epsilon(0.02).scale(0));
    CHECK(pooled_power(small_config(), 1000, draw_eve_channels) ==
          doctest::Approx(0.5).epsilon(0.02).scale(0));
    CHECK(pooled_power(small_config(band_mmwave()), 1000, draw_eve_channels) ==
          doctest::Approx(0.8).epsilon(0.02).scale(0));
}

TEST_CASE("single-antenna eavesdropper") {
    SystemConfig cfg = small_config();
    cfg.ne = 1;
    RngStream rng(42, 0);
    const ComplexMatrix g = draw_eve_channels(cfg, rng);
    CHECK(g.rows() == 64);
    CHECK(g.cols() == 1);
}

TEST_CASE("pilot estimate") {
    const ComplexMatrix h = pls::testing::random_matrix(11, 1000, 100);
    SUBCASE("noiseless pilots are exact") {
        RngStream rng(1, 1);
        CHECK((estimate_via_pilots(h, 1.0, 0.0, rng).array() == h.array()).all());
    }
    SUBCASE("unit pilot power and noise give error variance 0.5") {
        RngStream rng(1, 2);
        const ComplexMatrix h_hat = estimate_via_pilots(h, 1.0, 1.0, rng);
        CHECK(mean_power(h_hat - h) == doctest::Approx(0.5).epsilon(0.02).scale(0));

        // Residual after removing the scaled true channel: variance b^2 = 0.25,
        // uncorrelated with H.
        const ComplexMatrix residual = h_hat - 0.5 * h;
        CHECK(mean_power(residual) == doctest::Approx(0.25).epsilon(0.02).scale(0));
        const cdouble cross = (h.array().conjugate() * residual.array()).mean();
        CHECK(std::abs(cross) < 0.01);
    }
    SUBCASE("general error variance s2^2 (beta + p) / (p + s2)^2") {
        RngStream rng(1, 3);
        const double p = 2.0, s2 = 0.5;
        const ComplexMatrix h_hat = estimate_via_pilots(h, p, s2, rng);
        const double expected = s2 * s2 * (1.0 + p) / ((p + s2) * (p + s2));
        CHECK(mean_power(h_hat - h) == doctest::Approx(expected).epsilon(0.02).scale(0));
    }
    SUBCASE("nonpositive pilot power") {
        RngStream rng(1, 4);
        try {
            estimate_via_pilots(h, 0.0, 1.0, rng);
            FAIL("expected InvalidPower");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::InvalidPower);
        }
    }
}

TEST_CASE("direct CSI error injection") {
    const ComplexMatrix h = pls::testing::random_matrix(12, 1000, 100);
    RngStream rng(2, 0);
    CHECK((inject_csi_error(h, 0.0, rng).array() == h.array()).all());
    for (double var : {0.3, 0.1, 0.01}) {
        const ComplexMatrix h_hat = inject_csi_error(h, var, rng);
        CHECK(mean_power(h_hat - h) == doctest::Approx(var).epsilon(0.02).scale(0));
    }
}

TEST_CASE("noise power from noise figure") {
    CHECK(noise_power({"ref", 1e9, 1.0, 1.0, 0.0}) == 1.0);
    CHECK(noise_power(band_sub6()) == doctest::Approx(5.011872336272722).epsilon(1e-12).scale(0));
    CHECK(noise_power(band_mmwave()) == doctest::Approx(7.943282347242816).epsilon(1e-12).scale(0));
}

TEST_CASE("user and eavesdropper channels of a trial are uncorrelated") {
    SystemConfig cfg = small_config();
    cfg.ne = 1;
    cdouble cross = 0.0;
    double hp = 0.0, gp = 0.0;
    const int trials = 10000;
    for (int t = 0; t < trials; ++t) {
        const ChannelSet set = draw_channel_set(cfg, RngStream(42, static_cast<std::uint64_t>(t)));
        cross += std::conj(set.h(0, 0)) * set.g(0, 0);
        hp += std::norm(set.h(0, 0));
        gp += std::norm(set.g(0, 0));
    }
    CHECK(std::abs(cross) / std::sqrt(hp * gp) < 0.02);
}

TEST_CASE("perfect CSI leaves the estimate equal to the truth") {
    SystemConfig cfg = small_config();
    cfg.csi_error_var = 0.0;
    const ChannelSet set = draw_channel_set(cfg, RngStream(42, 0));
    CHECK((set.h_hat.array() == set.h.array()).all());
}

TEST_CASE("distance-based and fixed-coefficient modes agree") {
    SystemConfig fixed = small_config();
    fixed.band.user_pathloss_coeff = 0.125;
    fixed.band.eve_pathloss_coeff = 0.125;

    SystemConfig dist = small_config();
    dist.pathloss_mode = PathlossMode::DistanceBased;
    dist.distance.user_distances_m = {200.0};
    dist.distance.eve_distance_m = 200.0;
    dist.distance.reference_distance_m = 100.0;
    dist.distance.exponent = 3.0;

    const ChannelSet a = draw_channel_set(fixed, RngStream(5, 5));
    const ChannelSet b = draw_channel_set(dist, RngStream(5, 5));
    CHECK(max_abs(a.h - b.h) < 1e-15);
    CHECK(max_abs(a.g - b.g) < 1e-15);

    dist.distance.user_distances_m = {100.0, 200.0, 100.0, 200.0};
    const auto betas = user_betas(dist);
    CHECK(betas[0] == 1.0);
    CHECK(betas[1] == doctest::Approx(0.125));
}

TEST_CASE("config validation names the field") {
    SystemConfig cfg;
    cfg.rho = 1.3;
    try {
        validate(cfg);
        FAIL("expected ConfigError");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ConfigError);
        CHECK(std::string(e.what()).find("rho must be in [0,1]") != std::string::npos);
    }
    cfg = SystemConfig{};
    cfg.m = 2;
    CHECK_THROWS_AS(validate(cfg), Error);
    cfg = SystemConfig{};
    cfg.csi_error_var = -0.1;
    CHECK_THROWS_AS(validate(cfg), Error);
    CHECK_NOTHROW(validate(SystemConfig{}));
}

}
