#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hankel/schwarz.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace hankel;

TEST_CASE("blaschke coefficients of the identity rotation") {
    auto s = blaschke_coefficients({0.0, {}, 1.0});
    CHECK(s.c[0] == Complex(1.0, 0.0));
    CHECK(s.c[1] == Complex(0.0, 0.0));
    CHECK(s.c[2] == Complex(0.0, 0.0));
    CHECK(s.c[3] == Complex(0.0, 0.0));
}

TEST_CASE("blaschke coefficients with a zero at the origin") {
    // The factor (0 - z)/(1 - 0) contributes -z, so omega = -z^2.
    auto s = blaschke_coefficients({0.0, {Complex(0.0, 0.0)}, 1.0});
    CHECK(s.c[0] == Complex(0.0, 0.0));
    CHECK(s.c[1] == Complex(-1.0, 0.0));
    CHECK(s.c[2] == Complex(0.0, 0.0));
    CHECK(std::abs(s.c[1]) == 1.0);
}

TEST_CASE("blaschke coefficients with a zero at 1/2") {
    // Exact oracle: z (1/2 - z)/(1 - z/2) = z(1/2 - (3/4)(z + z^2/2 + z^3/4 + ...)).
    auto s = blaschke_coefficients({0.0, {Complex(0.5, 0.0)}, 1.0});
    CHECK(s.c[0].real() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(s.c[1].real() == doctest::Approx(-0.75).epsilon(1e-12));
    CHECK(s.c[2].real() == doctest::Approx(-0.375).epsilon(1e-12));
    CHECK(s.c[3].real() == doctest::Approx(-0.1875).epsilon(1e-12));
    for (auto v : s.c) CHECK(std::abs(v.imag()) < 1e-15);
}

TEST_CASE("blaschke rejects zeros on or outside the circle") {
    CHECK_THROWS_AS(blaschke_coefficients({0.0, {Complex(1.0, 0.0)}, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(blaschke_coefficients({0.0, {Complex(0.8, 0.7)}, 1.0}), std::invalid_argument);
}

TEST_CASE("blaschke coefficients agree with discrete Fourier extraction") {
    // Independent oracle: 256-point circle average at radius 0.5.
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 25; ++trial) {
        BlaschkeSpec spec;
        const int zeros = static_cast<int>(rng() % 4);
        for (int i = 0; i < zeros; ++i) {
            double r = 0.95 * std::sqrt(unit(rng));
            double t = 2.0 * std::numbers::pi * unit(rng);
            spec.zeros.push_back(std::polar(r, t));
        }
        spec.rotation = 2.0 * std::numbers::pi * unit(rng);
        spec.scale = 0.5 + 0.5 * unit(rng);
        auto s = blaschke_coefficients(spec);

        constexpr int n = 256;
        constexpr double radius = 0.5;
        for (int k = 1; k <= 4; ++k) {
            Complex acc(0.0, 0.0);
            for (int j = 0; j < n; ++j) {
                double angle = 2.0 * std::numbers::pi * j / n;
                Complex z = std::polar(radius, angle);
                acc += blaschke_eval(spec, z) * std::polar(1.0, -angle * k);
            }
            Complex ck = acc / (static_cast<double>(n) * std::pow(radius, k));
            CHECK(std::abs(ck - s.c[static_cast<std::size_t>(k - 1)]) < 1e-9);
        }
    }
}

TEST_CASE("sampler streams are deterministic per seed") {
    SamplerConfig config{200, 4, 0.3};
    auto a = sample_schwarz(42, config);
    auto b = sample_schwarz(42, config);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].c == b[i].c);
        CHECK(a[i].provenance == b[i].provenance);
    }
    auto c = sample_schwarz(43, config);
    bool any_differs = false;
    for (std::size_t i = 0; i < a.size(); ++i) any_differs |= (a[i].c != c[i].c);
    CHECK(any_differs);
}

TEST_CASE("sampled tuples satisfy the coefficient inequalities") {
    SamplerConfig config{20000, 4, 0.2};
    auto samples = sample_schwarz(42, config);
    auto grid = prokhorov_grid();
    double min_r2 = 1.0, min_r4 = 1.0, min_margin = 1.0, max_c1 = 0.0;
    for (const auto& s : samples) {
        auto [r2, r4] = carlson_residuals(s);
        min_r2 = std::min(min_r2, r2);
        min_r4 = std::min(min_r4, r4);
        max_c1 = std::max(max_c1, std::abs(s.c[0]));
        for (const auto& p : grid) min_margin = std::min(min_margin, prokhorov_margin(s, p));
    }
    CHECK(min_r2 >= -1e-9);
    CHECK(min_r4 >= -1e-9);
    CHECK(min_margin >= -1e-9);
    CHECK(max_c1 <= 1.0 + 1e-12);
}

TEST_CASE("carlson residuals at the equality witnesses") {
    auto witnesses = fixed_witnesses();
    for (const auto& w : witnesses) {
        auto [r2, r4] = carlson_residuals(w);
        if (w.provenance == "omega=z" || w.provenance == "omega=z^2" ||
            w.provenance == "omega=z(z-1/2)/(1-z/2)") {
            CHECK(r2 == 0.0);
            CHECK(r4 == 0.0);
        }
    }
}

TEST_CASE("prokhorov margin worked examples") {
    SchwarzSample z3;
    z3.c = {Complex(), Complex(), Complex(1.0, 0.0), Complex()};
    CHECK(prokhorov_margin(z3, {-2.0, 1.0}) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(prokhorov_margin(z3, {-2.0 / 19.0, 1.0}) == doctest::Approx(0.0).epsilon(1e-15));

    SchwarzSample half;
    half.c = {Complex(0.5, 0), Complex(-0.75, 0), Complex(-0.375, 0), Complex(-0.1875, 0)};
    // c3 + mu c1 c2 + nu c1^3 = -3/8 + 3/4 + 1/8 = 1/2 at (mu, nu) = (-2, 1)
    CHECK(prokhorov_margin(half, {-2.0, 1.0}) == doctest::Approx(0.5).epsilon(1e-14));

    SchwarzSample z1;
    z1.c = {Complex(1.0, 0.0), Complex(), Complex(), Complex()};
    CHECK(prokhorov_margin(z1, {-2.0 / 19.0, 1.0}) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("region membership decisions are exact") {
    CHECK(region_membership({-2.0, 1.0}) == ProkhorovRegion::D2);
    CHECK(region_membership({-2.0 / 19.0, 1.0}) == ProkhorovRegion::D1);
    CHECK(region_membership({3.0, 0.0}) == ProkhorovRegion::Outside);
    // D1 takes precedence on the shared boundary |mu| = 1/2.
    CHECK(region_membership({0.5, 1.0}) == ProkhorovRegion::D1);
    CHECK(region_membership({-0.5, -1.0}) == ProkhorovRegion::D1);
    // nu below the D2 floor.
    CHECK(region_membership({2.0, 0.999}) == ProkhorovRegion::Outside);
    CHECK(region_membership({1.0, -0.9}) == ProkhorovRegion::Outside);
    CHECK(region_membership_exact(BigRational(-2), BigRational(1)) == ProkhorovRegion::D2);
    CHECK(region_membership_exact(BigRational(1), BigRational(-22, 27)) == ProkhorovRegion::D2);
}

TEST_CASE("prokhorov margin rejects parameters outside the regions") {
    SchwarzSample s;
    CHECK_THROWS_AS(prokhorov_margin(s, {3.0, 0.0}), std::invalid_argument);
}

TEST_CASE("grid points are admissible and include the named pairs") {
    auto grid = prokhorov_grid();
    CHECK(grid.size() >= 22);
    bool has_m2 = false, has_m2_19 = false;
    for (const auto& p : grid) {
        CHECK(region_membership(p) != ProkhorovRegion::Outside);
        has_m2 |= (p.mu == -2.0 && p.nu == 1.0);
        has_m2_19 |= (p.mu == -2.0 / 19.0 && p.nu == 1.0);
    }
    CHECK(has_m2);
    CHECK(has_m2_19);
}

TEST_CASE("convex mixes of passing samples pass both lemma checks") {
    SamplerConfig config{200, 4, 0.0};
    auto samples = sample_schwarz(7, config);
    auto grid = prokhorov_grid();
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        const auto& a = samples[rng() % samples.size()];
        const auto& b = samples[rng() % samples.size()];
        const double lambda = unit(rng);
        SchwarzSample mix;
        for (int k = 0; k < 4; ++k)
            mix.c[static_cast<std::size_t>(k)] = lambda * a.c[static_cast<std::size_t>(k)] +
                                                 (1.0 - lambda) * b.c[static_cast<std::size_t>(k)];
        auto [r2, r4] = carlson_residuals(mix);
        CHECK(r2 >= -1e-9);
        CHECK(r4 >= -1e-9);
        for (const auto& p : grid) CHECK(prokhorov_margin(mix, p) >= -1e-9);
    }
}

TEST_CASE("degenerate mix weight reproduces the parent") {
    SchwarzSample a, b;
    a.c = {Complex(0.3, 0.1), Complex(0.2, 0.0), Complex(0.1, 0.0), Complex(0.05, 0.0)};
    b.c = {Complex(0.1, 0.0), Complex(0.4, 0.2), Complex(0.0, 0.0), Complex(0.0, 0.1)};
    SchwarzSample mix;
    const double lambda = 1.0;
    for (int k = 0; k < 4; ++k)
        mix.c[static_cast<std::size_t>(k)] =
            lambda * a.c[static_cast<std::size_t>(k)] + (1.0 - lambda) * b.c[static_cast<std::size_t>(k)];
    CHECK(mix.c == a.c);
}

TEST_CASE("derived worker seeds differ") {
    CHECK(SchwarzSampler::derive_seed(42, 0) != SchwarzSampler::derive_seed(42, 1));
    CHECK(SchwarzSampler::derive_seed(42, 0) == SchwarzSampler::derive_seed(42, 0));
}
