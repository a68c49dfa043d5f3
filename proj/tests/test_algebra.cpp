#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hankel/classes.hpp"
#include "hankel/interval.hpp"
#include "hankel/series.hpp"

#include <random>

using namespace hankel;

namespace {

TruncSeries numeric_series(VarSet vs, std::initializer_list<long long> coeffs) {
    TruncSeries s(vs, static_cast<int>(coeffs.size()) - 1);
    int k = 0;
    for (long long v : coeffs) s.set_coeff(k++, MultiPoly::constant(vs, BigRational(v)));
    return s;
}

MultiPoly random_xy_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> deg(0, 3);
    MultiPoly p(VarSet::XY);
    const int terms = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < terms; ++i)
        p += MultiPoly::term(VarSet::XY, BigRational(coeff(rng)), {deg(rng), deg(rng), 0, 0});
    return p;
}

MultiPoly g1_poly() {
    const MultiPoly x = xy_var(0), y = xy_var(1);
    return BigRational(-128) * y.pow(3) +
           (xy_const(144) - BigRational(144) * x + BigRational(12) * x * x) * y -
           BigRational(72) * x * x + BigRational(72) * x + xy_const(7);
}

}  // namespace

TEST_CASE("rationals stay reduced with positive denominators") {
    BigRational q = make_rational(6, -4);
    CHECK(rat_num(q) == -3);
    CHECK(rat_den(q) == 2);
    CHECK(rational_to_string(q) == "-3/2");
    CHECK(rational_to_string(BigRational(5)) == "5");
    CHECK(rational_from_double(0.375) == BigRational(3, 8));
    CHECK(rational_from_double(-1.0) == BigRational(-1));
}

TEST_CASE("series_mul: difference of squares") {
    auto a = numeric_series(VarSet::C4, {1, 1, 0});
    auto b = numeric_series(VarSet::C4, {1, -1, 0});
    auto prod = series_mul(a, b);
    CHECK(prod.coeff(0) == c_const(1));
    CHECK(prod.coeff(1).is_zero());
    CHECK(prod.coeff(2) == c_const(-1));
}

TEST_CASE("series_mul: symbolic omega powers") {
    auto omega = TruncSeries::symbolic_omega();
    auto sq = series_mul(omega, omega);
    CHECK(sq.coeff(2) == c_var(0) * c_var(0));
    CHECK(sq.coeff(3) == BigRational(2) * c_var(0) * c_var(1));
    auto cube = series_mul(sq, omega);
    CHECK(cube.coeff(3) == c_var(0).pow(3));
}

TEST_CASE("series_mul rejects mismatched inputs") {
    auto a = numeric_series(VarSet::C4, {1, 1});
    auto b = numeric_series(VarSet::C4, {1, 1, 1});
    CHECK_THROWS_AS(series_mul(a, b), std::invalid_argument);
    auto c = numeric_series(VarSet::XY, {1, 1});
    CHECK_THROWS_AS(series_mul(a, c), std::invalid_argument);
}

TEST_CASE("herglotz_expand of omega = z") {
    TruncSeries omega(VarSet::C4, 4);
    omega.set_coeff(1, c_const(1));
    auto h = herglotz_expand(omega);
    CHECK(h.coeff(0) == c_const(1));
    for (int k = 1; k <= 4; ++k) CHECK(h.coeff(k) == c_const(2));
}

TEST_CASE("herglotz_expand of omega = z^2") {
    TruncSeries omega(VarSet::C4, 4);
    omega.set_coeff(2, c_const(1));
    auto h = herglotz_expand(omega);
    CHECK(h.coeff(0) == c_const(1));
    CHECK(h.coeff(1).is_zero());
    CHECK(h.coeff(2) == c_const(2));
    CHECK(h.coeff(3).is_zero());
    CHECK(h.coeff(4) == c_const(2));
}

TEST_CASE("herglotz_expand symbolic z^2 coefficient") {
    auto h = herglotz_expand(TruncSeries::symbolic_omega());
    CHECK(h.coeff(2) == BigRational(2) * (c_var(1) + c_var(0) * c_var(0)));
}

TEST_CASE("herglotz_expand rejects nonzero constant term") {
    TruncSeries omega(VarSet::C4, 4);
    omega.set_coeff(0, c_const(1));
    CHECK_THROWS_AS(herglotz_expand(omega), std::invalid_argument);
}

TEST_CASE("herglotz identity: expansion * (1 - omega) = 1 + omega") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> coeff(-5, 5);
    for (int trial = 0; trial < 50; ++trial) {
        TruncSeries omega(VarSet::C4, 4);
        for (int k = 1; k <= 4; ++k)
            omega.set_coeff(k, c_const(BigRational(coeff(rng), 1 + static_cast<int>(rng() % 4))));
        TruncSeries one(VarSet::C4, 4);
        one.set_coeff(0, c_const(1));
        auto lhs = series_mul(herglotz_expand(omega), one - omega);
        CHECK(lhs == one + omega);
    }
    // and the fully symbolic omega
    auto omega = TruncSeries::symbolic_omega();
    TruncSeries one(VarSet::C4, 4);
    one.set_coeff(0, c_const(1));
    CHECK(series_mul(herglotz_expand(omega), one - omega) == one + omega);
}

TEST_CASE("polynomial ring laws on random inputs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        auto a = random_xy_poly(rng), b = random_xy_poly(rng), c = random_xy_poly(rng);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("poly_eval_complex examples") {
    auto p = c_var(0) * c_var(0) + c_var(1);
    const Complex i(0.0, 1.0);
    std::array<Complex, 4> at_i{i, Complex(1.0, 0.0), Complex(0.0, 0.0), Complex(0.0, 0.0)};
    CHECK(std::abs(p.eval_complex(at_i)) < 1e-15);

    std::array<Complex, 4> half{Complex(0.5, 0.0), Complex(), Complex(), Complex()};
    CHECK(c_var(0).eval_complex(half) == Complex(0.5, 0.0));

    // H3 polynomial of R at (0,1,0,0); oracle: exact rational substitution.
    auto h3 = hankel3_poly(derive_coefficients(ClassId::R));
    std::array<BigRational, 4> point{BigRational(0), BigRational(1), BigRational(0), BigRational(0)};
    CHECK(h3.eval_rational(point) == BigRational(-4, 135));
    std::array<Complex, 4> pc{Complex(), Complex(1.0, 0.0), Complex(), Complex()};
    CHECK(std::abs(eval_functional(h3, pc) - Complex(-4.0 / 135.0, 0.0)) < 1e-15);
}

TEST_CASE("poly_eval_complex rejects arity mismatch") {
    auto p = c_var(0);
    std::vector<Complex> too_short(3);
    CHECK_THROWS_AS(p.eval_complex(too_short), std::invalid_argument);
}

TEST_CASE("poly_eval_interval point and range examples") {
    const MultiPoly x = xy_var(0);
    MultiPoly p = x * x - x;
    Interval r = poly_eval_interval(p, Box2{{0.5, 0.5}, {0.0, 0.0}});
    CHECK(r.contains(-0.25));
    CHECK(r.width() <= 1e-12);

    Interval range = poly_eval_interval(p, Box2{{0.0, 1.0}, {0.0, 0.0}});
    CHECK(range.lo <= -0.25);
    CHECK(range.hi >= 0.0);

    Interval g = poly_eval_interval(g1_poly(), Box2{{0.0, 0.0}, {0.61, 0.62}});
    CHECK(g.contains(7.0 + 24.0 * std::sqrt(6.0)));
}

TEST_CASE("interval soundness on random polynomials") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 1000; ++trial) {
        auto p = random_xy_poly(rng);
        double x0 = unit(rng), x1 = unit(rng), y0 = unit(rng), y1 = unit(rng);
        Box2 box{{std::min(x0, x1), std::max(x0, x1)}, {std::min(y0, y1), std::max(y0, y1)}};
        double px = box.x.lo + unit(rng) * box.x.width();
        double py = box.y.lo + unit(rng) * box.y.width();
        std::array<Complex, 2> pt{Complex(px, 0.0), Complex(py, 0.0)};
        double value = p.eval_complex(pt).real();
        Interval enc = poly_eval_interval(p, box);
        CHECK(enc.lo <= value);
        CHECK(value <= enc.hi);
    }
}

TEST_CASE("substitution and derivative are exact") {
    const MultiPoly x = xy_var(0), y = xy_var(1);
    MultiPoly p = x * x * y - BigRational(3) * y.pow(2);
    CHECK(p.derivative(0) == BigRational(2) * x * y);
    // y -> 1 - x
    MultiPoly sub = p.substitute(1, xy_const(1) - x);
    std::array<BigRational, 2> pt{BigRational(1, 3), BigRational(0)};
    std::array<BigRational, 2> full{BigRational(1, 3), BigRational(2, 3)};
    CHECK(sub.eval_rational(pt) == p.eval_rational(full));
}
