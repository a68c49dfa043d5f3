#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hankel/classes.hpp"

using namespace hankel;

namespace {

const MultiPoly c1 = c_var(0);
const MultiPoly c2 = c_var(1);
const MultiPoly c3 = c_var(2);
const MultiPoly c4 = c_var(3);

std::array<BigRational, 4> rat_point(long long a, long long b, long long c, long long d) {
    return {BigRational(a), BigRational(b), BigRational(c), BigRational(d)};
}

}  // namespace

TEST_CASE("coefficient formulas for R") {
    auto f = derive_coefficients(ClassId::R);
    CHECK(f.coefficient(2) == c1);
    CHECK(f.coefficient(3) == BigRational(2, 3) * (c1 * c1 + c2));
    CHECK(f.coefficient(4) == BigRational(1, 2) * (c3 + BigRational(2) * c1 * c2 + c1.pow(3)));
    CHECK(f.coefficient(5) ==
          BigRational(2, 5) * (c4 + BigRational(2) * c1 * c3 + BigRational(3) * c1 * c1 * c2 +
                               c1.pow(4) + c2 * c2));
    CHECK(f.coefficient(2).total_degree() == 1);
}

TEST_CASE("coefficient formulas for R1") {
    auto f = derive_coefficients(ClassId::R1);
    CHECK(f.coefficient(2) == BigRational(1, 2) * c1);
    CHECK(f.coefficient(3) == BigRational(2, 9) * (c1 * c1 + c2));
    CHECK(f.coefficient(4) == BigRational(1, 8) * (c3 + BigRational(2) * c1 * c2 + c1.pow(3)));
    CHECK(f.coefficient(5) ==
          BigRational(2, 25) * (c4 + BigRational(2) * c1 * c3 + BigRational(3) * c1 * c1 * c2 +
                                c1.pow(4) + c2 * c2));
}

TEST_CASE("hankel3 for R matches the printed nine-monomial expansion") {
    auto h = hankel3_poly(derive_coefficients(ClassId::R));
    CHECK(h.scale == BigRational(1, 540));
    CHECK(h.poly == printed_hankel3_expansion(ClassId::R));
    CHECK(h.poly.term_count() == 9);
    CHECK(h.poly.coeff({0, 0, 2, 0}) == BigRational(-135));
    CHECK(h.poly.coeff({0, 1, 0, 1}) == BigRational(144));
}

TEST_CASE("hankel3 for R1 matches the printed expansion") {
    auto h = hankel3_poly(derive_coefficients(ClassId::R1));
    CHECK(h.scale == BigRational(1, 1166400));
    CHECK(h.poly == printed_hankel3_expansion(ClassId::R1));
    CHECK(h.poly.coeff({6, 0, 0, 0}) == BigRational(-1217));
}

TEST_CASE("regrouped forms equal the printed expansions exactly") {
    CHECK(regrouped_hankel3_expansion(ClassId::R) == printed_hankel3_expansion(ClassId::R));
    CHECK(regrouped_hankel3_expansion(ClassId::R1) == printed_hankel3_expansion(ClassId::R1));
}

TEST_CASE("hankel3 vanishes at the origin") {
    auto h = hankel3_poly(derive_coefficients(ClassId::R));
    CHECK(h.eval_rational(rat_point(0, 0, 0, 0)) == BigRational(0));
}

TEST_CASE("weighted homogeneity of the determinant polynomial") {
    const BigRational lambda(3, 7);
    std::array<BigRational, 4> factors{lambda, lambda * lambda, lambda * lambda * lambda,
                                       lambda * lambda * lambda * lambda};
    for (ClassId cls : {ClassId::R, ClassId::R1}) {
        auto h = hankel3_poly(derive_coefficients(cls));
        BigRational l6 = factors[1] * factors[3];  // lambda^6
        CHECK(h.poly.scale_vars(factors) == h.poly * l6);
    }
    // a_n is weighted homogeneous of weight n-1
    auto f = derive_coefficients(ClassId::R);
    for (int n = 2; n <= 5; ++n) {
        BigRational lw(1);
        for (int k = 0; k < n - 1; ++k) lw *= lambda;
        CHECK(f.coefficient(n).scale_vars(factors) == f.coefficient(n) * lw);
    }
}

TEST_CASE("hankel2 for R") {
    auto h = hankel2_poly(derive_coefficients(ClassId::R));
    CHECK(h.eval_rational(rat_point(0, 1, 0, 0)) == BigRational(-4, 9));
    CHECK(h.eval_rational(rat_point(0, 0, 0, 0)) == BigRational(0));
    CHECK(h.eval_rational(rat_point(1, 0, 0, 0)) == BigRational(1, 18));
}

TEST_CASE("eval_functional matches exact substitution") {
    auto h3r = hankel3_poly(derive_coefficients(ClassId::R));
    auto h3r1 = hankel3_poly(derive_coefficients(ClassId::R1));
    std::array<Complex, 4> z3{Complex(), Complex(), Complex(1.0, 0.0), Complex()};
    CHECK(eval_functional(h3r, z3).real() == doctest::Approx(-0.25).epsilon(1e-14));
    CHECK(eval_functional(h3r1, z3).real() == doctest::Approx(-1.0 / 64.0).epsilon(1e-14));
    std::array<Complex, 4> z2{Complex(), Complex(1.0, 0.0), Complex(), Complex()};
    CHECK(eval_functional(h3r, z2).real() == doctest::Approx(-4.0 / 135.0).epsilon(1e-14));
    CHECK(h3r.eval_rational(rat_point(0, 0, 1, 0)) == BigRational(-1, 4));
    CHECK(h3r1.eval_rational(rat_point(0, 0, 1, 0)) == BigRational(-18225, 1166400));
}
