#pragma once

#include "hankel/series.hpp"

#include <array>
#include <string>

namespace hankel {

/// The two bounded-turning classes: R requires Re f' > 0, R1 additionally
/// Re(f' + z f'') > 0.
enum class ClassId { R, R1 };

const char* class_name(ClassId id);
ClassId class_from_name(const std::string& name);

/// Exact formulas for a2..a5 in the Schwarz coefficients c1..c4.
struct CoefficientFormulas {
    ClassId cls;
    std::array<MultiPoly, 4> a;  // a[0] = a2 .. a[3] = a5

    const MultiPoly& coefficient(int n) const;  // n in 2..5
};

/// A Hankel functional stored as a cleared-denominator integer polynomial
/// together with its scale; poly * scale equals the determinant expression
/// composed with the coefficient formulas, exactly.
struct HankelPoly {
    enum class Kind { H2_2, H3_1 };
    Kind kind;
    ClassId cls;
    MultiPoly poly;     // integer coefficients
    BigRational scale;  // e.g. 1/540

    BigRational eval_rational(std::span<const BigRational> c) const;
};

/// Coefficient matching against the Herglotz expansion of omega:
/// n * a_n for R, n^2 * a_n for R1.
CoefficientFormulas derive_coefficients(ClassId cls);

/// H3(1) = a3(a2 a4 - a3^2) - a4(a4 - a2 a3) + a5(a3 - a2^2), composed
/// exactly with the class formulas and cleared of denominators.
HankelPoly hankel3_poly(const CoefficientFormulas& formulas);

/// H2(2) = a2 a4 - a3^2.
HankelPoly hankel2_poly(const CoefficientFormulas& formulas);

/// Double-precision value of scale * poly at a complex c-tuple.
Complex eval_functional(const HankelPoly& h, std::span<const Complex> c);

/// The cleared-denominator monomial expansion as printed for each class
/// (540*H3 for R, 1166400*H3 for R1), kept as an independent transcription.
MultiPoly printed_hankel3_expansion(ClassId cls);

/// The regrouped form of the same expansion, built around the
/// (c3 - mu c1 c2 + c1^3) factor used for the Prokhorov step.
MultiPoly regrouped_hankel3_expansion(ClassId cls);

}  // namespace hankel
