#include "hankel/classes.hpp"

namespace hankel {

const char* class_name(ClassId id) { return id == ClassId::R ? "R" : "R1"; }

ClassId class_from_name(const std::string& name) {
    if (name == "r" || name == "R") return ClassId::R;
    if (name == "r1" || name == "R1") return ClassId::R1;
    throw std::invalid_argument("unknown class name: " + name);
}

const MultiPoly& CoefficientFormulas::coefficient(int n) const {
    if (n < 2 || n > 5) throw std::invalid_argument("coefficient index must be 2..5");
    return a[static_cast<std::size_t>(n - 2)];
}

CoefficientFormulas derive_coefficients(ClassId cls) {
    // f'(z)[1 - omega] = 1 + omega gives sum n a_n z^{n-1} = (1+omega)/(1-omega)
    // for R; for R1 the left side is f' + z f'' with coefficients n^2 a_n.
    TruncSeries expansion = herglotz_expand(TruncSeries::symbolic_omega());
    CoefficientFormulas out{cls, {MultiPoly(VarSet::C4), MultiPoly(VarSet::C4), MultiPoly(VarSet::C4),
                                  MultiPoly(VarSet::C4)}};
    for (int n = 2; n <= 5; ++n) {
        BigRational divisor = cls == ClassId::R ? BigRational(n) : BigRational(n) * n;
        out.a[static_cast<std::size_t>(n - 2)] =
            expansion.coeff(n - 1) * (BigRational(1) / divisor);
    }
    return out;
}

namespace {

MultiPoly cleared(const MultiPoly& p, BigRational& scale_out) {
    BigInt denom = p.denominator_lcm();
    scale_out = BigRational(BigInt(1), denom);
    return p * BigRational(denom);
}

}  // namespace

HankelPoly hankel3_poly(const CoefficientFormulas& formulas) {
    const MultiPoly& a2 = formulas.coefficient(2);
    const MultiPoly& a3 = formulas.coefficient(3);
    const MultiPoly& a4 = formulas.coefficient(4);
    const MultiPoly& a5 = formulas.coefficient(5);
    MultiPoly det = a3 * (a2 * a4 - a3 * a3) - a4 * (a4 - a2 * a3) + a5 * (a3 - a2 * a2);
    HankelPoly h{HankelPoly::Kind::H3_1, formulas.cls, MultiPoly(VarSet::C4), BigRational(1)};
    h.poly = cleared(det, h.scale);
    return h;
}

HankelPoly hankel2_poly(const CoefficientFormulas& formulas) {
    const MultiPoly& a2 = formulas.coefficient(2);
    const MultiPoly& a3 = formulas.coefficient(3);
    const MultiPoly& a4 = formulas.coefficient(4);
    MultiPoly det = a2 * a4 - a3 * a3;
    HankelPoly h{HankelPoly::Kind::H2_2, formulas.cls, MultiPoly(VarSet::C4), BigRational(1)};
    h.poly = cleared(det, h.scale);
    return h;
}

BigRational HankelPoly::eval_rational(std::span<const BigRational> c) const {
    return poly.eval_rational(c) * scale;
}

Complex eval_functional(const HankelPoly& h, std::span<const Complex> c) {
    return h.poly.eval_complex(c) * to_double(h.scale);
}

namespace {

MultiPoly c_term(long long coeff, int e1, int e2, int e3, int e4) {
    return MultiPoly::term(VarSet::C4, BigRational(coeff), {e1, e2, e3, e4});
}

}  // namespace

MultiPoly printed_hankel3_expansion(ClassId cls) {
    if (cls == ClassId::R) {
        // 540*H3 = -12 c1^4 c2 - 16 c2^3 - 54 c1^3 c3 + 108 c1 c2 c3
        //          - 135 c3^2 + 60 c1^2 c2^2 - 7 c1^6 - 72 c1^2 c4 + 144 c2 c4
        return c_term(-12, 4, 1, 0, 0) + c_term(-16, 0, 3, 0, 0) + c_term(-54, 3, 0, 1, 0) +
               c_term(108, 1, 1, 1, 0) + c_term(-135, 0, 0, 2, 0) + c_term(60, 2, 2, 0, 0) +
               c_term(-7, 6, 0, 0, 0) + c_term(-72, 2, 0, 0, 1) + c_term(144, 0, 1, 0, 1);
    }
    // 1166400*H3 = -1217 c1^6 - 1140 c1^4 c2 + 13116 c1^2 c2^2 + 7936 c2^3
    //              - 9234 c1^3 c3 + 972 c1 c2 c3 - 18225 c3^2 + 2592 (8 c2 - c1^2) c4
    return c_term(-1217, 6, 0, 0, 0) + c_term(-1140, 4, 1, 0, 0) + c_term(13116, 2, 2, 0, 0) +
           c_term(7936, 0, 3, 0, 0) + c_term(-9234, 3, 0, 1, 0) + c_term(972, 1, 1, 1, 0) +
           c_term(-18225, 0, 0, 2, 0) + c_term(20736, 0, 1, 0, 1) + c_term(-2592, 2, 0, 0, 1);
}

MultiPoly regrouped_hankel3_expansion(ClassId cls) {
    const MultiPoly c1 = c_var(0), c2 = c_var(1), c3 = c_var(2), c4 = c_var(3);
    if (cls == ClassId::R) {
        // -54 c3 (c3 - 2 c1 c2 + c1^3) - 81 c3^2 - 12 c1^4 c2 - 16 c2^3
        // + 60 c1^2 c2^2 - 7 c1^6 + 72 (2 c2 - c1^2) c4
        MultiPoly factor = c3 - BigRational(2) * c1 * c2 + c1.pow(3);
        return BigRational(-54) * c3 * factor + c_term(-81, 0, 0, 2, 0) + c_term(-12, 4, 1, 0, 0) +
               c_term(-16, 0, 3, 0, 0) + c_term(60, 2, 2, 0, 0) + c_term(-7, 6, 0, 0, 0) +
               BigRational(72) * (BigRational(2) * c2 - c1 * c1) * c4;
    }
    // -8991 c3^2 - 9234 c3 (c3 - (2/19) c1 c2 + c1^3) - 1140 c1^4 c2
    // + 13116 c1^2 c2^2 + 7936 c2^3 - 1217 c1^6 + 2592 (8 c2 - c1^2) c4
    MultiPoly factor = c3 - BigRational(2, 19) * c1 * c2 + c1.pow(3);
    return c_term(-8991, 0, 0, 2, 0) + BigRational(-9234) * c3 * factor + c_term(-1140, 4, 1, 0, 0) +
           c_term(13116, 2, 2, 0, 0) + c_term(7936, 0, 3, 0, 0) + c_term(-1217, 6, 0, 0, 0) +
           BigRational(2592) * (BigRational(8) * c2 - c1 * c1) * c4;
}

}  // namespace hankel
