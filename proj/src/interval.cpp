#include "hankel/interval.hpp"

#include <cmath>
#include <limits>

namespace hankel {

double step_down(double x, int ulps) {
    for (int i = 0; i < ulps; ++i) x = std::nextafter(x, -std::numeric_limits<double>::infinity());
    return x;
}

double step_up(double x, int ulps) {
    for (int i = 0; i < ulps; ++i) x = std::nextafter(x, std::numeric_limits<double>::infinity());
    return x;
}

Interval::Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
    if (!(lo <= hi)) throw std::invalid_argument("interval endpoints out of order");
}

Interval Interval::operator+(const Interval& rhs) const {
    return {step_down(lo + rhs.lo), step_up(hi + rhs.hi)};
}

Interval Interval::operator-(const Interval& rhs) const {
    return {step_down(lo - rhs.hi), step_up(hi - rhs.lo)};
}

Interval Interval::operator*(const Interval& rhs) const {
    const double p1 = lo * rhs.lo, p2 = lo * rhs.hi, p3 = hi * rhs.lo, p4 = hi * rhs.hi;
    return {step_down(std::fmin(std::fmin(p1, p2), std::fmin(p3, p4))),
            step_up(std::fmax(std::fmax(p1, p2), std::fmax(p3, p4)))};
}

Interval interval_pow(const Interval& base, int exponent) {
    if (exponent < 0) throw std::invalid_argument("negative interval exponent");
    if (exponent == 0) return {1.0, 1.0};
    if (exponent == 1) return base;
    const double pl = std::pow(base.lo, exponent);
    const double ph = std::pow(base.hi, exponent);
    if (exponent % 2 == 0 && base.lo < 0.0 && base.hi > 0.0) {
        // Even power over a sign-straddling interval: exact lower bound 0.
        return {0.0, step_up(std::fmax(pl, ph))};
    }
    return {step_down(std::fmin(pl, ph)), step_up(std::fmax(pl, ph))};
}

Interval interval_from_rational(const BigRational& q) {
    const double d = to_double(q);
    return {step_down(d), step_up(d)};
}

Interval poly_eval_interval(const MultiPoly& p, const Box2& box) {
    if (p.var_set() != VarSet::XY)
        throw std::invalid_argument("poly_eval_interval expects an {x,y} polynomial");
    Interval total(0.0);
    for (const auto& [e, c] : p.terms()) {
        Interval term = interval_from_rational(c);
        if (e[0] > 0) term = term * interval_pow(box.x, e[0]);
        if (e[1] > 0) term = term * interval_pow(box.y, e[1]);
        total = total + term;
    }
    return total;
}

}  // namespace hankel
