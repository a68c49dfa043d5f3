#pragma once

#include "hankel/multipoly.hpp"

namespace hankel {

/// Outward rounding is realized by inflating every operation result by this
/// many ulps per endpoint; the constant is recorded in certificates.
inline constexpr int kOutwardUlps = 4;

double step_down(double x, int ulps = kOutwardUlps);
double step_up(double x, int ulps = kOutwardUlps);

/// Closed real enclosure [lo, hi]. Every arithmetic result encloses the
/// exact real result of the operation on the operand sets.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    Interval() = default;
    Interval(double point) : lo(point), hi(point) {}
    Interval(double lo_, double hi_);

    bool contains(double x) const { return lo <= x && x <= hi; }
    double width() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }

    Interval operator+(const Interval& rhs) const;
    Interval operator-(const Interval& rhs) const;
    Interval operator*(const Interval& rhs) const;
};

/// Integer power; even powers over sign-straddling intervals are clamped
/// at zero from below.
Interval interval_pow(const Interval& base, int exponent);

/// Enclosure of an exact rational in doubles.
Interval interval_from_rational(const BigRational& q);

struct Box2 {
    Interval x;
    Interval y;
};

/// Monomial-sum enclosure of a real {x,y} polynomial over a box, with
/// outward rounding on every operation. No subdivision happens here;
/// tightness comes from branch-and-bound.
Interval poly_eval_interval(const MultiPoly& p, const Box2& box);

}  // namespace hankel
