#pragma once

#include "hankel/multipoly.hpp"

#include <vector>

namespace hankel {

/// Power series in z truncated at a fixed order; coefficient of z^k is an
/// exact MultiPoly. Indices beyond the order are undefined by contract.
class TruncSeries {
public:
    static constexpr int kDefaultOrder = 4;  // z^0..z^4, enough for a5

    TruncSeries(VarSet vs, int order);

    /// omega(z) = c1 z + c2 z^2 + c3 z^3 + c4 z^4 over the C4 variables.
    static TruncSeries symbolic_omega(int order = kDefaultOrder);

    int order() const { return order_; }
    VarSet var_set() const { return vars_; }

    const MultiPoly& coeff(int k) const;
    void set_coeff(int k, MultiPoly value);

    TruncSeries operator+(const TruncSeries& rhs) const;
    TruncSeries operator-(const TruncSeries& rhs) const;
    bool operator==(const TruncSeries& rhs) const;

private:
    VarSet vars_;
    int order_;
    std::vector<MultiPoly> coeffs_;

    friend TruncSeries series_mul(const TruncSeries&, const TruncSeries&);
};

/// Exact Cauchy product truncated at the common order.
/// Requires matching variable sets and orders.
TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);

/// (1 + omega) / (1 - omega) = 1 + 2*sum_{k>=1} omega^k, truncated.
/// Requires omega to have zero constant term.
TruncSeries herglotz_expand(const TruncSeries& omega);

}  // namespace hankel
