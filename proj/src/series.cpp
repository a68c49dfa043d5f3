#include "hankel/series.hpp"

namespace hankel {

TruncSeries::TruncSeries(VarSet vs, int order) : vars_(vs), order_(order) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, MultiPoly(vs));
}

TruncSeries TruncSeries::symbolic_omega(int order) {
    TruncSeries s(VarSet::C4, order);
    for (int k = 1; k <= order && k <= 4; ++k) s.set_coeff(k, c_var(k - 1));
    return s;
}

const MultiPoly& TruncSeries::coeff(int k) const {
    if (k < 0 || k > order_) throw std::invalid_argument("series coefficient index out of range");
    return coeffs_[static_cast<std::size_t>(k)];
}

void TruncSeries::set_coeff(int k, MultiPoly value) {
    if (k < 0 || k > order_) throw std::invalid_argument("series coefficient index out of range");
    if (value.var_set() != vars_) throw std::invalid_argument("mixed variable sets");
    coeffs_[static_cast<std::size_t>(k)] = std::move(value);
}

TruncSeries TruncSeries::operator+(const TruncSeries& rhs) const {
    if (vars_ != rhs.vars_ || order_ != rhs.order_)
        throw std::invalid_argument("series variable sets and orders must match");
    TruncSeries out(vars_, order_);
    for (int k = 0; k <= order_; ++k) out.set_coeff(k, coeff(k) + rhs.coeff(k));
    return out;
}

TruncSeries TruncSeries::operator-(const TruncSeries& rhs) const {
    if (vars_ != rhs.vars_ || order_ != rhs.order_)
        throw std::invalid_argument("series variable sets and orders must match");
    TruncSeries out(vars_, order_);
    for (int k = 0; k <= order_; ++k) out.set_coeff(k, coeff(k) - rhs.coeff(k));
    return out;
}

bool TruncSeries::operator==(const TruncSeries& rhs) const {
    if (vars_ != rhs.vars_ || order_ != rhs.order_) return false;
    for (int k = 0; k <= order_; ++k)
        if (!(coeff(k) == rhs.coeff(k))) return false;
    return true;
}

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) {
    if (a.var_set() != b.var_set()) throw std::invalid_argument("mixed variable sets");
    if (a.order() != b.order()) throw std::invalid_argument("mismatched series orders");
    TruncSeries out(a.var_set(), a.order());
    for (int k = 0; k <= out.order(); ++k) {
        MultiPoly acc(a.var_set());
        for (int i = 0; i <= k; ++i) acc += a.coeff(i) * b.coeff(k - i);
        out.set_coeff(k, std::move(acc));
    }
    return out;
}

TruncSeries herglotz_expand(const TruncSeries& omega) {
    if (!omega.coeff(0).is_zero())
        throw std::invalid_argument("herglotz_expand requires omega(0) = 0");
    if (omega.order() < 1) throw std::invalid_argument("herglotz_expand requires order >= 1");
    const VarSet vs = omega.var_set();
    const int n = omega.order();
    TruncSeries result(vs, n);
    result.set_coeff(0, MultiPoly::constant(vs, BigRational(1)));
    TruncSeries power = omega;
    const BigRational two(2);
    for (int k = 1; k <= n; ++k) {
        for (int j = 0; j <= n; ++j) result.set_coeff(j, result.coeff(j) + power.coeff(j) * two);
        if (k < n) power = series_mul(power, omega);
    }
    return result;
}

}  // namespace hankel
