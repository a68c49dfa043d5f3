#pragma once

#include "hankel/rational.hpp"

#include <array>
#include <complex>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace hankel {

using Complex = std::complex<double>;

/// Variable sets the exact layer works over. C4 holds the Schwarz
/// coefficients c1..c4, XY the real pair (x,y), XYT the triple (x,y,t).
enum class VarSet { C4, XY, XYT };

int arity(VarSet vs);
const char* var_name(VarSet vs, int index);

/// Exponent vector; entries past the set's arity stay zero.
using Exponents = std::array<int, 4>;

/// Multivariate polynomial with exact rational coefficients.
/// Invariants: no zero coefficient is stored, exponent entries beyond the
/// variable-set arity are zero, equality is coefficient-wise.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, BigRational>;

    explicit MultiPoly(VarSet vs) : vars_(vs) {}

    static MultiPoly constant(VarSet vs, const BigRational& value);
    static MultiPoly variable(VarSet vs, int index);
    /// Single term coeff * prod(var_i^exp_i).
    static MultiPoly term(VarSet vs, const BigRational& coeff, const Exponents& exps);

    VarSet var_set() const { return vars_; }
    int var_count() const { return arity(vars_); }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    BigRational coeff(const Exponents& exps) const;
    int degree(int var) const;
    int total_degree() const;

    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    MultiPoly operator+(const MultiPoly& rhs) const;
    MultiPoly operator-(const MultiPoly& rhs) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const MultiPoly& rhs) const;
    MultiPoly operator*(const BigRational& scalar) const;
    MultiPoly pow(unsigned exponent) const;
    bool operator==(const MultiPoly& rhs) const;
    bool operator!=(const MultiPoly& rhs) const { return !(*this == rhs); }

    MultiPoly derivative(int var) const;

    /// Exact substitution of one variable by a polynomial over the same set.
    MultiPoly substitute(int var, const MultiPoly& value) const;

    /// Substitute var_i -> factor_i * var_i (used for homogeneity checks).
    MultiPoly scale_vars(std::span<const BigRational> factors) const;

    /// Exact evaluation at a rational point.
    BigRational eval_rational(std::span<const BigRational> point) const;

    /// Exact-coefficient evaluation at a complex point in double precision,
    /// via variable-by-variable Horner recursion.
    Complex eval_complex(std::span<const Complex> point) const;

    /// Least common multiple of coefficient denominators (1 for the zero poly).
    BigInt denominator_lcm() const;

    std::string to_string() const;

private:
    void insert_term(const Exponents& exps, const BigRational& coeff);
    void check_same_set(const MultiPoly& rhs) const;

    VarSet vars_;
    TermMap terms_;
};

MultiPoly operator*(const BigRational& scalar, const MultiPoly& p);

/// Convenience builders for the fixed variable sets.
MultiPoly c_var(int index);                       // c1..c4 as index 0..3
MultiPoly xy_var(int index);                      // x=0, y=1
MultiPoly xyt_var(int index);                     // x=0, y=1, t=2
MultiPoly xy_const(const BigRational& v);
MultiPoly xyt_const(const BigRational& v);
MultiPoly c_const(const BigRational& v);

}  // namespace hankel
