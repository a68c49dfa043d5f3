#include "hankel/multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace hankel {

int arity(VarSet vs) {
    switch (vs) {
        case VarSet::C4: return 4;
        case VarSet::XY: return 2;
        case VarSet::XYT: return 3;
    }
    return 0;
}

const char* var_name(VarSet vs, int index) {
    static const char* c_names[] = {"c1", "c2", "c3", "c4"};
    static const char* xy_names[] = {"x", "y"};
    static const char* xyt_names[] = {"x", "y", "t"};
    switch (vs) {
        case VarSet::C4: return c_names[index];
        case VarSet::XY: return xy_names[index];
        case VarSet::XYT: return xyt_names[index];
    }
    return "?";
}

MultiPoly MultiPoly::constant(VarSet vs, const BigRational& value) {
    MultiPoly p(vs);
    if (value != 0) p.terms_[{0, 0, 0, 0}] = value;
    return p;
}

MultiPoly MultiPoly::variable(VarSet vs, int index) {
    if (index < 0 || index >= arity(vs)) throw std::invalid_argument("variable index out of range");
    MultiPoly p(vs);
    Exponents e{0, 0, 0, 0};
    e[static_cast<std::size_t>(index)] = 1;
    p.terms_[e] = BigRational(1);
    return p;
}

MultiPoly MultiPoly::term(VarSet vs, const BigRational& coeff, const Exponents& exps) {
    MultiPoly p(vs);
    for (int i = arity(vs); i < 4; ++i)
        if (exps[static_cast<std::size_t>(i)] != 0)
            throw std::invalid_argument("exponent outside variable-set arity");
    if (coeff != 0) p.terms_[exps] = coeff;
    return p;
}

BigRational MultiPoly::coeff(const Exponents& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? BigRational(0) : it->second;
}

int MultiPoly::degree(int var) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(var)]);
    return d;
}

int MultiPoly::total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2] + e[3]);
    return d;
}

void MultiPoly::insert_term(const Exponents& exps, const BigRational& coeff) {
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        if (coeff != 0) terms_.emplace(exps, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
}

void MultiPoly::check_same_set(const MultiPoly& rhs) const {
    if (vars_ != rhs.vars_) throw std::invalid_argument("mixed variable sets");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
    check_same_set(rhs);
    for (const auto& [e, c] : rhs.terms_) insert_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
    check_same_set(rhs);
    for (const auto& [e, c] : rhs.terms_) insert_term(e, -c);
    return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& rhs) const {
    MultiPoly out = *this;
    out += rhs;
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& rhs) const {
    MultiPoly out = *this;
    out -= rhs;
    return out;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(vars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& rhs) const {
    check_same_set(rhs);
    MultiPoly out(vars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            Exponents e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
            out.insert_term(e, ca * cb);
        }
    }
    return out;
}

MultiPoly MultiPoly::operator*(const BigRational& scalar) const {
    MultiPoly out(vars_);
    if (scalar == 0) return out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * scalar);
    return out;
}

MultiPoly operator*(const BigRational& scalar, const MultiPoly& p) { return p * scalar; }

MultiPoly MultiPoly::pow(unsigned exponent) const {
    MultiPoly result = constant(vars_, BigRational(1));
    MultiPoly base = *this;
    while (exponent > 0) {
        if (exponent & 1u) result = result * base;
        exponent >>= 1u;
        if (exponent > 0) base = base * base;
    }
    return result;
}

bool MultiPoly::operator==(const MultiPoly& rhs) const {
    return vars_ == rhs.vars_ && terms_ == rhs.terms_;
}

MultiPoly MultiPoly::derivative(int var) const {
    if (var < 0 || var >= var_count()) throw std::invalid_argument("variable index out of range");
    MultiPoly out(vars_);
    auto v = static_cast<std::size_t>(var);
    for (const auto& [e, c] : terms_) {
        if (e[v] == 0) continue;
        Exponents d = e;
        d[v] -= 1;
        out.insert_term(d, c * BigRational(e[v]));
    }
    return out;
}

MultiPoly MultiPoly::substitute(int var, const MultiPoly& value) const {
    check_same_set(value);
    if (var < 0 || var >= var_count()) throw std::invalid_argument("variable index out of range");
    auto v = static_cast<std::size_t>(var);
    std::vector<MultiPoly> powers{constant(vars_, BigRational(1))};
    MultiPoly out(vars_);
    for (const auto& [e, c] : terms_) {
        while (static_cast<int>(powers.size()) <= e[v]) powers.push_back(powers.back() * value);
        Exponents base = e;
        base[v] = 0;
        out += MultiPoly::term(vars_, c, base) * powers[static_cast<std::size_t>(e[v])];
    }
    return out;
}

MultiPoly MultiPoly::scale_vars(std::span<const BigRational> factors) const {
    if (static_cast<int>(factors.size()) != var_count())
        throw std::invalid_argument("factor count must match variable-set arity");
    MultiPoly out(vars_);
    for (const auto& [e, c] : terms_) {
        BigRational f = c;
        for (int i = 0; i < var_count(); ++i)
            for (int k = 0; k < e[static_cast<std::size_t>(i)]; ++k) f *= factors[static_cast<std::size_t>(i)];
        out.insert_term(e, f);
    }
    return out;
}

BigRational MultiPoly::eval_rational(std::span<const BigRational> point) const {
    if (static_cast<int>(point.size()) != var_count())
        throw std::invalid_argument("point arity must match variable-set arity");
    BigRational total(0);
    for (const auto& [e, c] : terms_) {
        BigRational v = c;
        for (int i = 0; i < var_count(); ++i)
            for (int k = 0; k < e[static_cast<std::size_t>(i)]; ++k) v *= point[static_cast<std::size_t>(i)];
        total += v;
    }
    return total;
}

namespace {

// Horner recursion over one variable at a time. The lexicographic term order
// keeps the groups for each exponent of `var` contiguous.
Complex eval_range(MultiPoly::TermMap::const_iterator begin, MultiPoly::TermMap::const_iterator end,
                   int var, int nvars, std::span<const Complex> point) {
    if (begin == end) return {0.0, 0.0};
    auto v = static_cast<std::size_t>(var);
    if (var == nvars - 1) {
        // Innermost variable: plain Horner from the highest exponent down.
        std::vector<std::pair<int, Complex>> groups;
        for (auto it = begin; it != end; ++it)
            groups.emplace_back(it->first[v], Complex(to_double(it->second), 0.0));
        Complex acc = groups.back().second;
        int e = groups.back().first;
        for (auto it = groups.rbegin() + 1; it != groups.rend(); ++it) {
            for (; e > it->first; --e) acc *= point[v];
            acc += it->second;
        }
        for (; e > 0; --e) acc *= point[v];
        return acc;
    }
    std::vector<std::pair<int, Complex>> groups;
    auto it = begin;
    while (it != end) {
        int e = it->first[v];
        auto next = it;
        while (next != end && next->first[v] == e) ++next;
        groups.emplace_back(e, eval_range(it, next, var + 1, nvars, point));
        it = next;
    }
    Complex acc = groups.back().second;
    int e = groups.back().first;
    for (auto g = groups.rbegin() + 1; g != groups.rend(); ++g) {
        for (; e > g->first; --e) acc *= point[v];
        acc += g->second;
    }
    for (; e > 0; --e) acc *= point[v];
    return acc;
}

}  // namespace

Complex MultiPoly::eval_complex(std::span<const Complex> point) const {
    if (static_cast<int>(point.size()) != var_count())
        throw std::invalid_argument("point arity must match variable-set arity");
    return eval_range(terms_.begin(), terms_.end(), 0, var_count(), point);
}

BigInt MultiPoly::denominator_lcm() const {
    BigInt l(1);
    for (const auto& [e, c] : terms_) l = int_lcm(l, rat_den(c));
    return l;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        BigRational a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_vars = (e[0] + e[1] + e[2] + e[3]) > 0;
        if (a != 1 || !has_vars) {
            os << rational_to_string(a);
            if (has_vars) os << "*";
        }
        bool first_var = true;
        for (int i = 0; i < var_count(); ++i) {
            int ex = e[static_cast<std::size_t>(i)];
            if (ex == 0) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << var_name(vars_, i);
            if (ex > 1) os << "^" << ex;
        }
    }
    return os.str();
}

MultiPoly c_var(int index) { return MultiPoly::variable(VarSet::C4, index); }
MultiPoly xy_var(int index) { return MultiPoly::variable(VarSet::XY, index); }
MultiPoly xyt_var(int index) { return MultiPoly::variable(VarSet::XYT, index); }
MultiPoly xy_const(const BigRational& v) { return MultiPoly::constant(VarSet::XY, v); }
MultiPoly xyt_const(const BigRational& v) { return MultiPoly::constant(VarSet::XYT, v); }
MultiPoly c_const(const BigRational& v) { return MultiPoly::constant(VarSet::C4, v); }

}  // namespace hankel
