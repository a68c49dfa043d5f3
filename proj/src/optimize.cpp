#include "hankel/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace hankel {

namespace {

// ---------------------------------------------------------------------------
// Shared helpers
// ---------------------------------------------------------------------------

bool point_feasible(const RegionSpec& region, const BigRational& x, const BigRational& y) {
    const std::array<BigRational, 2> pt{x, y};
    for (const auto& c : region.constraints) {
        const BigRational v = c.poly.eval_rational(pt);
        if (c.rel == Relation::LeqZero && v > 0) return false;
        if (c.rel == Relation::GeqZero && v < 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Maximization engine: double boxes, monomial-sum interval upper bounds,
// exact rational lower bounds at feasible corners/midpoints.
// ---------------------------------------------------------------------------

struct MaxNode {
    double hi;
    long id;
    Box2 box;
};

struct MaxNodeOrder {
    bool operator()(const MaxNode& a, const MaxNode& b) const {
        if (a.hi != b.hi) return a.hi > b.hi;  // best-first
        return a.id < b.id;                    // FIFO among equals
    }
};

bool certainly_infeasible(const RegionSpec& region, const Box2& box) {
    for (const auto& c : region.constraints) {
        const Interval r = poly_eval_interval(c.poly, box);
        if (c.rel == Relation::LeqZero && r.lo > 0.0) return true;
        if (c.rel == Relation::GeqZero && r.hi < 0.0) return true;
    }
    return false;
}

struct Incumbent {
    bool set = false;
    double value = 0.0;  // certified lower bound at (x, y)
    double x = 0.0;
    double y = 0.0;
};

std::array<std::pair<double, double>, 5> box_points(const Box2& box) {
    return {{{box.x.lo, box.y.lo},
             {box.x.lo, box.y.hi},
             {box.x.hi, box.y.lo},
             {box.x.hi, box.y.hi},
             {box.x.mid(), box.y.mid()}}};
}

// Exact-arithmetic candidate scan; affordable once per run at the root box,
// where region vertices (and any vertex maxima) live.
void sample_box_exact(const MultiPoly& p, const RegionSpec& region, const Box2& box,
                      Incumbent& best) {
    for (auto [px, py] : box_points(box)) {
        const BigRational rx = rational_from_double(px);
        const BigRational ry = rational_from_double(py);
        if (!point_feasible(region, rx, ry)) continue;
        const std::array<BigRational, 2> pt{rx, ry};
        const double v = round_down_to_double(p.eval_rational(pt));
        if (!best.set || v > best.value) best = {true, v, px, py};
    }
}

// Cheap candidate scan: point feasibility and values certified through
// degenerate-box interval evaluation. Points touching a constraint boundary
// fail the certain-feasibility test and are skipped; the exact root scan
// already covers the region vertices.
void sample_box_fast(const MultiPoly& p, const RegionSpec& region, const Box2& box,
                     Incumbent& best) {
    for (auto [px, py] : box_points(box)) {
        const Box2 point{{px, px}, {py, py}};
        bool certain = true;
        for (const auto& c : region.constraints) {
            const Interval r = poly_eval_interval(c.poly, point);
            if (c.rel == Relation::LeqZero && r.hi > 0.0) certain = false;
            if (c.rel == Relation::GeqZero && r.lo < 0.0) certain = false;
            if (!certain) break;
        }
        if (!certain) continue;
        const double v = poly_eval_interval(p, point).lo;
        if (!best.set || v > best.value) best = {true, v, px, py};
    }
}

}  // namespace

MaxCertificate bb_maximize(const NamedPolynomial& p, const RegionSpec& region, double tol,
                           long budget) {
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    if (budget <= 0) throw std::invalid_argument("budget must be positive");

    MaxCertificate cert;
    cert.poly_name = p.name;
    cert.region_name = region.name;
    cert.tol = tol;
    cert.budget = budget;
    cert.note = region.description;

    // Mean-value form on top of the monomial-sum enclosure: f(box) is also
    // contained in f(mid) + fx(box)(x - mx) + fy(box)(y - my), which closes
    // the gap quadratically in the box width.
    const MultiPoly dpx = p.poly.derivative(0);
    const MultiPoly dpy = p.poly.derivative(1);
    auto box_upper = [&](const Box2& box) {
        const double naive = poly_eval_interval(p.poly, box).hi;
        const double mx = box.x.mid(), my = box.y.mid();
        const Interval fm = poly_eval_interval(p.poly, Box2{{mx, mx}, {my, my}});
        const Interval dx = Interval(box.x.lo, box.x.hi) - Interval(mx);
        const Interval dy = Interval(box.y.lo, box.y.hi) - Interval(my);
        const Interval mv = fm + poly_eval_interval(dpx, box) * dx + poly_eval_interval(dpy, box) * dy;
        return std::fmin(naive, mv.hi);
    };

    std::set<MaxNode, MaxNodeOrder> queue;
    long next_id = 0;
    Incumbent best;
    sample_box_exact(p.poly, region, region.bounds, best);

    auto consider = [&](const Box2& box) {
        if (certainly_infeasible(region, box)) return;
        const double hi = box_upper(box);
        sample_box_fast(p.poly, region, box, best);
        if (!best.set || hi > best.value) queue.insert({hi, next_id++, box});
    };

    consider(region.bounds);

    while (true) {
        if (queue.empty()) {
            // Everything was pruned against the incumbent.
            cert.complete = true;
            cert.upper = best.set ? round_up_to_double(best.value) : 0.0;
            break;
        }
        const MaxNode node = *queue.begin();
        queue.erase(queue.begin());
        ++cert.boxes;

        const double lower = best.set ? best.value : -std::numeric_limits<double>::infinity();
        if (node.hi - lower <= tol) {
            cert.complete = true;
            cert.upper = node.hi;
            break;
        }
        if (cert.boxes >= budget) {
            cert.complete = false;
            cert.upper = node.hi;  // best-first: this is the largest remaining bound
            break;
        }

        const Box2& b = node.box;
        if (b.x.width() >= b.y.width()) {
            const double m = b.x.mid();
            consider({{b.x.lo, m}, b.y});
            consider({{m, b.x.hi}, b.y});
        } else {
            const double m = b.y.mid();
            consider({b.x, {b.y.lo, m}});
            consider({b.x, {m, b.y.hi}});
        }
    }

    if (best.set) {
        cert.lower = best.value;
        cert.witness_x = best.x;
        cert.witness_y = best.y;
        // One exact re-evaluation of the final witness pins its value.
        const BigRational rx = rational_from_double(best.x);
        const BigRational ry = rational_from_double(best.y);
        if (point_feasible(region, rx, ry)) {
            const std::array<BigRational, 2> pt{rx, ry};
            const BigRational exact = p.poly.eval_rational(pt);
            cert.lower = std::max(cert.lower, round_down_to_double(exact));
            cert.lower_exact = rational_to_string(exact);
        }
        if (cert.upper < cert.lower) cert.upper = cert.lower;  // degenerate one-box regions
    } else {
        cert.lower = -std::numeric_limits<double>::infinity();
        cert.lower_exact = "none";
    }
    return cert;
}

// ---------------------------------------------------------------------------
// Positivity engine: exact rational boxes with Bernstein-coefficient bounds.
// ---------------------------------------------------------------------------

namespace {

struct RatBox {
    BigRational xlo, xhi, ylo, yhi;
};

const std::vector<std::vector<BigInt>>& pascal(int upto) {
    static std::vector<std::vector<BigInt>> rows{{BigInt(1)}};
    while (static_cast<int>(rows.size()) <= upto) {
        const auto& prev = rows.back();
        std::vector<BigInt> row(prev.size() + 1, BigInt(1));
        for (std::size_t k = 1; k < prev.size(); ++k) row[k] = prev[k - 1] + prev[k];
        rows.push_back(std::move(row));
    }
    return rows;
}

BigInt binom(int n, int k) { return pascal(n)[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]; }

struct RatRange {
    BigRational lo, hi;
};

// Bernstein coefficient range of p over a rational box. The coefficients
// bound the polynomial on the box and agree with it at the box corners.
RatRange bernstein_range(const MultiPoly& p, const RatBox& box) {
    const MultiPoly x = MultiPoly::variable(p.var_set(), 0);
    const MultiPoly y = MultiPoly::variable(p.var_set(), 1);
    MultiPoly q = p.substitute(0, MultiPoly::constant(p.var_set(), box.xlo) + x * (box.xhi - box.xlo))
                      .substitute(1, MultiPoly::constant(p.var_set(), box.ylo) + y * (box.yhi - box.ylo));
    const int m = q.degree(0);
    const int n = q.degree(1);
    std::vector<BigRational> a(static_cast<std::size_t>((m + 1) * (n + 1)));
    for (const auto& [e, c] : q.terms()) a[static_cast<std::size_t>(e[0] * (n + 1) + e[1])] = c;

    RatRange range;
    bool first = true;
    for (int i = 0; i <= m; ++i) {
        for (int j = 0; j <= n; ++j) {
            BigRational b(0);
            for (int k = 0; k <= i; ++k) {
                for (int l = 0; l <= j; ++l) {
                    const BigRational& akl = a[static_cast<std::size_t>(k * (n + 1) + l)];
                    if (akl == 0) continue;
                    b += akl * BigRational(binom(i, k) * binom(j, l), binom(m, k) * binom(n, l));
                }
            }
            if (first || b < range.lo) range.lo = b;
            if (first || b > range.hi) range.hi = b;
            first = false;
        }
    }
    if (first) {  // zero polynomial
        range.lo = BigRational(0);
        range.hi = BigRational(0);
    }
    return range;
}

bool certainly_infeasible_exact(const RegionSpec& region, const RatBox& box) {
    for (const auto& c : region.constraints) {
        const RatRange r = bernstein_range(c.poly, box);
        if (c.rel == Relation::LeqZero && r.lo > 0) return true;
        if (c.rel == Relation::GeqZero && r.hi < 0) return true;
    }
    return false;
}

struct MinNode {
    BigRational lo;
    long id;
    RatBox box;
};

struct MinNodeOrder {
    bool operator()(const MinNode& a, const MinNode& b) const {
        if (a.lo != b.lo) return a.lo < b.lo;  // smallest bound first
        return a.id < b.id;
    }
};

void sample_box_min(const MultiPoly& p, const RegionSpec& region, const RatBox& box,
                    bool& have, BigRational& upper_on_min) {
    const BigRational xm = (box.xlo + box.xhi) / 2;
    const BigRational ym = (box.ylo + box.yhi) / 2;
    const std::array<std::array<BigRational, 2>, 5> pts{{{box.xlo, box.ylo},
                                                         {box.xlo, box.yhi},
                                                         {box.xhi, box.ylo},
                                                         {box.xhi, box.yhi},
                                                         {xm, ym}}};
    for (const auto& pt : pts) {
        if (!point_feasible(region, pt[0], pt[1])) continue;
        BigRational v = p.eval_rational(pt);
        if (!have || v < upper_on_min) {
            have = true;
            upper_on_min = std::move(v);
        }
    }
}

}  // namespace

PositivityCertificate min_positive_check(const NamedPolynomial& p, const RegionSpec& region,
                                         long budget, bool strict) {
    if (budget <= 0) throw std::invalid_argument("budget must be positive");

    PositivityCertificate cert;
    cert.poly_name = p.name;
    cert.region_name = region.name;
    cert.strict = strict;

    // Gap target for the certified minimum: minor refinement past the proof
    // so the reported margin is close to the true minimum.
    const BigRational abs_gap(1, 1000000000);
    const BigRational rel_gap(1, 10000);

    std::set<MinNode, MinNodeOrder> queue;
    long next_id = 0;
    bool have_upper = false;
    BigRational upper_on_min(0);

    RatBox root{rational_from_double(region.bounds.x.lo), rational_from_double(region.bounds.x.hi),
                rational_from_double(region.bounds.y.lo), rational_from_double(region.bounds.y.hi)};

    auto consider = [&](const RatBox& box) {
        if (certainly_infeasible_exact(region, box)) return;
        RatRange r = bernstein_range(p.poly, box);
        sample_box_min(p.poly, region, box, have_upper, upper_on_min);
        queue.insert({std::move(r.lo), next_id++, box});
    };

    consider(root);

    while (true) {
        if (queue.empty()) {
            // Region certifiably empty: vacuously positive.
            cert.verified = true;
            cert.complete = true;
            cert.margin = 0.0;
            cert.margin_exact = "0";
            return cert;
        }
        const MinNode node = *queue.begin();
        queue.erase(queue.begin());
        ++cert.boxes;

        const BigRational& lo = node.lo;
        cert.margin = round_down_to_double(lo);
        cert.margin_exact = rational_to_string(lo);

        if (have_upper && (strict ? upper_on_min <= 0 : upper_on_min < 0)) {
            // Feasible point falsifies positivity.
            cert.verified = false;
            cert.complete = true;
            return cert;
        }
        if (have_upper) {
            BigRational gap = upper_on_min - lo;
            BigRational scale = upper_on_min < 0 ? BigRational(-upper_on_min) : upper_on_min;
            BigRational target = rel_gap * scale;
            if (target < abs_gap) target = abs_gap;
            if (gap <= target) {
                cert.complete = true;
                cert.verified = strict ? lo > 0 : lo >= 0;
                return cert;
            }
        }
        if (cert.boxes >= budget) {
            cert.complete = false;
            cert.verified = false;  // inconclusive, never a false positive
            return cert;
        }

        const RatBox& b = node.box;
        if (b.xhi - b.xlo >= b.yhi - b.ylo) {
            const BigRational m = (b.xlo + b.xhi) / 2;
            consider({b.xlo, m, b.ylo, b.yhi});
            consider({m, b.xhi, b.ylo, b.yhi});
        } else {
            const BigRational m = (b.ylo + b.yhi) / 2;
            consider({b.xlo, b.xhi, b.ylo, m});
            consider({b.xlo, b.xhi, m, b.yhi});
        }
    }
}

// ---------------------------------------------------------------------------
// Edge restrictions
// ---------------------------------------------------------------------------

Edge edge_from_name(const std::string& name) {
    if (name == "y0" || name == "edge-y0") return Edge::Y0;
    if (name == "y1" || name == "edge-y1") return Edge::Y1;
    if (name == "x0" || name == "edge-x0") return Edge::X0;
    if (name == "x1" || name == "edge-x1") return Edge::X1;
    if (name == "hyp" || name == "edge-hyp") return Edge::Hyp;
    throw std::invalid_argument("unknown edge name: " + name);
}

const char* edge_name(Edge e) {
    switch (e) {
        case Edge::Y0: return "y0";
        case Edge::Y1: return "y1";
        case Edge::X0: return "x0";
        case Edge::X1: return "x1";
        case Edge::Hyp: return "hyp";
    }
    return "?";
}

namespace {

MultiPoly swap_xy(const MultiPoly& p) {
    MultiPoly out(p.var_set());
    for (const auto& [e, c] : p.terms())
        out += MultiPoly::term(p.var_set(), c, {e[1], e[0], 0, 0});
    return out;
}

}  // namespace

MaxCertificate edge_maximize(const NamedPolynomial& p, Edge edge, double tol, long budget) {
    const MultiPoly x = xy_var(0);
    MultiPoly restricted(VarSet::XY);
    switch (edge) {
        case Edge::Y0: restricted = p.poly.substitute(1, xy_const(0)); break;
        case Edge::Y1: restricted = p.poly.substitute(1, xy_const(1)); break;
        case Edge::X0: restricted = swap_xy(p.poly.substitute(0, xy_const(0))); break;
        case Edge::X1: restricted = swap_xy(p.poly.substitute(0, xy_const(1))); break;
        case Edge::Hyp: restricted = p.poly.substitute(1, xy_const(1) - x); break;
    }
    NamedPolynomial np{p.name + "|" + edge_name(edge), std::move(restricted),
                       "edge restriction of " + p.name};
    RegionSpec segment{"edge-" + std::string(edge_name(edge)),
                       "unit parameter interval of the edge", Box2{{0.0, 1.0}, {0.0, 0.0}}, {}};
    return bb_maximize(np, segment, tol, budget);
}

// ---------------------------------------------------------------------------
// Registries
// ---------------------------------------------------------------------------

namespace {

MultiPoly xy_poly(std::initializer_list<std::array<long long, 3>> terms) {
    MultiPoly p(VarSet::XY);
    for (const auto& t : terms)
        p += MultiPoly::term(VarSet::XY, BigRational(t[0]),
                             {static_cast<int>(t[1]), static_cast<int>(t[2]), 0, 0});
    return p;
}

std::vector<NamedPolynomial> build_polynomials() {
    std::vector<NamedPolynomial> v;
    // h1(x,y), x = |c1|^2, y = |c2|: bounds 540|H3| - 54|c3| - 81|c3|^2 when
    // 2|c2| + |c1|^2 > 1.
    v.push_back({"h1",
                 xy_poly({{7, 3, 0}, {-72, 2, 0}, {72, 1, 0}, {12, 2, 1}, {-12, 1, 2},
                          {-144, 1, 1}, {-128, 0, 3}, {144, 0, 1}}),
                 "case-2 majorant for class R in x = |c1|^2, y = |c2|"});
    v.push_back({"g1",
                 xy_poly({{-128, 0, 3}, {144, 0, 1}, {-144, 1, 1}, {12, 2, 1}, {-72, 2, 0},
                          {72, 1, 0}, {7, 0, 0}}),
                 "dominates h1 on the unit square; drops -12xy^2 and relaxes 7x^3 to 7"});
    v.push_back({"g1-minus-h1", xy_poly({{7, 0, 0}, {-7, 3, 0}, {12, 1, 2}}),
                 "difference g1 - h1 = 7(1 - x^3) + 12xy^2"});
    v.push_back({"h2",
                 xy_poly({{-12800, 0, 3}, {10524, 1, 2}, {1140, 2, 1}, {-20736, 1, 1},
                          {20736, 0, 1}, {1217, 3, 0}, {-2592, 2, 0}, {13608, 1, 0}}),
                 "case-2 majorant for class R1 in x = |c1|^2, y = |c2|"});
    v.push_back({"quartic", xy_poly({{1, 4, 0}, {-24, 3, 0}, {-960, 2, 0}, {576, 1, 0}, {144, 0, 0}}),
                 "eliminant of the g1 critical-point system; no roots in [0, 1/2]"});
    v.push_back({"dh2dx",
                 xy_poly({{3651, 2, 0}, {2280, 1, 1}, {10524, 0, 2}, {-5184, 1, 0},
                          {-20736, 0, 1}, {13608, 0, 0}}),
                 "partial derivative of h2 with respect to x"});
    v.push_back({"g2-x0", xy_poly({{1217, 3, 0}, {-2592, 2, 0}, {13608, 1, 0}}),
                 "h2 restricted to the edge y = 0"});
    v.push_back({"g2-0y", xy_poly({{20736, 0, 1}, {-12800, 0, 2}}),
                 "restriction to x = 0 in its quadratic printed form"});
    v.push_back({"g2-hyp", xy_poly({{23401, 3, 0}, {-40164, 2, 0}, {21060, 1, 0}, {7936, 0, 0}}),
                 "h2 restricted to the hypotenuse y = 1 - x"});
    return v;
}

std::vector<RegionSpec> build_regions() {
    std::vector<RegionSpec> v;
    v.push_back({"unit-square", "[0,1] x [0,1]", Box2{{0.0, 1.0}, {0.0, 1.0}}, {}});
    v.push_back({"triangle-E", "x >= 0, y >= 0, x + y <= 1", Box2{{0.0, 1.0}, {0.0, 1.0}},
                 {{xy_poly({{1, 1, 0}, {1, 0, 1}, {-1, 0, 0}}), Relation::LeqZero}}});
    v.push_back({"triangle-D-r",
                 "closure of x + 2y > 1 with x + y <= 1, x >= 0 (strict edge closed)",
                 Box2{{0.0, 1.0}, {0.0, 1.0}},
                 {{xy_poly({{-1, 1, 0}, {-2, 0, 1}, {1, 0, 0}}), Relation::LeqZero},
                  {xy_poly({{1, 1, 0}, {1, 0, 1}, {-1, 0, 0}}), Relation::LeqZero}}});
    v.push_back({"triangle-D-r1",
                 "closure of 21x + 32y > 21 with x + y <= 1, x >= 0 (strict edge closed)",
                 Box2{{0.0, 1.0}, {0.0, 1.0}},
                 {{xy_poly({{-21, 1, 0}, {-32, 0, 1}, {21, 0, 0}}), Relation::LeqZero},
                  {xy_poly({{1, 1, 0}, {1, 0, 1}, {-1, 0, 0}}), Relation::LeqZero}}});
    v.push_back({"unit-interval", "[0,1] x {0}", Box2{{0.0, 1.0}, {0.0, 0.0}}, {}});
    v.push_back({"interval-0-half", "[0,1/2] x {0}", Box2{{0.0, 0.5}, {0.0, 0.0}}, {}});
    return v;
}

}  // namespace

const std::vector<NamedPolynomial>& polynomial_registry() {
    static const std::vector<NamedPolynomial> registry = build_polynomials();
    return registry;
}

const NamedPolynomial& registered_polynomial(const std::string& name) {
    for (const auto& p : polynomial_registry())
        if (p.name == name) return p;
    throw std::invalid_argument("unknown polynomial name: " + name);
}

const std::vector<RegionSpec>& region_registry() {
    static const std::vector<RegionSpec> registry = build_regions();
    return registry;
}

const RegionSpec& registered_region(const std::string& name) {
    for (const auto& r : region_registry())
        if (r.name == name) return r;
    throw std::invalid_argument("unknown region name: " + name);
}

}  // namespace hankel
