#include "hankel/pipeline.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <thread>

namespace hankel {

const char* audit_kind_name(AuditKind k) {
    switch (k) {
        case AuditKind::ExactIdentity: return "exact-identity";
        case AuditKind::SignCondition: return "sign-condition";
        case AuditKind::Optimization: return "optimization";
        case AuditKind::Discrepancy: return "discrepancy";
    }
    return "?";
}

const char* audit_status_name(AuditStatus s) {
    switch (s) {
        case AuditStatus::Pass: return "pass";
        case AuditStatus::Fail: return "fail";
        case AuditStatus::Info: return "info";
    }
    return "?";
}

namespace {

constexpr long kAuditBudget = 1000000;

MultiPoly xy_c(long long v) { return xy_const(BigRational(v)); }

struct GroupedTerm {
    std::string label;
    MultiPoly poly;  // the term as it appears; certified <= 0
};

// Terms of the case-1 regrouping, each nonpositive on the admissible set
// {0 <= x <= 1, 0 <= y <= 1 - x} with x = |c1|^2, y = |c2|.
std::vector<GroupedTerm> grouped_case1_terms(ClassId cls) {
    const MultiPoly x = xy_var(0), y = xy_var(1);
    const MultiPoly one = xy_c(1);
    if (cls == ClassId::R) {
        return {
            {"16y^2(y-1)", BigRational(16) * y * y * (y - one)},
            {"56y^2(x-1)", BigRational(56) * y * y * (x - one)},
            {"4x(y^2-1)", BigRational(4) * x * (y * y - one)},
            {"7x(x^2-1)", BigRational(7) * x * (x * x - one)},
            {"12x(xy-1)", BigRational(12) * x * (x * y - one)},
            {"-49x", BigRational(-49) * x},
        };
    }
    return {
        {"7936y^2(y-1)", BigRational(7936) * y * y * (y - one)},
        {"7444x(y^2-1)", BigRational(7444) * x * (y * y - one)},
        {"1140x(xy-1)", BigRational(1140) * x * (x * y - one)},
        {"1217x(x^2-1)", BigRational(1217) * x * (x * x - one)},
        {"5672y^2(x-1)", BigRational(5672) * y * y * (x - one)},
        {"-3807x", BigRational(-3807) * x},
        {"-11016x(1-x-y^2)", BigRational(-11016) * x * (one - x - y * y)},
    };
}

// Collapse the triangle {0 <= x <= 1, 0 <= y <= 1-x} onto the unit square
// by y -> (1-x) v; nonnegativity on the square then settles the triangle.
MultiPoly triangle_to_square(const MultiPoly& p) {
    const MultiPoly x = xy_var(0), y = xy_var(1);
    return p.substitute(1, (xy_c(1) - x) * y);
}

AuditItem identity_item(const std::string& name, const MultiPoly& lhs, const MultiPoly& rhs,
                        const std::string& detail) {
    if (lhs == rhs) return {name, AuditKind::ExactIdentity, AuditStatus::Pass, detail};
    const MultiPoly delta = lhs - rhs;
    return {name, AuditKind::ExactIdentity, AuditStatus::Fail,
            detail + "; coefficient delta = " + delta.to_string()};
}

// Case-1 t-quadratics in t = |c3|: constant, linear, quadratic coefficients.
CaseProfile case1_profile(ClassId cls) {
    if (cls == ClassId::R) return {cls, 1, 72, 54, 81, 540};
    return {cls, 1, 13608, 9234, 8991, 1166400};
}

CaseProfile case2_profile(ClassId cls) {
    if (cls == ClassId::R) return {cls, 2, 0, 54, 81, 540};
    return {cls, 2, 0, 9234, 8991, 1166400};
}

std::vector<AuditItem> nonpositivity_items(ClassId cls) {
    std::vector<AuditItem> items;
    for (const auto& term : grouped_case1_terms(cls)) {
        const MultiPoly mapped = triangle_to_square(-term.poly);
        NamedPolynomial np{"neg(" + term.label + ")", mapped,
                           "negated case-1 term composed with y -> (1-x)v"};
        auto cert = min_positive_check(np, registered_region("unit-square"), kAuditBudget,
                                       /*strict=*/false);
        std::ostringstream os;
        os << "certified <= 0 on {0<=x<=1, 0<=y<=1-x} via y -> (1-x)v; negated margin "
           << cert.margin_exact << " over " << cert.boxes << " boxes";
        items.push_back({"case1-term " + term.label, AuditKind::SignCondition,
                         cert.verified ? AuditStatus::Pass : AuditStatus::Fail, os.str()});
    }
    return items;
}

MultiPoly case1_regrouping_lhs(ClassId cls) {
    const MultiPoly x = xyt_var(0), y = xyt_var(1), t = xyt_var(2);
    const MultiPoly one = MultiPoly::constant(VarSet::XYT, BigRational(1));
    if (cls == ClassId::R) {
        // (e8) right side with 72(2|c2|+|c1|^2)|c4| <= 72 * (1 - x - y^2)
        return BigRational(54) * t + BigRational(81) * t * t + BigRational(12) * x * x * y +
               BigRational(16) * y.pow(3) + BigRational(60) * x * y * y + BigRational(7) * x.pow(3) +
               BigRational(72) * (one - x - y * y);
    }
    return BigRational(9234) * t + BigRational(8991) * t * t + BigRational(1140) * x * x * y +
           BigRational(7936) * y.pow(3) + BigRational(13116) * x * y * y +
           BigRational(1217) * x.pow(3) +
           BigRational(648) * (BigRational(21) * one - BigRational(17) * x) * (one - x - y * y);
}

MultiPoly case1_regrouping_rhs(ClassId cls) {
    const MultiPoly x = xyt_var(0), y = xyt_var(1), t = xyt_var(2);
    const MultiPoly one = MultiPoly::constant(VarSet::XYT, BigRational(1));
    if (cls == ClassId::R) {
        return xyt_const(72) + BigRational(54) * t + BigRational(81) * t * t +
               BigRational(16) * y * y * (y - one) + BigRational(56) * y * y * (x - one) +
               BigRational(4) * x * (y * y - one) + BigRational(7) * x * (x * x - one) +
               BigRational(12) * x * (x * y - one) - BigRational(49) * x;
    }
    return xyt_const(13608) + BigRational(9234) * t + BigRational(8991) * t * t +
           BigRational(7936) * y * y * (y - one) + BigRational(7444) * x * (y * y - one) +
           BigRational(1140) * x * (x * y - one) + BigRational(1217) * x * (x * x - one) +
           BigRational(5672) * y * y * (x - one) - BigRational(3807) * x -
           BigRational(11016) * x * (one - x - y * y);
}

// The case-2 majorant as assembled from the inequality line that precedes it.
MultiPoly derived_case2_poly(ClassId cls) {
    const MultiPoly x = xy_var(0), y = xy_var(1);
    const MultiPoly one = xy_c(1);
    if (cls == ClassId::R) {
        return BigRational(12) * x * x * y + BigRational(16) * y.pow(3) +
               BigRational(60) * x * y * y + BigRational(7) * x.pow(3) +
               BigRational(72) * (BigRational(2) * y + x) * (one - x - y * y);
    }
    return BigRational(1140) * x * x * y + BigRational(7936) * y.pow(3) +
           BigRational(13116) * x * y * y + BigRational(1217) * x.pow(3) +
           BigRational(2592) * (BigRational(8) * y + x) * (one - x - y * y);
}

std::vector<AuditItem> audit_class_r(bool corrupt) {
    std::vector<AuditItem> items;
    const auto formulas = derive_coefficients(ClassId::R);
    const auto h3 = hankel3_poly(formulas);
    MultiPoly printed = printed_hankel3_expansion(ClassId::R);
    if (corrupt)
        printed += MultiPoly::term(VarSet::C4, BigRational(1), {6, 0, 0, 0});  // selftest fault
    items.push_back(identity_item("expansion-vs-determinant", h3.poly, printed,
                                  "540*H3 composition vs printed nine-monomial list"));
    items.push_back(identity_item("regrouped-form", regrouped_hankel3_expansion(ClassId::R),
                                  printed_hankel3_expansion(ClassId::R),
                                  "regrouping around -54c3(c3 - 2c1c2 + c1^3)"));
    items.push_back(identity_item("case1-regrouping", case1_regrouping_lhs(ClassId::R),
                                  case1_regrouping_rhs(ClassId::R),
                                  "case-1 grouped form vs bounded (e8) right side"));
    for (auto& item : nonpositivity_items(ClassId::R)) items.push_back(std::move(item));

    const MultiPoly x = xy_var(0), y = xy_var(1);
    items.push_back(identity_item("h1-assembly", derived_case2_poly(ClassId::R),
                                  registered_polynomial("h1").poly,
                                  "case-2 expansion with 72(2y+x)(1-x-y^2) vs h1"));
    items.push_back(identity_item("g1-dominance-identity",
                                  registered_polynomial("g1").poly - registered_polynomial("h1").poly,
                                  registered_polynomial("g1-minus-h1").poly,
                                  "g1 - h1 = 7(1-x^3) + 12xy^2"));
    {
        auto cert = min_positive_check(registered_polynomial("g1-minus-h1"),
                                       registered_region("unit-square"), kAuditBudget, false);
        items.push_back({"g1-dominance-sign", AuditKind::SignCondition,
                         cert.verified ? AuditStatus::Pass : AuditStatus::Fail,
                         "g1 - h1 >= 0 on the unit square; margin " + cert.margin_exact});
    }
    items.push_back(identity_item(
        "critical-system-dx", registered_polynomial("g1").poly.derivative(0),
        BigRational(24) * ((x - xy_c(6)) * y + xy_c(3) - BigRational(6) * x),
        "dg1/dx = 24((x-6)y + 3 - 6x)"));
    items.push_back(identity_item(
        "critical-system-dy", registered_polynomial("g1").poly.derivative(1),
        BigRational(-12) * (BigRational(32) * y * y - (xy_c(12) - BigRational(12) * x + x * x)),
        "dg1/dy = -12(32y^2 - (12 - 12x + x^2))"));
    items.push_back(identity_item(
        "critical-system-eliminant",
        (xy_c(12) - BigRational(12) * x + x * x) * (x - xy_c(6)) * (x - xy_c(6)) -
            BigRational(32) * (BigRational(6) * x - xy_c(3)) * (BigRational(6) * x - xy_c(3)),
        registered_polynomial("quartic").poly,
        "(12 - 12x + x^2)(x-6)^2 - 32(6x-3)^2 vs registered quartic"));
    {
        auto cert = min_positive_check(registered_polynomial("quartic"),
                                       registered_region("interval-0-half"), kAuditBudget);
        items.push_back({"quartic-positivity", AuditKind::SignCondition,
                         cert.verified ? AuditStatus::Pass : AuditStatus::Fail,
                         "eliminant has no roots in [0, 1/2]; certified min " + cert.margin_exact});
    }
    {
        RegionSpec upper{"x-in-half-one", "[1/2, 1] x {0}", Box2{{0.5, 1.0}, {0.0, 0.0}}, {}};
        NamedPolynomial num{"6x-3", BigRational(6) * x - xy_c(3), "critical-line numerator"};
        NamedPolynomial den{"6-x", xy_c(6) - x, "negated critical-line denominator"};
        auto num_cert = min_positive_check(num, upper, kAuditBudget, false);
        auto den_cert = min_positive_check(den, upper, kAuditBudget);
        const bool ok = num_cert.verified && den_cert.verified;
        items.push_back({"critical-system-sign", AuditKind::SignCondition,
                         ok ? AuditStatus::Pass : AuditStatus::Fail,
                         "on [1/2,1]: 6x-3 >= 0 and x-6 < 0, so y = (6x-3)/(x-6) <= 0 < y"});
    }
    // Boundary restrictions of g1.
    const MultiPoly g1 = registered_polynomial("g1").poly;
    items.push_back(identity_item("edge-y0", g1.substitute(1, xy_c(0)),
                                  xy_c(7) + BigRational(72) * x - BigRational(72) * x * x,
                                  "g1(x,0) = 7 + 72x - 72x^2"));
    items.push_back(identity_item("edge-y1", g1.substitute(1, xy_c(1)),
                                  xy_c(23) - BigRational(72) * x - BigRational(60) * x * x,
                                  "g1(x,1) = 23 - 72x - 60x^2"));
    items.push_back(identity_item("edge-x1", g1.substitute(0, xy_c(1)),
                                  xy_c(7) + BigRational(12) * y - BigRational(128) * y.pow(3),
                                  "g1(1,y) = 7 + 12y - 128y^3"));
    items.push_back(identity_item("edge-x0", g1.substitute(0, xy_c(0)),
                                  xy_c(7) + BigRational(144) * y - BigRational(128) * y.pow(3),
                                  "g1(0,y) = 7 + 144y - 128y^3"));
    return items;
}

std::vector<AuditItem> audit_class_r1(bool corrupt) {
    std::vector<AuditItem> items;
    const auto formulas = derive_coefficients(ClassId::R1);
    const auto h3 = hankel3_poly(formulas);
    MultiPoly printed = printed_hankel3_expansion(ClassId::R1);
    if (corrupt)
        printed += MultiPoly::term(VarSet::C4, BigRational(1), {6, 0, 0, 0});  // selftest fault
    items.push_back(identity_item("expansion-vs-determinant", h3.poly, printed,
                                  "1166400*H3 composition vs printed monomial list"));
    items.push_back(identity_item("regrouped-form", regrouped_hankel3_expansion(ClassId::R1),
                                  printed_hankel3_expansion(ClassId::R1),
                                  "regrouping around -9234c3(c3 - (2/19)c1c2 + c1^3)"));
    items.push_back(identity_item("case1-regrouping", case1_regrouping_lhs(ClassId::R1),
                                  case1_regrouping_rhs(ClassId::R1),
                                  "case-1 grouped form vs bounded right side"));
    for (auto& item : nonpositivity_items(ClassId::R1)) items.push_back(std::move(item));

    const MultiPoly x = xy_var(0), y = xy_var(1);
    const MultiPoly h2 = registered_polynomial("h2").poly;
    const MultiPoly derived = derived_case2_poly(ClassId::R1);

    // Discrepancy 1: printed h2 carries 13608x where the preceding line
    // yields 2592x. Both tracked; the printed form dominates, so the
    // downstream chain stays valid.
    {
        const MultiPoly delta = h2 - derived;
        const bool expected = delta == BigRational(11016) * x;
        std::ostringstream os;
        os << "printed h2 minus derived case-2 expression = " << delta.to_string()
           << " (printed linear term 13608x vs derived 2592x); derivative decomposition and "
              "hypotenuse restriction match the printed form; printed dominates, bounds unaffected";
        items.push_back({"h2-linear-coefficient", AuditKind::Discrepancy,
                         expected ? AuditStatus::Info : AuditStatus::Fail, os.str()});
    }
    {
        NamedPolynomial dom{"h2-minus-derived", h2 - derived, "printed h2 minus derived form"};
        auto cert = min_positive_check(dom, registered_region("unit-square"), kAuditBudget, false);
        items.push_back({"printed-h2-domination", AuditKind::SignCondition,
                         cert.verified ? AuditStatus::Pass : AuditStatus::Fail,
                         "printed h2 >= derived expression on the unit square; margin " +
                             cert.margin_exact});
    }
    items.push_back(identity_item("dh2dx-vs-registered", h2.derivative(0),
                                  registered_polynomial("dh2dx").poly,
                                  "d(h2)/dx matches the registered polynomial"));
    const MultiPoly inner = BigRational(3508) * y * y - BigRational(6912) * y +
                            BigRational(760) * x * y + BigRational(1217) * x * x -
                            BigRational(1728) * x + xy_c(4536);
    items.push_back(identity_item("dh2dx-factor-3", registered_polynomial("dh2dx").poly,
                                  BigRational(3) * inner,
                                  "dh2/dx = 3(3508y^2 - 6912y + 760xy + 1217x^2 - 1728x + 4536)"));
    const MultiPoly one = xy_c(1);
    const MultiPoly decomposition =
        BigRational(760) * (one - x) * (one - y) + BigRational(3076) * (one - y) * (one - y) +
        BigRational(484) * (one - x) * (one - x) + xy_c(216) + BigRational(733) * x * x +
        BigRational(432) * y * y;
    items.push_back(identity_item("dh2dx-decomposition", inner, decomposition,
                                  "760(1-x)(1-y) + 3076(1-y)^2 + 484(1-x)^2 + 216 + 733x^2 + 432y^2"));
    {
        auto cert = min_positive_check(registered_polynomial("dh2dx"),
                                       registered_region("unit-square"), kAuditBudget);
        const bool ok = cert.verified && cert.margin >= 648.0;
        items.push_back({"dh2dx-positivity", AuditKind::SignCondition,
                         ok ? AuditStatus::Pass : AuditStatus::Fail,
                         "dh2/dx >= 648 on the unit square (3 x 216 from the decomposition); "
                         "certified min " +
                             cert.margin_exact});
    }
    items.push_back(identity_item("edge-y0", h2.substitute(1, xy_c(0)),
                                  registered_polynomial("g2-x0").poly,
                                  "h2(x,0) = 1217x^3 - 2592x^2 + 13608x"));
    items.push_back(identity_item(
        "edge-y0-grouped", registered_polynomial("g2-x0").poly,
        BigRational(1217) * x.pow(3) + BigRational(11016) * x +
            BigRational(2592) * x * (one - x),
        "h2(x,0) = 1217x^3 + 11016x + 2592x(1-x)"));

    // Discrepancy 2: the printed x = 0 restriction is quadratic while
    // h2(0,y) is cubic. Both maxima stay below 12233, so the boundary
    // conclusion stands; g2 is read as the boundary restriction of h2.
    {
        const MultiPoly actual = h2.substitute(0, xy_c(0));
        const MultiPoly cubic = BigRational(20736) * y - BigRational(12800) * y.pow(3);
        const bool actual_ok = actual == cubic;
        auto cert = edge_maximize(registered_polynomial("h2"), Edge::X0, 1e-6, kAuditBudget);
        // printed quadratic form peaks at y = 81/100 with value 209952/25
        const std::array<BigRational, 2> vertex{BigRational(0), BigRational(81, 100)};
        const BigRational printed_max =
            registered_polynomial("g2-0y").poly.eval_rational(vertex);
        std::ostringstream os;
        os << "printed restriction 20736y - 12800y^2 (degree 2) vs h2(0,y) = 20736y - 12800y^3 "
              "(degree 3); printed max "
           << rational_to_string(printed_max) << " = " << to_double(printed_max)
           << ", actual certified max " << cert.upper
           << "; both below 12233, boundary conclusion unaffected; g2 read as the boundary "
              "restriction of h2";
        items.push_back({"g2-0y-degree", AuditKind::Discrepancy,
                         (actual_ok && printed_max == BigRational(209952, 25) &&
                          cert.upper < 12233.0)
                             ? AuditStatus::Info
                             : AuditStatus::Fail,
                         os.str()});
    }
    items.push_back(identity_item("edge-hyp", h2.substitute(1, one - x),
                                  registered_polynomial("g2-hyp").poly,
                                  "h2(x,1-x) = 7936 + 21060x - 40164x^2 + 23401x^3"));

    // Discrepancy 3: the case-2 region is printed as x + (21/32)y > 1 while
    // the assumption |c2| > (21/32)(1 - |c1|^2) gives x + (32/21)y > 1. The
    // maximization runs over the superset E, which covers either reading.
    items.push_back({"case2-region-inequality", AuditKind::Discrepancy, AuditStatus::Info,
                     "assumption y > (21/32)(1-x) reads x + (32/21)y > 1, printed region says "
                     "x + (21/32)y > 1; h2 is maximized over the superset E = {x>=0, y>=0, "
                     "x+y<=1}, so the bound is unaffected"});
    return items;
}

}  // namespace

std::vector<AuditItem> audit_exact_identities(ClassId cls, bool selftest_corrupt) {
    return cls == ClassId::R ? audit_class_r(selftest_corrupt) : audit_class_r1(selftest_corrupt);
}

Case1Result case1_bound(ClassId cls) {
    Case1Result result{case1_profile(cls), BigRational(0), nonpositivity_items(cls)};
    for (const auto& item : result.nonpositivity)
        if (item.status == AuditStatus::Fail)
            throw PipelineError("case-1 nonpositivity audit failed: " + item.name);
    const CaseProfile& p = result.profile;
    if (p.t_lin <= 0 || p.t_quad <= 0)
        throw PipelineError("case-1 t-quadratic must have positive coefficients");
    result.bound = BigRational(p.t_const + p.t_lin + p.t_quad, p.denominator);
    return result;
}

BigRational case2_assemble(const CaseProfile& profile, const BigRational& gmax) {
    return (BigRational(profile.t_const + profile.t_lin + profile.t_quad) + gmax) /
           BigRational(profile.denominator);
}

Case2Result case2_bound(ClassId cls, double tol, long budget) {
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    const CaseProfile profile = case2_profile(cls);
    MaxCertificate cert =
        cls == ClassId::R
            ? bb_maximize(registered_polynomial("g1"), registered_region("unit-square"), tol, budget)
            : bb_maximize(registered_polynomial("h2"), registered_region("triangle-E"), tol, budget);
    const BigRational bound = case2_assemble(profile, rational_from_double(cert.upper));
    if (!cert.complete) {
        std::ostringstream os;
        os << "optimization budget exhausted for " << cert.poly_name << " over "
           << cert.region_name << "; still-sound case-2 upper bound " << to_double(bound);
        throw BudgetExhausted(os.str(), to_double(bound));
    }
    return {profile, bound, std::move(cert)};
}

BigRational theorem_bound(ClassId cls) {
    const CaseProfile p = case1_profile(cls);
    return BigRational(p.t_const + p.t_lin + p.t_quad, p.denominator);
}

TheoremReport reproduce_theorem(ClassId cls, double tol, long budget) {
    TheoremReport report{cls,
                         tol,
                         BigRational(0),
                         BigRational(0),
                         0.0,
                         BigRational(0),
                         true,
                         {},
                         std::nullopt,
                         BigRational(4, 9)};
    report.audit = audit_exact_identities(cls);

    Case1Result c1 = case1_bound(cls);
    Case2Result c2 = case2_bound(cls, tol, budget);
    report.case1 = c1.bound;
    report.case2 = c2.bound;
    report.case2_value = to_double(c2.bound);
    report.final_is_case1 = c2.bound <= c1.bound;
    report.final_bound = report.final_is_case1 ? c1.bound : c2.bound;

    {
        std::ostringstream os;
        os << "certified max of " << c2.certificate.poly_name << " over "
           << c2.certificate.region_name << " is " << c2.certificate.upper << " (witness at ("
           << c2.certificate.witness_x << ", " << c2.certificate.witness_y << "), "
           << c2.certificate.boxes << " boxes); case-2 bound " << report.case2_value;
        report.audit.push_back({"case2-optimization", AuditKind::Optimization,
                                c2.certificate.complete ? AuditStatus::Pass : AuditStatus::Fail,
                                os.str()});
    }
    // Boundary maxima mirrored from the proof text.
    struct EdgeCheck {
        const char* poly;
        Edge edge;
        double expected;
    };
    const std::vector<EdgeCheck> edges =
        cls == ClassId::R
            ? std::vector<EdgeCheck>{{"g1", Edge::Y0, 25.0},
                                     {"g1", Edge::Y1, 23.0},
                                     {"g1", Edge::X1, 7.0 + std::sqrt(2.0)},
                                     {"g1", Edge::X0, 7.0 + 24.0 * std::sqrt(6.0)}}
            : std::vector<EdgeCheck>{{"h2", Edge::Y0, 12233.0}, {"h2", Edge::Hyp, 12233.0}};
    for (const auto& e : edges) {
        auto cert = edge_maximize(registered_polynomial(e.poly), e.edge, tol, budget);
        const bool ok = cert.complete && std::abs(cert.upper - e.expected) <= tol + 1e-9;
        std::ostringstream os;
        os << e.poly << " on edge " << edge_name(e.edge) << ": certified max " << cert.upper
           << " (expected " << e.expected << ")";
        report.audit.push_back({std::string(e.poly) + "-edge-" + edge_name(e.edge),
                                AuditKind::Optimization, ok ? AuditStatus::Pass : AuditStatus::Fail,
                                os.str()});
    }
    if (cls == ClassId::R)
        report.prior_bound = (877.0 / 3.0 + 25.0 * std::sqrt(5.0)) / 540.0;
    return report;
}

int configured_threads() {
    const char* env = std::getenv("HANKEL_AUDIT_THREADS");
    if (env == nullptr) return 1;
    const int v = std::atoi(env);
    if (v < 1) return 1;  // 0 = single-threaded deterministic mode
    return std::min(v, 64);
}

namespace {

struct SearchAccum {
    double best = -1.0;
    SchwarzSample best_sample;
    long violations = 0;
    double h2_best = -1.0;
    long h2_violations = 0;
    std::vector<std::pair<SchwarzSample, double>> log;
};

}  // namespace

SearchResult random_search(ClassId cls, int n, std::uint64_t seed, bool keep_log) {
    if (n < 1) throw std::invalid_argument("sample count must be >= 1");
    SearchResult result;
    result.cls = cls;
    result.seed = seed;
    result.keep_log = keep_log;

    const HankelPoly h3 = hankel3_poly(derive_coefficients(cls));
    const HankelPoly h2 = hankel2_poly(derive_coefficients(ClassId::R));
    const double bound = round_up_to_double(theorem_bound(cls));
    const double h2_bound = round_up_to_double(BigRational(4, 9));
    result.bound = bound;

    auto eval_into = [&](const SchwarzSample& s, SearchAccum& acc) {
        const double value = std::abs(eval_functional(h3, s.c));
        if (value > acc.best) {
            acc.best = value;
            acc.best_sample = s;
        }
        if (value > bound + 1e-9) ++acc.violations;
        if (cls == ClassId::R) {
            const double w = std::abs(eval_functional(h2, s.c));
            acc.h2_best = std::max(acc.h2_best, w);
            if (w > h2_bound + 1e-9) ++acc.h2_violations;
        }
        if (keep_log) acc.log.emplace_back(s, value);
    };

    SearchAccum total;
    for (const auto& w : fixed_witnesses()) eval_into(w, total);
    result.samples = static_cast<long>(fixed_witnesses().size());

    const int threads = configured_threads();
    if (threads <= 1) {
        SchwarzSampler sampler(seed, {n, 4, 0.15});
        while (sampler.has_next()) eval_into(sampler.next(), total);
    } else {
        std::vector<SearchAccum> parts(static_cast<std::size_t>(threads));
        std::vector<std::thread> pool;
        const int base = n / threads, rem = n % threads;
        for (int w = 0; w < threads; ++w) {
            const int count = base + (w < rem ? 1 : 0);
            if (count == 0) continue;
            pool.emplace_back([&, w, count] {
                SchwarzSampler sampler(SchwarzSampler::derive_seed(seed, static_cast<std::uint64_t>(w)),
                                       {count, 4, 0.15});
                while (sampler.has_next()) eval_into(sampler.next(), parts[static_cast<std::size_t>(w)]);
            });
        }
        for (auto& t : pool) t.join();
        for (auto& part : parts) {
            if (part.best > total.best) {
                total.best = part.best;
                total.best_sample = part.best_sample;
            }
            total.violations += part.violations;
            total.h2_best = std::max(total.h2_best, part.h2_best);
            total.h2_violations += part.h2_violations;
            for (auto& row : part.log) total.log.push_back(std::move(row));
        }
    }
    result.samples += n;
    result.best_value = total.best;
    result.best_sample = total.best_sample;
    result.violations = total.violations;
    result.h2_best = total.h2_best;
    result.h2_violations = total.h2_violations;
    result.log = std::move(total.log);
    return result;
}

namespace {

struct LemmaAccum {
    double min_r2 = 1.0;
    double min_r4 = 1.0;
    double min_margin = 1.0;
};

}  // namespace

LemmaReport verify_lemmas(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("sample count must be >= 1");
    LemmaReport report;
    report.samples = n;
    report.seed = seed;
    const auto grid = prokhorov_grid();
    report.grid_points = static_cast<long>(grid.size());

    auto eval_into = [&](const SchwarzSample& s, LemmaAccum& acc) {
        const auto [r2, r4] = carlson_residuals(s);
        acc.min_r2 = std::min(acc.min_r2, r2);
        acc.min_r4 = std::min(acc.min_r4, r4);
        for (const auto& p : grid) acc.min_margin = std::min(acc.min_margin, prokhorov_margin(s, p));
    };

    LemmaAccum total;
    for (const auto& w : fixed_witnesses()) eval_into(w, total);

    const int threads = configured_threads();
    if (threads <= 1) {
        SchwarzSampler sampler(seed, {n, 4, 0.15});
        while (sampler.has_next()) eval_into(sampler.next(), total);
    } else {
        std::vector<LemmaAccum> parts(static_cast<std::size_t>(threads));
        std::vector<std::thread> pool;
        const int base = n / threads, rem = n % threads;
        for (int w = 0; w < threads; ++w) {
            const int count = base + (w < rem ? 1 : 0);
            if (count == 0) continue;
            pool.emplace_back([&, w, count] {
                SchwarzSampler sampler(SchwarzSampler::derive_seed(seed, static_cast<std::uint64_t>(w)),
                                       {count, 4, 0.15});
                while (sampler.has_next()) eval_into(sampler.next(), parts[static_cast<std::size_t>(w)]);
            });
        }
        for (auto& t : pool) t.join();
        for (const auto& part : parts) {
            total.min_r2 = std::min(total.min_r2, part.min_r2);
            total.min_r4 = std::min(total.min_r4, part.min_r4);
            total.min_margin = std::min(total.min_margin, part.min_margin);
        }
    }
    report.min_r2 = total.min_r2;
    report.min_r4 = total.min_r4;
    report.min_margin = total.min_margin;

    const bool carlson_ok = report.min_r2 >= -1e-9 && report.min_r4 >= -1e-9;
    const bool prokhorov_ok = report.min_margin >= -1e-9;
    {
        std::ostringstream os;
        os << "min r2 = " << report.min_r2 << ", min r4 = " << report.min_r4 << " over "
           << report.samples << " samples";
        report.items.push_back({"carlson-residuals", AuditKind::SignCondition,
                                carlson_ok ? AuditStatus::Pass : AuditStatus::Fail, os.str()});
    }
    {
        std::ostringstream os;
        os << "min margin = " << report.min_margin << " over " << report.grid_points
           << " admissible (mu, nu) pairs including (-2, 1) and (-2/19, 1)";
        report.items.push_back({"prokhorov-margins", AuditKind::SignCondition,
                                prokhorov_ok ? AuditStatus::Pass : AuditStatus::Fail, os.str()});
    }
    {
        auto witnesses = fixed_witnesses();
        const auto z1 = carlson_residuals(witnesses[0]);
        const auto z2 = carlson_residuals(witnesses[1]);
        SchwarzSample z3 = witnesses[2];
        const bool exact = z1.r2 == 0.0 && z1.r4 == 0.0 && z2.r2 == 0.0 && z2.r4 == 0.0 &&
                           prokhorov_margin(z3, {-2.0, 1.0}) == 0.0 &&
                           prokhorov_margin(witnesses[0], {-2.0 / 19.0, 1.0}) == 0.0;
        report.items.push_back({"witness-equalities", AuditKind::SignCondition,
                                exact ? AuditStatus::Pass : AuditStatus::Fail,
                                "omega = z, z^2 meet the Carlson bounds with equality; omega = z^3 "
                                "and omega = z are Prokhorov equality cases"});
    }
    report.pass = carlson_ok && prokhorov_ok &&
                  report.items.back().status == AuditStatus::Pass;
    return report;
}

}  // namespace hankel
