#pragma once

#include "hankel/interval.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hankel {

enum class Relation { LeqZero, GeqZero };

struct Constraint {
    MultiPoly poly;  // over {x,y}
    Relation rel;
};

/// Bounding box plus polynomial constraints; strict inequalities from the
/// source material are stored as their closures (suprema agree and closed
/// regions are what branch-and-bound certifies).
struct RegionSpec {
    std::string name;
    std::string description;
    Box2 bounds;
    std::vector<Constraint> constraints;
};

struct NamedPolynomial {
    std::string name;
    MultiPoly poly;  // over {x,y}
    std::string provenance;
};

/// Sound upper bound for a maximum, with the best feasible witness found.
/// lower <= true maximum <= upper always; complete means the gap reached tol.
struct MaxCertificate {
    std::string poly_name;
    std::string region_name;
    double upper = 0.0;
    double lower = 0.0;
    std::string lower_exact;  // witness value as an exact rational
    double witness_x = 0.0;
    double witness_y = 0.0;
    double tol = 0.0;
    long boxes = 0;
    long budget = 0;
    bool complete = false;
    int inflation_ulps = kOutwardUlps;
    std::string note;
};

/// Positivity certificate; margin is a certified lower bound for the
/// polynomial over the region. verified is never a false positive.
struct PositivityCertificate {
    std::string poly_name;
    std::string region_name;
    bool verified = false;
    bool strict = true;
    double margin = 0.0;
    std::string margin_exact;
    long boxes = 0;
    bool complete = false;
};

/// Certified global maximization by best-first interval branch-and-bound.
/// Upper bounds come from the monomial-sum interval evaluator; lower bounds
/// from exact rational evaluation at certifiably feasible sample points.
MaxCertificate bb_maximize(const NamedPolynomial& p, const RegionSpec& region, double tol,
                           long budget);

/// Proves min > 0 (strict) or min >= 0 (relaxed) over the region.
/// Bounds come from exact rational Bernstein coefficients over sub-boxes,
/// which are exact at box corners and so can settle touching zeros that a
/// monomial-sum enclosure cannot.
PositivityCertificate min_positive_check(const NamedPolynomial& p, const RegionSpec& region,
                                         long budget, bool strict = true);

enum class Edge { Y0, Y1, X0, X1, Hyp };

Edge edge_from_name(const std::string& name);
const char* edge_name(Edge e);

/// One-dimensional branch-and-bound on the edge restriction of p
/// (y=0, y=1, x=0, x=1 or the hypotenuse y=1-x), over the unit interval.
MaxCertificate edge_maximize(const NamedPolynomial& p, Edge edge, double tol, long budget);

/// Registry of the polynomials and regions the reproduction works with;
/// coefficients are exact integers fixed at registration.
const std::vector<NamedPolynomial>& polynomial_registry();
const NamedPolynomial& registered_polynomial(const std::string& name);
const std::vector<RegionSpec>& region_registry();
const RegionSpec& registered_region(const std::string& name);

}  // namespace hankel
