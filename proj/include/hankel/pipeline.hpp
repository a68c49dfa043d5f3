#pragma once

#include "hankel/classes.hpp"
#include "hankel/optimize.hpp"
#include "hankel/schwarz.hpp"

#include <optional>

namespace hankel {

enum class AuditKind { ExactIdentity, SignCondition, Optimization, Discrepancy };
enum class AuditStatus { Pass, Fail, Info };

const char* audit_kind_name(AuditKind k);
const char* audit_status_name(AuditStatus s);

/// One audited step. Exact-identity items compare cleared-denominator
/// integer polynomials for literal equality; discrepancies are reported
/// with the exact delta, never silently corrected.
struct AuditItem {
    std::string name;
    AuditKind kind;
    AuditStatus status;
    std::string detail;
};

struct PipelineError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when an optimization runs out of budget; carries the still-sound
/// upper bound reached at that point.
struct BudgetExhausted : std::runtime_error {
    BudgetExhausted(const std::string& what, double upper_bound)
        : std::runtime_error(what), upper(upper_bound) {}
    double upper;
};

/// Coefficients of the |c3| quadratic driving a case bound, with the
/// remaining constant part; maximized over t = |c3| in [0,1] at t = 1
/// since all coefficients are positive.
struct CaseProfile {
    ClassId cls;
    int case_index;
    long long t_const;
    long long t_lin;
    long long t_quad;
    long long denominator;
};

struct Case1Result {
    CaseProfile profile;
    BigRational bound;  // exact rational
    std::vector<AuditItem> nonpositivity;
};

struct Case2Result {
    CaseProfile profile;
    BigRational bound;  // certified upper bound, exact rational of a double
    MaxCertificate certificate;
};

struct TheoremReport {
    ClassId cls;
    double tol;
    BigRational case1;
    BigRational case2;
    double case2_value;
    BigRational final_bound;
    bool final_is_case1;
    std::vector<AuditItem> audit;
    std::optional<double> prior_bound;  // 0.64488... for R
    BigRational hankel2_sharp;          // 4/9, cited sharp |H2(2)| bound
};

/// Re-derives every printed algebraic rearrangement in exact arithmetic.
/// selftest_corrupt deliberately perturbs one reference coefficient to
/// exercise the failure path.
std::vector<AuditItem> audit_exact_identities(ClassId cls, bool selftest_corrupt = false);

/// Case |c2| <= mu (1 - |c1|^2): exact rational bound after certifying the
/// grouped terms nonpositive on {0 <= x <= 1, 0 <= y <= 1 - x}.
Case1Result case1_bound(ClassId cls);

/// Case bound driven by the certified polynomial maximum (g1 on the unit
/// square for R, h2 on the triangle E for R1).
Case2Result case2_bound(ClassId cls, double tol, long budget = 1000000);

/// (t_const + t_lin + t_quad + gmax) / denominator, exactly.
BigRational case2_assemble(const CaseProfile& profile, const BigRational& gmax);

/// Final bound for the class: 207/540 for R, 3537/129600 for R1.
BigRational theorem_bound(ClassId cls);

TheoremReport reproduce_theorem(ClassId cls, double tol, long budget = 1000000);

struct SearchResult {
    ClassId cls;
    long samples = 0;
    std::uint64_t seed = 0;
    double best_value = 0.0;
    SchwarzSample best_sample;
    long violations = 0;
    double bound = 0.0;  // theorem bound the samples are checked against
    // H2(2) tracking (class R context: sharp bound 4/9)
    double h2_best = 0.0;
    long h2_violations = 0;
    std::vector<std::pair<SchwarzSample, double>> log;  // filled when keep_log
    bool keep_log = false;
};

/// Evaluates |H3(1)| on n sampled tuples plus the fixed witnesses; counts
/// samples exceeding the theorem bound + 1e-9 (expected: none).
SearchResult random_search(ClassId cls, int n, std::uint64_t seed, bool keep_log = false);

struct LemmaReport {
    long samples = 0;
    std::uint64_t seed = 0;
    long grid_points = 0;
    double min_r2 = 0.0;
    double min_r4 = 0.0;
    double min_margin = 0.0;
    bool pass = false;
    std::vector<AuditItem> items;
};

/// Runs the Carlson and Prokhorov checks over n samples and the
/// admissible-(mu, nu) grid.
LemmaReport verify_lemmas(int n, std::uint64_t seed);

/// Worker count from HANKEL_AUDIT_THREADS (0/unset = single-threaded).
int configured_threads();

}  // namespace hankel
