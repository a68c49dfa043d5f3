#pragma once

#include "hankel/pipeline.hpp"

#include "json.hpp"

#include <iosfwd>

namespace hankel {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "1.0.0";

/// Envelope wrapped around every JSON payload. Exact rationals are carried
/// as "p/q" strings next to convenience doubles; doubles alone never stand
/// in for exact results.
struct ReportEnvelope {
    int schema_version = kSchemaVersion;
    std::string tool_version = kToolVersion;
    std::string command;
    std::string timestamp;  // ISO-8601 UTC
    nlohmann::json payload;
};

std::string iso8601_utc_now();

nlohmann::json envelope_to_json(const ReportEnvelope& envelope);
ReportEnvelope envelope_from_json(const nlohmann::json& j);
ReportEnvelope make_envelope(const std::string& command, nlohmann::json payload);

nlohmann::json rational_json(const BigRational& q);
nlohmann::json certificate_to_json(const MaxCertificate& cert);
nlohmann::json positivity_to_json(const PositivityCertificate& cert);
nlohmann::json audit_to_json(const std::vector<AuditItem>& items);
nlohmann::json formulas_to_json(const CoefficientFormulas& formulas);
nlohmann::json hankel_to_json(const HankelPoly& h);
nlohmann::json theorem_report_to_json(const TheoremReport& report);
nlohmann::json lemma_report_to_json(const LemmaReport& report);
nlohmann::json search_result_to_json(const SearchResult& result);

/// Fixed display forms mirroring the source statements (unreduced).
std::string case1_display(ClassId cls);
std::string theorem_bound_display(ClassId cls);

void print_certificate_text(std::ostream& out, const MaxCertificate& cert);
void print_audit_text(std::ostream& out, const std::vector<AuditItem>& items);
void print_theorem_text(std::ostream& out, const TheoremReport& report);
void print_lemma_text(std::ostream& out, const LemmaReport& report);
void print_search_text(std::ostream& out, const SearchResult& result);
void print_formulas_text(std::ostream& out, const CoefficientFormulas& formulas,
                         const HankelPoly& h3, const HankelPoly& h2);

/// Sample log CSV: re/im of c1..c4, Carlson residuals, |H3|, provenance, seed.
void write_sample_csv(std::ostream& out, const SearchResult& result);
/// Edge-maximum table CSV.
void write_edge_csv(std::ostream& out, const std::vector<MaxCertificate>& certs);

}  // namespace hankel
