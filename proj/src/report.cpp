#include "hankel/report.hpp"

#include <chrono>
#include <ctime>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace hankel {

using nlohmann::json;

std::string iso8601_utc_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

json envelope_to_json(const ReportEnvelope& e) {
    return json{{"schema_version", e.schema_version},
                {"tool_version", e.tool_version},
                {"command", e.command},
                {"timestamp", e.timestamp},
                {"payload", e.payload}};
}

ReportEnvelope envelope_from_json(const json& j) {
    ReportEnvelope e;
    e.schema_version = j.at("schema_version").get<int>();
    e.tool_version = j.at("tool_version").get<std::string>();
    e.command = j.at("command").get<std::string>();
    e.timestamp = j.at("timestamp").get<std::string>();
    e.payload = j.at("payload");
    return e;
}

ReportEnvelope make_envelope(const std::string& command, json payload) {
    ReportEnvelope e;
    e.command = command;
    e.timestamp = iso8601_utc_now();
    e.payload = std::move(payload);
    return e;
}

json rational_json(const BigRational& q) {
    return json{{"exact", rational_to_string(q)}, {"value", to_double(q)}};
}

json certificate_to_json(const MaxCertificate& cert) {
    return json{{"kind", "max-certificate"},
                {"polynomial", cert.poly_name},
                {"region", cert.region_name},
                {"upper", cert.upper},
                {"lower", cert.lower},
                {"lower_exact", cert.lower_exact},
                {"witness", {{"x", cert.witness_x}, {"y", cert.witness_y}}},
                {"tol", cert.tol},
                {"boxes", cert.boxes},
                {"budget", cert.budget},
                {"complete", cert.complete},
                {"inflation_ulps", cert.inflation_ulps},
                {"note", cert.note}};
}

json positivity_to_json(const PositivityCertificate& cert) {
    return json{{"kind", "positivity-certificate"},
                {"polynomial", cert.poly_name},
                {"region", cert.region_name},
                {"verified", cert.verified},
                {"strict", cert.strict},
                {"margin", cert.margin},
                {"margin_exact", cert.margin_exact},
                {"boxes", cert.boxes},
                {"complete", cert.complete}};
}

json audit_to_json(const std::vector<AuditItem>& items) {
    json arr = json::array();
    for (const auto& it : items)
        arr.push_back(json{{"name", it.name},
                           {"kind", audit_kind_name(it.kind)},
                           {"status", audit_status_name(it.status)},
                           {"detail", it.detail}});
    return arr;
}

json formulas_to_json(const CoefficientFormulas& formulas) {
    json coeffs;
    for (int n = 2; n <= 5; ++n) coeffs["a" + std::to_string(n)] = formulas.coefficient(n).to_string();
    return json{{"class", class_name(formulas.cls)}, {"coefficients", coeffs}};
}

json hankel_to_json(const HankelPoly& h) {
    return json{{"kind", h.kind == HankelPoly::Kind::H3_1 ? "H3(1)" : "H2(2)"},
                {"class", class_name(h.cls)},
                {"scale", rational_to_string(h.scale)},
                {"polynomial", h.poly.to_string()}};
}

json theorem_report_to_json(const TheoremReport& report) {
    json j{{"class", class_name(report.cls)},
           {"tol", report.tol},
           {"case1", rational_json(report.case1)},
           {"case1_display", case1_display(report.cls)},
           {"case2", rational_json(report.case2)},
           {"final", rational_to_string(report.final_bound)},
           {"final_display", theorem_bound_display(report.cls)},
           {"final_value", to_double(report.final_bound)},
           {"final_is_case1", report.final_is_case1},
           {"hankel2_sharp", rational_json(report.hankel2_sharp)},
           {"audit", audit_to_json(report.audit)}};
    if (report.prior_bound) j["prior_bound"] = *report.prior_bound;
    return j;
}

json lemma_report_to_json(const LemmaReport& report) {
    return json{{"samples", report.samples},
                {"seed", report.seed},
                {"grid_points", report.grid_points},
                {"min_r2", report.min_r2},
                {"min_r4", report.min_r4},
                {"min_margin", report.min_margin},
                {"pass", report.pass},
                {"items", audit_to_json(report.items)}};
}

namespace {

json sample_to_json(const SchwarzSample& s) {
    json arr = json::array();
    for (const auto& c : s.c) arr.push_back(json{{"re", c.real()}, {"im", c.imag()}});
    return json{{"c", arr}, {"provenance", s.provenance}, {"seed", s.seed}};
}

}  // namespace

json search_result_to_json(const SearchResult& result) {
    return json{{"class", class_name(result.cls)},
                {"samples", result.samples},
                {"seed", result.seed},
                {"best_value", result.best_value},
                {"best_sample", sample_to_json(result.best_sample)},
                {"violations", result.violations},
                {"bound", result.bound},
                {"h2_best", result.h2_best},
                {"h2_violations", result.h2_violations}};
}

std::string case1_display(ClassId cls) {
    return cls == ClassId::R ? "207/540" : "31833/1166400";
}

std::string theorem_bound_display(ClassId cls) {
    return cls == ClassId::R ? "207/540" : "3537/129600";
}

void print_certificate_text(std::ostream& out, const MaxCertificate& cert) {
    out << "max " << cert.poly_name << " over " << cert.region_name << "\n"
        << "  upper      " << std::setprecision(15) << cert.upper << "\n"
        << "  witness    (" << cert.witness_x << ", " << cert.witness_y << ") -> "
        << cert.lower_exact << "\n"
        << "  gap        " << cert.upper - cert.lower << " (tol " << cert.tol << ")\n"
        << "  boxes      " << cert.boxes << (cert.complete ? "" : "  [budget exhausted]") << "\n";
}

void print_audit_text(std::ostream& out, const std::vector<AuditItem>& items) {
    for (const auto& it : items)
        out << "[" << audit_status_name(it.status) << "] " << it.name << " ("
            << audit_kind_name(it.kind) << "): " << it.detail << "\n";
}

void print_theorem_text(std::ostream& out, const TheoremReport& report) {
    out << "class " << class_name(report.cls) << "\n"
        << "  case 1 bound   " << case1_display(report.cls) << " = " << std::setprecision(10)
        << to_double(report.case1) << "\n"
        << "  case 2 bound   " << to_double(report.case2) << " (certified, tol " << report.tol
        << ")\n"
        << "  final bound    " << theorem_bound_display(report.cls) << " = "
        << to_double(report.final_bound) << "\n"
        << "  |H2(2)| sharp  " << rational_to_string(report.hankel2_sharp) << " = "
        << to_double(report.hankel2_sharp) << "\n";
    if (report.prior_bound) out << "  prior bound    " << *report.prior_bound << "\n";
    out << "audit:\n";
    print_audit_text(out, report.audit);
}

void print_lemma_text(std::ostream& out, const LemmaReport& report) {
    out << "lemma checks over " << report.samples << " samples (seed " << report.seed << ", "
        << report.grid_points << " grid points)\n"
        << "  min r2      " << report.min_r2 << "\n"
        << "  min r4      " << report.min_r4 << "\n"
        << "  min margin  " << report.min_margin << "\n"
        << "  result      " << (report.pass ? "pass" : "FAIL") << "\n";
    print_audit_text(out, report.items);
}

void print_search_text(std::ostream& out, const SearchResult& result) {
    out << "explore " << class_name(result.cls) << ": " << result.samples << " samples (seed "
        << result.seed << ")\n"
        << "  best |H3(1)|  " << std::setprecision(12) << result.best_value << " ("
        << result.best_sample.provenance << ")\n"
        << "  bound         " << result.bound << "\n"
        << "  violations    " << result.violations << "\n";
    if (result.cls == ClassId::R)
        out << "  best |H2(2)|  " << result.h2_best << " (sharp bound 4/9), violations "
            << result.h2_violations << "\n";
}

void print_formulas_text(std::ostream& out, const CoefficientFormulas& formulas,
                         const HankelPoly& h3, const HankelPoly& h2) {
    out << "class " << class_name(formulas.cls) << "\n";
    for (int n = 2; n <= 5; ++n)
        out << "  a" << n << " = " << formulas.coefficient(n).to_string() << "\n";
    out << "  H3(1) = (" << rational_to_string(h3.scale) << ") * [" << h3.poly.to_string() << "]\n";
    out << "  H2(2) = (" << rational_to_string(h2.scale) << ") * [" << h2.poly.to_string() << "]\n";
}

void write_sample_csv(std::ostream& out, const SearchResult& result) {
    out << "re_c1,im_c1,re_c2,im_c2,re_c3,im_c3,re_c4,im_c4,r2,r4,abs_h3,provenance,seed\n";
    out << std::setprecision(17);
    for (const auto& [sample, value] : result.log) {
        const auto res = carlson_residuals(sample);
        for (const auto& c : sample.c) out << c.real() << "," << c.imag() << ",";
        out << res.r2 << "," << res.r4 << "," << value << ",\"" << sample.provenance << "\","
            << sample.seed << "\n";
    }
}

void write_edge_csv(std::ostream& out, const std::vector<MaxCertificate>& certs) {
    out << "polynomial,region,upper,lower,witness_x,witness_y,boxes,complete\n";
    out << std::setprecision(17);
    for (const auto& c : certs)
        out << c.poly_name << "," << c.region_name << "," << c.upper << "," << c.lower << ","
            << c.witness_x << "," << c.witness_y << "," << c.boxes << ","
            << (c.complete ? "true" : "false") << "\n";
}

}  // namespace hankel
