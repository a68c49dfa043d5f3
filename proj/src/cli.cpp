#include "hankel/cli.hpp"

#include "hankel/report.hpp"

#include "CLI11.hpp"

#include <sstream>

namespace hankel::cli {

namespace {

std::string join_args(const std::vector<std::string>& args) {
    std::string s = "hankel-audit";
    for (const auto& a : args) {
        s += ' ';
        s += a;
    }
    return s;
}

void build_app(CLI::App& app, Command& cmd) {
    app.name("hankel-audit");
    app.description("verification and certified-optimization toolkit for Hankel determinant bounds");
    app.require_subcommand(1);

    const auto add_class = [&](CLI::App* sub) {
        sub->add_option("--class", cmd.cls, "function class")
            ->required()
            ->check(CLI::IsMember({"r", "r1"}));
    };
    const auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", cmd.format, "output format")
            ->check(CLI::IsMember({"json", "csv", "text"}));
    };
    const auto add_corrupt = [&](CLI::App* sub) {
        sub->add_flag("--selftest-corrupt", cmd.selftest_corrupt,
                      "perturb one registered coefficient to exercise the failure path")
            ->group("");  // hidden
    };

    auto* derive = app.add_subcommand("derive", "derive coefficient formulas and Hankel functionals");
    add_class(derive);
    add_format(derive);

    auto* audit = app.add_subcommand("audit", "re-derive and check every printed identity");
    add_class(audit);
    add_format(audit);
    add_corrupt(audit);

    auto* maximize = app.add_subcommand("maximize", "certified polynomial maximization");
    maximize->add_option("--poly", cmd.poly, "registered polynomial name")->required();
    maximize->add_option("--region", cmd.region, "registered region or edge name")->required();
    maximize->add_option("--tol", cmd.tol, "certification tolerance");
    maximize->add_option("--budget", cmd.budget, "box budget");
    add_format(maximize);

    auto* reproduce = app.add_subcommand("reproduce", "reproduce the theorem bound for a class");
    add_class(reproduce);
    reproduce->add_option("--tol", cmd.tol, "certification tolerance");
    reproduce->add_option("--budget", cmd.budget, "box budget");
    add_format(reproduce);
    add_corrupt(reproduce);

    auto* lemmas = app.add_subcommand("lemmas", "property-test the coefficient lemmas");
    lemmas->add_option("--samples", cmd.samples, "sample count");
    lemmas->add_option("--seed", cmd.seed, "random seed");
    add_format(lemmas);

    auto* explore = app.add_subcommand("explore", "randomized lower-bound exploration");
    add_class(explore);
    explore->add_option("--samples", cmd.samples, "sample count");
    explore->add_option("--seed", cmd.seed, "random seed");
    add_format(explore);
}

void emit_json(std::ostream& out, const std::string& command, nlohmann::json payload) {
    out << envelope_to_json(make_envelope(command, std::move(payload))).dump(2) << "\n";
}

int run_derive(const Command& cmd, const std::string& echo, std::ostream& out) {
    const ClassId cls = class_from_name(cmd.cls);
    const auto formulas = derive_coefficients(cls);
    const auto h3 = hankel3_poly(formulas);
    const auto h2 = hankel2_poly(formulas);
    if (cmd.format == "json") {
        nlohmann::json payload = formulas_to_json(formulas);
        payload["h3"] = hankel_to_json(h3);
        payload["h2"] = hankel_to_json(h2);
        emit_json(out, echo, payload);
    } else {
        print_formulas_text(out, formulas, h3, h2);
    }
    return kOk;
}

int run_audit(const Command& cmd, const std::string& echo, std::ostream& out) {
    const ClassId cls = class_from_name(cmd.cls);
    const auto items = audit_exact_identities(cls, cmd.selftest_corrupt);
    if (cmd.format == "json")
        emit_json(out, echo, nlohmann::json{{"class", class_name(cls)}, {"items", audit_to_json(items)}});
    else
        print_audit_text(out, items);
    for (const auto& it : items)
        if (it.status == AuditStatus::Fail) return kVerificationFailed;
    return kOk;
}

int run_maximize(const Command& cmd, const std::string& echo, std::ostream& out) {
    std::vector<MaxCertificate> certs;
    if (cmd.region == "edges") {
        for (Edge e : {Edge::Y0, Edge::Y1, Edge::X0, Edge::X1})
            certs.push_back(edge_maximize(registered_polynomial(cmd.poly), e, cmd.tol, cmd.budget));
    } else if (cmd.region.rfind("edge-", 0) == 0) {
        certs.push_back(
            edge_maximize(registered_polynomial(cmd.poly), edge_from_name(cmd.region), cmd.tol, cmd.budget));
    } else {
        certs.push_back(bb_maximize(registered_polynomial(cmd.poly), registered_region(cmd.region),
                                    cmd.tol, cmd.budget));
    }
    if (cmd.format == "json") {
        nlohmann::json payload = nlohmann::json::array();
        for (const auto& c : certs) payload.push_back(certificate_to_json(c));
        emit_json(out, echo, certs.size() == 1 ? payload.front() : payload);
    } else if (cmd.format == "csv") {
        write_edge_csv(out, certs);
    } else {
        for (const auto& c : certs) print_certificate_text(out, c);
    }
    for (const auto& c : certs)
        if (!c.complete) return kBudgetExhausted;
    return kOk;
}

int run_reproduce(const Command& cmd, const std::string& echo, std::ostream& out,
                  std::ostream& err) {
    const ClassId cls = class_from_name(cmd.cls);
    if (cmd.selftest_corrupt) {
        const auto items = audit_exact_identities(cls, true);
        for (const auto& it : items)
            if (it.status == AuditStatus::Fail) {
                err << "audit failed: " << it.name << "\n";
                return kVerificationFailed;
            }
    }
    try {
        const TheoremReport report = reproduce_theorem(cls, cmd.tol, cmd.budget);
        if (cmd.format == "json")
            emit_json(out, echo, theorem_report_to_json(report));
        else
            print_theorem_text(out, report);
        for (const auto& it : report.audit)
            if (it.status == AuditStatus::Fail) return kVerificationFailed;
        return kOk;
    } catch (const BudgetExhausted& e) {
        err << e.what() << "\n";
        if (cmd.format == "json")
            emit_json(out, echo, nlohmann::json{{"error", "budget-exhausted"}, {"upper", e.upper}});
        return kBudgetExhausted;
    }
}

int run_lemmas(const Command& cmd, const std::string& echo, std::ostream& out) {
    const LemmaReport report = verify_lemmas(cmd.samples, cmd.seed);
    if (cmd.format == "json")
        emit_json(out, echo, lemma_report_to_json(report));
    else
        print_lemma_text(out, report);
    return report.pass ? kOk : kVerificationFailed;
}

int run_explore(const Command& cmd, const std::string& echo, std::ostream& out) {
    const ClassId cls = class_from_name(cmd.cls);
    const bool keep_log = cmd.format == "csv";
    const SearchResult result = random_search(cls, cmd.samples, cmd.seed, keep_log);
    if (cmd.format == "json")
        emit_json(out, echo, search_result_to_json(result));
    else if (cmd.format == "csv")
        write_sample_csv(out, result);
    else
        print_search_text(out, result);
    const long bad = result.violations + (cls == ClassId::R ? result.h2_violations : 0);
    return bad == 0 ? kOk : kVerificationFailed;
}

}  // namespace

Command parse_args(const std::vector<std::string>& args) {
    Command cmd;
    CLI::App app;
    build_app(app, cmd);
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    cmd.subcommand = app.get_subcommands().front()->get_name();
    return cmd;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Command cmd;
    CLI::App app;
    build_app(app, cmd);
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return kUsageError;
    }
    cmd.subcommand = app.get_subcommands().front()->get_name();
    const std::string echo = join_args(args);

    const bool csv_allowed = cmd.subcommand == "explore" || cmd.subcommand == "maximize";
    if (cmd.format == "csv" && !csv_allowed) {
        err << "csv output is limited to sample logs (explore) and edge-maximum tables (maximize)\n";
        return kUsageError;
    }

    try {
        if (cmd.subcommand == "derive") return run_derive(cmd, echo, out);
        if (cmd.subcommand == "audit") return run_audit(cmd, echo, out);
        if (cmd.subcommand == "maximize") return run_maximize(cmd, echo, out);
        if (cmd.subcommand == "reproduce") return run_reproduce(cmd, echo, out, err);
        if (cmd.subcommand == "lemmas") return run_lemmas(cmd, echo, out);
        if (cmd.subcommand == "explore") return run_explore(cmd, echo, out);
        err << "unknown subcommand\n";
        return kUsageError;
    } catch (const BudgetExhausted& e) {
        err << e.what() << "\n";
        return kBudgetExhausted;
    } catch (const PipelineError& e) {
        err << e.what() << "\n";
        return kVerificationFailed;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kVerificationFailed;
    }
}

}  // namespace hankel::cli
