// Command-line surface: model inspection, verification reports, the torus
// cohomological-equation solver, and the full verification suite.
//
// Exit codes: 0 pass, 1 verification failure or unresolved obstruction,
// 2 usage error, 3 solver resonance.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "flowforms/report.hpp"

using namespace flowforms;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResonance = 3;

FormModel resolve_model(const std::string& name, const std::string& file, int n, long genus) {
    if (!file.empty()) return load_model_file(file);
    return instantiate_by_name(name, n, genus);
}

int cmd_models_list() {
    for (const auto& name : builtin_model_names()) std::cout << name << "\n";
    return kExitOk;
}

int cmd_models_show(const std::string& name, int n, long genus) {
    FormModel m = instantiate_by_name(name, n, genus);
    std::cout << "model: " << m.name << "\n";
    std::cout << "generators:";
    for (const auto& g : m.generator_names) std::cout << " " << g;
    std::cout << "\n";
    if (m.field && !m.field->symbols.empty()) {
        std::cout << "symbols:";
        for (const auto& s : m.field->symbols) std::cout << " " << s;
        std::cout << "\n";
    }
    for (int i = 0; i < m.dimension(); ++i)
        std::cout << "d" << m.generator_names[i] << " = "
                  << m.calc.d_values()[i].to_string(m.generator_names) << "\n";
    for (int i = 0; i < m.dimension(); ++i)
        std::cout << "i_X(" << m.generator_names[i]
                  << ") = " << m.calc.iX_values()[i].to_string(m.field->symbols) << "\n";
    if (m.betti) {
        std::cout << "betti:";
        for (auto b : *m.betti) std::cout << " " << b;
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_report(const FormModel& m, const ReportOptions& opts, const std::string& format) {
    Json r = build_model_report(m, opts);
    Json out;
    out["artifact_version"] = kVersion;
    out["schema_version"] = 1;
    out["genus"] = opts.genus;
    out["seed"] = opts.seed;
    out["report"] = r;
    out["pass"] = r["pass"];
    std::cout << render_report(out, format);
    return r["pass"].get<bool>() ? kExitOk : kExitVerificationFailure;
}

int cmd_solve(const std::string& alpha_text, const std::string& coeffs, bool subtract_mean,
              const std::string& out_path, const std::string& format) {
    SlopeSpec alpha = SlopeSpec::parse(alpha_text);
    FourierSeries g = FourierSeries::load(coeffs);
    if (subtract_mean) g.terms.erase({0, 0});
    FourierSeries f;
    SolveDiagnostics diag;
    std::tie(f, diag) = solve_cohomological(alpha, g, subtract_mean);
    diag.residual = residual(alpha, f, g);
    Json out;
    out["alpha"] = alpha.text;
    out["alpha_value"] = alpha.value();
    out["rational_slope"] = alpha.is_rational();
    out["solution"] = f.to_json();
    out["diagnostics"] = {{"min_denominator", diag.min_denominator},
                          {"min_frequency", {diag.min_m, diag.min_n}},
                          {"max_amplification", diag.max_amplification},
                          {"obstruction", {diag.obstruction.real(), diag.obstruction.imag()}},
                          {"mean_subtracted", diag.mean_subtracted},
                          {"residual", diag.residual}};
    if (!out_path.empty()) {
        std::ofstream os(out_path);
        os << out.dump(2) << "\n";
        std::cout << "wrote " << out_path << " (residual " << diag.residual << ")\n";
    } else {
        std::cout << render_report(out, format);
    }
    return kExitOk;
}

int cmd_verify_all(const ReportOptions& opts, const std::string& format) {
    Json r = build_verify_all(opts);
    std::cout << render_report(r, format);
    return r["pass"].get<bool>() ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"flowforms: exterior calculus and cohomology of flows on finite form models"};
    app.require_subcommand(1);

    auto* models = app.add_subcommand("models", "inspect the built-in models");
    models->require_subcommand(1);
    models->add_subcommand("list", "list built-in model names");
    auto* show = models->add_subcommand("show", "print the structure data of one model");
    std::string show_name;
    int show_n = 2;
    long show_genus = 2;
    show->add_option("name", show_name, "model name")->required();
    show->add_option("--n", show_n, "torus dimension");
    show->add_option("--genus", show_genus, "surface genus for sl2 models");

    auto* report = app.add_subcommand("report", "full verification report for one model");
    std::string report_model = "torus", report_file, report_format = "text";
    int report_n = 2;
    ReportOptions report_opts;
    report->add_option("--model", report_model, "built-in model name");
    report->add_option("--model-file", report_file, "load a custom model from a JSON file");
    report->add_option("--n", report_n, "torus dimension");
    report->add_option("--genus", report_opts.genus, "surface genus for sl2 models (default 2)");
    report->add_option("--seed", report_opts.seed, "seed for randomized checks");
    report->add_option("--numeric-samples", report_opts.numeric_samples,
                       "sample points per numeric cross-check");
    report->add_option("--step", report_opts.fd_step, "finite-difference step for the Lie checks");
    report->add_option("--tolerance", report_opts.numeric_tol,
                       "tolerance for the numeric cross-checks");
    report->add_option("--format", report_format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));
    report->add_flag("!--no-numeric", report_opts.numeric, "skip numeric sl2 cross-checks");

    auto* solve = app.add_subcommand("solve-torus", "solve (d/dx + alpha d/dy) f = g on T^2");
    std::string alpha_text, coeffs_path, solve_out, solve_format = "text";
    bool subtract_mean = false;
    solve->add_option("--alpha", alpha_text,
                      "slope: golden | liouville[:K] | p/q | decimal | surd:a:b:d:c")
        ->required();
    solve->add_option("--coeffs", coeffs_path, "input series JSON file")->required();
    solve->add_flag("--subtract-mean", subtract_mean, "project away a nonzero mean");
    solve->add_option("--out", solve_out, "write the solution JSON here");
    solve->add_option("--format", solve_format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* verify = app.add_subcommand("verify-all", "run the full verification suite");
    ReportOptions verify_opts;
    std::string verify_format = "text";
    verify->add_option("--seed", verify_opts.seed, "seed for randomized checks");
    verify->add_option("--genus", verify_opts.genus, "surface genus for sl2 models");
    verify->add_option("--samples", verify_opts.property_pairs, "random pairs per property suite");
    verify->add_option("--series", verify_opts.fourier_series, "random Fourier series count");
    verify->add_option("--numeric-samples", verify_opts.numeric_samples,
                       "sample points per numeric cross-check");
    verify->add_option("--step", verify_opts.fd_step, "finite-difference step for the Lie checks");
    verify->add_option("--tolerance", verify_opts.numeric_tol,
                       "tolerance for the numeric cross-checks");
    verify->add_option("--format", verify_format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--inject-fault", verify_opts.inject_fault,
                       "test mode: corrupt a named check (operator-table | sequence)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (models->parsed()) {
            if (models->get_subcommand("list")->parsed()) return cmd_models_list();
            return cmd_models_show(show_name, show_n, show_genus);
        }
        if (report->parsed()) {
            FormModel m = resolve_model(report_model, report_file, report_n, report_opts.genus);
            return cmd_report(m, report_opts, report_format);
        }
        if (solve->parsed())
            return cmd_solve(alpha_text, coeffs_path, subtract_mean, solve_out, solve_format);
        if (verify->parsed()) return cmd_verify_all(verify_opts, verify_format);
    } catch (const ResonanceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResonance;
    } catch (const ObstructionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailure;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailure;
    }
    return kExitUsage;
}
