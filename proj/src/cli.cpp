#include "uin/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>

#include "uin/json_io.hpp"
#include "uin/opmodel.hpp"
#include "uin/suites.hpp"
#include "uin/uinorm.hpp"

namespace uin {

namespace {

std::string format_double(double v) { return nlohmann::json(v).dump(); }

SymmetricNorm norm_from_flags(const std::string& family, std::size_t n, const std::string& p,
                              std::size_t k, const std::vector<double>& c, double gamma) {
    auto parse_p = [&]() -> double {
        if (p == "inf" || p == "Inf" || p == "infinity")
            return std::numeric_limits<double>::infinity();
        return std::stod(p);
    };
    if (family == "lp") return SymmetricNorm::lp(n, parse_p());
    if (family == "kyfan") return SymmetricNorm::ky_fan(n, k);
    if (family == "cnorm") return SymmetricNorm::c_norm(c);
    if (family == "cpnorm") return SymmetricNorm::cp_norm(c, parse_p());
    if (family == "scaled_linf") return SymmetricNorm::scaled_linf(n, gamma);
    throw ParseError("unsupported --family (use a norm file for maxc): " + family);
}

void write_or_print(const nlohmann::json& j, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << j.dump(2) << "\n";
    } else {
        std::ofstream f(out_path);
        if (!f) throw ParseError("cannot write: " + out_path);
        f << j.dump(2) << "\n";
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"symmetric-gauge operator norms on finite-block-plus-scalar-tail operators"};
    app.require_subcommand(1);

    // sv
    std::string sv_file;
    std::size_t sv_n = 1;
    auto* sv = app.add_subcommand("sv", "print the top n singular values of an operator file");
    sv->add_option("operator", sv_file, "operator JSON file")->required();
    sv->add_option("-n,--n", sv_n, "number of singular values")->required();

    // norm
    std::string norm_op_file, norm_norm_file;
    auto* nrm = app.add_subcommand("norm", "evaluate a gauge norm of an operator");
    nrm->add_option("operator", norm_op_file, "operator JSON file")->required();
    nrm->add_option("norm", norm_norm_file, "norm JSON file")->required();

    // radius
    std::string rad_file;
    auto* rad = app.add_subcommand("radius", "numerical radius of an operator");
    rad->add_option("operator", rad_file, "operator JSON file")->required();

    // verify
    std::string suite, out_path, family, p_flag = "2";
    RunConfig cfg;
    std::size_t flag_n = 4, flag_k = 2;
    std::vector<double> flag_c;
    double flag_gamma = 0.5;
    std::string norm_file;
    auto* ver = app.add_subcommand("verify", "run a certification suite");
    ver->add_option("suite", suite, "one of: radius-sandwich uniform submult triple "
                                    "product-equality cnorm-corollary trace-psd "
                                    "flat-decomposition isometry")
        ->required();
    ver->add_option("--seed", cfg.seed, "PRNG seed (reports are reproducible per seed)");
    ver->add_option("--tol", cfg.tol, "certificate tolerance");
    ver->add_option("--samples", cfg.samples, "sample count override (0 = suite default)");
    ver->add_option("--out", out_path, "write the report JSON here instead of stdout");
    ver->add_flag("--paper-examples", cfg.reference_examples,
                  "include the bundled worked-example reproductions");
    ver->add_flag("--probe", cfg.run_probe, "run the decomposition search probe");
    ver->add_option("--restarts", cfg.restarts, "search probe restart budget");
    ver->add_option("--family", family, "gauge family: lp kyfan cnorm cpnorm scaled_linf");
    ver->add_option("--n", flag_n, "gauge arity for --family");
    ver->add_option("--p", p_flag, "p for lp/cpnorm (number or 'inf')");
    ver->add_option("--k", flag_k, "k for kyfan");
    ver->add_option("--c", flag_c, "weights for cnorm/cpnorm")->delimiter(',');
    ver->add_option("--gamma", flag_gamma, "gamma for scaled_linf");
    ver->add_option("--norm-file", norm_file, "norm JSON file (any family, overrides --family)");

    // examples
    std::string ex_out;
    auto* ex = app.add_subcommand("examples",
                                  "recompute the bundled worked-example quantities");
    ex->add_option("--out", ex_out, "also write the table as JSON");

    std::vector<const char*> argv;
    argv.push_back("uin");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*sv) {
            const TailOperator a = load_operator_file(sv_file);
            if (sv_n == 0) throw ParseError("n must be positive");
            out << nlohmann::json(singular_values(a, sv_n).values).dump() << "\n";
            return 0;
        }
        if (*nrm) {
            const TailOperator a = load_operator_file(norm_op_file);
            const SymmetricNorm f = load_norm_file(norm_norm_file);
            out << format_double(norm_f(a, f)) << "\n";
            return 0;
        }
        if (*rad) {
            out << format_double(numerical_radius(load_operator_file(rad_file))) << "\n";
            return 0;
        }
        if (*ver) {
            if (!norm_file.empty())
                cfg.family = load_norm_file(norm_file);
            else if (!family.empty())
                cfg.family = norm_from_flags(family, flag_n, p_flag, flag_k, flag_c, flag_gamma);
            const SuiteReport report = run_suite(suite, cfg);
            write_or_print(report_json(report), out_path, out);
            if (!out_path.empty()) {
                std::size_t violated = 0;
                for (const auto& c : report.certificates) violated += c.violated();
                out << report.suite << ": " << report.certificates.size() << " certificates, "
                    << (report.all_hold ? "all hold" : std::to_string(violated) + " violated")
                    << "\n";
            }
            return report.all_hold ? 0 : 1;
        }
        if (*ex) {
            const auto rows = reference_example_rows();
            bool ok = true;
            std::size_t width = 0;
            for (const auto& r : rows) width = std::max(width, r.quantity.size());
            out << std::left << std::setw(static_cast<int>(width)) << "quantity"
                << "  reference     computed      |delta|\n";
            nlohmann::json jrows = nlohmann::json::array();
            for (const auto& r : rows) {
                const double d = r.delta();
                ok = ok && d <= 1e-9;
                out << std::left << std::setw(static_cast<int>(width)) << r.quantity << "  "
                    << std::setw(12) << format_double(r.expected) << "  " << std::setw(12)
                    << format_double(r.computed) << "  " << std::scientific
                    << std::setprecision(2) << d << std::defaultfloat << "\n";
                jrows.push_back({{"quantity", r.quantity},
                                 {"reference", r.expected},
                                 {"computed", r.computed},
                                 {"delta", d}});
            }
            out << (ok ? "all quantities reproduced" : "DEVIATION FOUND") << "\n";
            if (!ex_out.empty())
                write_or_print({{"rows", jrows}, {"all_reproduced", ok}}, ex_out, out);
            return ok ? 0 : 1;
        }
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "no subcommand\n";
    return 2;
}

}  // namespace uin
