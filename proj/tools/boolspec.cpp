#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "boolspec/bounds.hpp"
#include "boolspec/config.hpp"
#include "boolspec/constructions.hpp"
#include "boolspec/errors.hpp"
#include "boolspec/harness.hpp"
#include "boolspec/io.hpp"
#include "boolspec/measures.hpp"
#include "boolspec/napdt.hpp"

using namespace boolspec;
using nlohmann::json;

namespace {

struct FamilyArgs {
    std::string family, spec_file, inner_file;
    int n = 0, t = 0, tprime = 0, a = 0, ell = 0, p = 0;

    void add(CLI::App* app) {
        app->add_option("--family", family, "family name (and, parity, bent_ip, addressing, ad_tt, ad_tta, ab, aab, "
                                            "mand, mad, composed)");
        app->add_option("--spec", spec_file, "family spec as JSON");
        app->add_option("--n", n);
        app->add_option("--t", t);
        app->add_option("--tprime", tprime);
        app->add_option("--a", a);
        app->add_option("--ell", ell);
        app->add_option("--p", p);
        app->add_option("--inner", inner_file, "truth-table file of the inner function (composed)");
    }
    bool given() const { return !family.empty() || !spec_file.empty(); }

    FamilySpec build() const {
        if (!spec_file.empty()) {
            std::ifstream in(spec_file);
            if (!in) throw ParseError("cannot open " + spec_file);
            json j;
            try {
                in >> j;
            } catch (const json::exception& e) {
                throw ParseError(spec_file + ": " + e.what());
            }
            return family_from_json(j);
        }
        FamilySpec s;
        s.family = parse_family(family);
        s.n = n;
        s.t = t;
        s.tprime = tprime;
        s.a = a;
        s.ell = ell;
        s.p = p;
        if (!inner_file.empty())
            s.inner = std::make_shared<const BooleanFunction>(read_truth_table_file(inner_file));
        validate(s);
        return s;
    }
};

// Writes to the named file, or stdout for "" and "-".
template <class F>
void emit(const std::string& path, F&& write) {
    if (path.empty() || path == "-") {
        write(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    write(out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Fourier measures of Boolean functions"};
    app.require_subcommand(1);

    auto* analyze = app.add_subcommand("analyze", "profile and bound report as JSON");
    std::string an_input, an_out;
    bool an_spectrum = false;
    FamilyArgs an_family;
    analyze->add_option("--input", an_input, "truth-table file");
    an_family.add(analyze);
    analyze->add_option("--out", an_out, "output JSON (default stdout)");
    analyze->add_flag("--spectrum", an_spectrum, "include the nonzero coefficients");

    auto* verify = app.add_subcommand("verify", "run a claim-verification suite");
    std::string suite = "all", failures_path, report_path;
    SuiteOptions opts;
    auto names = suite_names();
    names.push_back("all");
    verify->add_option("--suite", suite)->check(CLI::IsMember(names));
    verify->add_option("--max-n", opts.max_n)->check(CLI::Range(0, 10));
    verify->add_option("--samples", opts.samples)->check(CLI::Range(0, 1000000));
    verify->add_option("--seed", opts.seed);
    verify->add_option("--failures", failures_path, "deterministic failure JSON");
    verify->add_option("--report", report_path, "summary JSON with notes and timings");

    auto* scan_cmd = app.add_subcommand("scan", "frontier CSV over functions of n variables");
    int sc_n = 4, sc_samples = 0;
    std::uint64_t sc_seed = 1;
    std::string sc_out;
    bool sc_serial = false;
    scan_cmd->add_option("--n", sc_n)->required()->check(CLI::Range(0, 6));
    scan_cmd->add_option("--samples", sc_samples, "random sample size (0 = all functions, n <= 4)");
    scan_cmd->add_option("--seed", sc_seed);
    scan_cmd->add_option("--out", sc_out)->required();
    scan_cmd->add_flag("--serial", sc_serial, "disable threading");

    auto* napdt_cmd = app.add_subcommand("napdt", "parity-fixing restriction algorithm");
    std::string np_input, np_mode = "exact", np_trace;
    napdt_cmd->add_option("--input", np_input)->required();
    napdt_cmd->add_option("--mode", np_mode)->check(CLI::IsMember({"exact", "greedy"}));
    napdt_cmd->add_option("--trace", np_trace, "trace JSON (default stdout)");

    auto* construct = app.add_subcommand("construct", "emit a family member as a truth table");
    FamilyArgs co_family;
    std::string co_out, co_spec_out;
    co_family.add(construct);
    construct->add_option("--out", co_out, "truth-table file (default stdout)");
    construct->add_option("--spec-out", co_spec_out, "also write the spec as JSON");

    auto* witness_cmd = app.add_subcommand("witness", "instantiate a frontier witness and measure it");
    std::string wi_kind;
    double wi_rho = 0, wi_kappa = 0, wi_aux = 0, wi_factor = 8;
    std::string wi_out;
    witness_cmd->add_option("--kind", wi_kind)->required()->check(
        CLI::IsMember({"kline", "kprime_curve", "kdprime_curve", "kdprime_line"}));
    witness_cmd->add_option("--rho", wi_rho)->required();
    witness_cmd->add_option("--kappa", wi_kappa)->required();
    witness_cmd->add_option("--aux", wi_aux, "target k' or k''")->required();
    witness_cmd->add_option("--factor", wi_factor);
    witness_cmd->add_option("--out", wi_out);

    auto* plot = app.add_subcommand("plotdata", "curve CSV for the frontier figures");
    std::string pl_kind = "kprime", pl_out;
    double pl_rho = 0, pl_kappa = 0;
    int pl_points = 64;
    plot->add_option("--kind", pl_kind)->check(CLI::IsMember({"kprime", "kdprime"}));
    plot->add_option("--rho", pl_rho)->required();
    plot->add_option("--kappa", pl_kappa)->required();
    plot->add_option("--points", pl_points)->check(CLI::Range(2, 100000));
    plot->add_option("--out", pl_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*analyze) {
            if (an_input.empty() == !an_family.given()) {
                std::cerr << "analyze: give exactly one of --input or --family/--spec\n";
                return 2;
            }
            json j;
            SparseSpectrum sp;
            SpectralProfile prof;
            if (!an_input.empty()) {
                auto f = read_truth_table_file(an_input);
                sp = to_sparse(wht(f));
                prof = profile(sp);
                prof.degf2 = f2_degree(f);
            } else {
                auto s = an_family.build();
                j["spec"] = to_json(s);
                sp = spectrum_of(s);
                prof = measure(s);
            }
            j["profile"] = to_json(prof);
            j["bounds"] = to_json(bound_report(sp, prof));
            if (an_spectrum) {
                json terms = json::array();
                for (const auto& t : sp.terms) terms.push_back({{"mask", to_hex(t.mask)}, {"fhat", rational_json(t.value)}});
                j["spectrum"] = terms;
            }
            emit(an_out, [&](std::ostream& o) { o << j.dump(2) << "\n"; });
            return 0;
        }
        if (*verify) {
            auto results = run_suite(suite, opts);
            bool ok = true;
            json failures = json::array(), report = json::array();
            for (const auto& r : results) {
                ok &= r.passed();
                std::cout << r.name << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.cases << " cases, "
                          << r.failures.size() << " failures, " << r.seconds << " s)\n";
                for (const auto& note : r.notes) std::cout << "  note: " << note << "\n";
                std::size_t shown = 0;
                for (const auto& f : r.failures) {
                    if (++shown > 10) break;
                    std::cout << "  fail: " << f.function << " " << f.check << " lhs=" << f.lhs << " rhs=" << f.rhs
                              << "\n";
                }
                failures.push_back(failure_json(r));
                report.push_back(summary_json(r));
            }
            if (!failures_path.empty()) emit(failures_path, [&](std::ostream& o) { o << failures.dump(2) << "\n"; });
            if (!report_path.empty()) emit(report_path, [&](std::ostream& o) { o << report.dump(2) << "\n"; });
            return ok ? 0 : 1;
        }
        if (*scan_cmd) {
            auto rows = scan(sc_n, sc_samples, sc_seed, !sc_serial);
            int bad = 0;
            for (const auto& r : rows) bad += r.failed_checks > 0;
            emit(sc_out, [&](std::ostream& o) { write_scan_csv(o, rows); });
            std::cerr << rows.size() << " rows, " << bad << " with failed checks\n";
            return bad == 0 ? 0 : 1;
        }
        if (*napdt_cmd) {
            auto f = read_truth_table_file(np_input);
            auto tr = napdt(f, np_mode == "exact" ? NapdtMode::Exact : NapdtMode::Greedy);
            emit(np_trace, [&](std::ostream& o) { o << to_json(tr).dump(2) << "\n"; });
            return 0;
        }
        if (*construct) {
            if (!co_family.given()) {
                std::cerr << "construct: --family or --spec is required\n";
                return 2;
            }
            auto s = co_family.build();
            auto f = make(s);
            emit(co_out, [&](std::ostream& o) { write_truth_table(o, f); });
            if (!co_spec_out.empty()) emit(co_spec_out, [&](std::ostream& o) { o << to_json(s).dump(2) << "\n"; });
            return 0;
        }
        if (*witness_cmd) {
            auto plan = witness(parse_witness(wi_kind), wi_rho, wi_kappa, wi_aux, wi_factor);
            auto p = measure(plan.spec);
            const double aux = plan.aux_is_kdprime ? p.kdprime.to_double() : p.kprime.to_double();
            auto range = [](const Range& r) { return json::array({r.lo, r.hi}); };
            json j{{"spec", to_json(plan.spec)},
                   {"profile", to_json(p)},
                   {"ranges", {{"r", range(plan.r)}, {"k", range(plan.k)}, {"aux", range(plan.aux)},
                               {"delta", range(plan.delta)}}},
                   {"inside",
                    plan.r.contains(p.r) && plan.k.contains(double(p.k)) && plan.aux.contains(aux) &&
                        plan.delta.contains(p.delta.to_double())}};
            emit(wi_out, [&](std::ostream& o) { o << j.dump(2) << "\n"; });
            return j["inside"].get<bool>() ? 0 : 1;
        }
        if (*plot) {
            emit(pl_out, [&](std::ostream& o) {
                write_plotdata(o, pl_kind == "kprime" ? PlotKind::KPrime : PlotKind::KdPrime, pl_rho, pl_kappa,
                               pl_points);
            });
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
