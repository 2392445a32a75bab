// calibra - numerical certification of the Poisson-kernel calibration
// apparatus on products of hyperbolic planes.
//
// Commands:
//   verify  - run a named check suite and write a JSON report
//   bounds  - bound calculators (minvol, degree)
//   scan    - enumerate Fourier coefficients of the marginal cochain
//   comass  - search orthonormal frames for the comass maximum
//
// Exit codes: 0 pass, 1 check failure, 2 usage error.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

#include "calibra/bounds.hpp"
#include "calibra/suite.hpp"

namespace {

bool write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) {
        std::cerr << "error: cannot write " << path << "\n";
        return false;
    }
    out << content;
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"calibra - calibration identities on products of hyperbolic planes"};
    app.require_subcommand(1);

    // verify
    std::string suite = "all", budget = "full", verify_out;
    int verify_n = 1;
    std::uint64_t verify_seed = 42;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "cocycle | fourier | comass | embedding | all")->required();
    verify->add_option("--n", verify_n, "number of hyperbolic plane factors")->check(CLI::Range(1, 3));
    verify->add_option("--seed", verify_seed, "RNG seed");
    verify->add_option("--budget", budget, "quick | full")
        ->check(CLI::IsMember({"quick", "full"}));
    verify->add_option("--out", verify_out, "write the JSON report here");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "volume and degree bound calculators");
    bounds->require_subcommand(1);

    int mv_n = 1;
    double mv_vol = 1.0;
    auto* minvol = bounds->add_subcommand("minvol", "minimal volume lower bound");
    minvol->add_option("--n", mv_n, "number of factors")->required()->check(CLI::PositiveNumber);
    minvol->add_option("--vol", mv_vol, "volume of the locally symmetric metric")
        ->required()
        ->check(CLI::PositiveNumber);

    int dg_n = 1;
    double dg_h = 1.0, dg_vol_y = 1.0, dg_vol_m = 1.0;
    auto* degree = bounds->add_subcommand("degree", "maximal mapping degree");
    degree->set_help_flag("--help", "print help");  // frees -h/--h for the entropy input
    degree->add_option("--n", dg_n, "number of factors")->required()->check(CLI::PositiveNumber);
    degree->add_option("--h", dg_h, "volume entropy of the domain metric")
        ->required()
        ->check(CLI::PositiveNumber);
    degree->add_option("--vol-y", dg_vol_y, "volume of the domain")->required()->check(CLI::PositiveNumber);
    degree->add_option("--vol-m", dg_vol_m, "volume of the target")->required()->check(CLI::PositiveNumber);

    // scan
    int scan_n = 1, scan_kmax = 2;
    std::string scan_out, scan_csv, scan_phases = "all";
    auto* scan = app.add_subcommand("scan", "Fourier coefficient scan");
    scan->add_option("--n", scan_n, "number of factors")->check(CLI::Range(1, 2));
    scan->add_option("--kmax", scan_kmax, "frequency bound")->check(CLI::Range(1, 3));
    scan->add_option("--phases", scan_phases, "all | alternating")
        ->check(CLI::IsMember({"all", "alternating"}));
    scan->add_option("--out", scan_out, "write the JSON report here");
    scan->add_option("--csv", scan_csv, "write the CSV table here");

    // comass
    int cm_n = 1, cm_kmax = 2, cm_restarts = 10;
    std::uint64_t cm_seed = 42;
    std::string cm_out;
    auto* comass = app.add_subcommand("comass", "comass search over orthonormal frames");
    comass->add_option("--n", cm_n, "number of factors")->check(CLI::Range(1, 3));
    comass->add_option("--kmax", cm_kmax, "frequency bound of the search space")->check(CLI::Range(1, 3));
    comass->add_option("--restarts", cm_restarts, "number of restarts")->check(CLI::PositiveNumber);
    comass->add_option("--seed", cm_seed, "RNG seed");
    comass->add_option("--out", cm_out, "write the JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) {
            const auto report = calibra::run_suite(suite, verify_n, verify_seed, budget);
            const std::string json = calibra::to_json(report);
            if (!verify_out.empty() && !write_file(verify_out, json)) return 2;
            for (const auto& c : report.checks)
                std::printf("%-28s %-4s value=%.6g expected=%.6g tol=%.3g (%.0f ms)\n",
                            c.name.c_str(), c.pass ? "ok" : "FAIL", c.value, c.expected,
                            c.tolerance, c.runtime_ms);
            std::printf("suite %s (n=%d, %s): %s in %.1f s\n", report.suite.c_str(), report.n,
                        report.budget.c_str(), report.overall() ? "PASS" : "FAIL",
                        report.total_runtime_ms / 1000.0);
            return report.overall() ? 0 : 1;
        }

        if (minvol->parsed()) {
            std::printf("%.17g\n", calibra::minvol_bound(mv_n, mv_vol));
            return 0;
        }
        if (degree->parsed()) {
            std::printf("%lld\n",
                        static_cast<long long>(calibra::degree_bound(dg_n, dg_h, dg_vol_y, dg_vol_m)));
            return 0;
        }

        if (scan->parsed()) {
            const auto report = calibra::scan_fourier(
                scan_n, scan_kmax,
                scan_phases == "all" ? calibra::PhaseSet::all : calibra::PhaseSet::alternating);
            if (!scan_out.empty() && !write_file(scan_out, calibra::to_json(report))) return 2;
            if (!scan_csv.empty() && !write_file(scan_csv, calibra::to_csv(report))) return 2;
            std::printf("scan n=%d kmax=%d phases=%s: %zu entries, %lld nonzero, "
                        "pattern error %.3g, off-pattern %.3g -> %s\n",
                        report.n, report.kmax, scan_phases.c_str(), report.entries.size(),
                        static_cast<long long>(report.nonzero_count), report.max_pattern_error,
                        report.max_offpattern_value, report.consistent ? "PASS" : "FAIL");
            return report.consistent ? 0 : 1;
        }

        if (comass->parsed()) {
            const auto report = calibra::search(cm_n, cm_kmax, cm_restarts, cm_seed);
            if (!cm_out.empty() && !write_file(cm_out, calibra::to_json(report))) return 2;
            std::printf("comass n=%d kmax=%d: best %.12g, theoretical %.12g, gap %.3g "
                        "(%lld evaluations)\n",
                        cm_n, cm_kmax, report.best_value, report.theoretical, report.gap,
                        static_cast<long long>(report.iterations));
            const bool sound = report.trace_max <= report.theoretical + calibra::tol_comass;
            if (!sound) std::printf("soundness violation: trace max %.12g\n", report.trace_max);
            return sound ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
