// torsionpoly: torsion polynomials of homology spheres from 1/n-surgery
// along torus knots.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input,
// 3 internal math invariant violation.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "torsionpoly/output.hpp"
#include "torsionpoly/verify.hpp"

using namespace torsionpoly;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitInternal = 3;

mpfr_prec_t default_precision() {
    if (const char* env = std::getenv("TORSIONPOLY_PRECISION")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 24) return static_cast<mpfr_prec_t>(v);
    }
    return 128;
}

int run_compute(int p, int q, int n, bool json, bool latex, bool scaled, mpfr_prec_t prec,
                const std::string& cache_file) {
    const auto d = make_descriptor(p, q, n);
    const auto tp = sigma(d);
    const auto rec = make_record(tp, scaled, /*include_classes=*/false, prec);

    if (json) {
        std::cout << to_json(rec) << "\n";
    } else if (latex) {
        std::cout << to_latex(scaled ? scale_by_four(tp.sigma) : tp.sigma) << "\n";
    } else {
        std::cout << (scaled ? scale_by_four(tp.sigma) : tp.sigma).to_string("t") << "\n";
    }
    if (!cache_file.empty()) {
        std::ofstream out(cache_file, std::ios::app);
        out << to_json(rec) << "\n";
    }
    return kExitOk;
}

int run_reps(int p, int q, int n, bool all, bool json, mpfr_prec_t prec) {
    const auto d = make_descriptor(p, q, n);
    if (n == 0) {
        if (json)
            std::cout << "{\"p\":" << p << ",\"q\":" << q << ",\"n\":0,\"classes\":[],\"note\":\"S^3\"}\n";
        else
            std::cout << "no irreducible classes: M_0 = S^3\n";
        return kExitOk;
    }
    const auto reps = enumerate_reps(d);
    if (json) {
        const auto tp = sigma(d);
        std::cout << to_json(make_record(tp, false, /*include_classes=*/true, prec)) << "\n";
        return kExitOk;
    }
    std::cout << "a  b  k    tr(x)      tr(y)      tr(m)      1/torsion\n";
    for (const auto& r : reps) {
        if (!all && !r.acyclic) continue;
        char line[160];
        if (r.acyclic)
            std::snprintf(line, sizeof line, "%-2d %-2d %-4d %-10.6f %-10.6f %-10.6f %.9f", r.a, r.b, r.k,
                          r.trace_x, r.trace_y, r.trace_m, inverse_torsion(d, r, prec).to_double());
        else
            std::snprintf(line, sizeof line, "%-2d %-2d %-4d %-10.6f %-10.6f %-10.6f (non-acyclic)", r.a,
                          r.b, r.k, r.trace_x, r.trace_y, r.trace_m);
        std::cout << line << "\n";
    }
    return kExitOk;
}

void print_suite(const SuiteResult& res) {
    for (const auto& line : res.lines) std::cout << "  " << line << "\n";
    std::cout << "suite " << res.name << ": " << (res.pass ? "PASS" : "FAIL") << "\n";
}

int run_verify(const std::string& suite, int p, int q, const GridSpec& grid, mpfr_prec_t prec) {
    bool all_pass = true;
    auto run = [&](const SuiteResult& res) {
        print_suite(res);
        all_pass = all_pass && res.pass;
    };
    const bool single_pq = p > 0 && q > 0;

    if (suite == "fixtures" || suite == "all") run(verify_fixtures(prec));
    if (suite == "normalization" || suite == "all")
        run(single_pq ? verify_normalization(GridSpec::single_pair(p, q, grid.nmax)) : verify_normalization(grid));
    if (suite == "degree" || suite == "all")
        run(single_pq ? verify_degree(GridSpec::single_pair(p, q, grid.nmax)) : verify_degree(grid));
    if (suite == "relation" || suite == "all")
        run(single_pq ? verify_relation(p, q, grid.nmax) : verify_relation_grid(grid));
    if (suite == "oracle" || suite == "all")
        run(single_pq ? verify_oracle(GridSpec::single_pair(p, q, grid.nmax), prec) : verify_oracle(grid, prec));

    return all_pass ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Torsion polynomials of 1/n-surgeries along torus knots"};
    app.require_subcommand(1);
    const mpfr_prec_t env_prec = default_precision();

    int p = 0, q = 0, n = 0;
    long precision = static_cast<long>(env_prec);
    bool json = false, latex = false, scaled = false, all = false;
    std::string cache_file, suite = "all", grid_str;

    auto* compute = app.add_subcommand("compute", "Compute sigma_(p,q,n)(t)");
    compute->add_option("--p", p)->required();
    compute->add_option("--q", q)->required();
    compute->add_option("--n", n)->required();
    compute->add_flag("--json", json);
    compute->add_flag("--latex", latex);
    compute->add_flag("--scaled", scaled, "Emit the t -> 4t variant used in the literature");
    compute->add_option("--precision", precision, "Significand bits for numeric fields");
    compute->add_option("--cache", cache_file, "Append the JSON record to this file");

    auto* reps = app.add_subcommand("reps", "List representation classes");
    reps->add_option("--p", p)->required();
    reps->add_option("--q", q)->required();
    reps->add_option("--n", n)->required();
    reps->add_flag("--all", all, "Include non-acyclic classes");
    reps->add_flag("--json", json);
    reps->add_option("--precision", precision);

    auto* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("--suite", suite)
        ->check(CLI::IsMember({"normalization", "degree", "relation", "oracle", "fixtures", "all"}));
    verify->add_option("--p", p);
    verify->add_option("--q", q);
    verify->add_option("--grid", grid_str, "pmax,qmax,nmax (default 7,7,2)");
    verify->add_option("--precision", precision);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    try {
        const auto prec = static_cast<mpfr_prec_t>(precision);
        if (compute->parsed()) return run_compute(p, q, n, json, latex, scaled, prec, cache_file);
        if (reps->parsed()) return run_reps(p, q, n, all, json, prec);
        GridSpec grid;
        if (!grid_str.empty()) {
            if (std::sscanf(grid_str.c_str(), "%d,%d,%d", &grid.pmax, &grid.qmax, &grid.nmax) != 3 ||
                grid.pmax < 2 || grid.qmax < 2 || grid.nmax < 0) {
                std::cerr << "error: bad --grid, expected pmax,qmax,nmax\n";
                return kExitBadInput;
            }
        }
        return run_verify(suite, p, q, grid, prec);
    } catch (const NonRationalCoefficient& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const NonIntegerCoefficient& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const DegenerateDenominator& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
}
