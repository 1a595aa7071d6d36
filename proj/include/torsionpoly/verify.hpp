#pragma once

#include <functional>
#include <string>
#include <vector>

#include "torsionpoly/oracle.hpp"
#include "torsionpoly/torsion.hpp"

namespace torsionpoly {

struct SuiteResult {
    std::string name;
    bool pass = true;
    std::vector<std::string> lines;  // one per check, "ok ..." / "FAIL ..."

    void check(bool ok, const std::string& what) {
        pass = pass && ok;
        lines.push_back((ok ? "ok   " : "FAIL ") + what);
    }
};

struct GridSpec {
    int pmax = 7;
    int qmax = 7;
    int nmax = 2;
    int pmin = 2;
    int qmin = 2;

    static GridSpec single_pair(int p, int q, int nmax) { return {p, q, nmax, p, q}; }
};

/// Calls fn for every descriptor in the grid: gcd(p,q)=1, 2 <= p <= pmax,
/// 2 <= q <= qmax, 1 <= |n| <= nmax.
void for_each_grid_cell(const GridSpec& grid, const std::function<void(const SurgeryDescriptor&)>& fn);

/// The section-5 reference coefficient lists (ascending, already carrying
/// the documented constant-term and sign corrections). Keys are the four
/// (p,q,n) fixture triples.
struct Fixture {
    int p, q, n;
    std::vector<Int> published_coeffs;  // ascending, in the published t -> 4t scale
};
const std::vector<Fixture>& fixtures();

/// published_coeff_j == 4^j * computed_coeff_j for the four fixtures, with the
/// two typo resolutions adjudicated against the root-product oracle.
SuiteResult verify_fixtures(mpfr_prec_t precision = 128);

/// sigma(0) == normalization_value over the grid; reports sign_corrected
/// occurrences.
SuiteResult verify_normalization(const GridSpec& grid);

/// deg sigma == degree_formula over the grid, plus the two section-5
/// degree spot checks.
SuiteResult verify_degree(const GridSpec& grid);

/// Exact 3-term relation for a single (p,q) over centers |n| <= n_bound.
SuiteResult verify_relation(int p, int q, int n_bound = 2);
/// Same over every coprime (p,q) in the grid.
SuiteResult verify_relation_grid(const GridSpec& grid);

/// Root-product reconstruction matches the exact sigma coefficients at
/// rel_tol 1e-9, fixtures plus grid.
SuiteResult verify_oracle(const GridSpec& grid, mpfr_prec_t precision = 128);

}  // namespace torsionpoly
