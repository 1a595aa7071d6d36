#pragma once

#include <string>
#include <vector>

#include "torsionpoly/bigfloat.hpp"
#include "torsionpoly/intpoly.hpp"
#include "torsionpoly/torsion.hpp"

namespace torsionpoly {

struct LengthMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The multiset {1/torsion} over all acyclic classes; these are exactly
/// the zeros sigma must have.
struct RootMultiset {
    std::vector<BigFloat> roots;
    SurgeryDescriptor descriptor;
    mpfr_prec_t precision = 128;
};

RootMultiset collect_roots(const SurgeryDescriptor& d, mpfr_prec_t precision = 128);

/// Coefficients (ascending) of leading * prod (t - r_i), expanded in
/// floating point at the multiset's precision.
std::vector<BigFloat> reconstruct(const RootMultiset& ms, const Int& leading);

struct CompareReport {
    bool pass = false;
    double max_rel_error = 0.0;
    int worst_index = -1;
};

/// Per-coefficient relative comparison of an exact polynomial against a
/// floating reconstruction. Coefficients that are exactly zero are held to
/// rel_tol * max |coeff| in absolute terms.
CompareReport compare(const IntPoly& exact, const std::vector<BigFloat>& approx, double rel_tol);

}  // namespace torsionpoly
