#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torsionpoly/torsion.hpp"

namespace torsionpoly {

struct ClassRecord {
    int a = 0;
    int b = 0;
    int k = 0;
    double trace_x = 0.0;
    double trace_y = 0.0;
    double trace_m = 0.0;
    double inv_torsion = 0.0;
};

/// Serialization-facing view of a computed sigma, coefficients as decimal
/// strings (they exceed 64-bit ranges quickly).
struct OutputRecord {
    int p = 0, q = 0, n = 0, N = 0;
    int degree = 0;
    int normalization = 1;
    bool sign_corrected = false;
    std::vector<std::string> coefficients;  // ascending
    std::optional<std::vector<std::string>> scaled_coefficients;  // t -> 4t variant
    std::optional<std::vector<ClassRecord>> acyclic_classes;
};

OutputRecord make_record(const TorsionPolynomial& tp, bool include_scaled, bool include_classes,
                         mpfr_prec_t precision = 128);

/// The t -> 4t variant used for literature comparison: coefficient j
/// becomes 4^j times the original.
IntPoly scale_by_four(const IntPoly& p);

std::string to_json(const OutputRecord& rec);
std::string to_latex(const IntPoly& p, const std::string& var = "t");

}  // namespace torsionpoly
