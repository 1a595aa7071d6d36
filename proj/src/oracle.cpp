#include "torsionpoly/oracle.hpp"

namespace torsionpoly {

RootMultiset collect_roots(const SurgeryDescriptor& d, mpfr_prec_t precision) {
    RootMultiset ms;
    ms.descriptor = d;
    ms.precision = precision;
    if (d.n == 0) return ms;
    for (const auto& r : enumerate_reps(d)) {
        if (!r.acyclic) continue;
        ms.roots.push_back(inverse_torsion(d, r, precision));
    }
    return ms;
}

std::vector<BigFloat> reconstruct(const RootMultiset& ms, const Int& leading) {
    if (leading == 0) throw std::invalid_argument("reconstruct: zero leading coefficient");
    const mpfr_prec_t prec = ms.precision;
    std::vector<BigFloat> coeffs{BigFloat{leading, prec}};
    for (const auto& r : ms.roots) {
        // Multiply by (t - r).
        std::vector<BigFloat> next(coeffs.size() + 1, BigFloat{0.0, prec});
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            next[i + 1] = next[i + 1] + coeffs[i];
            next[i] = next[i] - r * coeffs[i];
        }
        coeffs = std::move(next);
    }
    return coeffs;
}

CompareReport compare(const IntPoly& exact, const std::vector<BigFloat>& approx, double rel_tol) {
    if (rel_tol <= 0) throw std::invalid_argument("compare: rel_tol must be positive");
    const std::size_t n = exact.is_zero() ? 0 : static_cast<std::size_t>(exact.degree()) + 1;
    if (n != approx.size()) throw LengthMismatch("compare: coefficient counts differ");

    const mpfr_prec_t prec = approx.empty() ? 128 : approx[0].precision();
    BigFloat max_abs{0.0, prec};
    for (std::size_t i = 0; i < n; ++i) {
        BigFloat a = abs(BigFloat{Int{exact.coeff(static_cast<int>(i))}, prec});
        if (max_abs < a) max_abs = a;
    }

    CompareReport rep;
    rep.pass = true;
    for (std::size_t i = 0; i < n; ++i) {
        const Int& c = exact.coeff(static_cast<int>(i));
        BigFloat err = abs(approx[i] - BigFloat{Int{c}, prec});
        BigFloat scale = c == 0 ? max_abs : abs(BigFloat{Int{c}, prec});
        double rel = scale.is_zero() ? err.to_double() : (err / scale).to_double();
        if (rel > rep.max_rel_error) {
            rep.max_rel_error = rel;
            rep.worst_index = static_cast<int>(i);
        }
        if (rel > rel_tol) rep.pass = false;
    }
    return rep;
}

}  // namespace torsionpoly
