#include "torsionpoly/output.hpp"

#include <json.hpp>

#include <sstream>

namespace torsionpoly {

using nlohmann::ordered_json;

IntPoly scale_by_four(const IntPoly& p) {
    std::vector<Int> c(p.coeffs());
    Int pow = 1;
    for (auto& ci : c) {
        ci *= pow;
        pow *= 4;
    }
    return IntPoly{std::move(c)};
}

OutputRecord make_record(const TorsionPolynomial& tp, bool include_scaled, bool include_classes,
                         mpfr_prec_t precision) {
    OutputRecord rec;
    rec.p = tp.descriptor.p;
    rec.q = tp.descriptor.q;
    rec.n = tp.descriptor.n;
    rec.N = tp.descriptor.N;
    rec.degree = tp.sigma.degree() == IntPoly::kDegNegInf ? 0 : tp.sigma.degree();
    rec.normalization = normalization_value(tp.descriptor);
    rec.sign_corrected = tp.sign_corrected;
    for (int i = 0; i <= rec.degree; ++i) rec.coefficients.push_back(tp.sigma.coeff(i).get_str());
    if (include_scaled) {
        rec.scaled_coefficients.emplace();
        const IntPoly scaled = scale_by_four(tp.sigma);
        for (int i = 0; i <= rec.degree; ++i) rec.scaled_coefficients->push_back(scaled.coeff(i).get_str());
    }
    if (include_classes && tp.descriptor.n != 0) {
        rec.acyclic_classes.emplace();
        for (const auto& r : enumerate_reps(tp.descriptor)) {
            if (!r.acyclic) continue;
            ClassRecord cr{r.a, r.b, r.k, r.trace_x, r.trace_y, r.trace_m,
                           inverse_torsion(tp.descriptor, r, precision).to_double()};
            rec.acyclic_classes->push_back(cr);
        }
    }
    return rec;
}

std::string to_json(const OutputRecord& rec) {
    ordered_json j;
    j["p"] = rec.p;
    j["q"] = rec.q;
    j["n"] = rec.n;
    j["N"] = rec.N;
    j["degree"] = rec.degree;
    j["normalization"] = rec.normalization;
    j["sign_corrected"] = rec.sign_corrected;
    j["coefficients"] = rec.coefficients;
    if (rec.scaled_coefficients) j["scaled_coefficients"] = *rec.scaled_coefficients;
    if (rec.acyclic_classes) {
        ordered_json arr = ordered_json::array();
        for (const auto& c : *rec.acyclic_classes) {
            ordered_json jc;
            jc["a"] = c.a;
            jc["b"] = c.b;
            jc["k"] = c.k;
            jc["trace_x"] = c.trace_x;
            jc["trace_y"] = c.trace_y;
            jc["trace_m"] = c.trace_m;
            jc["inv_torsion"] = c.inv_torsion;
            arr.push_back(jc);
        }
        j["acyclic_classes"] = arr;
    }
    return j.dump();
}

std::string to_latex(const IntPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        const Int& c = p.coeff(i);
        if (c == 0) continue;
        Int a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? "-" : "+");
        }
        if (a != 1 || i == 0) os << a.get_str();
        if (i > 0) {
            os << var;
            if (i > 1) os << "^{" << i << "}";
        }
    }
    return os.str();
}

}  // namespace torsionpoly
