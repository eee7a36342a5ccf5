#include "toepmin/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace toepmin {

namespace {

json complex_list(const std::vector<cplx>& v) {
    json out = json::array();
    for (const cplx& c : v) out.push_back({c.real(), c.imag()});
    return out;
}

std::vector<cplx> complex_list_from(const json& j, const char* field) {
    if (!j.is_array()) throw std::invalid_argument(std::string("expected array for ") + field);
    std::vector<cplx> out;
    out.reserve(j.size());
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
            throw std::invalid_argument(std::string("expected [re, im] pairs in ") + field);
        out.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
    return out;
}

}  // namespace

json to_json(const HermitianToeplitzSpec& spec) {
    return {{"n", spec.order_n}, {"coefficients", complex_list(spec.coefficients)}};
}

HermitianToeplitzSpec spec_from_json(const json& j) {
    if (!j.contains("n")) throw std::invalid_argument("matrix json: missing field 'n'");
    if (!j.contains("coefficients"))
        throw std::invalid_argument("matrix json: missing field 'coefficients'");
    const std::size_t n = j.at("n").get<std::size_t>();
    return HermitianToeplitzSpec(n, complex_list_from(j.at("coefficients"), "coefficients"));
}

json to_json(const AlternatingStepFunction& psi) {
    return {{"height", psi.height},
            {"jumps_radians", psi.jumps},
            {"first_sign", psi.first_sign}};
}

AlternatingStepFunction step_from_json(const json& j) {
    for (const char* field : {"height", "jumps_radians", "first_sign"})
        if (!j.contains(field))
            throw std::invalid_argument(std::string("step json: missing field '") + field + "'");
    AlternatingStepFunction psi;
    psi.height = j.at("height").get<double>();
    psi.jumps = j.at("jumps_radians").get<std::vector<double>>();
    psi.first_sign = j.at("first_sign").get<int>();
    psi.check();
    return psi;
}

json to_json(const RationalInner& w) {
    return {{"order", w.order},
            {"numerator", complex_list(w.numerator)},
            {"denominator", complex_list(w.denominator)}};
}

RationalInner inner_from_json(const json& j) {
    for (const char* field : {"order", "numerator", "denominator"})
        if (!j.contains(field))
            throw std::invalid_argument(std::string("inner json: missing field '") + field + "'");
    RationalInner w;
    w.order = j.at("order").get<std::size_t>();
    w.numerator = complex_list_from(j.at("numerator"), "numerator");
    w.denominator = complex_list_from(j.at("denominator"), "denominator");
    return w;
}

json to_json(const MinimizerResult& res, const Certificate& cert) {
    json out{{"c_min", res.c_min},
             {"order", res.order},
             {"ratio", cert.ratio},
             {"step", to_json(res.step)},
             {"residuals",
              {{"fourier", res.fourier_residual}, {"unimodularity", cert.unimodularity}}}};
    if (res.order > 0) out["omega"] = to_json(res.omega);
    return out;
}

json to_json(const BoundReport& rep) {
    json out{{"n", rep.n},
             {"params", rep.params},
             {"norm", rep.matrix_norm},
             {"ratio", rep.ratio_value},
             {"reference_lo", rep.reference_lo},
             {"reference_hi", rep.reference_hi},
             {"pass", rep.pass},
             {"heuristic", rep.heuristic},
             {"spec", to_json(rep.spec)}};
    if (rep.ratio_at_start > 0.0) out["ratio_at_start"] = rep.ratio_at_start;
    if (!rep.note.empty()) out["note"] = rep.note;
    return out;
}

std::string bound_csv_header() { return "n,params,norm,ratio,reference_lo,reference_hi,pass"; }

std::string bound_csv_row(const BoundReport& rep, std::size_t max_params) {
    std::ostringstream os;
    os.precision(12);
    os << rep.n << ",\"";
    for (std::size_t k = 0; k < max_params; ++k) {
        if (k) os << ' ';
        if (k < rep.params.size()) os << rep.params[k];
    }
    os << "\"," << rep.matrix_norm << ',' << rep.ratio_value << ',' << rep.reference_lo << ','
       << rep.reference_hi << ',' << (rep.pass ? "true" : "false");
    return os.str();
}

}  // namespace toepmin
