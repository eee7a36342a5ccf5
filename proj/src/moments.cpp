#include "toepmin/moments.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace toepmin {

cplx extend_coefficients(const std::vector<cplx>& coeffs, long m, double residual_threshold) {
    if (coeffs.empty()) throw std::invalid_argument("extend_coefficients: empty input");
    HermitianToeplitzSpec spec(coeffs.size() - 1, coeffs);
    const MinimizerResult res = solve_min(spec);
    if (res.fourier_residual > residual_threshold)
        throw std::runtime_error(
            "extend_coefficients: no alternating step function of order <= N matches the input");
    return fourier(res.step, m);
}

std::vector<Arc> recover_set(const std::vector<cplx>& moments, std::size_t n,
                             double residual_threshold) {
    if (moments.size() != n + 1)
        throw std::invalid_argument("recover_set: need N+1 moments");

    // psi = 2 chi_E - 1
    std::vector<cplx> coeffs(moments);
    for (cplx& c : coeffs) c *= 2.0;
    coeffs[0] -= 1.0;

    const double full = std::abs(coeffs[0] - cplx(1.0));
    const double empty = std::abs(coeffs[0] + cplx(1.0));
    bool higher_zero = true;
    for (std::size_t k = 1; k <= n; ++k)
        if (std::abs(coeffs[k]) > residual_threshold) higher_zero = false;
    if (higher_zero && (full < residual_threshold || empty < residual_threshold))
        throw std::invalid_argument("recover_set: degenerate constant indicator (order 0)");

    HermitianToeplitzSpec spec(n, coeffs);
    const MinimizerResult res = solve_min(spec);
    if (res.fourier_residual > residual_threshold)
        throw std::runtime_error("recover_set: moments inconsistent with a union of <= N arcs");
    if (std::abs(res.step.height - 1.0) > residual_threshold)
        throw std::runtime_error("recover_set: recovered height differs from 1");

    // E is where psi = +1.
    const AlternatingStepFunction& psi = res.step;
    std::vector<Arc> arcs;
    const std::size_t count = psi.jumps.size();
    for (std::size_t k = 0; k < count; ++k) {
        const double sign = psi.first_sign * ((k % 2 == 0) ? 1.0 : -1.0);
        if (sign > 0.0) {
            const double a = psi.jumps[k];
            const double b = (k + 1 < count) ? psi.jumps[k + 1]
                                             : psi.jumps[0] + 2.0 * std::numbers::pi;
            arcs.push_back({a, b});
        }
    }
    return arcs;
}

}  // namespace toepmin
