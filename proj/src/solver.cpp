#include "toepmin/solver.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace toepmin {

double norm_at(double c, const HermitianToeplitzSpec& spec) {
    return cf_norm(forward_map(spec, c));
}

namespace {

bool is_diagonal(const HermitianToeplitzSpec& spec, double threshold) {
    for (std::size_t k = 1; k < spec.coefficients.size(); ++k)
        if (std::abs(spec.coefficients[k]) > threshold) return false;
    return true;
}

double bisect_unit_norm(const HermitianToeplitzSpec& spec, double lo, double hi, double tol) {
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (norm_at(mid, spec) > 1.0)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < 0.25 * tol * std::max(1.0, hi)) break;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

MinimizerResult solve_min(const HermitianToeplitzSpec& spec, const SolverOptions& opts) {
    const double a0 = spec.coefficients[0].real();
    const double matrix_norm = operator_norm(spec);
    if (matrix_norm < opts.diagonal_threshold)
        throw std::invalid_argument("solve_min: zero matrix has no normalized minimizer");

    MinimizerResult res;
    if (is_diagonal(spec, opts.diagonal_threshold)) {
        res.c_min = std::abs(a0);
        res.order = 0;
        res.step.height = std::abs(a0);
        res.step.first_sign = (a0 >= 0.0) ? 1 : -1;
        res.fourier_residual = std::abs(fourier(res.step, 0) - spec.coefficients[0]);
        res.norm_ratio = res.c_min / matrix_norm;
        return res;
    }

    // Bracket: ||B|| > 1 for c < c_A, < 1 for c > c_A.  The lower end is
    // safe since c_A >= ||A|| > |a_0| for a non-diagonal spec; the upper
    // end 3 ||A|| comes from the known uniform bound, with geometric
    // expansion as a fallback.
    double lo = std::max(std::abs(a0) + 1e-12, matrix_norm);
    double hi = 3.0 * matrix_norm;
    int expansions = 0;
    while (norm_at(hi, spec) > 1.0) {
        hi *= 2.0;
        if (++expansions > 10)
            throw std::runtime_error("solve_min: norm_at never crosses 1 in the search interval");
    }
    if (norm_at(lo, spec) < 1.0) lo = std::abs(a0) + 1e-12;

    // The profile should be strictly decreasing on the bracket; verify on
    // a sample and fall back to scan-then-refine if not.
    {
        const int samples = 64;
        double prev = norm_at(lo, spec);
        bool monotone = true;
        double scan_lo = lo, scan_hi = hi;
        for (int k = 1; k <= samples; ++k) {
            const double c = lo + (hi - lo) * static_cast<double>(k) / samples;
            const double v = norm_at(c, spec);
            if (v > prev + 1e-12) monotone = false;
            if (prev > 1.0 && v <= 1.0) {
                scan_lo = lo + (hi - lo) * static_cast<double>(k - 1) / samples;
                scan_hi = c;
            }
            prev = v;
        }
        if (!monotone) {
            lo = scan_lo;
            hi = scan_hi;
        }
    }

    res.c_min = bisect_unit_norm(spec, lo, hi, opts.tol);
    if (std::abs(norm_at(res.c_min, spec) - 1.0) > opts.tol)
        throw std::runtime_error("solve_min: bisection did not reach |norm - 1| <= tol, best " +
                                 std::to_string(norm_at(res.c_min, spec)));

    const CoefficientJet b = forward_map(spec, res.c_min);
    res.omega = cf_extremal(b);
    res.order = res.omega.order;
    if (res.order > spec.order_n)
        throw std::runtime_error("solve_min: extremal order exceeds N");
    res.step = step_from_blaschke(res.omega, res.c_min);

    double residual = 0.0;
    for (std::size_t n = 0; n <= spec.order_n; ++n)
        residual = std::max(residual,
                            std::abs(fourier(res.step, static_cast<long>(n)) -
                                     spec.coefficients[n]));
    res.fourier_residual = residual;
    res.norm_ratio = res.c_min / matrix_norm;
    return res;
}

Certificate certificate(const MinimizerResult& res, const HermitianToeplitzSpec& spec) {
    Certificate cert;
    cert.c_min = res.c_min;
    cert.matrix_norm = operator_norm(spec);
    cert.ratio = res.c_min / cert.matrix_norm;
    cert.fourier_residual = res.fourier_residual;
    cert.diagonal = (res.order == 0);
    cert.unimodularity = cert.diagonal ? 0.0 : unimodularity_residual(res.omega);
    return cert;
}

}  // namespace toepmin
