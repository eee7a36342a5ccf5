#pragma once

#include <utility>
#include <vector>

#include "toepmin/solver.hpp"

namespace toepmin {

/// Given psi_hat(0)..psi_hat(N) of an alternating step function of
/// order <= N, recover the function and return psi_hat(m) for any m.
/// `residual_threshold` guards against inputs that do not come from
/// such a function.
cplx extend_coefficients(const std::vector<cplx>& coeffs, long m,
                         double residual_threshold = 1e-7);

/// A closed arc [start, end) on the circle, angles in radians; end may
/// exceed 2 pi when the arc wraps through 0.
struct Arc {
    double start = 0.0;
    double end = 0.0;
};

/// Recover a union E of at most N closed disjoint arcs from the
/// indicator moments chi_hat(0)..chi_hat(N), via the step function
/// 2 chi_E - 1.
std::vector<Arc> recover_set(const std::vector<cplx>& moments, std::size_t n,
                             double residual_threshold = 1e-7);

}  // namespace toepmin
