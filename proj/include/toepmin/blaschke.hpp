#pragma once

#include <vector>

#include "toepmin/jet.hpp"
#include "toepmin/matrix.hpp"

namespace toepmin {

/// Finite Blaschke product stored as a quotient r/s of polynomials
/// (coefficients in ascending order).  The denominator has no zeros in
/// the closed unit disk and |r/s| = 1 on the circle.
struct RationalInner {
    std::vector<cplx> numerator;
    std::vector<cplx> denominator;
    std::size_t order = 0;

    cplx eval(const cplx& z) const;

    /// Value on the circle at angle theta.
    cplx boundary(double theta) const;
};

cplx poly_eval(const std::vector<cplx>& coeffs, const cplx& z);

/// Monic polynomial with the given roots, times a scalar.
std::vector<cplx> poly_from_roots(const std::vector<cplx>& roots, const cplx& scale);

/// Approximate GCD (Euclidean remainders with a relative coefficient
/// threshold); used to strip common factors when the true order is
/// below the ambient degree.
std::vector<cplx> poly_gcd(std::vector<cplx> a, std::vector<cplx> b, double threshold = 1e-8);

std::vector<cplx> poly_divide(const std::vector<cplx>& a, const std::vector<cplx>& divisor);

/// Taylor coefficients of w at 0 through degree m (long division);
/// requires denominator(0) != 0.
CoefficientJet jet_of(const RationalInner& w, std::size_t m);

/// Winding number of w over the unit circle, by unwrapped-phase
/// increment.  Throws if the boundary values stray from the circle or
/// the increment is not close to a multiple of 2 pi.
std::size_t blaschke_order(const RationalInner& w, std::size_t grid = 4096);

/// max over a grid of ||w(e^{i t})| - 1|.
double unimodularity_residual(const RationalInner& w, std::size_t grid = 1024);

/// Norm of the Caratheodory-Fejer step: operator norm of the lower
/// triangular Toeplitz matrix with first column b_0..b_N.
double cf_norm(const CoefficientJet& b);

/// Extremal function of the CF step: the inner function w = r/s with
/// cf_norm(b) * w matching the jet b through degree N.  s is the
/// maximizing polynomial of the matrix, r = B s / ||B||.
RationalInner cf_extremal(const CoefficientJet& b);

}  // namespace toepmin
