#pragma once

#include <vector>

#include "toepmin/blaschke.hpp"
#include "toepmin/matrix.hpp"

namespace toepmin {

/// Function on the circle taking the values +c and -c alternately on
/// the arcs cut out by `jumps`.  `first_sign` is the sign on the arc
/// (jumps[0], jumps[1]).  Order 0 (no jumps) is the constant function
/// first_sign * height.
struct AlternatingStepFunction {
    double height = 1.0;
    std::vector<double> jumps;  // even count, strictly increasing, in [0, 2 pi)
    int first_sign = 1;

    std::size_t order() const { return jumps.size() / 2; }

    /// Validates the invariants; throws on violation.
    void check() const;
};

/// Pointwise value; theta must not be a jump angle.
double eval(const AlternatingStepFunction& psi, double theta);

/// Fourier coefficient, closed form.  psi_hat(-m) = conj(psi_hat(m)).
cplx fourier(const AlternatingStepFunction& psi, long m);

/// Toeplitz compression of multiplication by psi to polynomials of
/// degree <= N.
HermitianToeplitzSpec toeplitz_of(const AlternatingStepFunction& psi, std::size_t n);

/// Blaschke product w = (q - ip)/(q + ip) with psi = (2c/pi) Arg((1+w)/(1-w))
/// on the circle, normalized so |(1 + w(0))/(1 - w(0))| = 1.
RationalInner blaschke_from_arcs(const AlternatingStepFunction& psi);

/// Inverse of the above: jump angles are the solutions of w = +-1 on the
/// circle, signs from Im w between consecutive solutions.
AlternatingStepFunction step_from_blaschke(const RationalInner& w, double c);

}  // namespace toepmin
