#pragma once

#include <vector>

#include "toepmin/matrix.hpp"

namespace toepmin {

/// Truncated power series (Taylor coefficients at 0), exact modulo
/// z^{degree+1}.  All arithmetic truncates at the shared degree.
class CoefficientJet {
public:
    CoefficientJet() = default;
    explicit CoefficientJet(std::size_t degree) : coeff_(degree + 1, cplx(0.0)) {}
    explicit CoefficientJet(std::vector<cplx> coeffs) : coeff_(std::move(coeffs)) {}

    std::size_t degree() const { return coeff_.size() - 1; }
    cplx& operator[](std::size_t k) { return coeff_[k]; }
    const cplx& operator[](std::size_t k) const { return coeff_[k]; }
    const std::vector<cplx>& coefficients() const { return coeff_; }

    CoefficientJet operator+(const CoefficientJet& o) const;
    CoefficientJet operator-(const CoefficientJet& o) const;
    CoefficientJet operator*(const CoefficientJet& o) const;
    CoefficientJet operator*(const cplx& s) const;

    /// Quotient; divisor must have nonzero constant term.
    CoefficientJet operator/(const CoefficientJet& o) const;

    /// g(f(z)) truncated; requires f(0) = 0.
    CoefficientJet compose(const CoefficientJet& inner) const;

private:
    std::vector<cplx> coeff_{cplx(0.0)};
};

/// tan(u(z)) truncated, for u with zero constant term, via the ODE
/// recurrence t' = (1 + t^2) u'.
CoefficientJet tan_jet(const CoefficientJet& u);

/// log(g(z)) truncated, principal branch at the constant term; g(0) != 0.
CoefficientJet log_jet(const CoefficientJet& g);

/// Coefficient correspondence b = i tan(pi h / 2c) where h is the jet
/// (a_0/2, a_1, ..., a_N).  Requires c > |a_0|.  The constant part is
/// handled by the tangent addition formula so that all series stay
/// centered at 0.
CoefficientJet forward_map(const std::vector<cplx>& a, double c);
CoefficientJet forward_map(const HermitianToeplitzSpec& spec, double c);

/// Inverse correspondence via h = (c / pi i) Log((1+b)/(1-b)), returned
/// as a_0..a_N with a_0 = 2 h_0.  Requires |b_0| < 1.
std::vector<cplx> inverse_map(const CoefficientJet& b, double c);

}  // namespace toepmin
