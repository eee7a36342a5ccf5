#include "toepmin/jet.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace toepmin {

namespace {
void require_same_degree(const CoefficientJet& a, const CoefficientJet& b) {
    if (a.degree() != b.degree())
        throw std::invalid_argument("jet arithmetic: degree mismatch");
}
}  // namespace

CoefficientJet CoefficientJet::operator+(const CoefficientJet& o) const {
    require_same_degree(*this, o);
    CoefficientJet r(degree());
    for (std::size_t k = 0; k <= degree(); ++k) r[k] = coeff_[k] + o[k];
    return r;
}

CoefficientJet CoefficientJet::operator-(const CoefficientJet& o) const {
    require_same_degree(*this, o);
    CoefficientJet r(degree());
    for (std::size_t k = 0; k <= degree(); ++k) r[k] = coeff_[k] - o[k];
    return r;
}

CoefficientJet CoefficientJet::operator*(const CoefficientJet& o) const {
    require_same_degree(*this, o);
    CoefficientJet r(degree());
    for (std::size_t i = 0; i <= degree(); ++i)
        for (std::size_t j = 0; i + j <= degree(); ++j)
            r[i + j] += coeff_[i] * o[j];
    return r;
}

CoefficientJet CoefficientJet::operator*(const cplx& s) const {
    CoefficientJet r(degree());
    for (std::size_t k = 0; k <= degree(); ++k) r[k] = coeff_[k] * s;
    return r;
}

CoefficientJet CoefficientJet::operator/(const CoefficientJet& o) const {
    require_same_degree(*this, o);
    if (std::abs(o[0]) == 0.0)
        throw std::invalid_argument("jet division: divisor has zero constant term");
    CoefficientJet q(degree());
    for (std::size_t n = 0; n <= degree(); ++n) {
        cplx acc = coeff_[n];
        for (std::size_t k = 0; k < n; ++k) acc -= q[k] * o[n - k];
        q[n] = acc / o[0];
    }
    return q;
}

CoefficientJet CoefficientJet::compose(const CoefficientJet& inner) const {
    require_same_degree(*this, inner);
    if (std::abs(inner[0]) != 0.0)
        throw std::invalid_argument("jet compose: inner jet must have zero constant term");
    // Horner on the truncated polynomial.
    CoefficientJet r(degree());
    for (std::size_t k = degree() + 1; k-- > 0;) {
        r = r * inner;
        r[0] += coeff_[k];
    }
    return r;
}

CoefficientJet tan_jet(const CoefficientJet& u) {
    if (std::abs(u[0]) != 0.0)
        throw std::invalid_argument("tan_jet: nonzero constant term (use the addition formula)");
    const std::size_t deg = u.degree();
    CoefficientJet t(deg);
    // n t_n = [z^{n-1}] (1 + t^2) u'; the needed coefficients of t^2 only
    // involve t_0..t_{n-1}, so the recurrence closes.
    std::vector<cplx> tsq(deg + 1, cplx(0.0));  // running coefficients of t^2
    for (std::size_t n = 1; n <= deg; ++n) {
        cplx acc(0.0);
        for (std::size_t j = 1; j <= n; ++j) {
            cplx w = tsq[n - j];
            if (n - j == 0) w += 1.0;
            acc += static_cast<double>(j) * u[j] * w;
        }
        t[n] = acc / static_cast<double>(n);
        // refresh the t^2 coefficients that involve the new t_n
        for (std::size_t m = n; m <= deg; ++m) {
            cplx s(0.0);
            for (std::size_t i = 0; i <= m; ++i) s += t[i] * t[m - i];
            tsq[m] = s;
        }
    }
    return t;
}

CoefficientJet log_jet(const CoefficientJet& g) {
    if (std::abs(g[0]) == 0.0)
        throw std::invalid_argument("log_jet: zero constant term");
    const std::size_t deg = g.degree();
    CoefficientJet l(deg);
    l[0] = std::log(g[0]);  // principal branch
    // n l_n = [z^{n-1}] g'/g
    CoefficientJet gp(deg);
    for (std::size_t k = 1; k <= deg; ++k) gp[k - 1] = static_cast<double>(k) * g[k];
    CoefficientJet ratio = gp / g;
    for (std::size_t n = 1; n <= deg; ++n) l[n] = ratio[n - 1] / static_cast<double>(n);
    return l;
}

CoefficientJet forward_map(const std::vector<cplx>& a, double c) {
    if (a.empty()) throw std::invalid_argument("forward_map: empty coefficient list");
    const double a0 = a[0].real();
    if (std::abs(a[0].imag()) > 1e-12)
        throw std::invalid_argument("forward_map: a_0 must be real");
    if (!(c > std::abs(a0)))
        throw std::invalid_argument("forward_map: require c > |a_0|");

    const std::size_t deg = a.size() - 1;
    const double pi = std::numbers::pi;

    // u = pi (h - h_0) / (2c) with h = (a_0/2, a_1, ..., a_N)
    CoefficientJet u(deg);
    for (std::size_t k = 1; k <= deg; ++k) u[k] = a[k] * (pi / (2.0 * c));

    const double tau = std::tan(pi * a0 / (4.0 * c));
    CoefficientJet t = tan_jet(u);

    // tan(x_0 + u) = (tau + tan u) / (1 - tau tan u)
    CoefficientJet num(deg), den(deg);
    num[0] = tau;
    den[0] = 1.0;
    num = num + t;
    den = den - t * cplx(tau);
    return (num / den) * cplx(0.0, 1.0);
}

CoefficientJet forward_map(const HermitianToeplitzSpec& spec, double c) {
    return forward_map(spec.coefficients, c);
}

std::vector<cplx> inverse_map(const CoefficientJet& b, double c) {
    if (!(std::abs(b[0]) < 1.0))
        throw std::invalid_argument("inverse_map: require |b_0| < 1");
    const std::size_t deg = b.degree();
    const double pi = std::numbers::pi;

    CoefficientJet one(deg);
    one[0] = 1.0;
    CoefficientJet h = log_jet((one + b) / (one - b)) * (c / cplx(0.0, pi));

    std::vector<cplx> a(deg + 1);
    a[0] = 2.0 * h[0];
    for (std::size_t k = 1; k <= deg; ++k) a[k] = h[k];
    return a;
}

}  // namespace toepmin
