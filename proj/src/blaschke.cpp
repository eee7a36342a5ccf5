#include "toepmin/blaschke.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace toepmin {

namespace {

double coeff_norm(const std::vector<cplx>& p) {
    double m = 0.0;
    for (const cplx& c : p) m = std::max(m, std::abs(c));
    return m;
}

std::vector<cplx> trim(std::vector<cplx> p, double threshold) {
    while (p.size() > 1 && std::abs(p.back()) <= threshold) p.pop_back();
    return p;
}

}  // namespace

cplx poly_eval(const std::vector<cplx>& coeffs, const cplx& z) {
    cplx acc(0.0);
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * z + coeffs[k];
    return acc;
}

cplx RationalInner::eval(const cplx& z) const {
    return poly_eval(numerator, z) / poly_eval(denominator, z);
}

cplx RationalInner::boundary(double theta) const {
    return eval(std::polar(1.0, theta));
}

std::vector<cplx> poly_from_roots(const std::vector<cplx>& roots, const cplx& scale) {
    std::vector<cplx> p{scale};
    for (const cplx& r : roots) {
        std::vector<cplx> q(p.size() + 1, cplx(0.0));
        for (std::size_t k = 0; k < p.size(); ++k) {
            q[k] -= r * p[k];
            q[k + 1] += p[k];
        }
        p = std::move(q);
    }
    return p;
}

std::vector<cplx> poly_gcd(std::vector<cplx> a, std::vector<cplx> b, double threshold) {
    const double scale = std::max(coeff_norm(a), coeff_norm(b));
    if (scale == 0.0) return {cplx(1.0)};
    a = trim(std::move(a), threshold * scale);
    b = trim(std::move(b), threshold * scale);
    if (a.size() < b.size()) std::swap(a, b);
    while (b.size() > 1 || std::abs(b[0]) > threshold * scale) {
        if (b.size() == 1) return {cplx(1.0)};  // nonzero constant remainder
        // remainder of a by b
        std::vector<cplx> r = a;
        while (r.size() >= b.size()) {
            const cplx f = r.back() / b.back();
            const std::size_t off = r.size() - b.size();
            for (std::size_t k = 0; k < b.size(); ++k) r[off + k] -= f * b[k];
            r.pop_back();
        }
        r = trim(std::move(r), threshold * scale);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::vector<cplx> poly_divide(const std::vector<cplx>& a, const std::vector<cplx>& divisor) {
    if (divisor.empty() || std::abs(divisor.back()) == 0.0)
        throw std::invalid_argument("poly_divide: bad divisor");
    if (a.size() < divisor.size()) throw std::invalid_argument("poly_divide: degree too low");
    std::vector<cplx> r = a;
    std::vector<cplx> q(a.size() - divisor.size() + 1, cplx(0.0));
    for (std::size_t k = q.size(); k-- > 0;) {
        const cplx f = r[k + divisor.size() - 1] / divisor.back();
        q[k] = f;
        for (std::size_t j = 0; j < divisor.size(); ++j) r[k + j] -= f * divisor[j];
    }
    return q;
}

CoefficientJet jet_of(const RationalInner& w, std::size_t m) {
    if (w.denominator.empty() || std::abs(w.denominator[0]) == 0.0)
        throw std::invalid_argument("jet_of: denominator vanishes at 0");
    CoefficientJet num(m), den(m);
    for (std::size_t k = 0; k <= m && k < w.numerator.size(); ++k) num[k] = w.numerator[k];
    for (std::size_t k = 0; k <= m && k < w.denominator.size(); ++k) den[k] = w.denominator[k];
    return num / den;
}

std::size_t blaschke_order(const RationalInner& w, std::size_t grid) {
    const double pi = std::numbers::pi;
    double total = 0.0;
    double prev = std::arg(w.boundary(0.0));
    for (std::size_t k = 1; k <= grid; ++k) {
        const double theta = 2.0 * pi * static_cast<double>(k) / static_cast<double>(grid);
        const cplx v = w.boundary(theta);
        if (std::abs(std::abs(v) - 1.0) > 1e-6)
            throw std::runtime_error("blaschke_order: boundary value not unimodular");
        const double cur = std::arg(v);
        double d = cur - prev;
        while (d > pi) d -= 2.0 * pi;
        while (d < -pi) d += 2.0 * pi;
        total += d;
        prev = cur;
    }
    const double winding = total / (2.0 * pi);
    const double rounded = std::round(winding);
    if (std::abs(winding - rounded) > 0.1)
        throw std::runtime_error("blaschke_order: winding number not close to an integer");
    if (rounded < 0.0) throw std::runtime_error("blaschke_order: negative winding");
    return static_cast<std::size_t>(rounded);
}

double unimodularity_residual(const RationalInner& w, std::size_t grid) {
    const double pi = std::numbers::pi;
    double worst = 0.0;
    for (std::size_t k = 0; k < grid; ++k) {
        const double theta = 2.0 * pi * (static_cast<double>(k) + 0.5) / static_cast<double>(grid);
        worst = std::max(worst, std::abs(std::abs(w.boundary(theta)) - 1.0));
    }
    return worst;
}

double cf_norm(const CoefficientJet& b) {
    return operator_norm(build_lower_toeplitz(b.coefficients()));
}

RationalInner cf_extremal(const CoefficientJet& b) {
    double bmax = 0.0;
    for (const cplx& c : b.coefficients()) bmax = std::max(bmax, std::abs(c));
    if (bmax == 0.0) throw std::invalid_argument("cf_extremal: zero jet");

    const DenseComplexMatrix B = build_lower_toeplitz(b.coefficients());
    const SingularPair pair = max_singular_pair(B);

    RationalInner w;
    w.denominator = pair.right_vector;
    std::vector<cplx> r = B.apply(pair.right_vector);
    for (cplx& c : r) c /= pair.sigma;
    w.numerator = std::move(r);

    if (std::abs(w.denominator[0]) < 1e-10)
        throw std::runtime_error("cf_extremal: ill-conditioned denominator (s_0 ~ 0)");

    // Phase canonical form: s_0 real positive (the quotient is unchanged).
    const cplx phase = std::conj(w.denominator[0]) / std::abs(w.denominator[0]);
    for (cplx& c : w.numerator) c *= phase;
    for (cplx& c : w.denominator) c *= phase;

    // Strip common factors when the true order is below the ambient degree.
    const std::vector<cplx> g = poly_gcd(w.numerator, w.denominator);
    if (g.size() > 1) {
        w.numerator = poly_divide(w.numerator, g);
        w.denominator = poly_divide(w.denominator, g);
    }
    w.order = blaschke_order(w);
    return w;
}

}  // namespace toepmin
