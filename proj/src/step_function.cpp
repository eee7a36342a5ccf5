#include "toepmin/step_function.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace toepmin {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_to_pi(double x) {
    while (x > std::numbers::pi) x -= kTwoPi;
    while (x <= -std::numbers::pi) x += kTwoPi;
    return x;
}
}  // namespace

void AlternatingStepFunction::check() const {
    if (!(height > 0.0)) throw std::invalid_argument("step function: height must be positive");
    if (first_sign != 1 && first_sign != -1)
        throw std::invalid_argument("step function: first_sign must be +-1");
    if (jumps.size() % 2 != 0)
        throw std::invalid_argument("step function: jump count must be even");
    for (std::size_t k = 0; k < jumps.size(); ++k) {
        if (jumps[k] < 0.0 || jumps[k] >= kTwoPi)
            throw std::invalid_argument("step function: jumps must lie in [0, 2 pi)");
        if (k > 0 && !(jumps[k] > jumps[k - 1]))
            throw std::invalid_argument("step function: jumps must be strictly increasing");
    }
}

double eval(const AlternatingStepFunction& psi, double theta) {
    psi.check();
    if (psi.jumps.empty()) return psi.first_sign * psi.height;

    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    for (double j : psi.jumps)
        if (std::abs(t - j) < 1e-12)
            throw std::invalid_argument("eval: theta is a jump angle");

    // Arc index: last jump <= t, wrapping before jumps[0] onto the final arc.
    std::size_t k;
    if (t < psi.jumps.front() || t >= psi.jumps.back()) {
        k = psi.jumps.size() - 1;
    } else {
        k = static_cast<std::size_t>(
                std::upper_bound(psi.jumps.begin(), psi.jumps.end(), t) - psi.jumps.begin()) -
            1;
    }
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    return psi.first_sign * sign * psi.height;
}

cplx fourier(const AlternatingStepFunction& psi, long m) {
    psi.check();
    if (psi.jumps.empty())
        return m == 0 ? cplx(psi.first_sign * psi.height, 0.0) : cplx(0.0);

    const std::size_t arcs = psi.jumps.size();
    cplx total(0.0);
    for (std::size_t k = 0; k < arcs; ++k) {
        const double a = psi.jumps[k];
        const double b = (k + 1 < arcs) ? psi.jumps[k + 1] : psi.jumps[0] + kTwoPi;
        const double v = psi.first_sign * ((k % 2 == 0) ? 1.0 : -1.0) * psi.height;
        if (m == 0) {
            total += v * (b - a) / kTwoPi;
        } else {
            const double md = static_cast<double>(m);
            const cplx ea = std::polar(1.0, -md * a);
            const cplx eb = std::polar(1.0, -md * b);
            total += v * (ea - eb) / (cplx(0.0, md) * kTwoPi);
        }
    }
    if (m == 0) total = cplx(total.real(), 0.0);
    return total;
}

HermitianToeplitzSpec toeplitz_of(const AlternatingStepFunction& psi, std::size_t n) {
    std::vector<cplx> coeffs(n + 1);
    for (std::size_t m = 0; m <= n; ++m) coeffs[m] = fourier(psi, static_cast<long>(m));
    return HermitianToeplitzSpec(n, std::move(coeffs));
}

RationalInner blaschke_from_arcs(const AlternatingStepFunction& psi) {
    psi.check();
    const std::size_t n = psi.order();
    if (n == 0) throw std::invalid_argument("blaschke_from_arcs: order must be >= 1");
    for (std::size_t k = 0; k + 1 < psi.jumps.size(); ++k)
        if (psi.jumps[k + 1] - psi.jumps[k] < 1e-12)
            throw std::invalid_argument("blaschke_from_arcs: coincident jumps");

    // Label the jumps: alpha_k opens an arc where psi = +height.
    std::vector<double> alpha(n), beta(n);
    if (psi.first_sign == 1) {
        for (std::size_t k = 0; k < n; ++k) {
            alpha[k] = psi.jumps[2 * k];
            beta[k] = psi.jumps[2 * k + 1];
        }
    } else {
        for (std::size_t k = 0; k < n; ++k) {
            alpha[k] = psi.jumps[2 * k + 1];
            beta[k] = (2 * k + 2 < psi.jumps.size()) ? psi.jumps[2 * k + 2]
                                                     : psi.jumps[0] + kTwoPi;
        }
    }

    double alpha_sum = 0.0, beta_sum = 0.0;
    std::vector<cplx> aroots(n), broots(n);
    for (std::size_t k = 0; k < n; ++k) {
        alpha_sum += alpha[k];
        beta_sum += beta[k];
        aroots[k] = std::polar(1.0, alpha[k]);
        broots[k] = std::polar(1.0, beta[k]);
    }

    const std::vector<cplx> p = poly_from_roots(aroots, std::polar(1.0, -alpha_sum / 2.0));
    const std::vector<cplx> q = poly_from_roots(broots, std::polar(1.0, -beta_sum / 2.0));

    RationalInner w;
    w.numerator.resize(n + 1);
    w.denominator.resize(n + 1);
    const cplx i(0.0, 1.0);
    for (std::size_t k = 0; k <= n; ++k) {
        w.numerator[k] = q[k] - i * p[k];
        w.denominator[k] = q[k] + i * p[k];
    }
    w.order = n;
    return w;
}

AlternatingStepFunction step_from_blaschke(const RationalInner& w, double c) {
    if (!(c > 0.0)) throw std::invalid_argument("step_from_blaschke: height must be positive");
    const std::size_t n = blaschke_order(w);
    if (n == 0)
        throw std::invalid_argument("step_from_blaschke: order 0 (constant case handled by caller)");

    // Unwrapped phase on a uniform grid; arg w is strictly increasing on
    // the circle, so every crossing of a multiple of pi is simple.
    const std::size_t grid = std::max<std::size_t>(2048, 512 * n);
    std::vector<double> theta(grid + 1), phase(grid + 1);
    double prev = std::arg(w.boundary(0.0));
    phase[0] = prev;
    theta[0] = 0.0;
    for (std::size_t k = 1; k <= grid; ++k) {
        theta[k] = kTwoPi * static_cast<double>(k) / static_cast<double>(grid);
        const double cur = std::arg(w.boundary(theta[k]));
        phase[k] = phase[k - 1] + wrap_to_pi(cur - prev);
        prev = cur;
    }

    struct Crossing {
        double angle;
        bool is_alpha;  // w = +1 (phase an even multiple of pi)
    };
    std::vector<Crossing> crossings;
    // A crossing that lands exactly on theta = 0 makes phase[0] a multiple
    // of pi only up to rounding; nudge so it is claimed once, at the start.
    const long m_first =
        static_cast<long>(std::ceil((phase[0] - 1e-9) / std::numbers::pi));
    for (long m = m_first; m < m_first + static_cast<long>(2 * n); ++m) {
        const double target = static_cast<double>(m) * std::numbers::pi;
        const auto it = std::lower_bound(phase.begin(), phase.end(), target);
        double lo_t, hi_t;
        if (it == phase.end()) {
            // Crossing at (or numerically past) theta = 2 pi.
            if (target > phase.back() + 1e-9)
                throw std::runtime_error("step_from_blaschke: crossing not bracketed");
            lo_t = theta[grid - 1];
            hi_t = theta[grid] + kTwoPi / static_cast<double>(grid);
        } else if (it == phase.begin()) {
            // Crossing at (or numerically before) theta = 0.
            lo_t = -kTwoPi / static_cast<double>(grid);
            hi_t = theta[1];
        } else {
            const std::size_t hi = static_cast<std::size_t>(it - phase.begin());
            lo_t = theta[hi - 1];
            hi_t = theta[hi];
        }
        for (int iter = 0; iter < 80 && hi_t - lo_t > 1e-13; ++iter) {
            const double mid = 0.5 * (lo_t + hi_t);
            const double d = wrap_to_pi(std::arg(w.boundary(mid)) - target);
            if (d < 0.0)
                lo_t = mid;
            else
                hi_t = mid;
        }
        double angle = std::fmod(0.5 * (lo_t + hi_t), kTwoPi);
        if (angle < 0.0) angle += kTwoPi;
        if (angle >= kTwoPi - 1e-11) angle = 0.0;
        const bool even = ((m % 2) + 2) % 2 == 0;
        crossings.push_back({angle, even});
    }

    std::sort(crossings.begin(), crossings.end(),
              [](const Crossing& a, const Crossing& b) { return a.angle < b.angle; });

    AlternatingStepFunction psi;
    psi.height = c;
    psi.jumps.reserve(2 * n);
    for (const Crossing& cr : crossings) psi.jumps.push_back(cr.angle);

    // Sign on the first arc from Im w at its midpoint (psi = +c where Im w > 0).
    const double mid = 0.5 * (psi.jumps[0] + psi.jumps[1]);
    psi.first_sign = (w.boundary(mid).imag() > 0.0) ? 1 : -1;
    psi.check();
    return psi;
}

}  // namespace toepmin
