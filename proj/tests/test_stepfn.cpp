#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "toepmin/step_function.hpp"

using namespace toepmin;

namespace {

constexpr double kPi = std::numbers::pi;

double uniform(std::mt19937& rng, double lo, double hi) {
    const std::uint64_t hi_bits = rng();
    const std::uint64_t lo_bits = rng();
    const double u = static_cast<double>(((hi_bits << 32) ^ lo_bits) >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

AlternatingStepFunction random_step(std::mt19937& rng, std::size_t max_order) {
    const std::size_t order = 1 + static_cast<std::size_t>(uniform(rng, 0.0, 1.0) *
                                                           static_cast<double>(max_order));
    AlternatingStepFunction psi;
    psi.height = uniform(rng, 0.2, 3.0);
    psi.first_sign = uniform(rng, 0.0, 1.0) < 0.5 ? 1 : -1;
    while (true) {
        psi.jumps.clear();
        for (std::size_t j = 0; j < 2 * std::min(order, max_order); ++j)
            psi.jumps.push_back(uniform(rng, 0.0, 2.0 * kPi));
        std::sort(psi.jumps.begin(), psi.jumps.end());
        double min_gap = 2.0 * kPi - psi.jumps.back() + psi.jumps.front();
        for (std::size_t j = 0; j + 1 < psi.jumps.size(); ++j)
            min_gap = std::min(min_gap, psi.jumps[j + 1] - psi.jumps[j]);
        if (min_gap > 0.05) break;  // keep arcs resolvable
    }
    return psi;
}

// Simpson quadrature of psi(theta) e^{-i m theta} over each arc; an
// independent check on the closed-form coefficients.
cplx quadrature_fourier(const AlternatingStepFunction& psi, long m) {
    cplx total(0.0);
    const std::size_t arcs = psi.jumps.size();
    for (std::size_t a = 0; a < arcs; ++a) {
        const double lo = psi.jumps[a];
        const double hi = a + 1 < arcs ? psi.jumps[a + 1] : psi.jumps[0] + 2.0 * kPi;
        const double v = (a % 2 == 0 ? psi.first_sign : -psi.first_sign) * psi.height;
        const std::size_t steps = 2000;
        const double h = (hi - lo) / static_cast<double>(steps);
        cplx sum = std::exp(cplx(0.0, -static_cast<double>(m) * lo)) +
                   std::exp(cplx(0.0, -static_cast<double>(m) * hi));
        for (std::size_t k = 1; k < steps; ++k) {
            const double t = lo + h * static_cast<double>(k);
            sum += (k % 2 == 1 ? 4.0 : 2.0) * std::exp(cplx(0.0, -static_cast<double>(m) * t));
        }
        total += v * sum * (h / 3.0);
    }
    return total / (2.0 * kPi);
}

double circle_dist(double a, double b) {
    double d = std::fmod(std::abs(a - b), 2.0 * kPi);
    return std::min(d, 2.0 * kPi - d);
}

}  // namespace

TEST_CASE("pointwise evaluation and invariants") {
    AlternatingStepFunction psi;
    psi.height = 2.0;
    psi.jumps = {1.0, 2.5, 4.0, 5.5};
    psi.first_sign = -1;
    psi.check();
    CHECK(psi.order() == 2);
    CHECK(eval(psi, 1.5) == doctest::Approx(-2.0));
    CHECK(eval(psi, 3.0) == doctest::Approx(2.0));
    CHECK(eval(psi, 4.5) == doctest::Approx(-2.0));
    CHECK(eval(psi, 6.0) == doctest::Approx(2.0));
    CHECK(eval(psi, 0.5) == doctest::Approx(2.0));  // wraps past 2 pi
    CHECK_THROWS(eval(psi, 2.5));                   // jump angle

    AlternatingStepFunction bad = psi;
    bad.jumps = {2.5, 1.0, 4.0, 5.5};
    CHECK_THROWS(bad.check());
}

TEST_CASE("two-jump coefficients in closed form") {
    // psi = +1 on (0, alpha), -1 on (alpha, 2 pi):
    //   psi_hat(0) = (alpha - pi)/pi,
    //   psi_hat(m) = (1 - e^{-i m alpha}) / (pi i m) for m != 0.
    for (double alpha : {0.7, kPi / 2.0, kPi, 5.0}) {
        AlternatingStepFunction psi;
        psi.jumps = {0.0, alpha};
        CHECK(fourier(psi, 0).real() == doctest::Approx((alpha - kPi) / kPi).epsilon(1e-13));
        CHECK(std::abs(fourier(psi, 0).imag()) < 1e-15);
        for (long m = 1; m <= 5; ++m) {
            const cplx want = (cplx(1.0) - std::exp(cplx(0.0, -alpha * m))) /
                              (cplx(0.0, kPi * static_cast<double>(m)));
            CHECK(std::abs(fourier(psi, m) - want) < 1e-13);
        }
    }
}

TEST_CASE("closed-form coefficients agree with quadrature") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 15; ++trial) {
        const AlternatingStepFunction psi = random_step(rng, 4);
        for (long m = 0; m <= 20; ++m) {
            const cplx closed = fourier(psi, m);
            CHECK(std::abs(closed - quadrature_fourier(psi, m)) < 1e-9);
            CHECK(std::abs(fourier(psi, -m) - std::conj(closed)) < 1e-15);
        }
    }
}

TEST_CASE("compression matrix matches the coefficients") {
    std::mt19937 rng(11);
    const AlternatingStepFunction psi = random_step(rng, 3);
    const HermitianToeplitzSpec spec = toeplitz_of(psi, 4);
    REQUIRE(spec.order_n == 4);
    for (std::size_t m = 0; m <= 4; ++m)
        CHECK(std::abs(spec.coefficients[m] - fourier(psi, static_cast<long>(m))) < 1e-14);
}

TEST_CASE("blaschke product of the half-circle step") {
    AlternatingStepFunction psi;
    psi.jumps = {0.0, kPi};
    const RationalInner w = blaschke_from_arcs(psi);
    CHECK(w.order == 1);
    CHECK(unimodularity_residual(w) < 1e-10);
    // crossings at 0 and pi, so w(e^{it}) = +-e^{it}; the sign is fixed
    // by psi > 0 on (0, pi) <=> Im w > 0 there.
    CHECK(std::abs(w.boundary(kPi / 2.0) - cplx(0.0, 1.0)) < 1e-9);
    CHECK(std::abs(w.boundary(1.0) - std::exp(cplx(0.0, 1.0))) < 1e-9);
}

TEST_CASE("structural invariants of the arc construction") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 100; ++trial) {
        const AlternatingStepFunction psi = random_step(rng, 4);
        const std::size_t n = psi.order();
        const RationalInner w = blaschke_from_arcs(psi);

        CHECK(w.order == n);
        REQUIRE(w.denominator.size() == n + 1);
        CHECK(std::abs(w.numerator.back()) > 1e-12);
        CHECK(std::abs(w.denominator.back()) > 1e-12);
        CHECK(unimodularity_residual(w) < 1e-9);
        CHECK(blaschke_order(w) == n);

        // normalization: (1 + w(0))/(1 - w(0)) = -i e^{i (sum beta - sum alpha)/2},
        // where the alpha are the down-crossings and the beta the up-crossings.
        const cplx w0 = w.eval(cplx(0.0));
        const cplx val = (cplx(1.0) + w0) / (cplx(1.0) - w0);
        CHECK(std::abs(std::abs(val) - 1.0) < 1e-9);

        double alpha_sum = 0.0, beta_sum = 0.0;
        if (psi.first_sign == 1) {
            for (std::size_t j = 0; j < 2 * n; ++j)
                (j % 2 == 0 ? alpha_sum : beta_sum) += psi.jumps[j];
        } else {
            for (std::size_t j = 1; j < 2 * n; ++j)
                (j % 2 == 1 ? alpha_sum : beta_sum) += psi.jumps[j];
            beta_sum += psi.jumps[0] + 2.0 * kPi;
        }
        const cplx want = cplx(0.0, -1.0) * std::exp(cplx(0.0, (beta_sum - alpha_sum) / 2.0));
        CHECK(std::abs(val - want) < 1e-9);
    }
}

TEST_CASE("arc construction round trips") {
    std::mt19937 rng(555);
    for (int trial = 0; trial < 60; ++trial) {
        const AlternatingStepFunction psi = random_step(rng, 4);
        const RationalInner w = blaschke_from_arcs(psi);
        const AlternatingStepFunction back = step_from_blaschke(w, psi.height);

        CHECK(back.height == doctest::Approx(psi.height));
        REQUIRE(back.jumps.size() == psi.jumps.size());
        CHECK(back.first_sign == psi.first_sign);
        for (std::size_t j = 0; j < psi.jumps.size(); ++j)
            CHECK(circle_dist(back.jumps[j], psi.jumps[j]) < 1e-9);
    }
}

TEST_CASE("recovery from the identity inner function") {
    RationalInner w;
    w.numerator = {cplx(0.0), cplx(1.0)};
    w.denominator = {cplx(1.0)};
    w.order = 1;  // w = z: crossings at 0 and pi
    const AlternatingStepFunction psi = step_from_blaschke(w, 1.0);
    REQUIRE(psi.jumps.size() == 2);
    CHECK(circle_dist(psi.jumps[0], 0.0) < 1e-9);
    CHECK(circle_dist(psi.jumps[1], kPi) < 1e-9);
    CHECK(psi.first_sign == 1);  // Im z > 0 on the upper arc
}
