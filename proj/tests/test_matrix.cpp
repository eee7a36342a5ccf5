#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "toepmin/matrix.hpp"

using namespace toepmin;

namespace {

double uniform(std::mt19937& rng, double lo, double hi) {
    const std::uint64_t hi_bits = rng();
    const std::uint64_t lo_bits = rng();
    const double u = static_cast<double>(((hi_bits << 32) ^ lo_bits) >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

DenseComplexMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
    DenseComplexMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = cplx(uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0));
    return m;
}

// Independent norm oracle: power iteration on A* A.
double power_iteration_norm(const DenseComplexMatrix& m) {
    const DenseComplexMatrix at = m.adjoint();
    std::vector<cplx> v(m.cols(), cplx(1.0));
    v[0] = cplx(1.0, 0.5);  // break symmetric starting points
    double lambda = 0.0;
    for (int it = 0; it < 20000; ++it) {
        std::vector<cplx> w = at.apply(m.apply(v));
        const double n = vector_norm(w);
        if (n == 0.0) return 0.0;
        for (auto& x : w) x /= n;
        const double change = std::abs(n - lambda);
        lambda = n;
        v = std::move(w);
        if (it > 10 && change < 1e-15 * std::max(1.0, lambda)) break;
    }
    return std::sqrt(lambda);
}

}  // namespace

TEST_CASE("toeplitz construction from a two-sided list") {
    // a_{-1} = 5, a_0 = 1, a_1 = 2+3i
    const std::vector<cplx> ts = {cplx(5.0), cplx(1.0), cplx(2.0, 3.0)};
    const DenseComplexMatrix m = build_toeplitz(ts);
    REQUIRE(m.rows() == 2);
    CHECK(m(0, 0) == cplx(1.0));
    CHECK(m(1, 1) == cplx(1.0));
    CHECK(m(1, 0) == cplx(2.0, 3.0));  // entry (j,k) = a_{j-k}
    CHECK(m(0, 1) == cplx(5.0));

    CHECK_THROWS(build_toeplitz(std::vector<cplx>{cplx(1.0), cplx(2.0)}));  // even length
}

TEST_CASE("hermitian spec produces a self-adjoint matrix") {
    const HermitianToeplitzSpec spec(2, {cplx(0.3), cplx(0.1, -0.7), cplx(-0.4, 0.2)});
    const DenseComplexMatrix m = build_toeplitz(spec);
    REQUIRE(m.rows() == 3);
    const DenseComplexMatrix ma = m.adjoint();
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c)
            CHECK(std::abs(m(r, c) - ma(r, c)) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(m(2, 1) == cplx(0.1, -0.7));
    CHECK(m(1, 2) == std::conj(cplx(0.1, -0.7)));

    CHECK_THROWS(HermitianToeplitzSpec(1, {cplx(0.0, 1.0), cplx(1.0)}));  // a_0 not real
}

TEST_CASE("lower triangular toeplitz") {
    const DenseComplexMatrix m = build_lower_toeplitz({cplx(1.0), cplx(2.0), cplx(3.0)});
    CHECK(m(0, 0) == cplx(1.0));
    CHECK(m(2, 0) == cplx(3.0));
    CHECK(m(2, 1) == cplx(2.0));
    CHECK(m(0, 2) == cplx(0.0));
}

TEST_CASE("norms of matrices with known singular values") {
    DenseComplexMatrix id(3, 3);
    for (std::size_t j = 0; j < 3; ++j) id(j, j) = cplx(1.0);
    CHECK(operator_norm(id) == doctest::Approx(1.0).epsilon(1e-12));

    // single off-diagonal entry: norm is its modulus
    DenseComplexMatrix corner(4, 4);
    corner(3, 0) = cplx(0.6, -0.8);
    CHECK(operator_norm(corner) == doctest::Approx(1.0).epsilon(1e-12));

    // 2x2 self-adjoint with zero diagonal: norm |a_1|
    const HermitianToeplitzSpec spec(1, {cplx(0.0), cplx(0.3, 0.4)});
    CHECK(operator_norm(spec) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("jacobi svd matches a power-iteration oracle") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 6);
        const DenseComplexMatrix m = random_matrix(rng, n, n);
        const double oracle = power_iteration_norm(m);
        CHECK(operator_norm(m) == doctest::Approx(oracle).epsilon(1e-9));
    }
}

TEST_CASE("svd yields an orthonormal descending decomposition") {
    std::mt19937 rng(777);
    const DenseComplexMatrix m = random_matrix(rng, 5, 5);
    const SvdResult svd = jacobi_svd(m);
    REQUIRE(svd.sigma.size() == 5);
    for (std::size_t j = 0; j + 1 < 5; ++j) CHECK(svd.sigma[j] >= svd.sigma[j + 1]);
    for (std::size_t j = 0; j < 5; ++j) {
        CHECK(vector_norm(svd.right[j]) == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(vector_norm(m.apply(svd.right[j])) == doctest::Approx(svd.sigma[j]).epsilon(1e-9));
        for (std::size_t k = j + 1; k < 5; ++k) {
            cplx dot(0.0);
            for (std::size_t i = 0; i < 5; ++i)
                dot += std::conj(svd.right[j][i]) * svd.right[k][i];
            CHECK(std::abs(dot) < 1e-9);
        }
    }
}

TEST_CASE("norm scaling and adjoint invariance") {
    std::mt19937 rng(42);
    const DenseComplexMatrix m = random_matrix(rng, 4, 4);
    const double n0 = operator_norm(m);
    CHECK(operator_norm(m.adjoint()) == doctest::Approx(n0).epsilon(1e-10));

    DenseComplexMatrix scaled(4, 4);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) scaled(r, c) = cplx(0.0, -2.5) * m(r, c);
    CHECK(operator_norm(scaled) == doctest::Approx(2.5 * n0).epsilon(1e-10));
}

TEST_CASE("maximizing vector is deterministic and extremal") {
    std::mt19937 rng(99);
    const DenseComplexMatrix m = random_matrix(rng, 5, 5);
    const SingularPair pair = max_singular_pair(m);
    CHECK(vector_norm(pair.right_vector) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(vector_norm(m.apply(pair.right_vector)) ==
          doctest::Approx(pair.sigma).epsilon(1e-9));
    CHECK(pair.sigma == doctest::Approx(operator_norm(m)).epsilon(1e-10));
    // phase convention: first nonzero entry real positive
    for (const cplx& x : pair.right_vector) {
        if (std::abs(x) > 1e-12) {
            CHECK(x.real() > 0.0);
            CHECK(std::abs(x.imag()) < 1e-10);
            break;
        }
    }
    // calling twice gives the identical vector
    const SingularPair again = max_singular_pair(m);
    for (std::size_t j = 0; j < 5; ++j)
        CHECK(std::abs(pair.right_vector[j] - again.right_vector[j]) < 1e-14);
}

TEST_CASE("self-adjoint toeplitz norm formula for the two-jump symbol") {
    // psi = +1 on (0, alpha), -1 elsewhere: a_0 = (alpha - pi)/pi,
    // a_1 = 2 e^{-i alpha/2} sin(alpha/2) / pi; the 2x2 norm is
    // (|alpha - pi| + 2|sin(alpha/2)|)/pi.
    const double pi = std::numbers::pi;
    for (double alpha : {0.3, 1.0, 2.0, pi, 2.9}) {
        const cplx a0((alpha - pi) / pi, 0.0);
        const cplx a1 = 2.0 * std::exp(cplx(0.0, -alpha / 2.0)) * std::sin(alpha / 2.0) / pi;
        const HermitianToeplitzSpec spec(1, {a0, a1});
        const double expected = (std::abs(alpha - pi) + 2.0 * std::abs(std::sin(alpha / 2.0))) / pi;
        CHECK(operator_norm(spec) == doctest::Approx(expected).epsilon(1e-12));
    }
}
