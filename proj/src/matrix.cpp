#include "toepmin/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace toepmin {

DenseComplexMatrix DenseComplexMatrix::adjoint() const {
    DenseComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            out(c, r) = std::conj((*this)(r, c));
    return out;
}

std::vector<cplx> DenseComplexMatrix::apply(const std::vector<cplx>& x) const {
    if (x.size() != cols_) throw std::invalid_argument("apply: size mismatch");
    std::vector<cplx> y(rows_, cplx(0.0));
    for (std::size_t r = 0; r < rows_; ++r) {
        cplx acc(0.0);
        for (std::size_t c = 0; c < cols_; ++c) acc += (*this)(r, c) * x[c];
        y[r] = acc;
    }
    return y;
}

HermitianToeplitzSpec::HermitianToeplitzSpec(std::size_t n, std::vector<cplx> coeffs)
    : order_n(n), coefficients(std::move(coeffs)) {
    if (coefficients.size() != order_n + 1)
        throw std::invalid_argument("HermitianToeplitzSpec: need N+1 coefficients");
    if (std::abs(coefficients[0].imag()) > 1e-13)
        throw std::invalid_argument("HermitianToeplitzSpec: a_0 must be real");
    coefficients[0] = cplx(coefficients[0].real(), 0.0);
}

DenseComplexMatrix build_toeplitz(const std::vector<cplx>& two_sided) {
    if (two_sided.size() % 2 == 0)
        throw std::invalid_argument("build_toeplitz: two-sided list must have odd length");
    const std::size_t n = two_sided.size() / 2;  // matrix is (n+1)x(n+1)
    DenseComplexMatrix m(n + 1, n + 1);
    for (std::size_t j = 0; j <= n; ++j)
        for (std::size_t k = 0; k <= n; ++k)
            m(j, k) = two_sided[n + j - k];
    return m;
}

DenseComplexMatrix build_toeplitz(const HermitianToeplitzSpec& spec) {
    const std::size_t n = spec.order_n;
    std::vector<cplx> two_sided(2 * n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        two_sided[n + k] = spec.coefficients[k];
        two_sided[n - k] = std::conj(spec.coefficients[k]);
    }
    return build_toeplitz(two_sided);
}

DenseComplexMatrix build_lower_toeplitz(const std::vector<cplx>& first_column) {
    const std::size_t n = first_column.size();
    DenseComplexMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k <= j; ++k)
            m(j, k) = first_column[j - k];
    return m;
}

double vector_norm(const std::vector<cplx>& v) {
    double s = 0.0;
    for (const cplx& x : v) s += std::norm(x);
    return std::sqrt(s);
}

SvdResult jacobi_svd(const DenseComplexMatrix& m, double tol) {
    if (!m.square()) throw std::invalid_argument("jacobi_svd: square matrix required");
    const std::size_t n = m.cols();

    // Work on a column copy of A; accumulate right rotations in V.
    std::vector<std::vector<cplx>> a(n, std::vector<cplx>(m.rows()));
    std::vector<std::vector<cplx>> v(n, std::vector<cplx>(n, cplx(0.0)));
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = 0; r < m.rows(); ++r) a[c][r] = m(r, c);
        v[c][c] = 1.0;
    }

    const int max_sweeps = 64;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double app = 0.0, aqq = 0.0;
                cplx apq(0.0);
                for (std::size_t r = 0; r < m.rows(); ++r) {
                    app += std::norm(a[p][r]);
                    aqq += std::norm(a[q][r]);
                    apq += std::conj(a[p][r]) * a[q][r];
                }
                const double mag = std::abs(apq);
                const double scale = std::sqrt(app * aqq);
                if (scale == 0.0 || mag <= tol * scale) continue;
                off = std::max(off, mag / scale);

                // Absorb the phase of the cross term, then a real rotation.
                const cplx phase = apq / mag;
                const double zeta = (aqq - app) / (2.0 * mag);
                const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;

                for (std::size_t r = 0; r < m.rows(); ++r) {
                    const cplx up = a[p][r];
                    const cplx uq = a[q][r] * std::conj(phase);
                    a[p][r] = c * up - s * uq;
                    a[q][r] = s * up + c * uq;
                }
                for (std::size_t r = 0; r < n; ++r) {
                    const cplx vp = v[p][r];
                    const cplx vq = v[q][r] * std::conj(phase);
                    v[p][r] = c * vp - s * vq;
                    v[q][r] = s * vp + c * vq;
                }
            }
        }
        if (off == 0.0) break;
    }

    SvdResult out;
    out.sigma.resize(n);
    out.right.resize(n);
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::vector<double> norms(n);
    for (std::size_t c = 0; c < n; ++c) norms[c] = vector_norm(a[c]);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t i, std::size_t j) { return norms[i] > norms[j]; });
    for (std::size_t c = 0; c < n; ++c) {
        out.sigma[c] = norms[idx[c]];
        out.right[c] = v[idx[c]];
    }
    return out;
}

double operator_norm(const DenseComplexMatrix& m) {
    if (!m.square()) throw std::invalid_argument("operator_norm: square matrix required");
    if (m.rows() == 0) return 0.0;
    return jacobi_svd(m).sigma.front();
}

double operator_norm(const HermitianToeplitzSpec& spec) {
    return operator_norm(build_toeplitz(spec));
}

SingularPair max_singular_pair(const DenseComplexMatrix& m) {
    SvdResult svd = jacobi_svd(m);
    SingularPair pair;
    pair.sigma = svd.sigma.front();
    pair.right_vector = svd.right.front();

    // Deterministic phase: first nonzero entry made real positive.
    const double nv = vector_norm(pair.right_vector);
    if (nv > 0.0)
        for (cplx& x : pair.right_vector) x /= nv;
    for (const cplx& x : pair.right_vector) {
        if (std::abs(x) > 1e-12) {
            const cplx phase = std::conj(x) / std::abs(x);
            for (cplx& y : pair.right_vector) y *= phase;
            break;
        }
    }
    return pair;
}

}  // namespace toepmin
