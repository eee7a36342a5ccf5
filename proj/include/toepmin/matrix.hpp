#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace toepmin {

using cplx = std::complex<double>;

/// Default tolerance for the dense linear algebra kernels.  Matrices in
/// this project are tiny (at most a few dozen rows), so there is plenty
/// of headroom.
inline constexpr double kLinAlgTol = 1e-12;

/// Dense complex matrix in row-major order.
class DenseComplexMatrix {
public:
    DenseComplexMatrix() = default;
    DenseComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool square() const { return rows_ == cols_; }

    DenseComplexMatrix adjoint() const;

    /// y = A x
    std::vector<cplx> apply(const std::vector<cplx>& x) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

/// Fourier coefficients a_0..a_N of a self-adjoint symbol; the full
/// matrix is implied by a_{-n} = conj(a_n).
struct HermitianToeplitzSpec {
    std::size_t order_n = 0;             // N
    std::vector<cplx> coefficients;      // a_0..a_N, a_0 real

    HermitianToeplitzSpec() = default;
    HermitianToeplitzSpec(std::size_t n, std::vector<cplx> coeffs);
};

/// Toeplitz matrix from a two-sided coefficient list a_{-N}..a_N
/// (length 2N+1).  Entry (j,k) = a_{j-k}.
DenseComplexMatrix build_toeplitz(const std::vector<cplx>& two_sided);

/// (N+1)x(N+1) Hermitian Toeplitz matrix of a spec.
DenseComplexMatrix build_toeplitz(const HermitianToeplitzSpec& spec);

/// Lower-triangular Toeplitz matrix with first column b_0..b_N.
DenseComplexMatrix build_lower_toeplitz(const std::vector<cplx>& first_column);

struct SingularPair {
    double sigma = 0.0;
    std::vector<cplx> right_vector;  // unit vector v with ||A v|| = sigma
};

struct SvdResult {
    std::vector<double> sigma;               // descending
    std::vector<std::vector<cplx>> right;    // right[j] is the j-th right singular vector
};

/// One-sided (Hestenes) Jacobi SVD.  Accurate and simple at the sizes
/// this project uses.
SvdResult jacobi_svd(const DenseComplexMatrix& m, double tol = kLinAlgTol);

/// Largest singular value.
double operator_norm(const DenseComplexMatrix& m);
double operator_norm(const HermitianToeplitzSpec& spec);

/// Largest singular value together with a maximizing unit vector.  Ties
/// are broken deterministically: the returned vector has its first
/// nonzero entry made real positive.
SingularPair max_singular_pair(const DenseComplexMatrix& m);

double vector_norm(const std::vector<cplx>& v);

}  // namespace toepmin
