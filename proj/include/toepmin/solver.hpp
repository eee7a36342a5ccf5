#pragma once

#include <optional>
#include <vector>

#include "toepmin/blaschke.hpp"
#include "toepmin/matrix.hpp"
#include "toepmin/step_function.hpp"

namespace toepmin {

/// Solution certificate for the minimal-symbol problem: the minimum
/// norm, the extremal inner function, the minimizing step function, and
/// how well its Fourier coefficients reproduce the input.
struct MinimizerResult {
    double c_min = 0.0;
    RationalInner omega;               // undefined for the diagonal case
    AlternatingStepFunction step;
    std::size_t order = 0;
    double fourier_residual = 0.0;     // max over 0..N of |psi_hat(n) - a_n|
    double norm_ratio = 0.0;           // c_min / ||A||
};

struct SolverOptions {
    double tol = 1e-10;                     // on |norm_at(c) - 1|
    double residual_threshold = 1e-7;       // acceptance gate for fourier_residual
    double diagonal_threshold = 1e-14;      // |a_n| below this for all n >= 1 => diagonal
};

/// Norm of the CF step at trial height c: cf_norm(forward_map(spec, c)).
/// Requires c > |a_0|.
double norm_at(double c, const HermitianToeplitzSpec& spec);

/// Solve the minimum problem: the unique c with norm_at(c) = 1, the
/// extremal Blaschke product there, and the minimizing step function.
MinimizerResult solve_min(const HermitianToeplitzSpec& spec, const SolverOptions& opts = {});

struct Certificate {
    double c_min = 0.0;
    double matrix_norm = 0.0;
    double ratio = 0.0;
    double fourier_residual = 0.0;
    double unimodularity = 0.0;  // boundary residual of omega; 0 for diagonal specs
    bool diagonal = false;
};

Certificate certificate(const MinimizerResult& res, const HermitianToeplitzSpec& spec);

}  // namespace toepmin
