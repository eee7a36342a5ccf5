#pragma once

#include <array>
#include <string>
#include <vector>

#include "toepmin/matrix.hpp"
#include "toepmin/step_function.hpp"

namespace toepmin {

/// Parameterized height-1 step-function families used for the lower
/// bounds on c_N, N = 1..7.  Each family is even (conjugate-symmetric
/// jumps) except N = 1, and takes the value +1 at angle 0.
namespace family {

std::size_t param_count(std::size_t n);
bool admissible(std::size_t n, const std::vector<double>& params);

}  // namespace family

AlternatingStepFunction family_step(std::size_t n, const std::vector<double>& params);

/// Lower bound on c_n from a height-1 step function: 1 / ||A_{psi,n}||.
double ratio(const AlternatingStepFunction& psi, std::size_t n);

/// Roots of the coefficient relations with closed-form norms (n in
/// {2, 3, 5}); residuals of all relations below 1e-12.
std::vector<double> solve_relations(std::size_t n);

struct NormIdentityReport {
    double closed_form = 0.0;   // e.g. 3 |psi_hat(0)| for n = 2
    double computed = 0.0;      // operator norm of the compression
    double deviation = 0.0;
};

NormIdentityReport norm_identity_check(std::size_t n, const std::vector<double>& params);

/// Bound via the cubic route: (pi / 2 sqrt(2)) k with k the largest root
/// of 1 - 3x - 3x^2 + 3x^3; checks k >= 3/2 along the way.
double poly_bound_n3();

struct BoundReport {
    std::size_t n = 0;
    std::vector<double> params;      // parameters producing `ratio_value`
    HermitianToeplitzSpec spec;
    double matrix_norm = 0.0;
    double ratio_value = 0.0;
    double reference_lo = 0.0;           // reference interval for the ratio
    double reference_hi = 0.0;
    bool pass = false;
    bool heuristic = false;          // true when found by local search only
    double ratio_at_start = 0.0;     // ratio at the tabulated starting parameters (n in {4,6,7})
    std::string note;
};

/// Tabulated starting parameters and reference ratio intervals.
const std::vector<double>& fixed_parameters(std::size_t n);    // n in {4, 6, 7}
std::array<double, 2> reference_interval(std::size_t n);       // n in {2..7}

/// Evaluate the family at the tabulated parameters for n in {4, 6, 7},
/// then refine locally; the report carries both ratios.
BoundReport evaluate_fixed(std::size_t n);

/// Coefficient dilation: g(e^{i t}) = f(e^{i k t}).  Input is the
/// two-sided list f_hat(-N..N); output g_hat(-kN..kN).
std::vector<cplx> dilate_symbol(const std::vector<cplx>& two_sided, std::size_t k);
HermitianToeplitzSpec dilate_symbol(const HermitianToeplitzSpec& spec, std::size_t k);

/// Local maximization of the ratio over the family: coordinate descent
/// with step halving, then a Gauss-Newton polish that equalizes the
/// singular values (the observed structure at the families' optima).
/// Heuristic; the result is a valid lower bound regardless.
BoundReport refine_local(std::size_t n, const std::vector<double>& params0, double radius);

/// Angle (radians) between the coefficient vector (psi_hat(j)) and the
/// conjectured pattern for n in {4, 6, 7}; diagnostic only.
double pattern_angle(std::size_t n, const std::vector<double>& params);

/// Full bound row for the search table, n = 1..7.
BoundReport bound_for(std::size_t n, bool refine = false);

}  // namespace toepmin
