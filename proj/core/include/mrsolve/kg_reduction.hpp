#pragma once

#include <functional>
#include <span>

#include "mrsolve/aim.hpp"
#include "mrsolve/potentials.hpp"

namespace mrsolve::kg {

// The printed convention keeps the extra factor of two that appears in the
// published beta^2 definition; re-deriving the reduced equation gives
// beta^2 = (E+m) V2 / (2 alpha^2), which is the default. The verification
// suite discriminates the two against the finite-difference route.
enum class Beta2Convention { derived, printed };

// Derived quantities of the reduced equation at a trial energy E:
//   eps2  = (m^2 - E^2)/(4 alpha^2)
//   gamma(gamma-1) q = 2 (E+m) V1 / alpha^2      (gamma from the branch below)
//   beta2 = (E+m) V2 / (2 alpha^2)               (derived convention)
//   c     = +sqrt(eps2 + beta2)
//   kappa = 2c + 2 gamma + 1,  u = 2c + 1,  l = 2 beta2 + 2 c gamma + gamma^2
//
// Branch rule: for q > 0 the "+" root of the gamma quadratic is taken so that
// (1-qs)^gamma vanishes at s = 1/q; for q < 0 that endpoint is outside the
// s-image and square-integrability at s -> infinity forces the "-" root.
struct ReducedParams {
    double epsilon2 = 0.0;
    double gamma = 0.0;
    double beta2 = 0.0;
    double c = 0.0;
    double kappa = 0.0;
    double u = 0.0;
    double l = 0.0;
};

double gamma_of(const potentials::PotentialSpec& spec, double energy);  // throws NoRealAnsatz
double beta2_of(const potentials::PotentialSpec& spec, double energy,
                Beta2Convention convention = Beta2Convention::derived);

struct NoRealAnsatz : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotABoundState : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Full reduction at a trial energy. require_bound enforces eps2 > 0 (|E| < m).
ReducedParams reduce(const potentials::PotentialSpec& spec, double trial_energy,
                     Beta2Convention convention = Beta2Convention::derived, bool require_bound = true);

// AIM coefficient functions of the reduced equation,
//   lambda0 = (q s kappa - u) / (s (1 - q s)),   s0 = q l / (s (1 - q s)),
// over Q(c) with the quantization unknown c carried symbolically.
aim::SymbolicProblem build_symbolic_problem(const Rational& gamma, const Rational& beta2, const Rational& q);

// Same coefficients with every parameter (including c) a fixed rational.
aim::Problem<Rational> build_numeric_problem(const Rational& gamma, const Rational& beta2, const Rational& q,
                                             const Rational& c);

// Closed-form quantization value of the unknown for level n,
//   c_n = -(2 beta2 + (gamma+n)^2) / (2 (gamma+n)),
// exact counterpart of the AIM determinant root.
Rational quantized_c(const Rational& gamma, const Rational& beta2, int n);
double quantized_c(double gamma, double beta2, int n);

// Change-of-variables validation: applies the x-space operator
//   psi'' + [(E^2-m^2) - 2(E+m)V(x)] psi
// and the s-space reduced operator (times the Jacobian factor 4 alpha^2 s^2)
// to the same test function and returns the maximum discrepancy on the grid,
// scaled by the largest operator magnitude seen. Derivatives are taken with
// fourth-order central differences.
double transform_residual_check(const potentials::PotentialSpec& spec, double energy,
                                const std::function<double(double)>& test_function,
                                std::span<const double> x_grid,
                                Beta2Convention convention = Beta2Convention::derived);

}  // namespace mrsolve::kg
