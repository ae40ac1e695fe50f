#pragma once

#include <optional>

namespace mrsolve::potentials {

// q-deformed hyperbolic functions:
//   sinh_q(y) = (e^y - q e^-y)/2,  cosh_q(y) = (e^y + q e^-y)/2,
//   coth_q = cosh_q/sinh_q,        cosech_q = 1/sinh_q.
// q = 1 recovers the ordinary functions; q = -1 swaps the sinh/cosh roles.
double sinh_q(double y, double q);
double cosh_q(double y, double q);
double coth_q(double y, double q);    // throws std::domain_error at sinh_q(y) = 0
double cosech_q(double y, double q);  // throws std::domain_error at sinh_q(y) = 0

// Deformation parameter, restricted to -1 <= q < 0 or q > 0.
struct DeformationParameter {
    double q;
    explicit DeformationParameter(double q_in);
};

// Physical parameters of the deformed hyperbolic well
//   V(x) = V1 cosech_q^2(alpha x) + V2 coth_q(alpha x),
// equivalently in exponential form with s = e^(-2 alpha x)
//   V(x) = 4 V1 s/(1-qs)^2 + V2 (1+qs)/(1-qs).
// V1, V2 carry energy units; alpha is the inverse screening length; m the rest mass.
struct PotentialSpec {
    double v1 = 0.0;
    double v2 = 0.0;
    double alpha = 1.0;
    double q = 1.0;
    double mass = 1.0;

    PotentialSpec() = default;
    PotentialSpec(double v1_in, double v2_in, double alpha_in, double q_in, double mass_in);
};

// Physical x-domain. For q > 0 the potential has a pole at
// x* = ln(q)/(2 alpha), and the physical domain is (x*, +inf), mapping to
// s in (0, 1/q). For q < 0 the domain is the whole line, s in (0, +inf).
struct Domain {
    std::optional<double> x_min;          // empty = -infinity
    std::optional<double> singular_point;
    double s_lo = 0.0;                    // open endpoint
    std::optional<double> s_hi;           // empty = +infinity; open endpoint

    bool contains_x(double x) const { return !x_min || x > *x_min; }
};

Domain domain_of(const PotentialSpec& spec);

// Potential value at x, using the exponential form (numerically stable near
// the pole and for large alpha*x). Throws std::domain_error outside the domain.
double evaluate_potential(const PotentialSpec& spec, double x);

// Same potential through the deformed-hyperbolic definitions; used to
// cross-check the two forms against each other.
double evaluate_potential_hyperbolic(const PotentialSpec& spec, double x);

// Potential as a function of s = e^(-2 alpha x).
double evaluate_potential_s(const PotentialSpec& spec, double s);

// Location of the potential minimum inside the domain, if one exists
// (used as the default numeric-iteration anchor).
std::optional<double> potential_minimum_x(const PotentialSpec& spec);

}  // namespace mrsolve::potentials
