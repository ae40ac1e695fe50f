#pragma once

#include <stdexcept>
#include <vector>

#include "mrsolve/polynomial_roots.hpp"
#include "mrsolve/rational_function.hpp"

namespace mrsolve::aim {

// Asymptotic iteration method for y'' = lambda0 y' + s0 y with rational
// lambda0(s), s0(s). Iterating
//   lambda_k = lambda_{k-1}' + s_{k-1} + lambda0 lambda_{k-1}
//   s_k      = s_{k-1}'      + s0 lambda_{k-1}
// the ratio s_k/lambda_k stabilises for large k, and the termination
// determinant
//   Delta_k = lambda_k s_{k-1} - lambda_{k-1} s_k
// vanishes exactly on the quantized values of the problem's unknown.
//
// The field F is Rational for fully numeric-exact coefficients, or
// Q(c) = RationalFunction<Rational> when the quantization unknown c is
// carried symbolically.

template <typename F>
struct Problem {
    RationalFunction<F> lambda0;
    RationalFunction<F> s0;

    Problem(RationalFunction<F> lambda0_in, RationalFunction<F> s0_in)
        : lambda0(std::move(lambda0_in)), s0(std::move(s0_in)) {
        if (lambda0.is_zero()) throw std::invalid_argument("AIM requires lambda0 != 0");
    }
};

template <typename F>
struct State {
    int k = 0;
    RationalFunction<F> lambda;
    RationalFunction<F> s;
};

template <typename F>
State<F> initial_state(const Problem<F>& p) {
    return State<F>{0, p.lambda0, p.s0};
}

template <typename F>
State<F> iterate(const Problem<F>& p, const State<F>& st) {
    State<F> next;
    next.k = st.k + 1;
    next.lambda = st.lambda.derivative() + st.s + p.lambda0 * st.lambda;
    next.s = st.s.derivative() + p.s0 * st.lambda;
    return next;
}

// Delta_k from the states at k and k-1.
template <typename F>
RationalFunction<F> termination_delta(const State<F>& at_k, const State<F>& at_km1) {
    return at_k.lambda * at_km1.s - at_km1.lambda * at_k.s;
}

// ---- symbolic quantization ----

// Raised when Delta_k's dependence on the ODE variable does not factor out of
// the root condition, i.e. the problem is not exactly solvable at this k.
// Numeric anchor-point iteration is the fallback in that case.
struct NotExactlySolvable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TerminationResult {
    int k = 0;
    Poly delta;       // quantization polynomial in the unknown, primitive with positive leading coeff
    PolyRoots roots;  // its roots
};

using SymbolicProblem = Problem<SymbolicCoeff>;
using SymbolicState = State<SymbolicCoeff>;

// Clears the common s-dependent denominator of Delta_k and checks that every
// s-coefficient of the numerator is a rational multiple of one polynomial in
// the unknown; returns that polynomial and its roots.
TerminationResult termination_determinant(const SymbolicProblem& problem, int k);

// Extract the quantization polynomial from an already-computed Delta_k.
Poly quantization_polynomial(const RationalFunction<SymbolicCoeff>& delta, int k);

struct LevelRoot {
    int n = 0;           // level = degree of the generated polynomial factor
    Rational c;          // quantization-unknown value
    int first_seen_k = 0;
};

// Runs the determinant chain to k = n_max + 1 and classifies each newly
// appearing root by the degree of its generated wavefunction polynomial.
// Each Delta_k's root set contains all previous levels' roots; the returned
// list holds levels 0..n_max in order.
std::vector<LevelRoot> solve_symbolic(const SymbolicProblem& problem, int n_max);

// Substitute the quantization unknown by an exact value, collapsing
// Q(c)-coefficients to rationals. Throws std::domain_error if any coefficient
// has a pole there.
RationalFunction<Rational> substitute_unknown(const RationalFunction<SymbolicCoeff>& f, const Rational& value);

// Raised when exp(-integral s_n/lambda_n) is not a polynomial, i.e. the ratio
// is not the logarithmic derivative of a polynomial of the allowed degree.
struct NonPolynomialGenerator : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Wavefunction generator: the polynomial f with f(0) = 1 and
// f'/f = -s_n/lambda_n, obtained by exact power-series integration of the
// ratio and verified against the defining identity. Only the convergent
// branch is generated (the divergent integration constant is dropped).
Polynomial<Rational> generate_polynomial(const RationalFunction<Rational>& lambda_n,
                                         const RationalFunction<Rational>& s_n, int max_degree);

}  // namespace mrsolve::aim
