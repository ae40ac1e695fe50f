#pragma once

#include <optional>
#include <vector>

#include "mrsolve/polynomial.hpp"
#include "mrsolve/rational.hpp"
#include "mrsolve/rational_function.hpp"

namespace mrsolve {

// A real root that is not rational. For a quadratic leftover factor the root
// is carried exactly as a + b*sqrt(d) with rational a, b and non-square d;
// otherwise only the numeric approximation is available and the value is
// flagged inexact.
struct IrrationalRoot {
    double approx = 0.0;
    bool exact_quadratic = false;  // true: (a, b, d) below are an exact representation
    Rational a, b, d;              // root = a + b*sqrt(d) when exact_quadratic
};

struct PolyRoots {
    std::vector<Rational> rational;           // repeated entries encode multiplicity
    std::vector<IrrationalRoot> irrational;   // real irrational roots (multiplicity 1 each)
    Poly residual;                            // factor left after removing all real roots found
};

// All rational roots of p (exact, with multiplicity) plus the real irrational
// ones: exact closed forms for what deflates to degree <= 2, numeric
// flagged-inexact values above that. Throws std::domain_error for a nonzero
// constant polynomial and std::invalid_argument for the zero polynomial.
PolyRoots find_real_roots(const Poly& p);

// Number of distinct real roots of p in the half-open interval (lo, hi],
// by Sturm's theorem. p need not be square-free.
int count_real_roots(const Poly& p, const Rational& lo, const Rational& hi);

// Cauchy bound: every real root lies in [-bound, bound].
Rational root_bound(const Poly& p);

}  // namespace mrsolve
