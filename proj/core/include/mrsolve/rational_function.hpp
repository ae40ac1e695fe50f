#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "mrsolve/polynomial.hpp"
#include "mrsolve/rational.hpp"

namespace mrsolve {

// Exact ratio of two polynomials over a field F, kept fully reduced:
// gcd(num, den) is a unit and the denominator is monic after every operation.
// Reduction is eager rather than lazy so that factor structure (e.g. of
// termination determinants) stays visible to callers.
//
// Rational functions over a field form a field themselves, so
// RationalFunction<RationalFunction<Rational>> is a valid coefficient type;
// that is how a symbolic unknown in the coefficients is represented.
template <typename F>
class RationalFunction {
public:
    RationalFunction() : num_(), den_(F(1)) {}
    RationalFunction(const F& constant) : num_(constant), den_(F(1)) {}  // NOLINT
    RationalFunction(int constant) : num_(F(constant)), den_(F(1)) {}    // NOLINT
    RationalFunction(const Polynomial<F>& p) : num_(p), den_(F(1)) {}    // NOLINT
    RationalFunction(Polynomial<F> num, Polynomial<F> den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
        normalize();
    }

    static RationalFunction variable() { return RationalFunction(Polynomial<F>::variable()); }

    const Polynomial<F>& num() const { return num_; }
    const Polynomial<F>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    RationalFunction operator-() const {
        RationalFunction out = *this;
        out.num_ = -out.num_;
        return out;
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw std::domain_error("rational function division by zero");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;  // canonical forms compare componentwise
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    // Quotient-rule derivative with respect to this function's own variable.
    RationalFunction derivative() const {
        return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    F evaluate(const F& x) const {
        const F d = den_.evaluate(x);
        if (d == F(0)) throw std::domain_error("rational function evaluated at a pole");
        return num_.evaluate(x) / d;
    }

    RationalFunction pow(unsigned e) const {
        RationalFunction out(1);
        RationalFunction base = *this;
        while (e != 0) {
            if (e & 1u) out = out * base;
            base = base * base;
            e >>= 1u;
        }
        return out;
    }

    std::string str(const std::string& var = "x") const {
        if (den_.degree() == 0 && den_[0] == F(1)) return num_.str(var);
        return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
    }

private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = Polynomial<F>(F(1));
            return;
        }
        const Polynomial<F> g = Polynomial<F>::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = Polynomial<F>::divmod(num_, g).first;
            den_ = Polynomial<F>::divmod(den_, g).first;
        }
        const F lead = den_.leading();
        if (!(lead == F(1))) {
            const F inv = F(1) / lead;
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }

    Polynomial<F> num_;
    Polynomial<F> den_;
};

// Workhorse aliases. "Poly" / "RatFunc" read over the rationals; the same
// rational-function type doubles as the coefficient field Q(c) when a
// symbolic unknown c is present.
using Poly = Polynomial<Rational>;
using RatFunc = RationalFunction<Rational>;
using SymbolicCoeff = RationalFunction<Rational>;          // element of Q(c)
using SymPoly = Polynomial<SymbolicCoeff>;                 // polynomial in s over Q(c)
using SymRatFunc = RationalFunction<SymbolicCoeff>;        // rational function of s over Q(c)

}  // namespace mrsolve
