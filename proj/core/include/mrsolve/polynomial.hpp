#pragma once

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mrsolve {

// Dense univariate polynomial over a field F. Coefficients are stored in
// ascending degree order with no trailing zeros (canonical form); the zero
// polynomial has an empty coefficient vector and degree() == -1.
//
// F must provide +, -, *, /, ==, construction from int, and value semantics.
// Both Rational and RationalFunction<Rational> qualify, which gives the one
// nesting level needed for coefficients that are themselves functions of a
// symbolic unknown.
template <typename F>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const F& constant) {  // NOLINT: implicit by design
        if (!(constant == F(0))) coeffs_.push_back(constant);
    }
    Polynomial(int constant) : Polynomial(F(constant)) {}  // NOLINT
    explicit Polynomial(std::vector<F> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    // The monomial x (in whatever variable this polynomial is read as).
    static Polynomial variable() { return Polynomial(std::vector<F>{F(0), F(1)}); }

    static Polynomial monomial(int degree, const F& coeff) {
        if (coeff == F(0)) return Polynomial();
        std::vector<F> c(static_cast<std::size_t>(degree) + 1, F(0));
        c.back() = coeff;
        return Polynomial(std::move(c));
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    // Coefficient of s^i; zero beyond the stored range.
    const F& operator[](int i) const {
        static const F kZero = F(0);
        if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
        return coeffs_[static_cast<std::size_t>(i)];
    }

    const F& leading() const {
        if (is_zero()) throw std::logic_error("leading coefficient of zero polynomial");
        return coeffs_.back();
    }

    const std::vector<F>& coefficients() const { return coeffs_; }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<F> c(std::max(a.coeffs_.size(), b.coeffs_.size()), F(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] = c[i] + b.coeffs_[i];
        return Polynomial(std::move(c));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    Polynomial operator-() const {
        std::vector<F> c(coeffs_);
        for (auto& x : c) x = F(0) - x;
        return Polynomial(std::move(c));
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<F> c(a.coeffs_.size() + b.coeffs_.size() - 1, F(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] = c[i + j] + a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(c));
    }

    friend Polynomial operator*(const Polynomial& a, const F& k) { return a * Polynomial(k); }
    friend Polynomial operator*(const F& k, const Polynomial& a) { return a * Polynomial(k); }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Euclidean division over the field: a = q*b + r with deg r < deg b.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        Polynomial r = a;
        if (a.degree() < b.degree()) return {Polynomial(), r};
        std::vector<F> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, F(0));
        while (!r.is_zero() && r.degree() >= b.degree()) {
            const int shift = r.degree() - b.degree();
            const F factor = r.leading() / b.leading();
            q[static_cast<std::size_t>(shift)] = factor;
            r = r - Polynomial::monomial(shift, factor) * b;
        }
        return {Polynomial(std::move(q)), r};
    }

    friend Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }
    friend Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) return Polynomial();
        std::vector<F> c(coeffs_.size() - 1, F(0));
        for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * F(static_cast<int>(i));
        return Polynomial(std::move(c));
    }

    F evaluate(const F& x) const {  // Horner
        F acc = F(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    template <typename G, typename Fn>
    Polynomial<G> map_coefficients(Fn&& fn) const {
        std::vector<G> c;
        c.reserve(coeffs_.size());
        for (const auto& x : coeffs_) c.push_back(fn(x));
        return Polynomial<G>(std::move(c));
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        const F inv = F(1) / leading();
        return *this * inv;
    }

    // gcd via Euclid, normalized monic so the result is canonical.
    static Polynomial gcd(Polynomial a, Polynomial b) {
        while (!b.is_zero()) {
            a = a % b;
            std::swap(a, b);
            if (!b.is_zero()) b = b.monic();  // keeps coefficient growth in check
        }
        return a.is_zero() ? a : a.monic();
    }

    Polynomial pow(unsigned e) const {
        Polynomial out(F(1));
        Polynomial base = *this;
        while (e != 0) {
            if (e & 1u) out = out * base;
            base = base * base;
            e >>= 1u;
        }
        return out;
    }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            const F& c = (*this)[i];
            if (c == F(0)) continue;
            if (!first) os << " + ";
            os << "(" << coeff_str(c) << ")";
            if (i >= 1) os << "*" << var;
            if (i >= 2) os << "^" << i;
            first = false;
        }
        return os.str();
    }

private:
    template <typename T>
    static std::string coeff_str(const T& c) {
        if constexpr (requires(const T& x) { x.str(); }) {
            return c.str();
        } else {
            std::ostringstream os;
            os << c;
            return os.str();
        }
    }

    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == F(0)) coeffs_.pop_back();
    }

    std::vector<F> coeffs_;
};

}  // namespace mrsolve
