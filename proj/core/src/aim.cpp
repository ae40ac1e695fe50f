#include "mrsolve/aim.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace mrsolve::aim {

namespace {

// Multiply out the Q(c) coefficient denominators of a polynomial in s, giving
// a polynomial in s whose coefficients are polynomials in c, up to an overall
// unit in Q(c).
Polynomial<Poly> clear_coefficient_denominators(const SymPoly& num) {
    Poly common_den(Rational(1));
    for (const auto& coeff : num.coefficients()) {
        if (coeff.is_zero()) continue;
        const Poly g = Poly::gcd(common_den, coeff.den());
        common_den = common_den * Poly::divmod(coeff.den(), g).first;  // lcm
    }
    std::vector<Poly> cleared;
    cleared.reserve(num.coefficients().size());
    for (const auto& coeff : num.coefficients()) {
        if (coeff.is_zero()) {
            cleared.emplace_back();
            continue;
        }
        cleared.push_back(coeff.num() * Poly::divmod(common_den, coeff.den()).first);
    }
    return Polynomial<Poly>(std::move(cleared));
}

// Scale a rational-coefficient polynomial to be primitive with positive
// leading coefficient.
Poly primitive_positive(const Poly& p) {
    if (p.is_zero()) return p;
    BigInt den_lcm = 1;
    for (const auto& c : p.coefficients()) den_lcm = boost::multiprecision::lcm(den_lcm, denominator_of(c));
    BigInt num_gcd = 0;
    for (const auto& c : p.coefficients()) num_gcd = boost::multiprecision::gcd(num_gcd, numerator_of(c * Rational(den_lcm)));
    Rational scale(den_lcm, num_gcd);
    if (sign_of(p.leading()) < 0) scale = -scale;
    return p * scale;
}

}  // namespace

Poly quantization_polynomial(const RationalFunction<SymbolicCoeff>& delta, int k) {
    if (delta.is_zero()) {
        std::ostringstream os;
        os << "Delta_" << k << " vanishes identically";
        throw NotExactlySolvable(os.str());
    }
    const Polynomial<Poly> cleared = clear_coefficient_denominators(delta.num());

    Poly common(Rational(0));
    for (const auto& coeff : cleared.coefficients()) common = Poly::gcd(common, coeff);

    // Root condition is s-independent iff every s-coefficient is a rational
    // multiple of the common c-polynomial.
    for (const auto& coeff : cleared.coefficients()) {
        if (coeff.is_zero()) continue;
        const auto [quot, rem] = Poly::divmod(coeff, common);
        if (!rem.is_zero() || quot.degree() > 0) {
            std::ostringstream os;
            os << "Delta_" << k << " root condition depends on the ODE variable: not exactly solvable at this k";
            throw NotExactlySolvable(os.str());
        }
    }
    if (common.degree() < 1) {
        std::ostringstream os;
        os << "Delta_" << k << " has no root in the unknown (constant condition)";
        throw NotExactlySolvable(os.str());
    }
    return primitive_positive(common);
}

TerminationResult termination_determinant(const SymbolicProblem& problem, int k) {
    if (k < 1) throw std::invalid_argument("termination determinant requires k >= 1");
    SymbolicState prev = initial_state(problem);
    SymbolicState cur = iterate(problem, prev);
    for (int i = 1; i < k; ++i) {
        prev = cur;
        cur = iterate(problem, cur);
    }
    TerminationResult out;
    out.k = k;
    out.delta = quantization_polynomial(termination_delta(cur, prev), k);
    out.roots = find_real_roots(out.delta);
    return out;
}

RationalFunction<Rational> substitute_unknown(const RationalFunction<SymbolicCoeff>& f, const Rational& value) {
    auto eval = [&](const SymbolicCoeff& coeff) { return coeff.evaluate(value); };
    return RationalFunction<Rational>(f.num().map_coefficients<Rational>(eval),
                                      f.den().map_coefficients<Rational>(eval));
}

Polynomial<Rational> generate_polynomial(const RationalFunction<Rational>& lambda_n,
                                         const RationalFunction<Rational>& s_n, int max_degree) {
    if (lambda_n.is_zero()) throw NonPolynomialGenerator("lambda_n vanished after substitution");
    const RationalFunction<Rational> ratio = -(s_n / lambda_n);  // = f'/f for the convergent branch
    const Poly& P = ratio.num();
    const Poly& Q = ratio.den();
    if (Q.evaluate(Rational(0)) == 0)
        throw NonPolynomialGenerator("generator ratio has a pole at s = 0");

    // Power-series solution of f' = ratio * f with f(0) = 1. The series of the
    // ratio comes from exact long division of P by Q.
    const int order = max_degree + 4;  // guard terms to detect non-termination
    std::vector<Rational> rho(static_cast<std::size_t>(order) + 1, Rational(0));
    {
        const Rational q0 = Q.evaluate(Rational(0));
        for (int j = 0; j <= order; ++j) {
            Rational acc = P[j];
            for (int i = 0; i < j; ++i) acc -= rho[static_cast<std::size_t>(i)] * Q[j - i];
            rho[static_cast<std::size_t>(j)] = acc / q0;
        }
    }
    std::vector<Rational> a(static_cast<std::size_t>(order) + 2, Rational(0));
    a[0] = 1;
    for (int j = 0; j <= order; ++j) {
        Rational acc = 0;
        for (int i = 0; i <= j; ++i) acc += rho[static_cast<std::size_t>(i)] * a[static_cast<std::size_t>(j - i)];
        a[static_cast<std::size_t>(j) + 1] = acc / Rational(j + 1);
    }

    int degree = -1;
    for (int j = 0; j <= max_degree; ++j)
        if (!(a[static_cast<std::size_t>(j)] == 0)) degree = j;
    for (int j = max_degree + 1; j <= order + 1; ++j) {
        if (!(a[static_cast<std::size_t>(j)] == 0))
            throw NonPolynomialGenerator("series does not terminate at the allowed degree");
    }
    std::vector<Rational> coeffs(a.begin(), a.begin() + degree + 1);
    Poly f(std::move(coeffs));

    // Exact verification of f' Q = P f; the series construction alone only
    // sees finitely many terms.
    if (!(f.derivative() * Q == P * f))
        throw NonPolynomialGenerator("ratio is not the logarithmic derivative of a polynomial");
    return f;
}

std::vector<LevelRoot> solve_symbolic(const SymbolicProblem& problem, int n_max) {
    if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");

    std::vector<SymbolicState> chain;
    chain.push_back(initial_state(problem));
    for (int k = 1; k <= n_max + 1; ++k) chain.push_back(iterate(problem, chain.back()));

    std::map<Rational, int> seen;  // root -> multiplicity so far
    std::vector<LevelRoot> levels;

    for (int k = 1; k <= n_max + 1; ++k) {
        const Poly delta = quantization_polynomial(termination_delta(chain[static_cast<std::size_t>(k)],
                                                                     chain[static_cast<std::size_t>(k - 1)]),
                                                   k);
        const PolyRoots roots = find_real_roots(delta);
        std::map<Rational, int> mult;
        for (const auto& r : roots.rational) ++mult[r];

        for (const auto& [root, count] : mult) {
            const int new_copies = count - (seen.count(root) ? seen.at(root) : 0);
            for (int copy = 0; copy < new_copies; ++copy) {
                // classify the new root by its generated polynomial degree;
                // the ratio at iterate k is stabilised for every level <= k.
                const auto lam = substitute_unknown(chain[static_cast<std::size_t>(k)].lambda, root);
                const auto sk = substitute_unknown(chain[static_cast<std::size_t>(k)].s, root);
                Polynomial<Rational> f;
                try {
                    f = generate_polynomial(lam, sk, k);
                } catch (const NonPolynomialGenerator&) {
                    continue;  // spurious root: no terminating solution attached
                }
                LevelRoot lr;
                lr.n = f.degree();
                lr.c = root;
                lr.first_seen_k = k;
                levels.push_back(lr);
            }
        }
        seen = std::move(mult);
    }

    std::sort(levels.begin(), levels.end(), [](const LevelRoot& a, const LevelRoot& b) { return a.n < b.n; });
    std::vector<LevelRoot> out;
    for (int n = 0; n <= n_max; ++n) {
        auto it = std::find_if(levels.begin(), levels.end(), [&](const LevelRoot& l) { return l.n == n; });
        if (it == levels.end()) {
            std::ostringstream os;
            os << "no quantization root generated level n = " << n << " by Delta_" << n_max + 1;
            throw NotExactlySolvable(os.str());
        }
        out.push_back(*it);
    }
    return out;
}

}  // namespace mrsolve::aim
