#include "mrsolve/kg_reduction.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mrsolve::kg {

double gamma_of(const potentials::PotentialSpec& spec, double energy) {
    const double disc = 1.0 + 8.0 * (energy + spec.mass) * spec.v1 / (spec.q * spec.alpha * spec.alpha);
    if (disc < 0.0) {
        std::ostringstream os;
        os << "gamma is complex at E = " << energy << " (discriminant " << disc << ")";
        throw NoRealAnsatz(os.str());
    }
    const double root = std::sqrt(disc);
    return spec.q > 0.0 ? 0.5 + 0.5 * root : 0.5 - 0.5 * root;
}

double beta2_of(const potentials::PotentialSpec& spec, double energy, Beta2Convention convention) {
    const double derived = (energy + spec.mass) * spec.v2 / (2.0 * spec.alpha * spec.alpha);
    return convention == Beta2Convention::printed ? 2.0 * derived : derived;
}

ReducedParams reduce(const potentials::PotentialSpec& spec, double trial_energy, Beta2Convention convention,
                     bool require_bound) {
    ReducedParams p;
    p.epsilon2 = (spec.mass * spec.mass - trial_energy * trial_energy) / (4.0 * spec.alpha * spec.alpha);
    if (require_bound && !(p.epsilon2 > 0.0)) {
        std::ostringstream os;
        os << "eps^2 = " << p.epsilon2 << " <= 0 at E = " << trial_energy << ": not a bound state";
        throw NotABoundState(os.str());
    }
    p.gamma = gamma_of(spec, trial_energy);
    p.beta2 = beta2_of(spec, trial_energy, convention);
    p.c = std::sqrt(std::max(0.0, p.epsilon2 + p.beta2));
    p.kappa = 2.0 * p.c + 2.0 * p.gamma + 1.0;
    p.u = 2.0 * p.c + 1.0;
    p.l = 2.0 * p.beta2 + 2.0 * p.c * p.gamma + p.gamma * p.gamma;
    return p;
}

namespace {

// s (1 - q s) as a polynomial over the coefficient field F.
template <typename F>
Polynomial<F> weight_denominator(const F& q) {
    return Polynomial<F>(std::vector<F>{F(0), F(1), F(0) - q});
}

}  // namespace

aim::SymbolicProblem build_symbolic_problem(const Rational& gamma, const Rational& beta2, const Rational& q) {
    using C = SymbolicCoeff;
    const C c = C::variable();
    const C kappa = C(2) * c + C(Rational(2) * gamma + 1);
    const C u = C(2) * c + C(1);
    const C l = C(Rational(2) * beta2 + gamma * gamma) + C(Rational(2) * gamma) * c;
    const C qc{q};

    const SymPoly lambda_num(std::vector<C>{C(0) - u, qc * kappa});
    const SymPoly s_num(std::vector<C>{qc * l});
    const SymPoly den = weight_denominator<C>(qc);
    return aim::SymbolicProblem(SymRatFunc(lambda_num, den), SymRatFunc(s_num, den));
}

aim::Problem<Rational> build_numeric_problem(const Rational& gamma, const Rational& beta2, const Rational& q,
                                             const Rational& c) {
    const Rational kappa = 2 * c + 2 * gamma + 1;
    const Rational u = 2 * c + 1;
    const Rational l = 2 * beta2 + 2 * c * gamma + gamma * gamma;
    const Poly lambda_num(std::vector<Rational>{-u, q * kappa});
    const Poly s_num(std::vector<Rational>{q * l});
    const Poly den = weight_denominator<Rational>(q);
    return aim::Problem<Rational>(RatFunc(lambda_num, den), RatFunc(s_num, den));
}

Rational quantized_c(const Rational& gamma, const Rational& beta2, int n) {
    const Rational gn = gamma + n;
    if (gn == 0) throw std::domain_error("gamma + n = 0: quantization value undefined");
    return -(2 * beta2 + gn * gn) / (2 * gn);
}

double quantized_c(double gamma, double beta2, int n) {
    const double gn = gamma + n;
    if (gn == 0.0) throw std::domain_error("gamma + n = 0: quantization value undefined");
    return -(2.0 * beta2 + gn * gn) / (2.0 * gn);
}

namespace {

struct Stencil {
    double d1 = 0.0;  // first derivative
    double d2 = 0.0;  // second derivative
};

// Fourth-order central differences.
Stencil derivatives(const std::function<double(double)>& f, double t, double h) {
    const double fm2 = f(t - 2 * h), fm1 = f(t - h), f0 = f(t), fp1 = f(t + h), fp2 = f(t + 2 * h);
    Stencil st;
    st.d1 = (fm2 - 8 * fm1 + 8 * fp1 - fp2) / (12 * h);
    st.d2 = (-fm2 + 16 * fm1 - 30 * f0 + 16 * fp1 - fp2) / (12 * h * h);
    return st;
}

}  // namespace

double transform_residual_check(const potentials::PotentialSpec& spec, double energy,
                                const std::function<double(double)>& test_function,
                                std::span<const double> x_grid, Beta2Convention convention) {
    const auto domain = potentials::domain_of(spec);
    const double m = spec.mass, a = spec.alpha, q = spec.q;
    const double eps2 = (m * m - energy * energy) / (4 * a * a);
    const double gg_q = 2.0 * (energy + m) * spec.v1 / (a * a);  // gamma(gamma-1) q
    const double b2 = beta2_of(spec, energy, convention);

    const double hx = 2e-3;
    auto psi_of_s = [&](double s) { return test_function(-std::log(s) / (2 * a)); };

    double max_diff = 0.0, max_mag = 1e-300;
    for (const double x : x_grid) {
        if (domain.x_min && x - 2.5 * hx <= *domain.x_min) {
            std::ostringstream os;
            os << "grid point x = " << x << " touches the domain singularity";
            throw std::domain_error(os.str());
        }
        const double s = std::exp(-2 * a * x);
        const double hs = std::min(2e-3 * std::max(s, 1e-3), 0.2 * s);
        if (domain.s_hi && s + 2.5 * hs >= *domain.s_hi) {
            std::ostringstream os;
            os << "grid point x = " << x << " touches the domain singularity";
            throw std::domain_error(os.str());
        }

        const Stencil dx = derivatives(test_function, x, hx);
        const double lhs_x = dx.d2 + ((energy * energy - m * m) - 2 * (energy + m) * potentials::evaluate_potential(spec, x)) * test_function(x);

        const Stencil ds = derivatives(psi_of_s, s, hs);
        const double om = 1 - q * s;
        const double coeff = -eps2 / (s * s) - gg_q / (s * om * om) - b2 * (1 + q * s) / (s * s * om);
        const double lhs_s = ds.d2 + ds.d1 / s + coeff * psi_of_s(s);

        const double diff = std::abs(4 * a * a * s * s * lhs_s - lhs_x);
        max_diff = std::max(max_diff, diff);
        max_mag = std::max(max_mag, std::abs(lhs_x));
    }
    return max_diff / std::max(1.0, max_mag);
}

}  // namespace mrsolve::kg
