#include "mrsolve/potentials.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace mrsolve::potentials {

namespace {

[[noreturn]] void pole_error(const char* fn, double y, double q) {
    std::ostringstream os;
    os << fn << " pole: sinh_q(y) = 0 at y = " << y;
    if (q > 0.0) os << " (pole located at y = ln(q)/2 = " << 0.5 * std::log(q) << ")";
    throw std::domain_error(os.str());
}

}  // namespace

double sinh_q(double y, double q) { return 0.5 * (std::exp(y) - q * std::exp(-y)); }
double cosh_q(double y, double q) { return 0.5 * (std::exp(y) + q * std::exp(-y)); }

double coth_q(double y, double q) {
    const double s = sinh_q(y, q);
    if (s == 0.0) pole_error("coth_q", y, q);
    return cosh_q(y, q) / s;
}

double cosech_q(double y, double q) {
    const double s = sinh_q(y, q);
    if (s == 0.0) pole_error("cosech_q", y, q);
    return 1.0 / s;
}

DeformationParameter::DeformationParameter(double q_in) : q(q_in) {
    const bool valid = (q >= -1.0 && q < 0.0) || q > 0.0;
    if (!valid) throw std::invalid_argument("q out of range: require -1 <= q < 0 or q > 0");
}

PotentialSpec::PotentialSpec(double v1_in, double v2_in, double alpha_in, double q_in, double mass_in)
    : v1(v1_in), v2(v2_in), alpha(alpha_in), q(q_in), mass(mass_in) {
    DeformationParameter{q};  // validates q
    if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
    if (!(mass > 0.0)) throw std::invalid_argument("mass must be positive");
}

Domain domain_of(const PotentialSpec& spec) {
    Domain d;
    if (spec.q > 0.0) {
        const double xstar = std::log(spec.q) / (2.0 * spec.alpha);
        d.singular_point = xstar;
        d.x_min = xstar;
        d.s_hi = 1.0 / spec.q;
    }
    return d;
}

double evaluate_potential_s(const PotentialSpec& spec, double s) {
    const double om = 1.0 - spec.q * s;
    if (om == 0.0 || s <= 0.0) throw std::domain_error("potential evaluated at/beyond the singular point");
    return 4.0 * spec.v1 * s / (om * om) + spec.v2 * (1.0 + spec.q * s) / om;
}

double evaluate_potential(const PotentialSpec& spec, double x) {
    const Domain d = domain_of(spec);
    if (!d.contains_x(x)) {
        std::ostringstream os;
        os << "x = " << x << " is outside the domain (singular point at x = " << *d.singular_point << ")";
        throw std::domain_error(os.str());
    }
    return evaluate_potential_s(spec, std::exp(-2.0 * spec.alpha * x));
}

double evaluate_potential_hyperbolic(const PotentialSpec& spec, double x) {
    const double y = spec.alpha * x;
    const double cs = cosech_q(y, spec.q);
    return spec.v1 * cs * cs + spec.v2 * coth_q(y, spec.q);
}

std::optional<double> potential_minimum_x(const PotentialSpec& spec) {
    // Log-spaced scan over the s-image of the domain, then golden-section
    // refinement. An interior grid argmin is required; an argmin at either
    // scan edge means the potential is monotone toward that end.
    const Domain d = domain_of(spec);
    const double s_hi = d.s_hi ? *d.s_hi * (1.0 - 1e-9) : 1e4;
    const double s_lo = s_hi * 1e-12;
    auto f = [&](double s) { return evaluate_potential_s(spec, s); };

    constexpr int kScan = 512;
    int best = 0;
    double best_v = std::numeric_limits<double>::infinity();
    const double ratio = std::pow(s_hi / s_lo, 1.0 / (kScan - 1));
    for (int i = 0; i < kScan; ++i) {
        const double s = s_lo * std::pow(ratio, i);
        const double v = f(s);
        if (v < best_v) {
            best_v = v;
            best = i;
        }
    }
    if (best == 0 || best == kScan - 1) return std::nullopt;

    double a = s_lo * std::pow(ratio, best - 1);
    double b = s_lo * std::pow(ratio, best + 1);
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double c1 = b - phi * (b - a), c2 = a + phi * (b - a);
    double f1 = f(c1), f2 = f(c2);
    for (int it = 0; it < 120; ++it) {
        if (f1 < f2) {
            b = c2; c2 = c1; f2 = f1;
            c1 = b - phi * (b - a); f1 = f(c1);
        } else {
            a = c1; c1 = c2; f1 = f2;
            c2 = a + phi * (b - a); f2 = f(c2);
        }
    }
    return -std::log(0.5 * (a + b)) / (2.0 * spec.alpha);
}

}  // namespace mrsolve::potentials
