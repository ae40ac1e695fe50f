#include "mrsolve/polynomial_roots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mrsolve {
namespace {

// Sturm chain of the square-free part of p. Remainders are rescaled by
// positive constants only; a sign flip would corrupt the variation count.
std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> chain;
    Poly p0 = p / Poly::gcd(p, p.derivative());  // square-free part
    chain.push_back(p0);
    chain.push_back(p0.derivative());
    while (!chain.back().is_zero()) {
        const auto& a = chain[chain.size() - 2];
        const auto& b = chain.back();
        Poly r = -(a % b);
        if (r.is_zero()) break;
        chain.push_back(r * (Rational(1) / abs_of(r.leading())));
    }
    return chain;
}

int sign_at(const Poly& p, const Rational& x) {
    return sign_of(p.evaluate(x));
}

int sign_variations(const std::vector<Poly>& chain, const Rational& x) {
    int vars = 0;
    int prev = 0;
    for (const auto& q : chain) {
        if (q.is_zero()) continue;
        const int s = sign_at(q, x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++vars;
        prev = s;
    }
    return vars;
}

// Isolate the distinct real roots of a square-free polynomial into disjoint
// intervals (lo, hi], each containing exactly one root.
void isolate(const std::vector<Poly>& chain, const Rational& lo, const Rational& hi, int nroots,
             std::vector<std::pair<Rational, Rational>>& out) {
    if (nroots == 0) return;
    if (nroots == 1) {
        out.emplace_back(lo, hi);
        return;
    }
    const Rational mid = (lo + hi) / 2;
    const int left = sign_variations(chain, lo) - sign_variations(chain, mid);
    isolate(chain, lo, mid, left, out);
    isolate(chain, mid, hi, nroots - left, out);
}

// Shrink an isolating interval for the single root of square-free sf inside it.
void refine(const Poly& sf, Rational& lo, Rational& hi, const Rational& width) {
    // Invariant: exactly one root in (lo, hi].
    if (sign_at(sf, hi) == 0) {
        // exact endpoint hit: collapse
        lo = hi;
        return;
    }
    // lo itself may be a root of sf (belonging to the neighbouring interval);
    // step right by shrinking amounts until we regain a strict bracket.
    if (sign_at(sf, lo) == 0) {
        const int shi = sign_at(sf, hi);
        Rational step = (hi - lo) / 4;
        bool bracketed = false;
        for (int i = 0; i < 256 && !bracketed; ++i) {
            const Rational cand = lo + step;
            const int sc = sign_at(sf, cand);
            if (sc == 0) {  // landed on the interval's root
                lo = cand;
                hi = cand;
                return;
            }
            if (sc != shi) {
                lo = cand;
                bracketed = true;
            }
            step = step / 2;
        }
        if (!bracketed) throw std::logic_error("failed to re-bracket isolated root");
    }
    int slo = sign_at(sf, lo);
    while (hi - lo > width) {
        const Rational mid = (lo + hi) / 2;
        const int smid = sign_at(sf, mid);
        if (smid == 0) {
            lo = mid;
            hi = mid;
            return;
        }
        if (smid == slo) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
}

// Largest integer square root; returns nullopt if n is not a perfect square.
std::optional<BigInt> exact_sqrt(const BigInt& n) {
    if (n < 0) return std::nullopt;
    BigInt r = boost::multiprecision::sqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    const auto sn = exact_sqrt(numerator_of(r));
    const auto sd = exact_sqrt(denominator_of(r));
    if (sn && sd) return Rational(*sn, *sd);
    return std::nullopt;
}

}  // namespace

Rational root_bound(const Poly& p) {
    Rational maxratio = 0;
    const Rational lead = abs_of(p.leading());
    for (int i = 0; i < p.degree(); ++i) {
        const Rational r = abs_of(p[i]) / lead;
        if (r > maxratio) maxratio = r;
    }
    return maxratio + 1;
}

int count_real_roots(const Poly& p, const Rational& lo, const Rational& hi) {
    if (p.degree() < 1) return 0;
    const auto chain = sturm_chain(p);
    return sign_variations(chain, lo) - sign_variations(chain, hi);
}

PolyRoots find_real_roots(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("root search on the zero polynomial");
    if (p.degree() == 0) throw std::domain_error("nonzero constant polynomial has no roots");

    PolyRoots out;
    Poly work = p;

    // Distinct real roots of the square-free part, one isolating interval each.
    const Poly sf = work / Poly::gcd(work, work.derivative());
    const auto chain = sturm_chain(work);
    const Rational bound = root_bound(sf);
    std::vector<std::pair<Rational, Rational>> intervals;
    const int total = sign_variations(chain, -bound) - sign_variations(chain, bound);
    isolate(chain, -bound, bound, total, intervals);

    for (auto& [lo, hi] : intervals) {
        // A rational root u/v of the primitive integer form of sf has v dividing
        // the leading coefficient, so y = (lcm-scaled) root is an integer root of
        // the monic transform. Refining to width < 1/lead^2 pins down at most one
        // candidate, which is then verified exactly.
        refine(sf, lo, hi, Rational(1, 4));
        // candidate search: rational roots have denominator dividing den(lead-scaled) --
        // rather than deflate blindly, test the continued-fraction style candidate from
        // the monic transform. Work in y = lead * x coordinates.
        bool found_rational = false;
        {
            // clear denominators: q(x) = sum a_i x^i with integer a_i
            BigInt common_den = 1;
            for (int i = 0; i <= sf.degree(); ++i)
                common_den = boost::multiprecision::lcm(common_den, denominator_of(sf[i]));
            std::vector<BigInt> ai(static_cast<std::size_t>(sf.degree()) + 1);
            for (int i = 0; i <= sf.degree(); ++i)
                ai[static_cast<std::size_t>(i)] = numerator_of(sf[i] * Rational(common_den));
            const BigInt lead = ai.back();
            // y = lead * x turns q into a monic integer polynomial; integer root y0
            // corresponds to rational root y0/lead.
            Rational ylo = lo * Rational(lead), yhi = hi * Rational(lead);
            if (ylo > yhi) std::swap(ylo, yhi);
            // monic transform m(y) = lead^(n-1) q(y/lead); refine in y to width < 1
            Poly monic_poly;
            {
                const int n = sf.degree();
                std::vector<Rational> mc(static_cast<std::size_t>(n) + 1);
                // m_i = a_i * lead^(n-1-i)
                for (int i = 0; i <= n; ++i) {
                    BigInt scale = 1;
                    for (int t = 0; t < n - 1 - i; ++t) scale *= lead;
                    mc[static_cast<std::size_t>(i)] = Rational(ai[static_cast<std::size_t>(i)] * scale);
                }
                if (sf.degree() == 1) {
                    // linear: root is -a0/a1 directly
                    const Rational root = Rational(-ai[0], ai[1]);
                    if (sf.evaluate(root) == 0) {
                        found_rational = true;
                        Poly lin(std::vector<Rational>{-root, Rational(1)});
                        while (work.evaluate(root) == 0) {
                            out.rational.push_back(root);
                            work = Poly::divmod(work, lin).first;
                        }
                    }
                }
                monic_poly = Poly(std::move(mc));
            }
            if (!found_rational && sf.degree() > 1) {
                Rational a = ylo, b = yhi;
                refine(monic_poly, a, b, Rational(1, 2));
                // at most two integer candidates around the interval
                const BigInt base = numerator_of(a) / denominator_of(a);
                for (BigInt cand = base - 1; cand <= base + 2; ++cand) {
                    const Rational root = Rational(cand, lead);
                    if (sf.evaluate(root) == 0) {
                        found_rational = true;
                        Poly lin(std::vector<Rational>{-root, Rational(1)});
                        while (work.evaluate(root) == 0) {
                            out.rational.push_back(root);
                            work = Poly::divmod(work, lin).first;
                        }
                        break;
                    }
                }
            }
        }
        if (!found_rational) {
            // genuinely irrational: refine numerically for the approximation
            Rational a = lo, b = hi;
            refine(sf, a, b, Rational(1, BigInt(1) << 70));
            IrrationalRoot ir;
            ir.approx = to_double((a + b) / 2);
            out.irrational.push_back(ir);
        }
    }

    // Attach exact quadratic data when the undeflated leftover is degree <= 2.
    out.residual = work;
    if (work.degree() == 2 && !out.irrational.empty()) {
        const Rational A = work[2], B = work[1], C = work[0];
        const Rational disc = B * B - 4 * A * C;
        if (disc > 0 && !rational_sqrt(disc)) {
            for (auto& ir : out.irrational) {
                ir.exact_quadratic = true;
                ir.a = -B / (2 * A);
                ir.b = Rational(1) / (2 * A);
                ir.d = disc;
                const double sq = std::sqrt(to_double(disc));
                const double r1 = to_double(ir.a) + to_double(ir.b) * sq;
                const double r2 = to_double(ir.a) - to_double(ir.b) * sq;
                // keep b's sign consistent with which root this is
                if (std::abs(ir.approx - r2) < std::abs(ir.approx - r1)) ir.b = -ir.b;
            }
        }
    }
    return out;
}

}  // namespace mrsolve
