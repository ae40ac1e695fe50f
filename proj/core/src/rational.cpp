#include "mrsolve/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace mrsolve {

Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw std::domain_error("cannot convert non-finite double to rational");
    if (x == 0.0) return Rational(0);
    int exp = 0;
    const double mant = std::frexp(x, &exp);  // x = mant * 2^exp, |mant| in [0.5, 1)
    const auto scaled = static_cast<long long>(std::ldexp(mant, 53));
    BigInt num(scaled);
    exp -= 53;
    if (exp >= 0) return Rational(num << exp);
    return Rational(num, BigInt(1) << (-exp));
}

}  // namespace mrsolve
