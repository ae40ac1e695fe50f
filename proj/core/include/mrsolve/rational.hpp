#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace mrsolve {

// Exact arbitrary-precision rational. Always stored in lowest terms with a
// positive denominator; the canonical zero is 0/1. These invariants are
// maintained by the backing type on every operation.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(std::int64_t num, std::int64_t den) {
    return Rational(BigInt(num), BigInt(den));
}

inline BigInt numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

inline std::string to_string(const Rational& r) { return r.str(); }

inline int sign_of(const Rational& r) { return r.sign(); }

inline Rational abs_of(const Rational& r) { return r < 0 ? Rational(-r) : r; }

// Exact conversion: every finite double is a dyadic rational.
Rational rational_from_double(double x);

}  // namespace mrsolve
