#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pairprob {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational. Always held in lowest terms with a positive
/// denominator, so exact equality is plain structural equality.
using Rational = boost::multiprecision::cpp_rational;

/// Step function: 1 for x >= 0, 0 for x < 0.
inline int heaviside(long long x) noexcept { return x >= 0 ? 1 : 0; }

/// Delta function: 1 for x == 0, 0 otherwise.
inline int kronecker(long long x) noexcept { return x == 0 ? 1 : 0; }

/// n! for n >= 0. Negative n is rejected.
BigInt factorial(long long n);

/// n!! for n >= -1, with (-1)!! = 0!! = 1. Smaller n is rejected.
BigInt double_factorial(long long n);

/// C(a, b) with the zero convention for b < 0 or b > a. A negative upper
/// index with b >= 0 has no defined value here and is rejected.
BigInt binomial(long long a, long long b);

/// Product of f(k) over lo..hi inclusive; the empty range yields 1.
template <class Scalar, class F>
Scalar product_range(F&& f, long long lo, long long hi) {
  Scalar acc{1};
  for (long long k = lo; k <= hi; ++k) acc = acc * f(k);
  return acc;
}

/// Shortest decimal string that round-trips to the same double.
std::string to_decimal_string(double x);

/// "p/q" in lowest terms; integral values print without the "/1".
std::string to_fraction_string(const Rational& value);

/// Compile-time scalar backend working in exact rationals.
struct ExactBackend {
  using Scalar = Rational;
  static constexpr const char* name = "exact";
  static Scalar from_int(long long v) { return Scalar(v); }
  static Scalar from_bigint(const BigInt& v) { return Scalar(v); }
  static Scalar ratio(long long num, long long den) { return Scalar(num, den); }
  static double to_double(const Scalar& v) { return v.convert_to<double>(); }
  static std::string to_string(const Scalar& v) { return to_fraction_string(v); }
};

/// Compile-time scalar backend working in IEEE doubles.
struct FloatBackend {
  using Scalar = double;
  static constexpr const char* name = "float";
  static Scalar from_int(long long v) { return static_cast<double>(v); }
  static Scalar from_bigint(const BigInt& v) { return v.convert_to<double>(); }
  static Scalar ratio(long long num, long long den) {
    return static_cast<double>(num) / static_cast<double>(den);
  }
  static double to_double(Scalar v) { return v; }
  static std::string to_string(Scalar v) { return to_decimal_string(v); }
};

/// Runtime selector between the two backends.
enum class BackendTag { exact, floating };

BackendTag parse_backend(const std::string& name);
const char* backend_name(BackendTag tag);

}  // namespace pairprob
