#include "pairprob/numerics.hpp"

#include <charconv>

namespace pairprob {

BigInt factorial(long long n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  BigInt acc{1};
  for (long long k = 2; k <= n; ++k) acc *= k;
  return acc;
}

BigInt double_factorial(long long n) {
  if (n < -1) throw std::domain_error("double_factorial: argument below -1");
  BigInt acc{1};
  for (long long k = n; k >= 2; k -= 2) acc *= k;
  return acc;
}

BigInt binomial(long long a, long long b) {
  if (b < 0 || b > a) {
    if (a < 0 && b >= 0) throw std::domain_error("binomial: negative upper index");
    return BigInt{0};
  }
  if (a < 0) throw std::domain_error("binomial: negative upper index");
  long long k = std::min(b, a - b);
  BigInt acc{1};
  for (long long i = 0; i < k; ++i) {
    acc *= (a - i);
    acc /= (i + 1);  // exact: C(a, i+1) is an integer at every step
  }
  return acc;
}

std::string to_decimal_string(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::string to_fraction_string(const Rational& value) {
  std::string s = numerator(value).str();
  if (denominator(value) != 1) {
    s += '/';
    s += denominator(value).str();
  }
  return s;
}

BackendTag parse_backend(const std::string& name) {
  if (name == "exact") return BackendTag::exact;
  if (name == "float") return BackendTag::floating;
  throw std::invalid_argument("unknown backend: " + name);
}

const char* backend_name(BackendTag tag) {
  return tag == BackendTag::exact ? "exact" : "float";
}

}  // namespace pairprob
