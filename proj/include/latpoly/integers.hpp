#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "latpoly/errors.hpp"

namespace latpoly {

// Arbitrary-precision integers and rationals. Nothing in the library touches
// floating point; every comparison that decides anything is exact.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int int_abs(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int int_gcd(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Int int_lcm(const Int& a, const Int& b) {
  return boost::multiprecision::lcm(a, b);
}

inline Int rat_num(const Rat& x) { return boost::multiprecision::numerator(x); }
inline Int rat_den(const Rat& x) { return boost::multiprecision::denominator(x); }

inline bool rat_is_integer(const Rat& x) { return rat_den(x) == 1; }

// Floor division, any signs, b != 0.
inline Int floor_div(const Int& a, const Int& b) {
  if (b == 0) throw domain_error("floor_div: division by zero");
  Int q = a / b;
  Int r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

// Exact division; remainder must be zero.
inline Int exact_div(const Int& a, const Int& b) {
  if (b == 0) throw domain_error("exact_div: division by zero");
  if (a % b != 0) throw internal_error("exact_div: remainder nonzero");
  return a / b;
}

inline Int int_pow(Int base, unsigned long exp) {
  Int r = 1;
  while (exp) {
    if (exp & 1) r *= base;
    base *= base;
    exp >>= 1;
  }
  return r;
}

inline Rat rat_pow(const Rat& base, unsigned long exp) {
  return Rat(int_pow(rat_num(base), exp), int_pow(rat_den(base), exp));
}

// C(n, k) for integer n (possibly large), small k. Zero for k < 0 or,
// when n >= 0, for k > n. Negative n follows the falling-factorial
// convention C(n, k) = n(n-1)...(n-k+1)/k!.
inline Int binomial(const Int& n, const Int& k) {
  if (k < 0) return 0;
  if (n >= 0 && k > n) return 0;
  Int r = 1;
  for (Int i = 0; i < k; ++i) {
    r *= n - i;
    r = exact_div(r, i + 1);  // product of j consecutive integers is divisible by j!
  }
  return r;
}

// Falling-factorial binomial with a rational top index, exact.
inline Rat binomial_rational(const Rat& x, unsigned long k) {
  Rat r = 1;
  for (unsigned long i = 0; i < k; ++i) {
    r *= x - Rat(i);
    r /= Rat(i + 1);
  }
  return r;
}

// g = s*a + t*b with g = gcd(a, b) >= 0.
struct Xgcd {
  Int g, s, t;
};

inline Xgcd xgcd(Int a, Int b) {
  Int s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    Int q = a / b;
    Int r = a - q * b;
    a = b;
    b = r;
    Int s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
    Int t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (a < 0) {
    a = -a;
    s0 = -s0;
    t0 = -t0;
  }
  return {a, s0, t0};
}

inline std::string to_string(const Int& a) { return a.str(); }

inline std::string to_string(const Rat& x) {
  if (rat_is_integer(x)) return rat_num(x).str();
  return rat_num(x).str() + "/" + rat_den(x).str();
}

}  // namespace latpoly
