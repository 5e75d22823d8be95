#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "hgc/errors.hpp"

namespace hgc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numer(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denom(const Rational& r) { return boost::multiprecision::denominator(r); }

/// Canonical "num/den" form; integers keep the "/1" so the format is uniform.
inline std::string to_string(const Rational& r) {
  return numer(r).str() + "/" + denom(r).str();
}

/// Parses "num/den" or a bare integer. Decimal notation is rejected on purpose.
inline Rational parse_rational(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den))
    throw InputError("not a rational of the form num/den: '" + std::string(text) + "'");
  BigInt n(std::string(num.front() == '+' ? num.substr(1) : num));
  BigInt d(std::string(den.front() == '+' ? den.substr(1) : den));
  if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  return Rational(n, d);
}

inline BigInt floor(const Rational& r) {
  BigInt q = numer(r) / denom(r);
  if (numer(r) < 0 && q * denom(r) != numer(r)) q -= 1;
  return q;
}

inline BigInt ceil(const Rational& r) {
  BigInt q = floor(r);
  return q * denom(r) == numer(r) ? q : q + 1;
}

inline Rational pow(Rational base, unsigned exponent) {
  Rational out = 1;
  while (exponent) {
    if (exponent & 1U) out *= base;
    base *= base;
    exponent >>= 1U;
  }
  return out;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Upper bound on ln(x) for rational x >= 1.
///
/// x is reduced to 2^m * r with r in [1, 2); each logarithm is bounded by the
/// atanh series 2 * sum y^(2n+1)/(2n+1), y = (r-1)/(r+1), cut after `terms`
/// terms with the geometric tail y^(2N+1) / ((2N+1)(1-y^2)) added back.
/// With the default 12 terms the slack is below 1e-11 per logarithm.
inline Rational ln_upper_bound(const Rational& x, unsigned terms = 12) {
  if (x < 1) throw PreconditionError("ln_upper_bound needs x >= 1");
  auto series = [terms](const Rational& r) -> Rational {
    Rational y = (r - 1) / (r + 1);
    Rational y2 = y * y;
    Rational power = y;
    Rational sum = 0;
    for (unsigned n = 0; n < terms; ++n) {
      sum += power / (2 * n + 1);
      power *= y2;
    }
    sum += power / ((2 * terms + 1) * (1 - y2));
    return 2 * sum;
  };
  unsigned twos = 0;
  Rational r = x;
  while (r >= 2) {
    r /= 2;
    ++twos;
  }
  Rational out = series(r);
  if (twos) out += twos * series(Rational(2));
  return out;
}

/// Lower bound on Euler's number: sum_{n<=terms} 1/n!.
inline Rational e_lower_bound(unsigned terms = 20) {
  Rational sum = 0;
  BigInt factorial = 1;
  for (unsigned n = 0; n <= terms; ++n) {
    if (n) factorial *= n;
    sum += Rational(BigInt(1), factorial);
  }
  return sum;
}

}  // namespace hgc
