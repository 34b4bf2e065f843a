#pragma once

#include <cmath>
#include <concepts>
#include <cstddef>
#include <cstdio>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

#include "tetra/errors.hpp"

namespace tetra {

using Index = std::ptrdiff_t;

/// Arbitrary-precision rational, the default scalar for every verification path.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Tolerances used when the scalar is floating point. Set once before any
/// computation (the CLI does this from --tol); not synchronized.
struct FloatTolerance {
  double relative = 1e-10;  // comparison of two values
  double zero = 1e-12;      // |v| < zero * scale counts as zero
};

inline FloatTolerance& float_tolerance() {
  static FloatTolerance tol;
  return tol;
}

namespace detail {

// Accepts "[+-]digits", "[+-]digits/digits" and "[+-]digits.digits".
inline bool is_rational_literal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  auto digits = [&] {
    std::size_t begin = i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    return i > begin;
  };
  if (!digits()) return false;
  if (i == s.size()) return true;
  if (s[i] == '/' || s[i] == '.') {
    ++i;
    if (!digits()) return false;
  }
  return i == s.size();
}

}  // namespace detail

template <class T>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* name = "exact";

  static bool is_zero(const Rational& v, const Rational& /*scale*/ = Rational(1)) { return v == 0; }
  static bool equal(const Rational& a, const Rational& b) { return a == b; }
  static int sign(const Rational& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }
  static Rational abs(const Rational& v) { return v < 0 ? Rational(-v) : v; }

  static Rational parse(std::string_view text) {
    std::string s(text);
    if (!detail::is_rational_literal(s)) throw InputError("not a rational literal: '" + s + "'");
    if (s[0] == '+') s.erase(0, 1);
    if (auto dot = s.find('.'); dot != std::string::npos) {
      // w.f  ->  (w f) / 10^|f|
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      std::string denom = "1" + std::string(s.size() - dot - 1, '0');
      return canonical(digits, denom);
    }
    if (auto slash = s.find('/'); slash != std::string::npos) {
      if (s.find_first_not_of('0', slash + 1) == std::string::npos)
        throw InputError("zero denominator in '" + s + "'");
      return canonical(s.substr(0, slash), s.substr(slash + 1));
    }
    return canonical(s, "1");
  }

  static std::string to_string(const Rational& v) { return v.str(); }

 private:
  static Rational canonical(const std::string& num, const std::string& den) {
    using boost::multiprecision::mpz_int;
    // mpz reads a leading 0 as an octal prefix
    auto decimal = [](std::string d) {
      bool neg = !d.empty() && d[0] == '-';
      if (neg) d.erase(0, 1);
      d.erase(0, std::min(d.find_first_not_of('0'), d.size() - 1));
      return mpz_int(neg ? "-" + d : d);
    };
    return Rational(decimal(num), decimal(den));
  }

 public:
  static double to_double(const Rational& v) { return v.convert_to<double>(); }
};

template <>
struct scalar_traits<double> {
  static constexpr bool exact = false;
  static constexpr const char* name = "float";

  static bool is_zero(double v, double scale = 1.0) {
    return std::abs(v) < float_tolerance().zero * std::max(1.0, std::abs(scale));
  }
  static bool equal(double a, double b) {
    double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= float_tolerance().relative * scale;
  }
  static int sign(double v) { return is_zero(v) ? 0 : (v > 0 ? 1 : -1); }
  static double abs(double v) { return std::abs(v); }

  static double parse(std::string_view text) {
    std::string s(text);
    if (!detail::is_rational_literal(s)) throw InputError("not a numeric literal: '" + s + "'");
    if (auto slash = s.find('/'); slash != std::string::npos) {
      double den = std::stod(s.substr(slash + 1));
      if (den == 0.0) throw InputError("zero denominator in '" + s + "'");
      return std::stod(s.substr(0, slash)) / den;
    }
    return std::stod(s);
  }

  static std::string to_string(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
  }
  static double to_double(double v) { return v; }
};

template <class T>
concept Scalar = requires { scalar_traits<T>::exact; };

template <class T>
concept ExactScalar = Scalar<T> && scalar_traits<T>::exact;

template <Scalar T>
bool is_zero(const T& v, const T& scale = T(1)) {
  return scalar_traits<T>::is_zero(v, scale);
}

template <Scalar T>
bool approx_equal(const T& a, const T& b) {
  return scalar_traits<T>::equal(a, b);
}

template <Scalar T>
int sign_of(const T& v) {
  return scalar_traits<T>::sign(v);
}

template <Scalar T>
std::string to_string(const T& v) {
  return scalar_traits<T>::to_string(v);
}

template <Scalar T>
T parse_scalar(std::string_view s) {
  return scalar_traits<T>::parse(s);
}

}  // namespace tetra
