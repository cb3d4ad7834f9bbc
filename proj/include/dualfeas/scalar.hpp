#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dualfeas {

using Rational = boost::multiprecision::mpq_rational;

/// Default comparison tolerance for floating-point dictionaries (seven decimals).
inline constexpr double kDefaultEps = 1e-7;

/// Selects how tableau entries are stored and compared.
enum class Arithmetic { Float, Exact };

std::string_view to_string(Arithmetic mode);

class NumberFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses an integer, a decimal fraction ("-12.375") or a ratio ("3/8") exactly.
Rational parse_rational(std::string_view token);

/// Integers print bare, terminating fractions as decimals, everything else as p/q.
std::string format_rational(const Rational& value);

std::string format_double(double value);

/// Sign tests and conversions shared by both arithmetic modes.
///
/// Float mode treats |x| <= eps as zero; Exact mode ignores eps.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr bool kExact = false;
  static constexpr Arithmetic kMode = Arithmetic::Float;

  static bool negative(double x, double eps) { return x < -eps; }
  static bool positive(double x, double eps) { return x > eps; }
  static bool zero(double x, double eps) { return std::fabs(x) <= eps; }
  static double to_double(double x) { return x; }
  static double from_rational(const Rational& q) { return q.convert_to<double>(); }
  static std::string format(double x) { return format_double(x); }
};

template <>
struct ScalarTraits<Rational> {
  static constexpr bool kExact = true;
  static constexpr Arithmetic kMode = Arithmetic::Exact;

  static bool negative(const Rational& x, double) { return x.sign() < 0; }
  static bool positive(const Rational& x, double) { return x.sign() > 0; }
  static bool zero(const Rational& x, double) { return x.sign() == 0; }
  static double to_double(const Rational& x) { return x.convert_to<double>(); }
  static Rational from_rational(const Rational& q) { return q; }
  static std::string format(const Rational& x) { return format_rational(x); }
};

}  // namespace dualfeas
