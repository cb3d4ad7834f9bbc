#include "dualfeas/scalar.hpp"

#include <array>
#include <cctype>
#include <charconv>

namespace dualfeas {

std::string_view to_string(Arithmetic mode) {
  return mode == Arithmetic::Exact ? "exact" : "float";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

// GMP reads a leading 0 as an octal prefix, so strip it first.
boost::multiprecision::mpz_int parse_integer(std::string_view digits) {
  const auto first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return 0;
  return boost::multiprecision::mpz_int(std::string(digits.substr(first)));
}

}  // namespace

Rational parse_rational(std::string_view token) {
  const std::string original(token);
  if (token.empty()) throw NumberFormatError("empty number");

  bool negative = false;
  if (token.front() == '+' || token.front() == '-') {
    negative = token.front() == '-';
    token.remove_prefix(1);
  }

  Rational value;
  if (auto slash = token.find('/'); slash != std::string_view::npos) {
    auto num = token.substr(0, slash);
    auto den = token.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw NumberFormatError("not a number: '" + original + "'");
    }
    auto d = parse_integer(den);
    if (d == 0) throw NumberFormatError("zero denominator: '" + original + "'");
    value = Rational(parse_integer(num), d);
  } else {
    auto dot = token.find('.');
    auto whole = token.substr(0, dot);
    std::string_view frac;
    if (dot != std::string_view::npos) frac = token.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw NumberFormatError("not a number: '" + original + "'");
    }
    boost::multiprecision::mpz_int scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    std::string digits = std::string(whole) + std::string(frac);
    value = Rational(parse_integer(digits), scale);
  }
  return negative ? Rational(-value) : value;
}

std::string format_rational(const Rational& value) {
  using boost::multiprecision::mpz_int;
  const mpz_int num = boost::multiprecision::numerator(value);
  const mpz_int den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();

  mpz_int rest = den;
  int twos = 0;
  int fives = 0;
  while (rest % 2 == 0) {
    rest /= 2;
    ++twos;
  }
  while (rest % 5 == 0) {
    rest /= 5;
    ++fives;
  }
  if (rest != 1) return num.str() + "/" + den.str();

  const int places = std::max(twos, fives);
  mpz_int scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  mpz_int scaled = num * (scale / den);
  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string digits = scaled.str();
  if (digits.size() <= static_cast<std::size_t>(places)) {
    digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
  }
  digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  return negative ? "-" + digits : digits;
}

std::string format_double(double value) {
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) return "nan";
  return std::string(buf.data(), end);
}

}  // namespace dualfeas
