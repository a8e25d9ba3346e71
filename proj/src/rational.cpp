#include "outerstring/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "outerstring/errors.hpp"

namespace outerstring {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (std::isdigit(static_cast<unsigned char>(c)) == 0) return false;
  return true;
}

BigInt parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw std::invalid_argument("not an integer");
  BigInt z(std::string(s), 10);
  return negative ? BigInt(-z) : z;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view original = text;
  try {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
      BigInt num = parse_integer(text.substr(0, slash));
      BigInt den = parse_integer(text.substr(slash + 1));
      if (den == 0) throw std::invalid_argument("zero denominator");
      Rational q(num, den);
      q.canonicalize();
      return q;
    }
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
      negative = text.front() == '-';
      text.remove_prefix(1);
    }
    const auto dot = text.find('.');
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    if (whole.empty() && frac.empty()) throw std::invalid_argument("empty");
    if (!whole.empty() && !all_digits(whole)) throw std::invalid_argument("bad digits");
    if (dot != std::string_view::npos && !all_digits(frac)) throw std::invalid_argument("bad fraction");
    std::string digits = std::string(whole) + std::string(frac);
    BigInt num(digits.empty() ? std::string("0") : digits, 10);
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    Rational q(negative ? BigInt(-num) : num, den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::ParseError, "not a rational number: '" + std::string(original) + "'");
  }
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

std::string to_fixed(const Rational& q, int places) {
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  const bool negative = q < 0;
  Rational a = negative ? Rational(-q) : q;
  Rational scaled = a * scale;
  // round half away from zero
  BigInt rounded = (scaled.get_num() * 2 + scaled.get_den()) / (scaled.get_den() * 2);
  std::string digits = rounded.get_str();
  if (digits.size() <= static_cast<std::size_t>(places))
    digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
  std::string out = digits.substr(0, digits.size() - static_cast<std::size_t>(places));
  if (places > 0) out += "." + digits.substr(digits.size() - static_cast<std::size_t>(places));
  if (negative && rounded != 0) out.insert(0, "-");
  return out;
}

}  // namespace outerstring
