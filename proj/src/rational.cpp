#include "nflow/rational.hpp"

#include <cctype>

namespace nflow {

Rational frac(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  Integer n = num;
  Integer d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  return Rational(n, d);
}

Rational pow_inv4(int k) {
  if (k < 0) throw std::invalid_argument("pow_inv4: negative exponent");
  return frac(Integer(1), boost::multiprecision::pow(Integer(4), static_cast<unsigned>(k)));
}

Rational pow_inv2(int k) {
  if (k < 0) throw std::invalid_argument("pow_inv2: negative exponent");
  return frac(Integer(1), boost::multiprecision::pow(Integer(2), static_cast<unsigned>(k)));
}

std::string to_string(const Rational& q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = s[0] == '-';
    s = s.substr(1);
  }
  const auto slash = s.find('/');
  std::string num_part = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den_part = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!all_digits(num_part) || !all_digits(den_part)) {
    throw std::invalid_argument("rational: malformed value '" + text + "'");
  }
  Integer num(num_part);
  Integer den(den_part);
  if (den == 0) throw std::invalid_argument("rational: zero denominator in '" + text + "'");
  if (negative) num = -num;
  return Rational(num, den);
}

std::string to_string(const ExtRational& v) {
  return v.is_infinite() ? "inf" : to_string(v.finite());
}

ExtRational parse_ext(const std::string& text) {
  if (text == "inf") return ExtRational::infinity();
  return ExtRational(parse_rational(text));
}

}  // namespace nflow
