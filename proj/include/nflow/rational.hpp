#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nflow {

// All core arithmetic is exact; no floating point anywhere.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

using Point = std::int64_t;

/// Builds p/q, normalizing sign into the numerator. Throws on q == 0.
Rational frac(const Integer& num, const Integer& den);

inline Rational frac(long long num, long long den) {
  return frac(Integer(num), Integer(den));
}

/// Exact 4^-k as a rational, k >= 0.
Rational pow_inv4(int k);

/// Exact 2^-k as a rational, k >= 0.
Rational pow_inv2(int k);

/// Canonical text form: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Parses "p", "p/q", with optional leading sign. Rejects q == 0 and any
/// other malformed input.
Rational parse_rational(const std::string& text);

/// A rational extended with +infinity. Ordering is total with infinity
/// maximal; finite values add exactly and anything plus infinity is
/// infinity.
class ExtRational {
 public:
  ExtRational() : infinite_(false), value_(0) {}
  ExtRational(const Rational& v) : infinite_(false), value_(v) {}
  ExtRational(long long v) : infinite_(false), value_(v) {}

  static ExtRational infinity() {
    ExtRational e;
    e.infinite_ = true;
    return e;
  }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }

  /// The finite value; throws if infinite.
  const Rational& finite() const {
    if (infinite_) throw std::domain_error("ExtRational: value is infinite");
    return value_;
  }

  friend ExtRational operator+(const ExtRational& a, const ExtRational& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return ExtRational(a.value_ + b.value_);
  }
  ExtRational& operator+=(const ExtRational& o) { return *this = *this + o; }

  friend bool operator==(const ExtRational& a, const ExtRational& b) {
    if (a.infinite_ != b.infinite_) return false;
    return a.infinite_ || a.value_ == b.value_;
  }
  friend bool operator!=(const ExtRational& a, const ExtRational& b) { return !(a == b); }
  friend bool operator<(const ExtRational& a, const ExtRational& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator>(const ExtRational& a, const ExtRational& b) { return b < a; }
  friend bool operator<=(const ExtRational& a, const ExtRational& b) { return !(b < a); }
  friend bool operator>=(const ExtRational& a, const ExtRational& b) { return !(a < b); }

 private:
  bool infinite_;
  Rational value_;
};

/// "inf", or the canonical rational form.
std::string to_string(const ExtRational& v);

/// Parses the cost-value grammar: "inf" or a rational.
ExtRational parse_ext(const std::string& text);

}  // namespace nflow
