#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace modspace {

/// Exact rational number on 64-bit integers, kept reduced with positive
/// denominator. Every exponent comparison in the boundedness checkers runs
/// through this type so that boundary cases (the theorems are full of
/// equality cases) are decided exactly.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value), den_(1) {}
  Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
    reduce();
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double toDouble() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  void reduce() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Reciprocal of a Lebesgue exponent: the exact value 1/p for p in [1, inf],
/// stored as a Rational in [0, 1]. 0 encodes p = inf and 1 encodes p = 1.
class Recip {
 public:
  Recip() : v_(0) {}  // p = inf
  explicit Recip(Rational v) : v_(v) {
    if (v_ < Rational(0) || v_ > Rational(1))
      throw std::invalid_argument("Recip: 1/p must lie in [0,1], got " + v_.str());
  }
  Recip(std::int64_t num, std::int64_t den) : Recip(Rational(num, den)) {}

  /// Build from the exponent p itself (p >= 1, integer).
  static Recip fromExponent(std::int64_t p) {
    if (p < 1) throw std::invalid_argument("Recip: exponent must be >= 1");
    return Recip(Rational(1, p));
  }
  static Recip infinity() { return Recip(Rational(0)); }
  static Recip one() { return Recip(Rational(1)); }
  static Recip two() { return Recip(Rational(1, 2)); }

  const Rational& value() const { return v_; }
  bool isInfinity() const { return v_ == Rational(0); }

  /// The exponent p as a floating value (inf when 1/p = 0).
  double exponent() const {
    if (isInfinity()) return std::numeric_limits<double>::infinity();
    return static_cast<double>(v_.den()) / static_cast<double>(v_.num());
  }

  friend bool operator==(const Recip& a, const Recip& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Recip& a, const Recip& b) { return !(a == b); }

  std::string str() const { return v_.str(); }

 private:
  Rational v_;
};

/// Conjugate exponent rule 1/p + 1/p' = 1, computed exactly on reciprocals.
inline Recip conjugate(const Recip& x) { return Recip(Rational(1) - x.value()); }

/// Parse an exponent spec as used on the command line: "inf", an integer
/// ("2"), or a fraction ("3/2"), all denoting p itself.
inline Recip parseExponent(const std::string& text) {
  if (text == "inf" || text == "Inf" || text == "INF" || text == "oo") return Recip::infinity();
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      const long long p = std::stoll(text);
      return Recip::fromExponent(p);
    }
    const long long num = std::stoll(text.substr(0, slash));
    const long long den = std::stoll(text.substr(slash + 1));
    // p = num/den >= 1, so 1/p = den/num.
    if (num <= 0 || den <= 0 || num < den)
      throw std::invalid_argument("exponent must be >= 1");
    return Recip(Rational(den, num));
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse exponent '" + text + "'");
  }
}

}  // namespace modspace
