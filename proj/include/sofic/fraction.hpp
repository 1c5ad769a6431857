#ifndef SOFIC_FRACTION_HPP_
#define SOFIC_FRACTION_HPP_

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "sofic/errors.hpp"

namespace sofic {

// Exact rational number. All distances, thresholds and ratios in this
// library are Fractions so that comparisons against epsilon/delta bounds
// are closed inequalities with no floating point involved.
//
// Always stored in lowest terms with a positive denominator.
class Fraction {
 public:
  constexpr Fraction() : num_(0), den_(1) {}

  Fraction(long long numerator, long long denominator) {
    if (denominator == 0) {
      throw DomainError("Fraction: zero denominator");
    }
    if (denominator < 0) {
      numerator = -numerator;
      denominator = -denominator;
    }
    long long g = std::gcd(numerator < 0 ? -numerator : numerator, denominator);
    if (g > 1) {
      numerator /= g;
      denominator /= g;
    }
    num_ = numerator;
    den_ = denominator;
  }

  static Fraction zero() { return Fraction(); }
  static Fraction one() { return Fraction(1, 1); }

  // Parses "a/b" or a bare integer "a".
  static Fraction parse(const std::string& text);

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend Fraction operator+(const Fraction& a, const Fraction& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                i128(a.den_) * b.den_);
  }
  friend Fraction operator-(const Fraction& a, const Fraction& b) {
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                i128(a.den_) * b.den_);
  }
  friend Fraction operator*(const Fraction& a, const Fraction& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Fraction operator/(const Fraction& a, const Fraction& b) {
    if (b.num_ == 0) throw DomainError("Fraction: division by zero");
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }

  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Fraction& a, const Fraction& b) {
    return !(a == b);
  }
  friend bool operator<(const Fraction& a, const Fraction& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator<=(const Fraction& a, const Fraction& b) {
    return i128(a.num_) * b.den_ <= i128(b.num_) * a.den_;
  }
  friend bool operator>(const Fraction& a, const Fraction& b) { return b < a; }
  friend bool operator>=(const Fraction& a, const Fraction& b) {
    return b <= a;
  }

  friend std::ostream& operator<<(std::ostream& os, const Fraction& f) {
    return os << f.str();
  }

  // 1 - (1 - x)^power; how every Hamming quantity transforms under the
  // diagonal embedding into a power of the underlying set.
  Fraction amplified(unsigned power) const {
    Fraction c = one() - *this;
    Fraction acc = one();
    for (unsigned i = 0; i < power; ++i) acc = acc * c;
    return one() - acc;
  }

 private:
  using i128 = __int128;

  static Fraction make(i128 n, i128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    i128 a = n < 0 ? -n : n;
    i128 g = gcd128(a, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr i128 lo = INT64_MIN, hi = INT64_MAX;
    if (n < lo || n > hi || d > hi) {
      throw DomainError("Fraction: 64-bit overflow after reduction");
    }
    Fraction f;
    f.num_ = static_cast<long long>(n);
    f.den_ = static_cast<long long>(d);
    return f;
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  long long num_;
  long long den_;
};

}  // namespace sofic

#endif  // SOFIC_FRACTION_HPP_
