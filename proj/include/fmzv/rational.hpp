#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace fmzv {

namespace detail {

using int128 = __int128;

inline int128 abs128(int128 v) { return v < 0 ? -v : v; }

inline int128 gcd128(int128 a, int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    int128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

inline long long narrow128(int128 v) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw std::overflow_error("rational arithmetic overflow");
  return static_cast<long long>(v);
}

}  // namespace detail

// Exact rational with 64-bit storage, always reduced, denominator > 0.
// Intermediates use 128 bits; results outside 64-bit range throw
// std::overflow_error rather than wrapping.  The algebra in this library
// only ever produces small coefficients, so the limit is purely defensive.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : num_(n) {}  // NOLINT: implicit by design
  Rational(long long n, long long d) { *this = make(n, d); }

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make(detail::int128(a.num_) * b.den_ + detail::int128(b.num_) * a.den_,
                detail::int128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return a + (-b);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(detail::int128(a.num_) * b.num_,
                detail::int128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return make(detail::int128(a.num_) * b.den_,
                detail::int128(a.den_) * b.num_);
  }

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    detail::int128 l = detail::int128(a.num_) * b.den_;
    detail::int128 r = detail::int128(b.num_) * a.den_;
    return l < r ? std::strong_ordering::less
         : l > r ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  // "p" for integers, "p/q" otherwise.
  std::string to_string() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

 private:
  static Rational make(detail::int128 n, detail::int128 d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    detail::int128 g = detail::gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    Rational r;
    r.num_ = detail::narrow128(n);
    r.den_ = detail::narrow128(d);
    return r;
  }

  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace fmzv
