#pragma once

#include <compare>
#include <string>
#include <vector>

#include "fmzv/rational.hpp"

namespace fmzv {

// A polynomial in the interpolation variable t with exact rational
// coefficients, stored densely from degree 0 upward.  The representation is
// canonical: no trailing zero coefficients, so equality is structural.
class TPoly {
 public:
  TPoly() = default;                 // the zero polynomial
  explicit TPoly(const Rational& c);  // constant
  explicit TPoly(long long c) : TPoly(Rational(c)) {}

  static TPoly t();                          // the variable itself
  static TPoly monomial(int degree, const Rational& c);
  static TPoly one_minus_t();

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  // Coefficient of t^i; zero outside the stored range.
  Rational coeff(int i) const;

  TPoly operator-() const;
  TPoly& operator+=(const TPoly& o);
  TPoly& operator-=(const TPoly& o);
  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  friend TPoly operator*(const TPoly& a, const TPoly& b);
  TPoly& operator*=(const TPoly& o) { return *this = *this * o; }
  TPoly scaled(const Rational& c) const;

  Rational eval(const Rational& x) const;
  // Substitution t -> a + b*t.
  TPoly subst_affine(const Rational& a, const Rational& b) const;

  friend bool operator==(const TPoly&, const TPoly&) = default;
  friend auto operator<=>(const TPoly&, const TPoly&) = default;

  // Coefficients as "p/q" strings, constant term first.
  std::vector<std::string> coeff_strings() const;
  // Readable form such as "1 - 2t + t^2".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace fmzv
