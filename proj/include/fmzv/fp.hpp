#pragma once

#include <mutex>
#include <string>
#include <vector>

#include "fmzv/rational.hpp"
#include "fmzv/tpoly.hpp"

namespace fmzv {

// Arithmetic context for one odd prime p <= 10^4: an inverse table,
// factorials for binomials, and a lazily built table of the Bernoulli
// numbers B_0..B_{p-2} mod p.  Immutable after construction (the Bernoulli
// table is built once, thread-safely, on first use).
class PrimeCtx {
 public:
  explicit PrimeCtx(unsigned long p);  // throws NotPrimeError / DomainError
  PrimeCtx(const PrimeCtx&) = delete;
  PrimeCtx& operator=(const PrimeCtx&) = delete;

  unsigned long p() const { return p_; }

  unsigned long add(unsigned long a, unsigned long b) const {
    return (a + b) % p_;
  }
  unsigned long sub(unsigned long a, unsigned long b) const {
    return (a + p_ - b % p_) % p_;
  }
  unsigned long mul(unsigned long a, unsigned long b) const {
    return a * b % p_;
  }
  unsigned long neg(unsigned long a) const { return (p_ - a % p_) % p_; }
  unsigned long pow(unsigned long base, unsigned long e) const;
  // Inverse of a with 1 <= a mod p < p (table lookup).
  unsigned long inv(unsigned long a) const;
  // C(n, k) mod p for 0 <= n < p.
  unsigned long binom(unsigned long n, unsigned long k) const;
  unsigned long reduce_ll(long long v) const;
  // a/b -> a * b^{-1}; throws PDividesDenominator when p | b.
  unsigned long reduce(const Rational& q, const std::string& where) const;
  // B_n mod p for 0 <= n <= p-2 (the p-integral range).
  unsigned long bernoulli(unsigned long n) const;

 private:
  unsigned long p_;
  std::vector<unsigned long> inv_, fact_, inv_fact_;
  mutable std::vector<unsigned long> bern_;
  mutable std::once_flag bern_once_;
};

// Dense polynomial in t over F_p, constant term first, no trailing zeros.
class FpPoly {
 public:
  FpPoly() = default;  // zero
  static FpPoly constant(unsigned long v, const PrimeCtx& ctx);
  static FpPoly from_coeffs(std::vector<unsigned long> c, const PrimeCtx& ctx);
  // Coefficients already reduced into [0, p); only trims.
  static FpPoly from_reduced(std::vector<unsigned long> c);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  unsigned long coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : 0;
  }
  const std::vector<unsigned long>& coeffs() const { return c_; }

  FpPoly add(const FpPoly& o, const PrimeCtx& ctx) const;
  FpPoly sub(const FpPoly& o, const PrimeCtx& ctx) const;
  FpPoly mul(const FpPoly& o, const PrimeCtx& ctx) const;
  FpPoly scaled(unsigned long v, const PrimeCtx& ctx) const;
  unsigned long eval(unsigned long x, const PrimeCtx& ctx) const;
  // t -> a + b*t, expanded exactly.
  FpPoly subst_affine(unsigned long a, unsigned long b,
                      const PrimeCtx& ctx) const;

  bool operator==(const FpPoly&) const = default;
  // "[c0,c1,...]"; the zero polynomial prints "[]".
  std::string to_string() const;

 private:
  void trim();
  std::vector<unsigned long> c_;
};

// Reduce a rational polynomial mod p; PDividesDenominator names `where`.
FpPoly reduce_tpoly(const TPoly& q, const PrimeCtx& ctx,
                    const std::string& where);

}  // namespace fmzv
