#include "fmzv/fp.hpp"

#include <string>

#include "fmzv/errors.hpp"

namespace fmzv {

namespace {

constexpr unsigned long kMaxPrime = 10000;

// Smallest factor for odd composite n, 0 if n is prime.
unsigned long smallest_odd_factor(unsigned long n) {
  for (unsigned long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return d;
  return 0;
}

}  // namespace

PrimeCtx::PrimeCtx(unsigned long p) : p_(p) {
  if (p < 3)
    throw NotPrimeError(static_cast<long>(p),
                        std::to_string(p) + " is not an odd prime");
  if (p % 2 == 0)
    throw NotPrimeError(2, std::to_string(p) + " is even");
  if (unsigned long d = smallest_odd_factor(p))
    throw NotPrimeError(static_cast<long>(d), std::to_string(p) +
                                                  " is divisible by " +
                                                  std::to_string(d));
  if (p > kMaxPrime)
    throw DomainError("prime " + std::to_string(p) +
                      " exceeds the engine's limit of 10^4");

  inv_.assign(p, 0);
  inv_[1] = 1;
  for (unsigned long m = 2; m < p; ++m)
    inv_[m] = (p - (p / m) * inv_[p % m] % p) % p;

  fact_.assign(p, 1);
  inv_fact_.assign(p, 1);
  for (unsigned long m = 1; m < p; ++m) fact_[m] = fact_[m - 1] * m % p;
  for (unsigned long m = 1; m < p; ++m)
    inv_fact_[m] = inv_fact_[m - 1] * inv_[m] % p;
}

unsigned long PrimeCtx::pow(unsigned long base, unsigned long e) const {
  unsigned long r = 1, b = base % p_;
  while (e) {
    if (e & 1) r = r * b % p_;
    b = b * b % p_;
    e >>= 1;
  }
  return r;
}

unsigned long PrimeCtx::inv(unsigned long a) const {
  a %= p_;
  if (a == 0) throw DomainError("inverse of 0 mod " + std::to_string(p_));
  return inv_[a];
}

unsigned long PrimeCtx::binom(unsigned long n, unsigned long k) const {
  if (n >= p_)
    throw DomainError("binomial row " + std::to_string(n) +
                      " out of range mod " + std::to_string(p_));
  if (k > n) return 0;
  return fact_[n] * inv_fact_[k] % p_ * inv_fact_[n - k] % p_;
}

unsigned long PrimeCtx::reduce_ll(long long v) const {
  long long m = static_cast<long long>(p_);
  long long r = v % m;
  if (r < 0) r += m;
  return static_cast<unsigned long>(r);
}

unsigned long PrimeCtx::reduce(const Rational& q,
                               const std::string& where) const {
  unsigned long den = reduce_ll(q.den());
  if (den == 0) {
    std::string c = std::to_string(q.num());
    if (q.den() != 1) c += "/" + std::to_string(q.den());
    throw PDividesDenominator(p_, c, where);
  }
  return reduce_ll(q.num()) * inv_[den] % p_;
}

unsigned long PrimeCtx::bernoulli(unsigned long n) const {
  if (n > p_ - 2)
    throw DomainError("Bernoulli index " + std::to_string(n) +
                      " outside the p-integral range mod " +
                      std::to_string(p_));
  std::call_once(bern_once_, [this] {
    // sum_{j<=n} C(n+1,j) B_j = 0 for n >= 1 (so B_1 = -1/2 here; only
    // indices >= 2 ever reach the single-zeta values).
    bern_.assign(p_ - 1, 0);
    bern_[0] = 1;
    for (unsigned long m = 1; m <= p_ - 2; ++m) {
      unsigned long s = 0;
      for (unsigned long j = 0; j < m; ++j)
        s = (s + binom(m + 1, j) * bern_[j]) % p_;
      bern_[m] = (p_ - s) * inv_[m + 1] % p_;
    }
  });
  return bern_[n];
}

FpPoly FpPoly::constant(unsigned long v, const PrimeCtx& ctx) {
  FpPoly q;
  q.c_.push_back(v % ctx.p());
  q.trim();
  return q;
}

FpPoly FpPoly::from_coeffs(std::vector<unsigned long> c, const PrimeCtx& ctx) {
  FpPoly q;
  q.c_ = std::move(c);
  for (auto& v : q.c_) v %= ctx.p();
  q.trim();
  return q;
}

FpPoly FpPoly::from_reduced(std::vector<unsigned long> c) {
  FpPoly q;
  q.c_ = std::move(c);
  q.trim();
  return q;
}

void FpPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::add(const FpPoly& o, const PrimeCtx& ctx) const {
  FpPoly q;
  q.c_.resize(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < q.c_.size(); ++i)
    q.c_[i] = (coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i))) %
              ctx.p();
  q.trim();
  return q;
}

FpPoly FpPoly::sub(const FpPoly& o, const PrimeCtx& ctx) const {
  FpPoly q;
  q.c_.resize(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < q.c_.size(); ++i)
    q.c_[i] = ctx.sub(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
  q.trim();
  return q;
}

FpPoly FpPoly::mul(const FpPoly& o, const PrimeCtx& ctx) const {
  if (c_.empty() || o.c_.empty()) return FpPoly();
  FpPoly q;
  q.c_.assign(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      q.c_[i + j] = (q.c_[i + j] + c_[i] * o.c_[j]) % ctx.p();
  q.trim();
  return q;
}

FpPoly FpPoly::scaled(unsigned long v, const PrimeCtx& ctx) const {
  FpPoly q = *this;
  for (auto& c : q.c_) c = c * (v % ctx.p()) % ctx.p();
  q.trim();
  return q;
}

unsigned long FpPoly::eval(unsigned long x, const PrimeCtx& ctx) const {
  unsigned long r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = (r * x + c_[i]) % ctx.p();
  return r;
}

FpPoly FpPoly::subst_affine(unsigned long a, unsigned long b,
                            const PrimeCtx& ctx) const {
  FpPoly lin = FpPoly::from_coeffs({a, b}, ctx);
  FpPoly r;
  for (std::size_t i = c_.size(); i-- > 0;)
    r = r.mul(lin, ctx).add(FpPoly::constant(c_[i], ctx), ctx);
  return r;
}

std::string FpPoly::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c_[i]);
  }
  return s + "]";
}

FpPoly reduce_tpoly(const TPoly& q, const PrimeCtx& ctx,
                    const std::string& where) {
  std::vector<unsigned long> c;
  c.reserve(q.degree() + 1);
  for (int i = 0; i <= q.degree(); ++i)
    c.push_back(ctx.reduce(q.coeff(i), where));
  return FpPoly::from_coeffs(std::move(c), ctx);
}

}  // namespace fmzv
