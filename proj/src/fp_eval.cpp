#include "fmzv/fp_eval.hpp"

#include <string>

#include "fmzv/errors.hpp"

namespace fmzv {

namespace {

// Contraction of k for a gap mask: bit i merges parts i and i+1.
Index contract_mask(const Index& k, unsigned mask) {
  std::vector<int> parts;
  parts.reserve(k.depth());
  int run = 0;
  for (int i = 0; i < k.depth(); ++i) {
    run += k.part(i);
    bool merge_next = i + 1 < k.depth() && (mask >> i & 1u);
    if (!merge_next) {
      parts.push_back(run);
      run = 0;
    }
  }
  return Index(std::move(parts));
}

}  // namespace

unsigned long fmzv_eval(const PrimeCtx& ctx, const Index& k, bool star) {
  if (k.empty()) return 1;  // sum over the single empty tuple
  const int r = k.depth();
  const unsigned long p = ctx.p();
  std::vector<unsigned long> acc(r + 1, 0);
  acc[0] = 1;
  for (unsigned long m = 1; m < p; ++m) {
    unsigned long invm = ctx.inv(m);
    if (star) {
      // Ascending slots see this m's own partial sums: weak chains.
      for (int j = 1; j <= r; ++j)
        acc[j] =
            (acc[j] + acc[j - 1] * ctx.pow(invm, k.part(j - 1))) % p;
    } else {
      // Descending slots only see m' < m: strict chains.
      for (int j = r; j >= 1; --j)
        acc[j] =
            (acc[j] + acc[j - 1] * ctx.pow(invm, k.part(j - 1))) % p;
    }
  }
  return acc[r];
}

unsigned long brute_oracle(const PrimeCtx& ctx, const Index& k, bool star) {
  if (k.empty()) return 1;
  if (ctx.p() > 31 || k.depth() > 4)
    throw DomainError("brute-force oracle limited to p <= 31, depth <= 4");
  const int r = k.depth();
  const unsigned long p = ctx.p();
  unsigned long total = 0;
  // Walk the chain m_1 (< or <=) m_2 ... < p literally.
  std::vector<unsigned long> m(r, 0);
  int pos = 0;
  m[0] = 1;
  while (pos >= 0) {
    if (m[pos] >= p) {
      --pos;
      if (pos >= 0) ++m[pos];
      continue;
    }
    if (pos == r - 1) {
      unsigned long term = 1;
      for (int i = 0; i < r; ++i)
        term = term * ctx.pow(ctx.inv(m[i]), k.part(i)) % p;
      total = (total + term) % p;
      ++m[pos];
    } else {
      ++pos;
      m[pos] = m[pos - 1] + (star ? 0 : 1);
    }
  }
  return total;
}

FpPoly fmzv_t_eval(const PrimeCtx& ctx, const Index& k) {
  if (k.empty()) return FpPoly::constant(1, ctx);
  if (k.depth() > 12)
    throw DomainError("interpolation evaluation limited to depth <= 12");
  const int r = k.depth();
  std::vector<unsigned long> coeffs(r, 0);
  for (unsigned mask = 0; mask < (1u << (r - 1)); ++mask) {
    Index c = contract_mask(k, mask);
    coeffs[r - c.depth()] =
        (coeffs[r - c.depth()] + fmzv_eval(ctx, c, false)) % ctx.p();
  }
  return FpPoly::from_reduced(std::move(coeffs));
}

unsigned long zA_single(const PrimeCtx& ctx, int k) {
  if (k < 2) throw DomainError("single-zeta analogue needs k >= 2");
  if (ctx.p() < static_cast<unsigned long>(k) + 2)
    throw DomainError("single-zeta analogue needs p >= k + 2");
  return ctx.mul(ctx.bernoulli(ctx.p() - static_cast<unsigned long>(k)),
                 ctx.inv(static_cast<unsigned long>(k)));
}

unsigned long EvalCache::strict_eval(const PrimeCtx& ctx, const Index& k) {
  if (k.empty()) return 1;  // not worth a cache slot
  std::pair<unsigned long, Index> key{ctx.p(), k};
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = smap_.find(key);
    if (it != smap_.end()) return it->second;
  }
  unsigned long v = fmzv_eval(ctx, k, false);
  std::lock_guard<std::mutex> lock(mu_);
  smap_.emplace(std::move(key), v);
  return v;
}

FpPoly EvalCache::t_eval(const PrimeCtx& ctx, const Index& k) {
  if (k.empty()) return FpPoly::constant(1, ctx);
  std::pair<unsigned long, Index> key{ctx.p(), k};
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = tmap_.find(key);
    if (it != tmap_.end()) return it->second;
  }
  if (k.depth() > 12)
    throw DomainError("interpolation evaluation limited to depth <= 12");
  const int r = k.depth();
  std::vector<unsigned long> coeffs(r, 0);
  for (unsigned mask = 0; mask < (1u << (r - 1)); ++mask) {
    Index c = contract_mask(k, mask);
    coeffs[r - c.depth()] =
        (coeffs[r - c.depth()] + strict_eval(ctx, c)) % ctx.p();
  }
  FpPoly q = FpPoly::from_reduced(std::move(coeffs));
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = tmap_.emplace(key, q);
  if (inserted) fresh_.insert(key);
  return it->second;
}

std::size_t EvalCache::seed(const std::vector<CacheRecord>& records) {
  std::size_t rejected = 0;
  std::lock_guard<std::mutex> lock(mu_);
  for (const auto& rec : records) {
    bool ok = rec.p >= 3 && rec.p % 2 == 1 && !rec.index.empty() &&
              rec.tcoeffs.size() <= rec.index.size();
    for (unsigned long c : rec.tcoeffs)
      if (c >= rec.p) ok = false;
    for (int part : rec.index)
      if (part < 1) ok = false;
    if (!ok) {
      ++rejected;
      continue;
    }
    std::pair<unsigned long, Index> key{rec.p, Index(rec.index)};
    tmap_.emplace(std::move(key), FpPoly::from_reduced(rec.tcoeffs));
  }
  return rejected;
}

std::vector<CacheRecord> EvalCache::drain_new() {
  std::lock_guard<std::mutex> lock(mu_);
  std::vector<CacheRecord> out;
  out.reserve(fresh_.size());
  for (const auto& key : fresh_) {
    CacheRecord rec;
    rec.p = key.first;
    rec.index = key.second.parts();
    rec.tcoeffs = tmap_.at(key).coeffs();
    out.push_back(std::move(rec));
  }
  fresh_.clear();
  return out;
}

FpPoly z_map_index(const PrimeCtx& ctx, const IndexCombo& v,
                   EvalCache* cache) {
  FpPoly acc;
  for (const auto& [k, c] : v.terms()) {
    FpPoly coeff = reduce_tpoly(c, ctx, k.display());
    FpPoly value = k.empty() ? FpPoly::constant(1, ctx)
                   : cache   ? cache->t_eval(ctx, k)
                             : fmzv_t_eval(ctx, k);
    acc = acc.add(coeff.mul(value, ctx), ctx);
  }
  return acc;
}

FpPoly z_map_index_plain(const PrimeCtx& ctx, const IndexCombo& v,
                         EvalCache* cache) {
  FpPoly acc;
  for (const auto& [k, c] : v.terms()) {
    FpPoly coeff = reduce_tpoly(c, ctx, k.display());
    unsigned long value = k.empty() ? 1
                          : cache   ? cache->strict_eval(ctx, k)
                                    : fmzv_eval(ctx, k, false);
    acc = acc.add(coeff.scaled(value, ctx), ctx);
  }
  return acc;
}

FpPoly z_map_word(const PrimeCtx& ctx, const WordCombo& w, EvalCache* cache) {
  return z_map_index(ctx, to_index(w), cache);
}

}  // namespace fmzv
