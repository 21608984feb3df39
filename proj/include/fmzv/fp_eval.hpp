#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fmzv/cache_file.hpp"
#include "fmzv/fp.hpp"
#include "fmzv/index.hpp"
#include "fmzv/word.hpp"

namespace fmzv {

// Truncated multiple harmonic sum mod p over 1 <= m_1 < ... < m_r < p
// (strict) or with <= in place of < (star).  O(p * depth) single sweep.
unsigned long fmzv_eval(const PrimeCtx& ctx, const Index& k, bool star);

// Literal nested-loop sum, kept as an independent oracle.  Guarded to
// p <= 31 and depth <= 4.
unsigned long brute_oracle(const PrimeCtx& ctx, const Index& k, bool star);

// The interpolation polynomial: sum over the 2^(depth-1) contractions c of
// k of (strict value of c) * t^(depth(k) - depth(c)).  Depth <= 12.
FpPoly fmzv_t_eval(const PrimeCtx& ctx, const Index& k);

// B_{p-k}/k mod p; requires k >= 2 and p >= k+2.
unsigned long zA_single(const PrimeCtx& ctx, int k);

// Thread-safe memo of interpolation polynomials keyed by (p, index), with
// an in-memory side table of strict scalars.  Records computed after
// seeding can be drained for appending to a cache file.
class EvalCache {
 public:
  EvalCache() = default;
  EvalCache(const EvalCache&) = delete;
  EvalCache& operator=(const EvalCache&) = delete;

  FpPoly t_eval(const PrimeCtx& ctx, const Index& k);
  unsigned long strict_eval(const PrimeCtx& ctx, const Index& k);

  // Adopts previously persisted records; malformed ones (coefficients not
  // reduced, empty index) are rejected.  Returns the rejected count.
  std::size_t seed(const std::vector<CacheRecord>& records);
  // Records first computed by this instance (not seeded), sorted.
  std::vector<CacheRecord> drain_new();

 private:
  std::mutex mu_;
  std::map<std::pair<unsigned long, Index>, FpPoly> tmap_;
  std::map<std::pair<unsigned long, Index>, unsigned long> smap_;
  std::set<std::pair<unsigned long, Index>> fresh_;
};

// Q[t]-linear evaluation maps into F_p[t].  The empty index/word counts 1.
// Coefficients with p in the denominator raise PDividesDenominator.
//   z_map_index:       each index evaluates to its interpolation polynomial.
//   z_map_index_plain: each index evaluates to its strict scalar (used for
//                      combinations whose coefficients already carry the
//                      interpolation in t).
FpPoly z_map_index(const PrimeCtx& ctx, const IndexCombo& v,
                   EvalCache* cache = nullptr);
FpPoly z_map_index_plain(const PrimeCtx& ctx, const IndexCombo& v,
                         EvalCache* cache = nullptr);
FpPoly z_map_word(const PrimeCtx& ctx, const WordCombo& w,
                  EvalCache* cache = nullptr);

}  // namespace fmzv
