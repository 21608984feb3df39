#include "fmzv/util.hpp"

#include <stdexcept>

namespace fmzv {

long long binom_ll(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  long long r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i);
    if (r < 0) throw std::overflow_error("binomial overflow");
    r /= i;
  }
  return r;
}

static void comp_rec(int total, int parts, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int first = 1; first <= total - (parts - 1); ++first) {
    cur.push_back(first);
    comp_rec(total - first, parts - 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  if (parts < 1 || total < parts) return out;
  std::vector<int> cur;
  comp_rec(total, parts, cur, out);
  return out;
}

static void weak_rec(int total, int length, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out) {
  if (length == 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int first = 0; first <= total; ++first) {
    cur.push_back(first);
    weak_rec(total - first, length - 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> weak_compositions(int total, int length) {
  std::vector<std::vector<int>> out;
  if (length < 1 || total < 0) return out;
  std::vector<int> cur;
  weak_rec(total, length, cur, out);
  return out;
}

std::vector<std::vector<int>> all_compositions(int total) {
  std::vector<std::vector<int>> out;
  for (int parts = 1; parts <= total; ++parts)
    for (auto& c : compositions(total, parts)) out.push_back(std::move(c));
  return out;
}

std::vector<int> odd_primes_in(int lo, int hi) {
  std::vector<int> out;
  if (lo < 3) lo = 3;
  for (int n = lo | 1; n <= hi; n += 2) {
    bool prime = n > 2;
    for (int d = 3; d * d <= n; d += 2)
      if (n % d == 0) {
        prime = false;
        break;
      }
    if (prime) out.push_back(n);
  }
  return out;
}

}  // namespace fmzv
