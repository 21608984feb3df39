#include "fmzv/index_ops.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "fmzv/errors.hpp"
#include "fmzv/util.hpp"

namespace fmzv {

std::pair<int, int> measures(const Index& k) { return {k.weight(), k.depth()}; }

static void require_nonempty(const Index& k, const char* op) {
  if (k.empty())
    throw DomainError(std::string(op) + " requires a non-empty index");
}

// Contract k along the given plus-gap mask (bit i joins parts i and i+1).
static Index contract(const Index& k, unsigned mask) {
  std::vector<int> out;
  out.reserve(k.depth());
  int acc = k.part(0);
  for (int i = 1; i < k.depth(); ++i) {
    if (mask & (1u << (i - 1))) {
      acc += k.part(i);
    } else {
      out.push_back(acc);
      acc = k.part(i);
    }
  }
  out.push_back(acc);
  return Index(std::move(out));
}

IndexCombo t_index(const Index& k) {
  require_nonempty(k, "t_index");
  const int r = k.depth();
  IndexCombo v;
  for (unsigned mask = 0; mask < (1u << (r - 1)); ++mask)
    v.add(contract(k, mask), TPoly::monomial(std::popcount(mask), Rational(1)));
  return v;
}

IndexCombo t_index(const IndexCombo& v) {
  return v.mapped([](const Index& k) { return t_index(k); });
}

IndexCombo t_coeff(const Index& k, int m) {
  require_nonempty(k, "t_coeff");
  IndexCombo v;
  if (m < 0 || m >= k.depth()) return v;
  const int r = k.depth();
  for (unsigned mask = 0; mask < (1u << (r - 1)); ++mask)
    if (std::popcount(mask) == m) v.add(contract(k, mask), TPoly(1));
  return v;
}

IndexCombo cyclic_index(const Index& k, int m) {
  require_nonempty(k, "cyclic_index");
  const int r = k.depth();
  if (m < 0 || m > r - 1)
    throw DomainError("cyclic_index: m must satisfy 0 <= m <= depth-1");
  IndexCombo v;
  // Gap i (0-based) sits between part i and part (i+1) mod r; gap r-1 is the
  // wrap gap.  A filling keeps r-m comma gaps which cut the cycle into
  // blocks; the block containing part 0 is listed first.
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    if (std::popcount(mask) != m) continue;
    std::vector<int> commas;
    for (int g = 0; g < r; ++g)
      if (!(mask & (1u << g))) commas.push_back(g);
    const int d = static_cast<int>(commas.size());
    std::vector<int> parts(d, 0);
    // Block j covers positions commas[j-1]+1 .. commas[j] cyclically; the
    // j = 0 block wraps past position 0 and therefore leads.
    for (int j = 0; j < d; ++j) {
      int begin = (commas[(j + d - 1) % d] + 1) % r;
      int end = commas[j];
      for (int pos = begin;; pos = (pos + 1) % r) {
        parts[j] += k.part(pos);
        if (pos == end) break;
      }
    }
    v.add(Index(std::move(parts)), TPoly(1));
  }
  return v;
}

Index hoffman_dual(const Index& k) {
  require_nonempty(k, "hoffman_dual");
  const int w = k.weight();
  // Cuts of k: the proper partial sums.  The dual takes the complementary
  // cut set inside {1, ..., w-1}.
  std::set<int> cuts;
  int acc = 0;
  for (int i = 0; i + 1 < k.depth(); ++i) {
    acc += k.part(i);
    cuts.insert(acc);
  }
  std::vector<int> parts;
  int prev = 0;
  for (int c = 1; c < w; ++c)
    if (!cuts.count(c)) {
      parts.push_back(c - prev);
      prev = c;
    }
  parts.push_back(w - prev);
  return Index(std::move(parts));
}

IndexCombo hoffman_dual(const IndexCombo& v) {
  return v.mapped(
      [](const Index& k) { return IndexCombo::of(hoffman_dual(k)); });
}

IndexCombo ohno_sum(const Index& k, int m, OhnoKind kind) {
  require_nonempty(k, "ohno_sum");
  if (m < 0) throw DomainError("ohno_sum: m must be non-negative");
  if (kind == OhnoKind::G) {
    return ohno_sum(k, m, OhnoKind::G1) - ohno_sum(k, m, OhnoKind::G2);
  }
  const Index base = kind == OhnoKind::G1 ? k : hoffman_dual(k);
  IndexCombo v;
  for (const auto& e : weak_compositions(m, base.depth())) {
    std::vector<int> parts = base.parts();
    for (size_t i = 0; i < parts.size(); ++i) parts[i] += e[i];
    Index lifted(std::move(parts));
    v.add(kind == OhnoKind::G1 ? lifted : hoffman_dual(lifted), TPoly(1));
  }
  return v;
}

IndexCombo phi_index(const Index& k) {
  const Rational sign(k.depth() % 2 == 0 ? 1 : -1);
  IndexCombo v = IndexCombo::of(Index{}, TPoly(sign));
  for (int i = 0; i < k.depth(); ++i) {
    IndexCombo part;
    for (const auto& c : all_compositions(k.part(i)))
      part.add(Index(c), TPoly(1));
    v = v.concat(part);
  }
  return v;
}

IndexCombo phi_index(const IndexCombo& v) {
  return v.mapped([](const Index& k) { return phi_index(k); });
}

static IndexCombo tilde_shuffle_parts(const std::vector<int>& u, size_t i,
                                      const std::vector<int>& v, size_t j) {
  if (i == u.size() && j == v.size()) return IndexCombo::unit();
  IndexCombo out;
  if (i < u.size()) {
    IndexCombo rest = tilde_shuffle_parts(u, i + 1, v, j);
    for (const auto& [k, c] : rest.terms()) {
      std::vector<int> parts;
      parts.reserve(k.depth() + 1);
      parts.push_back(u[i]);
      parts.insert(parts.end(), k.parts().begin(), k.parts().end());
      out.add(Index(std::move(parts)), c);
    }
  }
  if (j < v.size()) {
    IndexCombo rest = tilde_shuffle_parts(u, i, v, j + 1);
    for (const auto& [k, c] : rest.terms()) {
      std::vector<int> parts;
      parts.reserve(k.depth() + 1);
      parts.push_back(v[j]);
      parts.insert(parts.end(), k.parts().begin(), k.parts().end());
      out.add(Index(std::move(parts)), c);
    }
  }
  return out;
}

IndexCombo tilde_shuffle(const IndexCombo& u, const IndexCombo& v) {
  IndexCombo out;
  for (const auto& [ku, cu] : u.terms())
    for (const auto& [kv, cv] : v.terms())
      out += tilde_shuffle_parts(ku.parts(), 0, kv.parts(), 0).scaled(cu * cv);
  return out;
}

void BBSpec::validate(int max_part) const {
  if (a.size() != b.size())
    throw DomainError("bb_element: a and b must have equal length");
  for (int x : a)
    if (x < 1 || x % 2 == 0)
      throw DomainError("bb_element: parts of a must be odd and positive");
  for (int x : b)
    if (x < 1 || x % 2 == 0)
      throw DomainError("bb_element: parts of b must be odd and positive");
  for (int x : c)
    if (x < 2 || x % 2 == 1)
      throw DomainError("bb_element: parts of c must be even and positive");
  if (a.empty() && c.empty())
    throw DomainError("bb_element: spec must contain at least one part");
  if (max_part > 0) {
    for (const auto* v : {&a, &b, &c})
      for (int x : *v)
        if (x > max_part) throw DomainError("bb_element: part exceeds cap");
  }
}

int BBSpec::weight() const {
  auto sum = [](const std::vector<int>& v) {
    return std::accumulate(v.begin(), v.end(), 0);
  };
  return sum(a) + sum(b) + sum(c);
}

std::string BBSpec::display() const {
  auto idx = [](const std::vector<int>& v) { return Index(v).display(); };
  return "a=" + idx(a) + ",b=" + idx(b) + ",c=" + idx(c);
}

IndexCombo bb_element_base(const BBSpec& spec) {
  spec.validate();
  const int l = spec.l();
  IndexCombo perm_sum;
  if (l == 0) {
    perm_sum = IndexCombo::unit();
  } else {
    std::vector<int> sigma(l), tau(l);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
      std::iota(tau.begin(), tau.end(), 0);
      do {
        std::vector<int> parts;
        parts.reserve(2 * l);
        for (int i = 0; i < l; ++i) {
          parts.push_back(spec.a[sigma[i]]);
          parts.push_back(spec.b[tau[i]]);
        }
        perm_sum.add(Index(std::move(parts)), TPoly(1));
      } while (std::next_permutation(tau.begin(), tau.end()));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
  IndexCombo out = perm_sum;
  for (int cj : spec.c)
    out = tilde_shuffle(out, IndexCombo::of(Index({cj})));
  return out;
}

IndexCombo bb_element(const BBSpec& spec) { return t_index(bb_element_base(spec)); }

IndexCombo bb_coeff(const BBSpec& spec, int n) {
  return bb_element(spec).coeff_at(n);
}

IndexCombo s_element(int k, int r) {
  if (r < 1 || k < r) throw DomainError("s_element requires 1 <= r <= k");
  IndexCombo v;
  for (const auto& c : compositions(k, r)) v.add(Index(c), TPoly(1));
  return v;
}

IndexCombo weighted_elements(int k, int r, int n, WeightedKind kind) {
  if (r < 1 || k < r) throw DomainError("weighted_elements requires 1 <= r <= k");
  if (kind == WeightedKind::Ft) {
    IndexCombo v;
    for (const auto& c : compositions(k, r))
      v += t_index(Index(c)).scaled(Rational(1LL << (c.back() - 1)));
    return v;
  }
  if (n < 0 || n > r - 1)
    throw DomainError("weighted_elements requires 0 <= n <= r-1");
  switch (kind) {
    case WeightedKind::F:
      return weighted_elements(k, r, -1, WeightedKind::Ft).coeff_at(n);
    case WeightedKind::Sprime:
      return s_element(k, r - n).scaled(Rational(-binom_ll(k - r + n, n)));
    case WeightedKind::G1prime:
    case WeightedKind::G2prime: {
      IndexCombo v;
      const OhnoKind ok =
          kind == WeightedKind::G1prime ? OhnoKind::G1 : OhnoKind::G2;
      for (int m = 0; m <= k - r - 1; ++m) {
        std::vector<int> parts(r - n - 1, 1);
        parts.push_back(k - r - m + 1);
        v += ohno_sum(Index(std::move(parts)), m + n, ok)
                 .scaled(Rational(-(1LL << (k - r - m - 1)) *
                                  binom_ll(m + n, n)));
      }
      return v;
    }
    case WeightedKind::H:
      return weighted_elements(k, r, n, WeightedKind::F) +
             weighted_elements(k, r, n, WeightedKind::Sprime) +
             weighted_elements(k, r, n, WeightedKind::G1prime) -
             weighted_elements(k, r, n, WeightedKind::G2prime);
    default:
      throw DomainError("weighted_elements: unknown kind");
  }
}

IndexCombo cyclic_relation(const Index& k) {
  require_nonempty(k, "cyclic_relation");
  if (k.all_ones())
    throw DomainError("cyclic_relation excludes all-ones indices");
  const int r = k.depth();
  auto at = [&](int i) { return k.part(((i % r) + r) % r); };  // cyclic, 0-based
  // Parts at cyclic positions l+1, ..., l+count (0-based l).
  auto run = [&](int l, int count) {
    std::vector<int> parts;
    parts.reserve(count);
    for (int i = 1; i <= count; ++i) parts.push_back(at(l + i));
    return parts;
  };
  IndexCombo v;
  for (int l = 0; l < r; ++l) {
    for (int j = 1; j <= at(l) - 1; ++j) {
      std::vector<int> parts{j};
      auto mid = run(l, r - 1);
      parts.insert(parts.end(), mid.begin(), mid.end());
      parts.push_back(at(l) + 1 - j);
      v += t_index(Index(std::move(parts)));
    }
  }
  const TPoly omt = TPoly::one_minus_t();
  for (int l = 0; l < r; ++l) {
    auto a = run(l, r - 1);
    a.push_back(at(l) + 1);
    v -= t_index(Index(std::move(a))).scaled(omt);
    std::vector<int> b{at(l + 1) + 1};
    auto tail = run(l + 1, r - 1);
    b.insert(b.end(), tail.begin(), tail.end());
    v -= t_index(Index(std::move(b))).scaled(omt);
    std::vector<int> c{1};
    auto full = run(l, r);
    c.insert(c.end(), full.begin(), full.end());
    v -= t_index(Index(std::move(c)));
  }
  return v;
}

IndexCombo symmetric_sum_element(const Index& k) {
  require_nonempty(k, "symmetric_sum_element");
  const int r = k.depth();
  std::vector<int> pos(r);
  std::iota(pos.begin(), pos.end(), 0);
  IndexCombo v;
  do {
    std::vector<int> parts(r);
    for (int i = 0; i < r; ++i) parts[i] = k.part(pos[i]);
    v.add(Index(std::move(parts)), TPoly(1));
  } while (std::next_permutation(pos.begin(), pos.end()));
  return v;
}

std::vector<Index> all_indices(int max_weight, int max_depth) {
  std::vector<Index> out;
  for (int w = 1; w <= max_weight; ++w)
    for (int d = 1; d <= std::min(w, max_depth); ++d)
      for (const auto& c : compositions(w, d)) out.emplace_back(c);
  return out;
}

}  // namespace fmzv
