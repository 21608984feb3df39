#include "fmzv/theorems.hpp"

#include <algorithm>
#include <stdexcept>

#include "fmzv/errors.hpp"
#include "fmzv/index_ops.hpp"
#include "fmzv/util.hpp"
#include "fmzv/word_ops.hpp"

namespace fmzv {

namespace {

TPoly tpow(const TPoly& base, int e) {
  TPoly r(1);
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

std::string clip(std::string s) {
  if (s.size() > 160) {
    s.resize(157);
    s += "...";
  }
  return s;
}

}  // namespace

std::string kind_name(TheoremKind k) {
  switch (k) {
    case TheoremKind::symbolic: return "symbolic";
    case TheoremKind::numeric: return "numeric";
    case TheoremKind::per_prime_exact: return "per-prime-exact";
  }
  return "unknown";
}

const std::vector<TheoremDescriptor>& registry() {
  static const std::vector<TheoremDescriptor> reg = {
      {"sum-formula", TheoremKind::numeric,
       "the sum of interpolated values over compositions of k into r parts "
       "with last part >= 2 equals an explicit polynomial in t times the "
       "Bernoulli value B_{p-k}/k"},
      {"cyclic-sum", TheoremKind::numeric,
       "the cyclic combination of interpolated values attached to a non-"
       "constant index evaluates to zero"},
      {"bowman-bradley", TheoremKind::numeric,
       "the interpolation of the symmetrized element built from odd pairs "
       "and even singles evaluates to zero"},
      {"weighted-sum", TheoremKind::numeric,
       "the 2^(last part - 1)-weighted sum of interpolated values over "
       "compositions of k into an odd number of parts evaluates to zero"},
      {"symmetric-sum", TheoremKind::numeric,
       "the sum of interpolated values over all permutations of an index "
       "evaluates to zero"},
      {"t-shuffle", TheoremKind::numeric,
       "the interpolated evaluation of a t-shuffle product equals the "
       "evaluation of the signed-reversal convolution form"},
      {"duality-star", TheoremKind::numeric,
       "the star value of an index is minus the star value of its Hoffman "
       "dual"},
      {"duality-phi", TheoremKind::numeric,
       "plain evaluation is invariant under the substitution x -> x + y, "
       "y -> -y on words"},
      {"duality-t", TheoremKind::numeric,
       "the interpolated evaluation of a word in yHx plus that of its "
       "t-twisted dual is zero"},
      {"derivation", TheoremKind::numeric,
       "the interpolated evaluation kills the twisted derivation image of "
       "any word in yHx, after removing the trailing x"},
      {"hoffman", TheoremKind::numeric,
       "the boundary identity relating slot bumps, slot splits and "
       "neighbour merges of an index with last part >= 2"},
      {"ohno-type", TheoremKind::numeric,
       "the lift sum over weak compositions minus its Hoffman-dual lift sum "
       "evaluates to zero"},
      {"plain-sum", TheoremKind::numeric,
       "the sum of plain values over all compositions of k into r parts "
       "evaluates to zero"},
      {"harmonic", TheoremKind::per_prime_exact,
       "plain evaluation is multiplicative over the harmonic product"},
      {"t-harmonic", TheoremKind::per_prime_exact,
       "interpolated evaluation is multiplicative over the t-harmonic "
       "product"},
      {"reversal", TheoremKind::per_prime_exact,
       "the interpolated value of an index equals (-1)^weight times the "
       "interpolated value of its reversal"},
      {"antipode", TheoremKind::per_prime_exact,
       "the alternating convolution of prefix values at t with reversed "
       "suffix values at 1-t vanishes"},
      {"zst-transport", TheoremKind::per_prime_exact,
       "the interpolated evaluation of an index equals the plain evaluation "
       "of the transformed word"},
      {"lemma-cyclic", TheoremKind::symbolic,
       "the four-term rearrangement of the t^m coefficient of the cyclic "
       "double sum holds in the index algebra"},
      {"prop-cyclic-coeff", TheoremKind::symbolic,
       "the t^m coefficient of the cyclic combination equals the sum of its "
       "t^0 forms over the cyclic index"},
      {"keyprop-bb", TheoremKind::symbolic,
       "the recursion expressing (n+1) times the (n+1)-st interpolation "
       "coefficient of a symmetrized element through coefficients of "
       "modified elements"},
      {"lemma-F-closed", TheoremKind::symbolic,
       "the closed binomial form of the t^n coefficient of the weighted "
       "composition sum"},
      {"lemma-FSG1", TheoremKind::symbolic,
       "F + S' + G1' vanishes in the index algebra"},
      {"lemma-G2phi", TheoremKind::symbolic,
       "G2' plus its refinement image collapses to a binomial multiple of "
       "the all-ones index for even weight"},
      {"keyprop-weighted", TheoremKind::symbolic,
       "H plus its refinement image collapses to minus a binomial multiple "
       "of the all-ones index for even weight"},
      {"lemma-Snu", TheoremKind::symbolic,
       "the interpolation transform commutes with the signed reversal of "
       "words"},
      {"lemma-prodSt", TheoremKind::symbolic,
       "the product of two transformed words is the transform of the "
       "concatenation minus its x-shifted correction"},
      {"transport-consistency", TheoremKind::symbolic,
       "the recursive t-harmonic product agrees with the transported one; "
       "the recursive t-shuffle is compared and reported only"},
  };
  return reg;
}

const TheoremDescriptor* find_theorem(const std::string& id) {
  for (const auto& d : registry())
    if (d.id == id) return &d;
  return nullptr;
}

bool set_bound(Bounds& b, const std::string& name, int value) {
  if (name == "max-weight") b.max_weight = value;
  else if (name == "max-depth") b.max_depth = value;
  else if (name == "pair-weight") b.pair_weight = value;
  else if (name == "word-weight") b.word_weight = value;
  else if (name == "deriv-max-order") b.deriv_max_order = value;
  else if (name == "bb-lm") b.bb_lm = value;
  else if (name == "bb-parts") b.bb_parts = value;
  else if (name == "sym-cyclic-weight") b.sym_cyclic_weight = value;
  else if (name == "sym-section4-weight") b.sym_section4_weight = value;
  else if (name == "sym-word-weight") b.sym_word_weight = value;
  else if (name == "sym-pair-weight") b.sym_pair_weight = value;
  else return false;
  return true;
}

// --- instance enumeration ---------------------------------------------------

namespace {

void seqs_nondecr(const std::vector<int>& vals, int len, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == len) {
    out.push_back(cur);
    return;
  }
  for (int v : vals) {
    if (!cur.empty() && v < cur.back()) continue;
    cur.push_back(v);
    seqs_nondecr(vals, len, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> nondecr(const std::vector<int>& vals, int len) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  seqs_nondecr(vals, len, cur, out);
  return out;
}

// Symmetrized-element shapes: odd parts a_1..a_l, b_1..b_l and even parts
// c_1..c_m with 2l+m <= cap and every part <= max_part, ordered by 2l+m,
// then l, then the part sequences.
std::vector<BBSpec> bb_specs(int cap, int max_part) {
  std::vector<int> odds, evens;
  for (int v = 1; v <= max_part; v += 2) odds.push_back(v);
  for (int v = 2; v <= max_part; v += 2) evens.push_back(v);
  std::vector<BBSpec> out;
  for (int s = 1; s <= cap; ++s)
    for (int l = 0; 2 * l <= s; ++l) {
      int m = s - 2 * l;
      for (const auto& a : nondecr(odds, l))
        for (const auto& b : nondecr(odds, l))
          for (const auto& c : nondecr(evens, m))
            out.push_back(BBSpec{a, b, c});
    }
  return out;
}

std::string pair_params(const Index& u, const Index& v) {
  return "u=" + u.display() + ",v=" + v.display();
}

void pairs_unordered(std::vector<Instance>& out, const std::string& id,
                     int total, int max_depth) {
  auto ops = all_indices(total - 1, max_depth);
  for (size_t i = 0; i < ops.size(); ++i)
    for (size_t j = i; j < ops.size(); ++j)
      if (ops[i].weight() + ops[j].weight() <= total)
        out.push_back(
            {id, pair_params(ops[i], ops[j]), {ops[i], ops[j]}, {}});
}

void pairs_ordered_with_empty(std::vector<Instance>& out,
                              const std::string& id, int total,
                              int max_depth) {
  std::vector<Index> us{Index()};
  auto smaller = all_indices(total - 1, max_depth);
  us.insert(us.end(), smaller.begin(), smaller.end());
  auto vs = all_indices(total, max_depth);
  for (const auto& u : us)
    for (const auto& v : vs)
      if (u.weight() + v.weight() <= total)
        out.push_back({id, pair_params(u, v), {u, v}, {}});
}

std::string kr_params(int k, int r) {
  return "k=" + std::to_string(k) + ",r=" + std::to_string(r);
}

}  // namespace

std::vector<Instance> instances(const std::string& id, const Bounds& b) {
  std::vector<Instance> out;
  if (id == "sum-formula" || id == "plain-sum") {
    for (int k = 1; k <= b.max_weight; ++k)
      for (int r = 1; r <= std::min(k, b.max_depth); ++r)
        out.push_back({id, kr_params(k, r), {}, {k, r}});
  } else if (id == "weighted-sum") {
    for (int k = 1; k <= b.max_weight; ++k)
      for (int r = 1; r <= std::min(k, b.max_depth); r += 2)
        out.push_back({id, kr_params(k, r), {}, {k, r}});
  } else if (id == "cyclic-sum") {
    for (const auto& k : all_indices(b.max_weight, b.max_depth))
      if (!k.all_ones())
        out.push_back({id, "k=" + k.display(), {k}, {}});
  } else if (id == "bowman-bradley") {
    for (const auto& s : bb_specs(b.bb_lm, b.bb_parts))
      out.push_back(
          {id, s.display(), {Index(s.a), Index(s.b), Index(s.c)}, {}});
  } else if (id == "symmetric-sum") {
    for (const auto& k : all_indices(b.max_weight, b.max_depth)) {
      bool sorted = true;
      for (int i = 0; i + 1 < k.depth(); ++i)
        if (k.part(i) > k.part(i + 1)) sorted = false;
      if (sorted) out.push_back({id, "k=" + k.display(), {k}, {}});
    }
  } else if (id == "t-shuffle") {
    pairs_ordered_with_empty(out, id, b.pair_weight, b.max_depth);
  } else if (id == "duality-star" || id == "duality-phi") {
    for (const auto& k : all_indices(b.max_weight, b.max_depth))
      out.push_back({id, "k=" + k.display(), {k}, {}});
  } else if (id == "duality-t") {
    for (const auto& k : all_indices(b.word_weight, b.max_depth))
      if (k.last() >= 2)
        out.push_back({id, "k=" + k.display(), {k}, {}});
  } else if (id == "derivation") {
    for (const auto& k : all_indices(b.word_weight, b.max_depth)) {
      if (k.last() < 2) continue;
      for (int l = 1; l <= b.deriv_max_order; ++l)
        out.push_back(
            {id, "k=" + k.display() + ",l=" + std::to_string(l), {k}, {l}});
    }
  } else if (id == "hoffman") {
    for (const auto& k : all_indices(b.max_weight, b.max_depth))
      if (k.last() >= 2)
        out.push_back({id, "k=" + k.display(), {k}, {}});
  } else if (id == "ohno-type") {
    for (const auto& k : all_indices(b.max_weight - 1, b.max_depth))
      for (int m = 1; m + k.weight() <= b.max_weight; ++m)
        out.push_back(
            {id, "k=" + k.display() + ",m=" + std::to_string(m), {k}, {m}});
  } else if (id == "harmonic" || id == "t-harmonic") {
    pairs_unordered(out, id, b.pair_weight, b.max_depth);
  } else if (id == "reversal" || id == "antipode" || id == "zst-transport") {
    for (const auto& k : all_indices(b.max_weight, b.max_depth))
      out.push_back({id, "k=" + k.display(), {k}, {}});
  } else if (id == "lemma-cyclic" || id == "prop-cyclic-coeff") {
    for (const auto& k : all_indices(b.sym_cyclic_weight, b.sym_cyclic_weight)) {
      if (k.all_ones()) continue;
      for (int m = 0; m < k.depth(); ++m)
        out.push_back(
            {id, "k=" + k.display() + ",m=" + std::to_string(m), {k}, {m}});
    }
  } else if (id == "keyprop-bb") {
    for (const auto& s : bb_specs(b.bb_lm, b.bb_parts))
      for (int n = 0; n <= 2 * s.l() + s.m() - 2; ++n)
        out.push_back({id, s.display() + ",n=" + std::to_string(n),
                       {Index(s.a), Index(s.b), Index(s.c)},
                       {n}});
  } else if (id == "lemma-F-closed" || id == "lemma-FSG1") {
    for (int k = 1; k <= b.sym_section4_weight; ++k)
      for (int r = 1; r <= k; ++r)
        for (int n = 0; n < r; ++n)
          out.push_back({id, kr_params(k, r) + ",n=" + std::to_string(n),
                         {},
                         {k, r, n}});
  } else if (id == "lemma-G2phi" || id == "keyprop-weighted") {
    for (int k = 1; k <= b.sym_section4_weight; ++k)
      for (int r = 1; r <= k; r += 2)
        for (int n = 0; n < r; ++n)
          out.push_back({id, kr_params(k, r) + ",n=" + std::to_string(n),
                         {},
                         {k, r, n}});
  } else if (id == "lemma-Snu") {
    for (const auto& k : all_indices(b.sym_word_weight, b.sym_word_weight))
      out.push_back({id, "k=" + k.display(), {k}, {}});
  } else if (id == "lemma-prodSt") {
    pairs_ordered_with_empty(out, id, b.sym_word_weight, b.sym_word_weight);
  } else if (id == "transport-consistency") {
    pairs_unordered(out, id, b.sym_pair_weight, b.sym_pair_weight);
  } else {
    throw DomainError("unknown theorem id: " + id);
  }
  return out;
}

// --- numeric checks ---------------------------------------------------------

namespace {

NumericFactor t_factor(IndexCombo c) {
  NumericFactor f;
  f.combo = std::move(c);
  return f;
}

NumericFactor plain_factor(IndexCombo c) {
  NumericFactor f;
  f.combo = std::move(c);
  f.plain = true;
  return f;
}

NumericFactor subst_factor(IndexCombo c, long a, long b) {
  NumericFactor f;
  f.combo = std::move(c);
  f.has_subst = true;
  f.subst_a = a;
  f.subst_b = b;
  return f;
}

void add_single(NumericCheck& chk, NumericFactor f) {
  NumericTerm t;
  t.factors.push_back(std::move(f));
  chk.terms.push_back(std::move(t));
}

Index dec_last(std::vector<int> p) {
  p.back() -= 1;
  return Index(p);
}

NumericCheck numeric_sum_formula(int k, int r) {
  NumericCheck chk;
  IndexCombo lhs;
  for (const auto& c : compositions(k, r))
    if (c.back() >= 2) lhs.add(Index(c), TPoly(1));
  add_single(chk, t_factor(lhs));
  TPoly q;
  for (int j = 0; j <= r - 1; ++j) {
    long long c = binom_ll(k - 1, j) +
                  (r % 2 ? -1LL : 1LL) * binom_ll(k - 1, r - 1 - j);
    if (c)
      q += TPoly(c) * tpow(TPoly::t(), j) * tpow(TPoly::one_minus_t(), r - 1 - j);
  }
  if (!q.is_zero()) {
    NumericTerm t;
    t.coeff = -q;
    t.zA_k = k;
    chk.terms.push_back(std::move(t));
  }
  return chk;
}

NumericCheck numeric_hoffman(const Index& k) {
  const auto& parts = k.parts();
  int r = k.depth();
  IndexCombo combo;
  for (int i = 0; i < r; ++i) {
    std::vector<int> p = parts;
    p[i] += 1;
    TPoly c = TPoly(1) +
              TPoly::monomial(1, Rational(parts[i] + (i == 0 ? 1 : 0) - 2));
    combo.add(dec_last(p), c);
  }
  for (int i = 0; i < r; ++i)
    for (int j = 2; j <= parts[i]; ++j) {
      std::vector<int> p(parts.begin(), parts.begin() + i);
      p.push_back(parts[i] + 1 - j);
      p.push_back(j);
      p.insert(p.end(), parts.begin() + i + 1, parts.end());
      combo.add(dec_last(p), -TPoly(1));
    }
  TPoly t1mt = TPoly::t() * TPoly::one_minus_t();
  for (int i = 0; i + 1 < r; ++i) {
    std::vector<int> p(parts.begin(), parts.begin() + i);
    p.push_back(parts[i] + parts[i + 1] + 1);
    p.insert(p.end(), parts.begin() + i + 2, parts.end());
    combo.add(dec_last(p), -t1mt);
  }
  NumericCheck chk;
  add_single(chk, t_factor(combo));
  return chk;
}

NumericCheck numeric_antipode(const Index& k) {
  NumericCheck chk;
  const auto& parts = k.parts();
  int r = k.depth();
  for (int i = 0; i <= r; ++i) {
    NumericTerm t;
    t.coeff = TPoly(i % 2 ? -1 : 1);
    std::vector<int> pre(parts.begin(), parts.begin() + i);
    std::vector<int> suf(parts.begin() + i, parts.end());
    std::reverse(suf.begin(), suf.end());
    t.factors.push_back(t_factor(IndexCombo::of(Index(pre))));
    t.factors.push_back(subst_factor(IndexCombo::of(Index(suf)), 1, -1));
    chk.terms.push_back(std::move(t));
  }
  return chk;
}

}  // namespace

NumericCheck build_numeric(const Instance& inst) {
  const std::string& id = inst.theorem;
  NumericCheck chk;
  if (id == "sum-formula") {
    chk = numeric_sum_formula(inst.num[0], inst.num[1]);
  } else if (id == "plain-sum") {
    add_single(chk, plain_factor(s_element(inst.num[0], inst.num[1])));
  } else if (id == "weighted-sum") {
    add_single(chk, plain_factor(weighted_elements(inst.num[0], inst.num[1], 0,
                                                   WeightedKind::Ft)));
  } else if (id == "cyclic-sum") {
    add_single(chk, plain_factor(cyclic_relation(inst.idx[0])));
  } else if (id == "bowman-bradley") {
    BBSpec spec{inst.idx[0].parts(), inst.idx[1].parts(), inst.idx[2].parts()};
    add_single(chk, plain_factor(bb_element(spec)));
  } else if (id == "symmetric-sum") {
    add_single(chk, t_factor(symmetric_sum_element(inst.idx[0])));
  } else if (id == "t-shuffle") {
    WordCombo wu = to_word(IndexCombo::of(inst.idx[0]));
    WordCombo wv = to_word(IndexCombo::of(inst.idx[1]));
    WordCombo w = t_shuffle(wu, wv);
    w -= wu.concat(nu_map(wv));
    if (!inst.idx[0].empty())
      w += wu.concat(WordCombo::of(Word("x")))
               .concat(strip_leading_y(nu_map(wv)))
               .scaled(TPoly::t());
    add_single(chk, t_factor(to_index(w)));
  } else if (id == "duality-star") {
    IndexCombo c = IndexCombo::of(inst.idx[0]);
    c.add(hoffman_dual(inst.idx[0]), TPoly(1));
    add_single(chk, subst_factor(std::move(c), 1, 0));
  } else if (id == "duality-phi") {
    IndexCombo c = IndexCombo::of(inst.idx[0]);
    c -= phi_index(inst.idx[0]);
    add_single(chk, plain_factor(std::move(c)));
  } else if (id == "duality-t") {
    const Index& k = inst.idx[0];
    IndexCombo c = IndexCombo::of(k);
    c += to_index(phi_t(to_word(IndexCombo::of(k))));
    add_single(chk, t_factor(std::move(c)));
  } else if (id == "derivation") {
    WordCombo w = derivation(to_word(IndexCombo::of(inst.idx[0])), inst.num[0],
                             /*twisted=*/true);
    add_single(chk, t_factor(to_index(strip_trailing_x(w))));
  } else if (id == "hoffman") {
    chk = numeric_hoffman(inst.idx[0]);
  } else if (id == "ohno-type") {
    add_single(chk,
               plain_factor(ohno_sum(inst.idx[0], inst.num[0], OhnoKind::G)));
  } else if (id == "harmonic" || id == "t-harmonic") {
    bool plain = id == "harmonic";
    IndexCombo u = IndexCombo::of(inst.idx[0]);
    IndexCombo v = IndexCombo::of(inst.idx[1]);
    NumericTerm prod;
    prod.factors.push_back(plain ? plain_factor(u) : t_factor(u));
    prod.factors.push_back(plain ? plain_factor(v) : t_factor(v));
    chk.terms.push_back(std::move(prod));
    NumericTerm rhs;
    rhs.coeff = TPoly(-1);
    IndexCombo p = plain ? harmonic(u, v) : t_harmonic(u, v);
    rhs.factors.push_back(plain ? plain_factor(p) : t_factor(p));
    chk.terms.push_back(std::move(rhs));
  } else if (id == "reversal") {
    const Index& k = inst.idx[0];
    IndexCombo c = IndexCombo::of(k);
    c.add(k.reversed(), TPoly(k.weight() % 2 ? 1 : -1));
    add_single(chk, t_factor(std::move(c)));
  } else if (id == "antipode") {
    chk = numeric_antipode(inst.idx[0]);
  } else if (id == "zst-transport") {
    const Index& k = inst.idx[0];
    add_single(chk, t_factor(IndexCombo::of(k)));
    NumericTerm t;
    t.coeff = TPoly(-1);
    t.factors.push_back(
        plain_factor(to_index(s_transform(to_word(IndexCombo::of(k))))));
    chk.terms.push_back(std::move(t));
  } else {
    throw DomainError("no numeric check for theorem id: " + id);
  }
  int w = 0;
  for (const auto& t : chk.terms) {
    for (const auto& f : t.factors) w = std::max(w, f.combo.max_weight());
    w = std::max(w, t.zA_k);
  }
  chk.weight = w;
  return chk;
}

FpPoly eval_numeric(const NumericCheck& chk, const PrimeCtx& ctx,
                    EvalCache* cache) {
  FpPoly acc;
  for (const auto& term : chk.terms) {
    FpPoly v = reduce_tpoly(term.coeff, ctx, "term coefficient");
    for (const auto& f : term.factors) {
      if (v.is_zero()) break;
      FpPoly fv = f.plain ? z_map_index_plain(ctx, f.combo, cache)
                          : z_map_index(ctx, f.combo, cache);
      if (f.has_subst)
        fv = fv.subst_affine(ctx.reduce_ll(f.subst_a), ctx.reduce_ll(f.subst_b),
                             ctx);
      v = v.mul(fv, ctx);
    }
    if (!v.is_zero() && term.zA_k > 0) v = v.scaled(zA_single(ctx, term.zA_k), ctx);
    acc = acc.add(v, ctx);
  }
  return acc;
}

// --- symbolic checks --------------------------------------------------------

namespace {

SymbolicResult from_index_diff(const IndexCombo& diff) {
  SymbolicResult r;
  r.pass = diff.is_zero();
  if (!r.pass) r.residual = clip(diff.to_string());
  return r;
}

SymbolicResult from_word_diff(const WordCombo& diff) {
  SymbolicResult r;
  r.pass = diff.is_zero();
  if (!r.pass) r.residual = clip(diff.to_string());
  return r;
}

Rational const_coeff(const TPoly& c) { return c.coeff(0); }

SymbolicResult sym_lemma_cyclic(const Index& k, int m) {
  const auto& parts = k.parts();
  int r = k.depth();
  IndexCombo lhs;
  for (int l = 0; l < r; ++l)
    for (int j = 1; j <= parts[l] - 1; ++j) {
      std::vector<int> p{j};
      for (int s = 1; s < r; ++s) p.push_back(parts[(l + s) % r]);
      p.push_back(parts[l] + 1 - j);
      lhs += t_coeff(Index(p), m);
    }
  IndexCombo rhs;
  IndexCombo cm = cyclic_index(k, m);
  for (const auto& [a, coeff] : cm.terms()) {
    Rational mult = const_coeff(coeff);
    int d = a.depth();
    IndexCombo inner;
    for (int i = 0; i < d; ++i) {
      for (int j = 1; j <= a.part(i) - 1; ++j) {
        std::vector<int> p{j};
        for (int s = 1; s < d; ++s) p.push_back(a.part((i + s) % d));
        p.push_back(a.part(i) + 1 - j);
        inner.add(Index(p), TPoly(1));
      }
      std::vector<int> q;
      for (int s = 0; s < d; ++s) q.push_back(a.part((i + s) % d));
      q.push_back(1);
      inner.add(Index(q), TPoly(1));
    }
    rhs += inner.scaled(mult);
  }
  for (int l = 0; l < r; ++l) {
    std::vector<int> q;
    for (int s = 0; s < r; ++s) q.push_back(parts[(l + s) % r]);
    q.push_back(1);
    rhs -= t_coeff(Index(q), m);
  }
  return from_index_diff(lhs - rhs);
}

SymbolicResult sym_prop_cyclic(const Index& k, int m) {
  IndexCombo lhs = cyclic_relation(k).coeff_at(m);
  IndexCombo rhs;
  IndexCombo cm = cyclic_index(k, m);
  for (const auto& [a, coeff] : cm.terms())
    rhs += cyclic_relation(a).coeff_at(0).scaled(const_coeff(coeff));
  return from_index_diff(lhs - rhs);
}

SymbolicResult sym_keyprop_bb(const BBSpec& spec, int n) {
  IndexCombo lhs = bb_coeff(spec, n + 1).scaled(Rational(n + 1));
  IndexCombo rhs;
  for (int j = 0; j < spec.m(); ++j)
    for (int i = 0; i < spec.l(); ++i) {
      BBSpec s1 = spec;
      s1.a[i] += spec.c[j];
      s1.c.erase(s1.c.begin() + j);
      rhs += bb_coeff(s1, n).scaled(Rational(2));
      BBSpec s2 = spec;
      s2.b[i] += spec.c[j];
      s2.c.erase(s2.c.begin() + j);
      rhs += bb_coeff(s2, n).scaled(Rational(2));
    }
  for (int i = 0; i < spec.l(); ++i)
    for (int j = 0; j < spec.l(); ++j) {
      BBSpec s = spec;
      int v = spec.a[i] + spec.b[j];
      s.a.erase(s.a.begin() + i);
      s.b.erase(s.b.begin() + j);
      s.c.push_back(v);
      rhs += bb_coeff(s, n);
    }
  for (int i = 0; i < spec.m(); ++i)
    for (int j = i + 1; j < spec.m(); ++j) {
      BBSpec s = spec;
      s.c[i] += spec.c[j];
      s.c.erase(s.c.begin() + j);
      rhs += bb_coeff(s, n).scaled(Rational(2));
    }
  return from_index_diff(lhs - rhs);
}

SymbolicResult sym_f_closed(int k, int r, int n) {
  IndexCombo lhs = weighted_elements(k, r, n, WeightedKind::F);
  IndexCombo rhs;
  for (const auto& comp : compositions(k, r - n)) {
    int last = comp.back();
    long long coeff = 0;
    for (int i = 1; i <= last - 1; ++i)
      coeff += (1LL << (i - 1)) * binom_ll(k - r + n - i, n - 1);
    coeff += (1LL << (last - 1)) * binom_ll(k - r + n - last + 1, n);
    if (coeff) rhs.add(Index(comp), TPoly(coeff));
  }
  return from_index_diff(lhs - rhs);
}

SymbolicResult sym_fsg1(int k, int r, int n) {
  IndexCombo diff = weighted_elements(k, r, n, WeightedKind::F);
  diff += weighted_elements(k, r, n, WeightedKind::Sprime);
  diff += weighted_elements(k, r, n, WeightedKind::G1prime);
  return from_index_diff(diff);
}

IndexCombo all_ones_multiple(int k, long long c) {
  IndexCombo out;
  if (c) out.add(Index(std::vector<int>(k, 1)), TPoly(c));
  return out;
}

SymbolicResult sym_g2phi(int k, int r, int n) {
  IndexCombo g = weighted_elements(k, r, n, WeightedKind::G2prime);
  IndexCombo diff = g + phi_index(g);
  if (k % 2 == 0) diff -= all_ones_multiple(k, binom_ll(k - r + n, n));
  return from_index_diff(diff);
}

SymbolicResult sym_keyprop_weighted(int k, int r, int n) {
  IndexCombo h = weighted_elements(k, r, n, WeightedKind::H);
  IndexCombo diff = h + phi_index(h);
  if (k % 2 == 0) diff += all_ones_multiple(k, binom_ll(k - r + n, n));
  return from_index_diff(diff);
}

SymbolicResult sym_snu(const Index& k) {
  WordCombo w = to_word(IndexCombo::of(k));
  return from_word_diff(s_transform(nu_map(w)) - nu_map(s_transform(w)));
}

SymbolicResult sym_prod_st(const Index& u, const Index& v) {
  WordCombo wu = to_word(IndexCombo::of(u));
  WordCombo wv = to_word(IndexCombo::of(v));
  WordCombo lhs = s_transform(wu).concat(s_transform(wv));
  WordCombo inner = wu.concat(wv);
  if (!u.empty())
    inner -= wu.concat(WordCombo::of(Word("x")))
                 .concat(strip_leading_y(wv))
                 .scaled(TPoly::t());
  return from_word_diff(lhs - s_transform(inner));
}

SymbolicResult sym_transport(const Index& u, const Index& v) {
  IndexCombo cu = IndexCombo::of(u);
  IndexCombo cv = IndexCombo::of(v);
  IndexCombo hd = t_harmonic_recursive(cu, cv) - t_harmonic(cu, cv);
  if (!hd.is_zero()) {
    SymbolicResult r;
    r.pass = false;
    r.residual = "t-harmonic recursion differs: " + clip(hd.to_string());
    return r;
  }
  SymbolicResult r;
  r.pass = true;
  WordCombo sd = t_shuffle_recursive(to_word(cu), to_word(cv)) -
                 t_shuffle(to_word(cu), to_word(cv));
  if (!sd.is_zero())
    r.residual =
        "note: recursive t-shuffle differs from transport by " +
        clip(sd.to_string());
  return r;
}

}  // namespace

SymbolicResult check_symbolic(const Instance& inst) {
  const std::string& id = inst.theorem;
  if (id == "lemma-cyclic") return sym_lemma_cyclic(inst.idx[0], inst.num[0]);
  if (id == "prop-cyclic-coeff")
    return sym_prop_cyclic(inst.idx[0], inst.num[0]);
  if (id == "keyprop-bb") {
    BBSpec spec{inst.idx[0].parts(), inst.idx[1].parts(), inst.idx[2].parts()};
    return sym_keyprop_bb(spec, inst.num[0]);
  }
  if (id == "lemma-F-closed")
    return sym_f_closed(inst.num[0], inst.num[1], inst.num[2]);
  if (id == "lemma-FSG1")
    return sym_fsg1(inst.num[0], inst.num[1], inst.num[2]);
  if (id == "lemma-G2phi")
    return sym_g2phi(inst.num[0], inst.num[1], inst.num[2]);
  if (id == "keyprop-weighted")
    return sym_keyprop_weighted(inst.num[0], inst.num[1], inst.num[2]);
  if (id == "lemma-Snu") return sym_snu(inst.idx[0]);
  if (id == "lemma-prodSt") return sym_prod_st(inst.idx[0], inst.idx[1]);
  if (id == "transport-consistency")
    return sym_transport(inst.idx[0], inst.idx[1]);
  throw DomainError("no symbolic check for theorem id: " + id);
}

}  // namespace fmzv
