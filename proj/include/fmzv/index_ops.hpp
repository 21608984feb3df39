#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fmzv/index.hpp"

namespace fmzv {

// (weight, depth).
std::pair<int, int> measures(const Index& k);

// The t-interpolation of a non-empty index: the sum over all 2^(depth-1)
// comma/plus fillings of (k_1 [] k_2 [] ... [] k_r), where a plus contracts
// the two neighbouring parts, weighted by t^(number of pluses).
IndexCombo t_index(const Index& k);
// Q[t]-linear extension to combinations.
IndexCombo t_index(const IndexCombo& v);

// The coefficient of t^m in t_index(k): fillings with exactly m pluses.
// Zero for m < 0 or m >= depth.
IndexCombo t_coeff(const Index& k, int m);

// The cyclic analogue: fillings of the r cyclic gaps (including the wrap
// gap after k_r) with exactly m pluses, 0 <= m <= depth-1.  Pluses merge
// cyclically adjacent parts into blocks; the block containing k_1 leads and
// the remaining blocks follow in cyclic order.  Multiplicities are kept.
IndexCombo cyclic_index(const Index& k, int m);

// Hoffman dual: write k as a string of 1s with "," and "+" separators,
// swap the two separators, and read the result back.  An involution.
Index hoffman_dual(const Index& k);
IndexCombo hoffman_dual(const IndexCombo& v);

enum class OhnoKind { G1, G2, G };

// Ohno-type sums: G1(k,m) lifts every weak composition e of m onto k;
// G2(k,m) does the same through the Hoffman dual; G = G1 - G2.
IndexCombo ohno_sum(const Index& k, int m, OhnoKind kind);

// phi(k) = (-1)^depth(k) * sum of all refinements of k obtained by
// replacing each part by one of its compositions.  An involution.
IndexCombo phi_index(const Index& k);
IndexCombo phi_index(const IndexCombo& v);

// Shuffle of indices at the level of whole parts: the sum over all
// interleavings of the two part sequences, with multiplicity.
IndexCombo tilde_shuffle(const IndexCombo& u, const IndexCombo& v);

// Data for a Bowman-Bradley element: odd parts a_1..a_l, b_1..b_l and even
// parts c_1..c_m.
struct BBSpec {
  std::vector<int> a, b, c;
  void validate(int max_part = 0) const;  // throws DomainError
  int l() const { return static_cast<int>(a.size()); }
  int m() const { return static_cast<int>(c.size()); }
  int weight() const;
  std::string display() const;  // a=(..),b=(..),c=(..)
};

// B = sum over sigma,tau in S_l of (a_sigma(1), b_tau(1), ..., a_sigma(l),
// b_tau(l)) tilde-shuffled with (c_1), ..., (c_m).
IndexCombo bb_element_base(const BBSpec& spec);
// Its t-interpolation t_index(B); degree in t is at most 2l+m-1.
IndexCombo bb_element(const BBSpec& spec);
// Coefficient of t^n of bb_element.
IndexCombo bb_coeff(const BBSpec& spec, int n);

// S(k, r): the sum of all compositions of k into exactly r parts.
IndexCombo s_element(int k, int r);

enum class WeightedKind { Ft, F, Sprime, G1prime, G2prime, H };

// The weighted-sum elements.  Ft(k,r) = sum over compositions k_1+...+k_r=k
// of 2^(k_r - 1) * t_index(k_1,...,k_r); F = its t^n coefficient;
// Sprime(k,r,n) = -C(k-r+n, n) * S(k, r-n);
// G1prime/G2prime(k,r,n) = -sum_{m=0}^{k-r-1} 2^(k-r-m-1) C(m+n, n) *
//   ohno_sum(({1}^{r-n-1}, k-r-m+1), m+n, G1/G2);
// H = F + Sprime + G1prime - G2prime.  `n` is ignored for Ft.
IndexCombo weighted_elements(int k, int r, int n, WeightedKind kind);

// The cyclic-sum combination: for non-empty k not of the form {1}^r,
//   sum_{l,j} t_index(j, k_{l+1},...,k_{l-1}, k_l+1-j)
//   - (1-t) * sum_l [t_index(k_{l+1},...,k_{l-1}, k_l+1)
//                    + t_index(k_{l+1}+1, k_{l+2},...,k_l)]
//   - sum_l t_index(1, k_{l+1},...,k_l),
// an element of the index algebra over Q[t] whose t^m coefficient equals the
// same combination built from cyclic_index(k, m) at t = 0.
IndexCombo cyclic_relation(const Index& k);

// Sum over all depth! arrangements of the parts of k, with multiplicity.
IndexCombo symmetric_sum_element(const Index& k);

// Every non-empty index of weight <= max_weight and depth <= max_depth,
// ordered by weight, then depth, then lexicographically.
std::vector<Index> all_indices(int max_weight, int max_depth);

}  // namespace fmzv
