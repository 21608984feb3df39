#pragma once

#include <string>
#include <vector>

#include "fmzv/fp_eval.hpp"
#include "fmzv/index.hpp"

namespace fmzv {

enum class TheoremKind { symbolic, numeric, per_prime_exact };

std::string kind_name(TheoremKind k);

struct TheoremDescriptor {
  std::string id;
  TheoremKind kind;
  std::string statement;
};

// All verifiable statements, in the order "all" expands to.
const std::vector<TheoremDescriptor>& registry();
// nullptr when the id is unknown.
const TheoremDescriptor* find_theorem(const std::string& id);

// Enumeration bounds for instance generation.  The sym_* fields only affect
// the symbolic (exact polynomial identity) checks.
struct Bounds {
  int max_weight = 8;
  int max_depth = 5;
  int pair_weight = 6;        // total weight of product-identity operand pairs
  int word_weight = 7;        // weight cap for word-algebra numeric checks
  int deriv_max_order = 3;
  int bb_lm = 4;              // cap on 2l+m for symmetrized odd/even families
  int bb_parts = 5;           // largest part allowed in those families
  int sym_cyclic_weight = 7;
  int sym_section4_weight = 9;
  int sym_word_weight = 7;
  int sym_pair_weight = 6;
};

// Named access used by the shared-library API; kebab-case names matching the
// field list above ("max-weight", ...).  Returns false for an unknown name.
bool set_bound(Bounds& b, const std::string& name, int value);

// One concrete statement to check: the theorem id, a printable parameter
// string, and the raw parameters (indices and scalars) the builder needs.
struct Instance {
  std::string theorem;
  std::string params;
  std::vector<Index> idx;
  std::vector<int> num;
};

// Deterministic instance list for one theorem id under the given bounds.
// Throws DomainError for an unknown id.
std::vector<Instance> instances(const std::string& id, const Bounds& b);

// --- numeric checks -------------------------------------------------------
//
// A numeric check is a sum of terms, each a Q[t]-coefficient times a product
// of evaluated factors, optionally times a Bernoulli single-zeta value; the
// whole sum must reduce to the zero polynomial mod p.

struct NumericFactor {
  IndexCombo combo;
  bool plain = false;      // evaluate keys with the strict sum instead of the
                           // interpolated one
  bool has_subst = false;  // substitute t -> subst_a + subst_b * t afterwards
  long subst_a = 0;
  long subst_b = 0;
};

struct NumericTerm {
  TPoly coeff = TPoly(1);
  std::vector<NumericFactor> factors;
  int zA_k = 0;  // when > 0, multiply by B_{p-k}/k
};

struct NumericCheck {
  std::vector<NumericTerm> terms;
  int weight = 0;  // drives the prime floor p >= weight + 3 for A-statements
};

NumericCheck build_numeric(const Instance& inst);
FpPoly eval_numeric(const NumericCheck& chk, const PrimeCtx& ctx,
                    EvalCache* cache);

// --- symbolic checks ------------------------------------------------------

struct SymbolicResult {
  bool pass = false;
  std::string residual;  // difference when failing; may carry a note on pass
};

SymbolicResult check_symbolic(const Instance& inst);

}  // namespace fmzv
