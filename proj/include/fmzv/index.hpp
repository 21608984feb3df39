#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fmzv/tpoly.hpp"

namespace fmzv {

// A multiple zeta index: a finite (possibly empty) sequence of positive
// integers.  The empty index acts as the unit of the index algebra.
class Index {
 public:
  Index() = default;
  explicit Index(std::vector<int> parts);  // throws DomainError on parts < 1

  // Accepts "1,2,3"; the empty string denotes the empty index.
  static Index parse(std::string_view text);

  bool empty() const { return parts_.empty(); }
  int depth() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  bool all_ones() const;
  int part(int i) const { return parts_[i]; }  // 0-based
  int last() const { return parts_.back(); }
  const std::vector<int>& parts() const { return parts_; }

  Index appended(int part) const;
  Index concat(const Index& o) const;
  Index reversed() const;

  std::string to_string() const;  // "1,2,3" (empty string for the unit)
  std::string display() const;    // "(1,2,3)" / "()"

  friend bool operator==(const Index&, const Index&) = default;
  friend auto operator<=>(const Index&, const Index&) = default;

 private:
  std::vector<int> parts_;
};

// A finite Q[t]-linear combination of indices, kept canonical: no term has a
// zero coefficient, and terms are ordered lexicographically by index.
class IndexCombo {
 public:
  IndexCombo() = default;
  static IndexCombo zero() { return {}; }
  static IndexCombo unit();  // the empty index with coefficient 1
  static IndexCombo of(const Index& k, const TPoly& c = TPoly(1));

  void add(const Index& k, const TPoly& c);
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const std::map<Index, TPoly>& terms() const { return terms_; }
  TPoly coeff_of(const Index& k) const;

  IndexCombo operator-() const;
  IndexCombo& operator+=(const IndexCombo& o);
  IndexCombo& operator-=(const IndexCombo& o);
  friend IndexCombo operator+(IndexCombo a, const IndexCombo& b) { return a += b; }
  friend IndexCombo operator-(IndexCombo a, const IndexCombo& b) { return a -= b; }

  IndexCombo scaled(const TPoly& c) const;
  IndexCombo scaled(const Rational& c) const { return scaled(TPoly(c)); }

  // Bilinear concatenation product.
  IndexCombo concat(const IndexCombo& o) const;

  // The combination of t^n-coefficients: sum_k coeff(c_k, n) * k.
  IndexCombo coeff_at(int n) const;
  // Largest degree in t over all coefficients.
  int t_degree() const;

  // Q[t]-linear extension of a map on indices.
  IndexCombo mapped(const std::function<IndexCombo(const Index&)>& f) const;

  int max_weight() const;

  friend bool operator==(const IndexCombo&, const IndexCombo&) = default;

  std::string to_string() const;

 private:
  std::map<Index, TPoly> terms_;
};

}  // namespace fmzv
