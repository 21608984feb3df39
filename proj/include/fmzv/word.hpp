#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>

#include "fmzv/index.hpp"
#include "fmzv/tpoly.hpp"

namespace fmzv {

// A monomial in the non-commutative letters x and y.  The empty word is the
// unit.  Weight = number of letters.
class Word {
 public:
  Word() = default;
  explicit Word(std::string letters);  // throws DomainError on other letters

  // z(k) = y x^(k-1), the word of the single-part index (k).
  static Word z(int k);

  bool empty() const { return letters_.empty(); }
  int size() const { return static_cast<int>(letters_.size()); }
  char at(int i) const { return letters_[i]; }
  char front() const { return letters_.front(); }
  char back() const { return letters_.back(); }
  const std::string& letters() const { return letters_; }

  Word prepended(char c) const;
  Word appended(char c) const;
  Word concat(const Word& o) const;
  Word suffix(int from) const;  // letters from position `from` on
  Word prefix(int count) const;

  std::string display() const;  // "yxy" ("1" for the unit)

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::string letters_;
};

// A finite Q[t]-linear combination of words, kept canonical: no term has a
// zero coefficient.
class WordCombo {
 public:
  WordCombo() = default;
  static WordCombo zero() { return {}; }
  static WordCombo unit();  // the empty word with coefficient 1
  static WordCombo of(const Word& w, const TPoly& c = TPoly(1));

  void add(const Word& w, const TPoly& c);
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const std::map<Word, TPoly>& terms() const { return terms_; }
  TPoly coeff_of(const Word& w) const;

  WordCombo operator-() const;
  WordCombo& operator+=(const WordCombo& o);
  WordCombo& operator-=(const WordCombo& o);
  friend WordCombo operator+(WordCombo a, const WordCombo& b) { return a += b; }
  friend WordCombo operator-(WordCombo a, const WordCombo& b) { return a -= b; }

  WordCombo scaled(const TPoly& c) const;
  WordCombo scaled(const Rational& c) const { return scaled(TPoly(c)); }

  // Bilinear concatenation product.
  WordCombo concat(const WordCombo& o) const;

  // Q[t]-linear extension of a map on words.
  WordCombo mapped(const std::function<WordCombo(const Word&)>& f) const;

  int max_weight() const;

  friend bool operator==(const WordCombo&, const WordCombo&) = default;

  std::string to_string() const;

 private:
  std::map<Word, TPoly> terms_;
};

// Membership tests for the standard subalgebras: H1 admits constants and
// words starting with y; H0 additionally requires a trailing x; yHx admits
// no constant term at all.
bool in_H1(const WordCombo& v);
bool in_H0(const WordCombo& v);
bool in_yHx(const WordCombo& v);

// Index <-> word conversion: (k_1, ..., k_r) <-> z(k_1) ... z(k_r).
Word to_word(const Index& k);
WordCombo to_word(const IndexCombo& v);
// Throws DomainError (naming the word) when a word starts with x.
Index to_index(const Word& w);
IndexCombo to_index(const WordCombo& v);

}  // namespace fmzv
