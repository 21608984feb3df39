#include "fmzv/word.hpp"

#include <sstream>

#include "fmzv/errors.hpp"

namespace fmzv {

Word::Word(std::string letters) : letters_(std::move(letters)) {
  for (char c : letters_)
    if (c != 'x' && c != 'y')
      throw DomainError("word letters must be x or y, got '" +
                        std::string(1, c) + "'");
}

Word Word::z(int k) {
  if (k < 1) throw DomainError("z(k) requires k >= 1");
  std::string s(static_cast<size_t>(k), 'x');
  s[0] = 'y';
  Word w;
  w.letters_ = std::move(s);
  return w;
}

Word Word::prepended(char c) const {
  Word w;
  w.letters_.reserve(letters_.size() + 1);
  w.letters_.push_back(c);
  w.letters_ += letters_;
  return w;
}

Word Word::appended(char c) const {
  Word w;
  w.letters_ = letters_;
  w.letters_.push_back(c);
  return w;
}

Word Word::concat(const Word& o) const {
  Word w;
  w.letters_ = letters_ + o.letters_;
  return w;
}

Word Word::suffix(int from) const {
  Word w;
  w.letters_ = letters_.substr(static_cast<size_t>(from));
  return w;
}

Word Word::prefix(int count) const {
  Word w;
  w.letters_ = letters_.substr(0, static_cast<size_t>(count));
  return w;
}

std::string Word::display() const { return empty() ? "1" : letters_; }

WordCombo WordCombo::unit() { return of(Word{}); }

WordCombo WordCombo::of(const Word& w, const TPoly& c) {
  WordCombo v;
  v.add(w, c);
  return v;
}

void WordCombo::add(const Word& w, const TPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TPoly WordCombo::coeff_of(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? TPoly{} : it->second;
}

WordCombo WordCombo::operator-() const {
  WordCombo v;
  for (const auto& [w, c] : terms_) v.terms_.emplace(w, -c);
  return v;
}

WordCombo& WordCombo::operator+=(const WordCombo& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

WordCombo& WordCombo::operator-=(const WordCombo& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

WordCombo WordCombo::scaled(const TPoly& c) const {
  WordCombo v;
  for (const auto& [w, d] : terms_) v.add(w, d * c);
  return v;
}

WordCombo WordCombo::concat(const WordCombo& o) const {
  WordCombo v;
  for (const auto& [w1, c1] : terms_)
    for (const auto& [w2, c2] : o.terms_) v.add(w1.concat(w2), c1 * c2);
  return v;
}

WordCombo WordCombo::mapped(
    const std::function<WordCombo(const Word&)>& f) const {
  WordCombo v;
  for (const auto& [w, c] : terms_) v += f(w).scaled(c);
  return v;
}

int WordCombo::max_weight() const {
  int m = 0;
  for (const auto& [w, c] : terms_) m = std::max(m, w.size());
  return m;
}

std::string WordCombo::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    os << "(" << c.to_string() << ")*" << w.display();
    first = false;
  }
  return os.str();
}

bool in_H1(const WordCombo& v) {
  for (const auto& [w, c] : v.terms())
    if (!w.empty() && w.front() != 'y') return false;
  return true;
}

bool in_H0(const WordCombo& v) {
  for (const auto& [w, c] : v.terms())
    if (!w.empty() && (w.front() != 'y' || w.back() != 'x')) return false;
  return true;
}

bool in_yHx(const WordCombo& v) {
  for (const auto& [w, c] : v.terms())
    if (w.empty() || w.front() != 'y' || w.back() != 'x') return false;
  return true;
}

Word to_word(const Index& k) {
  Word w;
  for (int i = 0; i < k.depth(); ++i) w = w.concat(Word::z(k.part(i)));
  return w;
}

WordCombo to_word(const IndexCombo& v) {
  WordCombo out;
  for (const auto& [k, c] : v.terms()) out.add(to_word(k), c);
  return out;
}

Index to_index(const Word& w) {
  if (w.empty()) return Index{};
  if (w.front() != 'y')
    throw DomainError("word " + w.display() +
                      " starts with x and has no index form");
  std::vector<int> parts;
  int run = 0;
  for (int i = 0; i < w.size(); ++i) {
    if (w.at(i) == 'y') {
      if (run > 0) parts.push_back(run);
      run = 1;
    } else {
      ++run;
    }
  }
  parts.push_back(run);
  return Index(std::move(parts));
}

IndexCombo to_index(const WordCombo& v) {
  IndexCombo out;
  for (const auto& [w, c] : v.terms()) out.add(to_index(w), c);
  return out;
}

}  // namespace fmzv
