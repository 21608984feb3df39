#include "fmzv/index.hpp"

#include <algorithm>
#include <numeric>

#include "fmzv/errors.hpp"

namespace fmzv {

Index::Index(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 1)
      throw DomainError("index parts must be positive, got " +
                        std::to_string(p));
}

Index Index::parse(std::string_view text) {
  std::vector<int> parts;
  if (text.empty()) return Index{};
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos
                                             : comma - pos);
    if (tok.empty()) throw ParseError("empty index part in \"" + std::string(text) + "\"");
    long v = 0;
    for (char ch : tok) {
      if (ch < '0' || ch > '9')
        throw ParseError("invalid index part \"" + std::string(tok) + "\"");
      v = v * 10 + (ch - '0');
      if (v > 1000000) throw ParseError("index part out of range");
    }
    if (v < 1) throw ParseError("index parts must be positive");
    parts.push_back(static_cast<int>(v));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
    if (pos == text.size()) throw ParseError("trailing comma in index");
  }
  return Index(std::move(parts));
}

int Index::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Index::all_ones() const {
  return !parts_.empty() &&
         std::all_of(parts_.begin(), parts_.end(), [](int p) { return p == 1; });
}

Index Index::appended(int part) const {
  Index r = *this;
  if (part < 1) throw DomainError("index parts must be positive");
  r.parts_.push_back(part);
  return r;
}

Index Index::concat(const Index& o) const {
  Index r = *this;
  r.parts_.insert(r.parts_.end(), o.parts_.begin(), o.parts_.end());
  return r;
}

Index Index::reversed() const {
  Index r = *this;
  std::reverse(r.parts_.begin(), r.parts_.end());
  return r;
}

std::string Index::to_string() const {
  std::string s;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

std::string Index::display() const { return "(" + to_string() + ")"; }

IndexCombo IndexCombo::unit() { return of(Index{}); }

IndexCombo IndexCombo::of(const Index& k, const TPoly& c) {
  IndexCombo v;
  v.add(k, c);
  return v;
}

void IndexCombo::add(const Index& k, const TPoly& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

TPoly IndexCombo::coeff_of(const Index& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? TPoly() : it->second;
}

IndexCombo IndexCombo::operator-() const {
  IndexCombo r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

IndexCombo& IndexCombo::operator+=(const IndexCombo& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

IndexCombo& IndexCombo::operator-=(const IndexCombo& o) {
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

IndexCombo IndexCombo::scaled(const TPoly& c) const {
  IndexCombo r;
  if (c.is_zero()) return r;
  for (const auto& [k, tc] : terms_) r.terms_.emplace(k, tc * c);
  return r;
}

IndexCombo IndexCombo::concat(const IndexCombo& o) const {
  IndexCombo r;
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_) r.add(k1.concat(k2), c1 * c2);
  return r;
}

IndexCombo IndexCombo::coeff_at(int n) const {
  IndexCombo r;
  for (const auto& [k, c] : terms_) r.add(k, TPoly(c.coeff(n)));
  return r;
}

int IndexCombo::t_degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, c.degree());
  return d;
}

IndexCombo IndexCombo::mapped(
    const std::function<IndexCombo(const Index&)>& f) const {
  IndexCombo r;
  for (const auto& [k, c] : terms_) r += f(k).scaled(c);
  return r;
}

int IndexCombo::max_weight() const {
  int w = 0;
  for (const auto& [k, c] : terms_) w = std::max(w, k.weight());
  return w;
}

std::string IndexCombo::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")" + k.display();
  }
  return s;
}

}  // namespace fmzv
