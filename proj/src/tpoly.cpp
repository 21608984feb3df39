#include "fmzv/tpoly.hpp"

namespace fmzv {

TPoly::TPoly(const Rational& c) {
  if (!c.is_zero()) c_.push_back(c);
}

TPoly TPoly::t() { return monomial(1, Rational(1)); }

TPoly TPoly::monomial(int degree, const Rational& c) {
  TPoly p;
  if (c.is_zero()) return p;
  p.c_.assign(degree + 1, Rational(0));
  p.c_[degree] = c;
  return p;
}

TPoly TPoly::one_minus_t() {
  TPoly p;
  p.c_ = {Rational(1), Rational(-1)};
  return p;
}

Rational TPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
  return c_[i];
}

void TPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

TPoly TPoly::operator-() const {
  TPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

TPoly& TPoly::operator+=(const TPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
  TPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  r.trim();
  return r;
}

TPoly TPoly::scaled(const Rational& c) const {
  TPoly r;
  if (c.is_zero()) return r;
  r.c_ = c_;
  for (auto& x : r.c_) x *= c;
  return r;
}

Rational TPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

TPoly TPoly::subst_affine(const Rational& a, const Rational& b) const {
  TPoly lin;
  lin.c_ = {a, b};
  lin.trim();
  TPoly acc;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * lin + TPoly(c_[i]);
  return acc;
}

std::vector<std::string> TPoly::coeff_strings() const {
  std::vector<std::string> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(c.to_string());
  return out;
}

std::string TPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    const bool neg = c_[i] < Rational(0);
    Rational mag = neg ? -c_[i] : c_[i];
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    const bool show_coeff = i == 0 || !(mag == Rational(1));
    if (show_coeff) s += mag.to_string();
    if (i >= 1) {
      if (show_coeff) s += "*";
      s += "t";
      if (i >= 2) s += "^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

}  // namespace fmzv
