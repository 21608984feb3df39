#include "fmzv/word_ops.hpp"

#include <vector>

#include "fmzv/errors.hpp"

namespace fmzv {

namespace {

IndexCombo prepended(int part, const IndexCombo& rest) {
  IndexCombo out;
  for (const auto& [k, c] : rest.terms()) {
    std::vector<int> parts;
    parts.reserve(k.depth() + 1);
    parts.push_back(part);
    parts.insert(parts.end(), k.parts().begin(), k.parts().end());
    out.add(Index(std::move(parts)), c);
  }
  return out;
}

IndexCombo add_to_first(int amount, const IndexCombo& rest) {
  IndexCombo out;
  for (const auto& [k, c] : rest.terms()) {
    std::vector<int> parts = k.parts();
    parts.front() += amount;
    out.add(Index(std::move(parts)), c);
  }
  return out;
}

IndexCombo stuffle_parts(const std::vector<int>& u, size_t i,
                         const std::vector<int>& v, size_t j) {
  if (i == u.size() && j == v.size()) return IndexCombo::unit();
  IndexCombo out;
  if (i < u.size()) out += prepended(u[i], stuffle_parts(u, i + 1, v, j));
  if (j < v.size()) out += prepended(v[j], stuffle_parts(u, i, v, j + 1));
  if (i < u.size() && j < v.size())
    out += prepended(u[i] + v[j], stuffle_parts(u, i + 1, v, j + 1));
  return out;
}

IndexCombo t_stuffle_parts(const std::vector<int>& u, size_t i,
                           const std::vector<int>& v, size_t j) {
  if (i == u.size() && j == v.size()) return IndexCombo::unit();
  IndexCombo out;
  if (i < u.size()) out += prepended(u[i], t_stuffle_parts(u, i + 1, v, j));
  if (j < v.size()) out += prepended(v[j], t_stuffle_parts(u, i, v, j + 1));
  if (i < u.size() && j < v.size()) {
    const IndexCombo rest = t_stuffle_parts(u, i + 1, v, j + 1);
    const TPoly one_minus_2t = TPoly(1) - TPoly::monomial(1, Rational(2));
    out += prepended(u[i] + v[j], rest).scaled(one_minus_2t);
    if (i + 1 < u.size() || j + 1 < v.size()) {
      const TPoly t2_minus_t = TPoly::monomial(2, Rational(1)) - TPoly::t();
      out += add_to_first(u[i] + v[j], rest).scaled(t2_minus_t);
    }
  }
  return out;
}

WordCombo prepend_letter(char c, const WordCombo& rest) {
  WordCombo out;
  for (const auto& [w, d] : rest.terms()) out.add(w.prepended(c), d);
  return out;
}

WordCombo shuffle_letters(const Word& u, int i, const Word& v, int j) {
  if (i == u.size() && j == v.size()) return WordCombo::unit();
  WordCombo out;
  if (i < u.size())
    out += prepend_letter(u.at(i), shuffle_letters(u, i + 1, v, j));
  if (j < v.size())
    out += prepend_letter(v.at(j), shuffle_letters(u, i, v, j + 1));
  return out;
}

// Head rule with boundary corrections: with u = a u', v = b v',
//   u sh v = a(u' sh v) + b(u sh v') - [u' empty] rho(a) v - [v' empty] rho(b) u,
// where rho(x) = 0 and rho(y) = t*y.
WordCombo t_shuffle_letters(const Word& u, int i, const Word& v, int j) {
  if (i == u.size()) return WordCombo::of(v.suffix(j));
  if (j == v.size()) return WordCombo::of(u.suffix(i));
  WordCombo out;
  out += prepend_letter(u.at(i), t_shuffle_letters(u, i + 1, v, j));
  out += prepend_letter(v.at(j), t_shuffle_letters(u, i, v, j + 1));
  if (i + 1 == u.size() && u.at(i) == 'y')
    out -= WordCombo::of(v.suffix(j).prepended('y'), TPoly::t());
  if (j + 1 == v.size() && v.at(j) == 'y')
    out -= WordCombo::of(u.suffix(i).prepended('y'), TPoly::t());
  return out;
}

WordCombo sigma_word(const Word& w, const TPoly& c) {
  WordCombo out = WordCombo::unit();
  const WordCombo x = WordCombo::of(Word("x"));
  const WordCombo y_image = WordCombo::of(Word("x"), c) + WordCombo::of(Word("y"));
  for (int i = 0; i < w.size(); ++i)
    out = out.concat(w.at(i) == 'x' ? x : y_image);
  return out;
}

WordCombo deriv_letter_image(int l, char c) {
  WordCombo img = WordCombo::of(Word("y"));
  const WordCombo x_plus_y = WordCombo::of(Word("x")) + WordCombo::of(Word("y"));
  for (int i = 0; i < l - 1; ++i) img = img.concat(x_plus_y);
  img = img.concat(WordCombo::of(Word("x")));
  return c == 'x' ? img : -img;
}

}  // namespace

IndexCombo harmonic(const IndexCombo& u, const IndexCombo& v) {
  IndexCombo out;
  for (const auto& [ku, cu] : u.terms())
    for (const auto& [kv, cv] : v.terms())
      out += stuffle_parts(ku.parts(), 0, kv.parts(), 0).scaled(cu * cv);
  return out;
}

WordCombo harmonic(const WordCombo& u, const WordCombo& v) {
  return to_word(harmonic(to_index(u), to_index(v)));
}

WordCombo shuffle(const WordCombo& u, const WordCombo& v) {
  WordCombo out;
  for (const auto& [wu, cu] : u.terms())
    for (const auto& [wv, cv] : v.terms())
      out += shuffle_letters(wu, 0, wv, 0).scaled(cu * cv);
  return out;
}

WordCombo sigma_sub(const WordCombo& v, const TPoly& c) {
  return v.mapped([&c](const Word& w) { return sigma_word(w, c); });
}

WordCombo s_transform(const WordCombo& v, bool inverse) {
  const TPoly c = inverse ? TPoly::monomial(1, Rational(-1)) : TPoly::t();
  return v.mapped([&c](const Word& w) {
    if (w.empty()) return WordCombo::unit();
    if (w.front() != 'y')
      throw DomainError("s_transform requires words in H1, got " +
                        w.display());
    return prepend_letter('y', sigma_word(w.suffix(1), c));
  });
}

WordCombo t_harmonic(const WordCombo& u, const WordCombo& v) {
  return s_transform(harmonic(s_transform(u), s_transform(v)), true);
}

IndexCombo t_harmonic(const IndexCombo& u, const IndexCombo& v) {
  return to_index(t_harmonic(to_word(u), to_word(v)));
}

WordCombo t_shuffle(const WordCombo& u, const WordCombo& v) {
  return s_transform(shuffle(s_transform(u), s_transform(v)), true);
}

IndexCombo t_harmonic_recursive(const IndexCombo& u, const IndexCombo& v) {
  IndexCombo out;
  for (const auto& [ku, cu] : u.terms())
    for (const auto& [kv, cv] : v.terms())
      out += t_stuffle_parts(ku.parts(), 0, kv.parts(), 0).scaled(cu * cv);
  return out;
}

WordCombo t_shuffle_recursive(const WordCombo& u, const WordCombo& v) {
  WordCombo out;
  for (const auto& [wu, cu] : u.terms())
    for (const auto& [wv, cv] : v.terms())
      out += t_shuffle_letters(wu, 0, wv, 0).scaled(cu * cv);
  return out;
}

WordCombo nu_map(const WordCombo& v) {
  return v.mapped([](const Word& w) {
    const Index k = to_index(w);
    const Rational sign(k.weight() % 2 == 0 ? 1 : -1);
    return WordCombo::of(to_word(k.reversed()), TPoly(sign));
  });
}

WordCombo phi_word(const WordCombo& v) {
  const WordCombo x_image =
      WordCombo::of(Word("x")) + WordCombo::of(Word("y"));
  const WordCombo y_image = WordCombo::of(Word("y"), TPoly(-1));
  return v.mapped([&](const Word& w) {
    WordCombo out = WordCombo::unit();
    for (int i = 0; i < w.size(); ++i)
      out = out.concat(w.at(i) == 'x' ? x_image : y_image);
    return out;
  });
}

WordCombo phi_t(const WordCombo& v) {
  return -s_transform(phi_word(s_transform(v)), true);
}

WordCombo alpha_tilde(const WordCombo& v) {
  return v.mapped([](const Word& w) {
    if (w.empty() || w.front() != 'y')
      throw DomainError("alpha_tilde requires words in yH, got " +
                        w.display());
    std::string swapped = w.letters();
    for (size_t i = 1; i < swapped.size(); ++i)
      swapped[i] = swapped[i] == 'x' ? 'y' : 'x';
    return WordCombo::of(Word(std::move(swapped)));
  });
}

WordCombo derivation(const WordCombo& v, int l, bool twisted) {
  if (l < 1) throw DomainError("derivation requires l >= 1");
  if (twisted) return s_transform(derivation(s_transform(v), l), true);
  return v.mapped([l](const Word& w) {
    WordCombo out;
    for (int i = 0; i < w.size(); ++i)
      out += WordCombo::of(w.prefix(i))
                 .concat(deriv_letter_image(l, w.at(i)))
                 .concat(WordCombo::of(w.suffix(i + 1)));
    return out;
  });
}

WordCombo prepend_y(const WordCombo& v) {
  return v.mapped(
      [](const Word& w) { return WordCombo::of(w.prepended('y')); });
}

WordCombo strip_leading_y(const WordCombo& v) {
  return v.mapped([](const Word& w) {
    if (w.empty() || w.front() != 'y')
      throw DomainError("strip_leading_y requires words in yH, got " +
                        w.display());
    return WordCombo::of(w.suffix(1));
  });
}

WordCombo strip_trailing_x(const WordCombo& v) {
  return v.mapped([](const Word& w) {
    if (w.empty() || w.back() != 'x')
      throw DomainError("strip_trailing_x requires words in Hx, got " +
                        w.display());
    return WordCombo::of(w.prefix(w.size() - 1));
  });
}

}  // namespace fmzv
