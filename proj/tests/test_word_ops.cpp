#include "doctest.h"
#include "fmzv/errors.hpp"
#include "fmzv/index_ops.hpp"
#include "fmzv/word.hpp"
#include "fmzv/word_ops.hpp"

using namespace fmzv;

namespace {

Word w(const char* letters) { return Word(letters); }

WordCombo wc(std::initializer_list<std::pair<const char*, TPoly>> terms) {
  WordCombo out;
  for (const auto& [letters, c] : terms) out.add(Word(letters), c);
  return out;
}

WordCombo word_of(const char* csv) {
  return to_word(IndexCombo::of(Index::parse(csv)));
}

}  // namespace

TEST_CASE("words and index conversion") {
  CHECK(Word::z(3) == w("yxx"));
  CHECK(w("yx").concat(w("y")) == w("yxy"));
  CHECK_THROWS_AS(Word("ab"), DomainError);
  CHECK(to_index(w("yxyxx")) == Index::parse("2,3"));
  CHECK(to_word(Index::parse("2,3")) == w("yxyxx"));
  CHECK(to_index(to_word(IndexCombo::of(Index::parse("1,1,2")))) ==
        IndexCombo::of(Index::parse("1,1,2")));
  CHECK(w("yxy").suffix(1) == w("xy"));
  CHECK(w("yxy").prefix(2) == w("yx"));
  CHECK(w("").display() == "1");
}

TEST_CASE("harmonic product") {
  // z1 * z1z1 = 3 z1z1z1 + z2z1 + z1z2
  CHECK(harmonic(word_of("1"), word_of("1,1")) ==
        wc({{"yyy", TPoly(3)}, {"yxy", TPoly(1)}, {"yyx", TPoly(1)}}));
  CHECK(harmonic(IndexCombo::of(Index::parse("1")),
                 IndexCombo::of(Index::parse("2"))) ==
        harmonic(IndexCombo::of(Index::parse("2")),
                 IndexCombo::of(Index::parse("1"))));
  CHECK(harmonic(WordCombo::unit(), word_of("2")) == word_of("2"));
}

TEST_CASE("shuffle product") {
  CHECK(shuffle(WordCombo::of(w("y")), WordCombo::of(w("yx"))) ==
        wc({{"yyx", TPoly(2)}, {"yxy", TPoly(1)}}));
  CHECK(shuffle(WordCombo::of(w("x")), WordCombo::of(w("y"))) ==
        wc({{"xy", TPoly(1)}, {"yx", TPoly(1)}}));
  CHECK(shuffle(WordCombo::unit(), WordCombo::of(w("xy"))) ==
        WordCombo::of(w("xy")));
}

TEST_CASE("interpolation transform") {
  CHECK(sigma_sub(WordCombo::of(w("yx")), TPoly::t()) ==
        wc({{"xx", TPoly::t()}, {"yx", TPoly(1)}}));
  // S(z1 z1) = z1z1 + t z2, S(z2) = z2
  CHECK(s_transform(word_of("1,1")) ==
        wc({{"yy", TPoly(1)}, {"yx", TPoly::t()}}));
  CHECK(s_transform(word_of("2")) == word_of("2"));
  for (const auto& k : all_indices(5, 5)) {
    WordCombo v = to_word(IndexCombo::of(k));
    CHECK(s_transform(s_transform(v), /*inverse=*/true) == v);
  }
}

TEST_CASE("t-harmonic product") {
  // z1 *_t z1 = 2 z1z1 + (1 - 2t) z2
  CHECK(t_harmonic(word_of("1"), word_of("1")) ==
        wc({{"yy", TPoly(2)}, {"yx", TPoly(1) - TPoly(2) * TPoly::t()}}));
  // z1 *_t z1z1 = 3 z1^3 + (1-2t)(z1z2 + z2z1) + (t^2 - t) z3
  TPoly t = TPoly::t();
  CHECK(t_harmonic(word_of("1"), word_of("1,1")) ==
        wc({{"yyy", TPoly(3)},
            {"yyx", TPoly(1) - TPoly(2) * t},
            {"yxy", TPoly(1) - TPoly(2) * t},
            {"yxx", t * t - t}}));
  // the head-rule form agrees with the transported product
  for (const auto& u : all_indices(3, 3))
    for (const auto& v : all_indices(3, 3)) {
      IndexCombo cu = IndexCombo::of(u), cv = IndexCombo::of(v);
      CHECK(t_harmonic_recursive(cu, cv) == t_harmonic(cu, cv));
    }
}

TEST_CASE("t-shuffle products") {
  TPoly t = TPoly::t();
  // transported: y sh_t y = 2yy - 2t yx
  CHECK(t_shuffle(word_of("1"), word_of("1")) ==
        wc({{"yy", TPoly(2)}, {"yx", TPoly(-2) * t}}));
  // transported: y sh_t yx = 2yyx + yxy - 3t yxx
  CHECK(t_shuffle(word_of("1"), word_of("2")) ==
        wc({{"yyx", TPoly(2)}, {"yxy", TPoly(1)}, {"yxx", TPoly(-3) * t}}));
  // letter-level deformation: a genuinely different product
  CHECK(t_shuffle_recursive(word_of("1"), word_of("1")) ==
        wc({{"yy", TPoly(2) - TPoly(2) * t}}));
  CHECK(t_shuffle_recursive(word_of("1"), word_of("2")) ==
        wc({{"yyx", TPoly(2) - TPoly(2) * t}, {"yxy", TPoly(1)}}));
  CHECK(t_shuffle_recursive(word_of("2"), word_of("1")) ==
        t_shuffle_recursive(word_of("1"), word_of("2")));
  // both reduce to the plain shuffle at t = 0
  auto at0 = [](const WordCombo& v) {
    WordCombo out;
    for (const auto& [word, c] : v.terms())
      out.add(word, TPoly(c.eval(Rational(0))));
    return out;
  };
  for (const auto& u : all_indices(3, 3))
    for (const auto& v : all_indices(2, 2)) {
      WordCombo wu = to_word(IndexCombo::of(u));
      WordCombo wv = to_word(IndexCombo::of(v));
      CHECK(at0(t_shuffle(wu, wv)) == shuffle(wu, wv));
      CHECK(at0(t_shuffle_recursive(wu, wv)) == shuffle(wu, wv));
    }
  // the transform is multiplicative over the transported product
  WordCombo wu = word_of("1"), wv = word_of("2");
  CHECK(s_transform(t_shuffle(wu, wv)) ==
        shuffle(s_transform(wu), s_transform(wv)));
}

TEST_CASE("signed reversal") {
  CHECK(nu_map(word_of("2")) == word_of("2"));
  CHECK(nu_map(word_of("1,2")) == wc({{"yxy", TPoly(-1)}}));
  CHECK(nu_map(word_of("3")) == wc({{"yxx", TPoly(-1)}}));
  for (const auto& k : all_indices(5, 5)) {
    WordCombo v = to_word(IndexCombo::of(k));
    CHECK(nu_map(nu_map(v)) == v);
  }
}

TEST_CASE("duality maps") {
  CHECK(phi_word(word_of("2")) ==
        wc({{"yx", TPoly(-1)}, {"yy", TPoly(-1)}}));
  CHECK(phi_t(word_of("2")) ==
        wc({{"yy", TPoly(1)}, {"yx", TPoly::one_minus_t()}}));
  CHECK(phi_t(word_of("1")) == word_of("1"));
  for (const auto& k : all_indices(4, 4)) {
    WordCombo v = to_word(IndexCombo::of(k));
    CHECK(phi_word(phi_word(v)) == v);
    CHECK(phi_t(phi_t(v)) == v);
  }
  // alpha realizes the Hoffman dual at word level
  for (const auto& k : all_indices(5, 5))
    CHECK(to_index(alpha_tilde(to_word(IndexCombo::of(k)))) ==
          IndexCombo::of(hoffman_dual(k)));
}

TEST_CASE("derivations") {
  // d_1(z2) = z1z2 - z3
  CHECK(derivation(word_of("2"), 1) ==
        wc({{"yyx", TPoly(1)}, {"yxx", TPoly(-1)}}));
  // twisted: d_1^t(z2) = z1z2 - (1+t) z3
  CHECK(derivation(word_of("2"), 1, /*twisted=*/true) ==
        wc({{"yyx", TPoly(1)}, {"yxx", -(TPoly(1) + TPoly::t())}}));
  // twisted order two on z1: -(1-t) z3 - z1z2
  CHECK(derivation(word_of("1"), 2, /*twisted=*/true) ==
        wc({{"yxx", -TPoly::one_minus_t()}, {"yyx", TPoly(-1)}}));
}

TEST_CASE("affix operators") {
  CHECK(prepend_y(WordCombo::of(w("xy"))) == WordCombo::of(w("yxy")));
  CHECK(strip_leading_y(WordCombo::of(w("yxy"))) == WordCombo::of(w("xy")));
  CHECK(strip_trailing_x(WordCombo::of(w("yxx"))) == WordCombo::of(w("yx")));
  CHECK(strip_leading_y(prepend_y(word_of("2,1"))) == word_of("2,1"));
}

TEST_CASE("transform commutes with signed reversal") {
  WordCombo v = word_of("1,2");
  WordCombo lhs = s_transform(nu_map(v));
  WordCombo rhs = nu_map(s_transform(v));
  CHECK(lhs == rhs);
  CHECK(lhs == wc({{"yxx", -TPoly::t()}, {"yxy", TPoly(-1)}}));
}
