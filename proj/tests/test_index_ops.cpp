#include <vector>

#include "doctest.h"
#include "fmzv/errors.hpp"
#include "fmzv/index.hpp"
#include "fmzv/index_ops.hpp"

using namespace fmzv;

namespace {

Index ix(const char* csv) { return Index::parse(csv); }

IndexCombo combo(std::initializer_list<std::pair<const char*, TPoly>> terms) {
  IndexCombo out;
  for (const auto& [csv, c] : terms) out.add(ix(csv), c);
  return out;
}

}  // namespace

TEST_CASE("index parsing and printing") {
  CHECK(ix("1,2").parts() == std::vector<int>{1, 2});
  CHECK(ix("1,2").display() == "(1,2)");
  CHECK(ix("1,2").to_string() == "1,2");
  CHECK(ix("").empty());
  CHECK(ix("").display() == "()");
  CHECK(ix("12").weight() == 12);
  CHECK(ix("1,2,3").depth() == 3);
  CHECK(ix("1,1").all_ones());
  CHECK_FALSE(ix("1,2").all_ones());
  CHECK(ix("1,2,3").reversed() == ix("3,2,1"));
  CHECK(ix("1,2").last() == 2);
  CHECK_THROWS_AS(Index::parse("1,,2"), ParseError);
  CHECK_THROWS_AS(Index::parse("1,x"), ParseError);
  CHECK_THROWS_AS(Index(std::vector<int>{0}), DomainError);
  CHECK(measures(ix("1,2")) == std::pair<int, int>{3, 2});
}

TEST_CASE("index combos are canonical") {
  IndexCombo c;
  c.add(ix("1,2"), TPoly(1));
  c.add(ix("1,2"), TPoly(-1));
  CHECK(c.is_zero());
  c.add(ix("2"), TPoly::t());
  CHECK(c.size() == 1);
  CHECK(c.coeff_of(ix("2")) == TPoly::t());
  CHECK(c.coeff_of(ix("3")).is_zero());
  CHECK(IndexCombo::of(ix("1")).concat(IndexCombo::of(ix("2"))) ==
        IndexCombo::of(ix("1,2")));
  CHECK(IndexCombo::unit().concat(IndexCombo::of(ix("2"))) ==
        IndexCombo::of(ix("2")));
}

TEST_CASE("t-interpolation of an index") {
  IndexCombo v = t_index(ix("1,1,1"));
  CHECK(v == combo({{"1,1,1", TPoly(1)},
                    {"2,1", TPoly::t()},
                    {"1,2", TPoly::t()},
                    {"3", TPoly::t() * TPoly::t()}}));
  CHECK(v.t_degree() == 2);
  CHECK(v.coeff_at(0) == IndexCombo::of(ix("1,1,1")));
  CHECK(v.coeff_at(2) == IndexCombo::of(ix("3")));
  CHECK(t_coeff(ix("1,2,1"), 1) ==
        combo({{"3,1", TPoly(1)}, {"1,3", TPoly(1)}}));
  CHECK(t_coeff(ix("1,2"), 5).is_zero());
  CHECK(t_index(ix("4")) == IndexCombo::of(ix("4")));
}

TEST_CASE("cyclic index") {
  CHECK(cyclic_index(ix("1,2,3"), 0) == IndexCombo::of(ix("1,2,3")));
  CHECK(cyclic_index(ix("1,2,3"), 1) ==
        combo({{"3,3", TPoly(1)}, {"1,5", TPoly(1)}, {"4,2", TPoly(1)}}));
  CHECK(cyclic_index(ix("1,2,3"), 2) == combo({{"6", TPoly(3)}}));
  CHECK(cyclic_index(ix("2"), 0) == IndexCombo::of(ix("2")));
}

TEST_CASE("hoffman dual") {
  CHECK(hoffman_dual(ix("3")) == ix("1,1,1"));
  CHECK(hoffman_dual(ix("1,2")) == ix("2,1"));
  CHECK(hoffman_dual(ix("2,1")) == ix("1,2"));
  CHECK(hoffman_dual(ix("1")) == ix("1"));
  for (const auto& k : all_indices(6, 6)) {
    CHECK(hoffman_dual(hoffman_dual(k)) == k);
    CHECK(hoffman_dual(k).weight() == k.weight());
  }
}

TEST_CASE("ohno-type lift sums") {
  CHECK(ohno_sum(ix("1,2"), 1, OhnoKind::G1) ==
        combo({{"2,2", TPoly(1)}, {"1,3", TPoly(1)}}));
  CHECK(ohno_sum(ix("1,2"), 1, OhnoKind::G2) ==
        combo({{"1,1,2", TPoly(1)}, {"1,2,1", TPoly(1)}}));
  CHECK(ohno_sum(ix("3"), 0, OhnoKind::G).is_zero());
  CHECK(ohno_sum(ix("1,2"), 1, OhnoKind::G) ==
        ohno_sum(ix("1,2"), 1, OhnoKind::G1) -
            ohno_sum(ix("1,2"), 1, OhnoKind::G2));
}

TEST_CASE("refinement involution") {
  CHECK(phi_index(ix("2")) ==
        combo({{"2", TPoly(-1)}, {"1,1", TPoly(-1)}}));
  CHECK(phi_index(ix("1")) == combo({{"1", TPoly(-1)}}));
  for (const auto& k : all_indices(5, 5))
    CHECK(phi_index(phi_index(IndexCombo::of(k))) == IndexCombo::of(k));
}

TEST_CASE("part-level shuffle") {
  CHECK(tilde_shuffle(IndexCombo::of(ix("1")), IndexCombo::of(ix("2"))) ==
        combo({{"1,2", TPoly(1)}, {"2,1", TPoly(1)}}));
  CHECK(tilde_shuffle(IndexCombo::of(ix("1")), IndexCombo::of(ix("1"))) ==
        combo({{"1,1", TPoly(2)}}));
  CHECK(tilde_shuffle(IndexCombo::unit(), IndexCombo::of(ix("1,2"))) ==
        IndexCombo::of(ix("1,2")));
}

TEST_CASE("symmetrized odd/even elements") {
  CHECK_THROWS_AS(BBSpec({{2}, {1}, {}}).validate(), DomainError);
  CHECK_THROWS_AS(BBSpec({{1}, {1}, {3}}).validate(), DomainError);
  CHECK_THROWS_AS(BBSpec({{}, {}, {}}).validate(), DomainError);
  CHECK_THROWS_AS(BBSpec({{1}, {1}, {2}}).validate(1), DomainError);

  BBSpec pair{{1}, {1}, {}};
  CHECK(bb_element_base(pair) == combo({{"1,1", TPoly(1)}}));
  CHECK(bb_element(pair) ==
        combo({{"1,1", TPoly(1)}, {"2", TPoly::t()}}));

  BBSpec evens{{}, {}, {2, 2}};
  CHECK(bb_element_base(evens) == combo({{"2,2", TPoly(2)}}));
  CHECK(bb_element(evens) ==
        combo({{"2,2", TPoly(2)}, {"4", TPoly(2) * TPoly::t()}}));
  CHECK(bb_coeff(evens, 1) == combo({{"4", TPoly(2)}}));
  CHECK(bb_coeff(evens, 0) == bb_element(evens).coeff_at(0));
}

TEST_CASE("composition sums and weighted elements") {
  CHECK(s_element(3, 2) == combo({{"1,2", TPoly(1)}, {"2,1", TPoly(1)}}));
  CHECK_THROWS_AS(s_element(3, 4), DomainError);

  IndexCombo ft = weighted_elements(3, 2, 0, WeightedKind::Ft);
  CHECK(ft.coeff_of(ix("1,2")) == TPoly(2));
  CHECK(ft.coeff_of(ix("2,1")) == TPoly(1));
  CHECK(ft.coeff_of(ix("3")) == TPoly(3) * TPoly::t());

  IndexCombo f = weighted_elements(4, 3, 1, WeightedKind::F);
  CHECK(f.coeff_of(ix("1,3")) == TPoly(3));
  CHECK(f == weighted_elements(4, 3, 0, WeightedKind::Ft).coeff_at(1));

  CHECK(weighted_elements(4, 3, 1, WeightedKind::Sprime) ==
        s_element(4, 2).scaled(Rational(-2)));

  CHECK(weighted_elements(5, 3, 1, WeightedKind::H) ==
        weighted_elements(5, 3, 1, WeightedKind::F) +
            weighted_elements(5, 3, 1, WeightedKind::Sprime) +
            weighted_elements(5, 3, 1, WeightedKind::G1prime) -
            weighted_elements(5, 3, 1, WeightedKind::G2prime));
}

TEST_CASE("cyclic combination") {
  IndexCombo c2 = cyclic_relation(ix("2"));
  CHECK(c2.size() == 1);
  CHECK(c2.coeff_of(ix("3")) == TPoly(-2) * TPoly::one_minus_t());
  CHECK(cyclic_relation(ix("2,1")).coeff_at(1) ==
        combo({{"2,2", TPoly(2)}, {"4", TPoly(-4)}}));
}

TEST_CASE("symmetric sum element") {
  CHECK(symmetric_sum_element(ix("1,2")) ==
        combo({{"1,2", TPoly(1)}, {"2,1", TPoly(1)}}));
  CHECK(symmetric_sum_element(ix("1,1")) == combo({{"1,1", TPoly(2)}}));
  CHECK(symmetric_sum_element(ix("2")) == IndexCombo::of(ix("2")));
}

TEST_CASE("index enumeration order") {
  auto got = all_indices(3, 3);
  std::vector<Index> want = {ix("1"),   ix("2"),   ix("1,1"), ix("3"),
                             ix("1,2"), ix("2,1"), ix("1,1,1")};
  CHECK(got == want);
  CHECK(all_indices(3, 1) == std::vector<Index>{ix("1"), ix("2"), ix("3")});
  CHECK(all_indices(0, 5).empty());
}
