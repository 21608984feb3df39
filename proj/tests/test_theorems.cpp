#include <unistd.h>

#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "fmzv/errors.hpp"
#include "fmzv/index_ops.hpp"
#include "fmzv/suite.hpp"
#include "fmzv/theorems.hpp"

using namespace fmzv;

namespace {

Index ix(const char* csv) { return Index::parse(csv); }

Instance make_inst(const char* id, std::vector<Index> idx,
                   std::vector<int> num) {
  return Instance{id, "", std::move(idx), std::move(num)};
}

// Builds and evaluates one numeric instance at one prime.
FpPoly eval_at(const char* id, std::vector<Index> idx, std::vector<int> num,
               unsigned long p) {
  NumericCheck chk = build_numeric(make_inst(id, std::move(idx), std::move(num)));
  PrimeCtx ctx(p);
  return eval_numeric(chk, ctx, nullptr);
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    static int counter = 0;
    path = std::filesystem::temp_directory_path() /
           ("fmzv_suite_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter++));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("registry shape") {
  const auto& reg = registry();
  CHECK(reg.size() == 28);
  std::set<std::string> ids;
  int numeric = 0, per_prime = 0, symbolic = 0;
  for (const auto& d : reg) {
    ids.insert(d.id);
    CHECK_FALSE(d.statement.empty());
    if (d.kind == TheoremKind::numeric) ++numeric;
    if (d.kind == TheoremKind::per_prime_exact) ++per_prime;
    if (d.kind == TheoremKind::symbolic) ++symbolic;
  }
  CHECK(ids.size() == reg.size());  // unique ids
  CHECK(numeric == 13);
  CHECK(per_prime == 5);
  CHECK(symbolic == 10);
  CHECK(find_theorem("sum-formula") != nullptr);
  CHECK(find_theorem("sum-formula")->kind == TheoremKind::numeric);
  CHECK(find_theorem("harmonic")->kind == TheoremKind::per_prime_exact);
  CHECK(find_theorem("lemma-Snu")->kind == TheoremKind::symbolic);
  CHECK(find_theorem("nope") == nullptr);
  CHECK(kind_name(TheoremKind::per_prime_exact) == "per-prime-exact");
}

TEST_CASE("id resolution") {
  auto all = resolve_ids({"all"});
  CHECK(all.size() == registry().size());
  CHECK(all.front() == "sum-formula");
  auto two = resolve_ids({"harmonic", "hoffman"});
  CHECK(two == std::vector<std::string>{"harmonic", "hoffman"});
  try {
    resolve_ids({"no-such-id"});
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("known ids") != std::string::npos);
    CHECK(std::string(e.what()).find("sum-formula") != std::string::npos);
  }
}

TEST_CASE("bound names") {
  Bounds b;
  CHECK(set_bound(b, "max-weight", 4));
  CHECK(b.max_weight == 4);
  CHECK(set_bound(b, "pair-weight", 5));
  CHECK(set_bound(b, "sym-section4-weight", 6));
  CHECK_FALSE(set_bound(b, "bogus", 1));
}

TEST_CASE("instance enumeration") {
  Bounds b;
  b.max_weight = 3;
  b.max_depth = 5;
  auto sf = instances("sum-formula", b);
  REQUIRE(sf.size() == 6);
  CHECK(sf[0].params == "k=1,r=1");
  CHECK(sf[5].params == "k=3,r=3");

  Bounds small;
  small.max_weight = 2;
  small.max_depth = 2;
  auto cyc = instances("cyclic-sum", small);
  REQUIRE(cyc.size() == 1);
  CHECK(cyc[0].params == "k=(2)");

  Bounds w4;
  w4.max_weight = 4;
  auto ws = instances("weighted-sum", w4);
  std::vector<std::string> want = {"k=1,r=1", "k=2,r=1", "k=3,r=1",
                                   "k=3,r=3", "k=4,r=1", "k=4,r=3"};
  REQUIRE(ws.size() == want.size());
  for (size_t i = 0; i < want.size(); ++i) CHECK(ws[i].params == want[i]);

  Bounds bb;
  bb.bb_lm = 2;
  bb.bb_parts = 3;
  CHECK(instances("keyprop-bb", bb).size() == 5);

  Bounds dual;
  dual.word_weight = 3;
  dual.max_depth = 5;
  auto dt = instances("duality-t", dual);
  REQUIRE(dt.size() == 3);
  CHECK(dt[0].params == "k=(2)");
  CHECK(dt[1].params == "k=(3)");
  CHECK(dt[2].params == "k=(1,2)");

  Bounds sec4;
  sec4.sym_section4_weight = 2;
  CHECK(instances("lemma-F-closed", sec4).size() == 4);
  CHECK(instances("lemma-F-closed", sec4)[3].params == "k=2,r=2,n=1");

  Bounds pw;
  pw.pair_weight = 3;
  pw.max_depth = 3;
  auto ts = instances("t-shuffle", pw);
  CHECK(ts[0].params == "u=(),v=(1)");
  for (const auto& inst : ts)
    CHECK(inst.idx[0].weight() + inst.idx[1].weight() <= 3);

  CHECK_THROWS_AS(instances("nope", b), DomainError);
}

TEST_CASE("numeric check structure") {
  NumericCheck sf = build_numeric(make_inst("sum-formula", {}, {3, 2}));
  REQUIRE(sf.terms.size() == 2);
  CHECK(sf.weight == 3);
  CHECK(sf.terms[0].factors[0].combo.coeff_of(ix("1,2")) == TPoly(1));
  CHECK(sf.terms[0].factors[0].combo.size() == 1);  // (2,1) ends in 1
  CHECK(sf.terms[1].zA_k == 3);
  CHECK(sf.terms[1].coeff == TPoly(-3));  // Q(t) = 3 for k=3, r=2

  NumericCheck hf = build_numeric(make_inst("hoffman", {ix("2")}, {}));
  const IndexCombo& hc = hf.terms[0].factors[0].combo;
  CHECK(hc.coeff_of(ix("2")) == TPoly(1) + TPoly::t());
  CHECK(hc.coeff_of(ix("1,1")) == TPoly(-1));
  CHECK(hc.size() == 2);

  // empty left operand turns the shuffle identity into plain reversal
  NumericCheck ts =
      build_numeric(make_inst("t-shuffle", {ix(""), ix("2")}, {}));
  CHECK(ts.terms[0].factors[0].combo.is_zero());
}

TEST_CASE("hoffman relation is the first derivation relation") {
  // both relations live on indices whose final part is at least 2
  for (const char* csv : {"2", "2,2", "1,2", "3,2"}) {
    NumericCheck h = build_numeric(make_inst("hoffman", {ix(csv)}, {}));
    NumericCheck d = build_numeric(make_inst("derivation", {ix(csv)}, {1}));
    CAPTURE(csv);
    CHECK(h.terms[0].factors[0].combo == -d.terms[0].factors[0].combo);
  }
}

TEST_CASE("numeric spot checks evaluate to zero") {
  CHECK(eval_at("sum-formula", {}, {3, 2}, 5).is_zero());
  CHECK(eval_at("sum-formula", {}, {4, 2}, 7).is_zero());
  CHECK(eval_at("sum-formula", {}, {4, 4}, 7).is_zero());  // empty left side
  CHECK(eval_at("plain-sum", {}, {3, 2}, 5).is_zero());
  CHECK(eval_at("cyclic-sum", {ix("2")}, {}, 5).is_zero());
  CHECK(eval_at("cyclic-sum", {ix("2,1")}, {}, 7).is_zero());
  CHECK(eval_at("bowman-bradley", {ix("1"), ix("1"), ix("")}, {}, 7)
            .is_zero());
  CHECK(eval_at("weighted-sum", {}, {3, 3}, 7).is_zero());
  CHECK(eval_at("symmetric-sum", {ix("1,2")}, {}, 7).is_zero());
  CHECK(eval_at("t-shuffle", {ix("1"), ix("2")}, {}, 7).is_zero());
  CHECK(eval_at("duality-star", {ix("1,2")}, {}, 5).is_zero());
  CHECK(eval_at("duality-phi", {ix("1,2")}, {}, 7).is_zero());
  CHECK(eval_at("duality-t", {ix("1,2")}, {}, 7).is_zero());
  CHECK(eval_at("derivation", {ix("2")}, {1}, 7).is_zero());
  CHECK(eval_at("derivation", {ix("2")}, {2}, 11).is_zero());
  CHECK(eval_at("hoffman", {ix("2,2")}, {}, 7).is_zero());
  CHECK(eval_at("ohno-type", {ix("1,2")}, {1}, 7).is_zero());
  // per-prime-exact identities hold even at p = 3
  CHECK(eval_at("harmonic", {ix("1"), ix("2")}, {}, 3).is_zero());
  CHECK(eval_at("harmonic", {ix("1"), ix("2")}, {}, 5).is_zero());
  CHECK(eval_at("t-harmonic", {ix("1"), ix("1,1")}, {}, 5).is_zero());
  CHECK(eval_at("reversal", {ix("1,2")}, {}, 7).is_zero());
  CHECK(eval_at("reversal", {ix("3")}, {}, 3).is_zero());
  CHECK(eval_at("antipode", {ix("1,2")}, {}, 5).is_zero());
  CHECK(eval_at("antipode", {ix("2,1,1")}, {}, 7).is_zero());
  CHECK(eval_at("zst-transport", {ix("1,2,1")}, {}, 5).is_zero());
}

TEST_CASE("symbolic spot checks") {
  CHECK(check_symbolic(make_inst("lemma-cyclic", {ix("2")}, {0})).pass);
  CHECK(check_symbolic(make_inst("lemma-cyclic", {ix("1,2")}, {1})).pass);
  CHECK(check_symbolic(make_inst("prop-cyclic-coeff", {ix("2,1")}, {1})).pass);
  CHECK(check_symbolic(
            make_inst("keyprop-bb", {ix(""), ix(""), ix("2,2")}, {0}))
            .pass);
  CHECK(check_symbolic(make_inst("keyprop-bb", {ix("1"), ix("1"), ix("")}, {0}))
            .pass);
  CHECK(check_symbolic(make_inst("lemma-F-closed", {}, {4, 2, 1})).pass);
  CHECK(check_symbolic(make_inst("lemma-FSG1", {}, {4, 2, 1})).pass);
  CHECK(check_symbolic(make_inst("lemma-FSG1", {}, {5, 3, 0})).pass);
  CHECK(check_symbolic(make_inst("lemma-G2phi", {}, {4, 3, 1})).pass);
  CHECK(check_symbolic(make_inst("lemma-G2phi", {}, {5, 3, 1})).pass);
  CHECK(check_symbolic(make_inst("keyprop-weighted", {}, {4, 3, 1})).pass);
  CHECK(check_symbolic(make_inst("keyprop-weighted", {}, {6, 3, 2})).pass);
  CHECK(check_symbolic(make_inst("lemma-Snu", {ix("1,2")}, {})).pass);
  CHECK(check_symbolic(make_inst("lemma-prodSt", {ix("1"), ix("2")}, {})).pass);
  CHECK(check_symbolic(make_inst("lemma-prodSt", {ix(""), ix("1,1")}, {})).pass);

  SymbolicResult tc =
      check_symbolic(make_inst("transport-consistency", {ix("1"), ix("1")}, {}));
  CHECK(tc.pass);  // the harmonic comparison is the asserting half
  CHECK(tc.residual.find("note:") == 0);  // shuffle comparison reported only
}

TEST_CASE("suite runs deterministically") {
  SuiteConfig cfg;
  cfg.ids = {"harmonic", "lemma-Snu"};
  cfg.bounds.pair_weight = 4;
  cfg.bounds.sym_word_weight = 3;
  cfg.prime_min = 3;
  cfg.prime_max = 11;
  Report r1 = run_suite(cfg);
  CHECK(r1.fail == 0);
  CHECK(r1.skipped == 0);
  CHECK(r1.pass == static_cast<int>(r1.outcomes.size()));
  CHECK(r1.outcomes.size() ==
        instances("harmonic", cfg.bounds).size() +
            instances("lemma-Snu", cfg.bounds).size());
  // per-prime identities run at every requested odd prime, including 3
  CHECK(r1.outcomes[0].primes == 4);  // 3, 5, 7, 11

  cfg.jobs = 4;
  Report r4 = run_suite(cfg);
  CHECK(report_json(r1) == report_json(r4));
  CHECK(report_csv(r1) == report_csv(r4));

  std::string json = report_json(r1);
  CHECK(json.find("\"suite\": \"fmzv\"") != std::string::npos);
  CHECK(json.find("\"prime_skips\"") != std::string::npos);
  CHECK(json.find("\"jobs\"") == std::string::npos);   // never serialized
  CHECK(json.find("\"cache\"") == std::string::npos);
  std::string csv = report_csv(r1);
  CHECK(csv.rfind("theorem,params,status,primes,skips,prime,residual\n", 0) ==
        0);
}

TEST_CASE("suite with persistent cache") {
  TempDir tmp;
  SuiteConfig cfg;
  cfg.ids = {"t-harmonic"};
  cfg.bounds.pair_weight = 4;
  cfg.prime_min = 5;
  cfg.prime_max = 11;
  cfg.cache_dir = tmp.path.string();
  Report cold = run_suite(cfg);
  CHECK(cold.fail == 0);
  CHECK(std::filesystem::exists(tmp.path / "cache.jsonl"));
  Report warm = run_suite(cfg);
  CHECK(warm.cache_corrupt == 0);
  CHECK(report_json(cold) == report_json(warm));
  // a second warm run adds nothing new to the cache file
  auto size1 = std::filesystem::file_size(tmp.path / "cache.jsonl");
  run_suite(cfg);
  CHECK(std::filesystem::file_size(tmp.path / "cache.jsonl") == size1);
}

TEST_CASE("suite with no ids") {
  SuiteConfig cfg;
  Report r = run_suite(cfg);
  CHECK(r.outcomes.empty());
  CHECK(r.pass == 0);
  CHECK_FALSE(report_json(r).empty());
}
