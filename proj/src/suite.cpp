#include "fmzv/suite.hpp"

#include <atomic>
#include <iostream>
#include <map>
#include <memory>
#include <thread>

#include "fmzv/cache_file.hpp"
#include "fmzv/errors.hpp"
#include "fmzv/util.hpp"
#include "json.hpp"

namespace fmzv {

std::vector<std::string> resolve_ids(const std::vector<std::string>& ids) {
  std::vector<std::string> out;
  for (const auto& id : ids) {
    if (id == "all") {
      for (const auto& d : registry()) out.push_back(d.id);
      continue;
    }
    if (!find_theorem(id)) {
      std::string known;
      for (const auto& d : registry()) {
        if (!known.empty()) known += ", ";
        known += d.id;
      }
      throw DomainError("unknown theorem id \"" + id + "\"; known ids: " + known);
    }
    out.push_back(id);
  }
  return out;
}

namespace {

struct Row {
  TheoremKind kind;
  Instance inst;
};

Outcome run_row(const Row& row, const std::vector<int>& primes,
                const std::map<int, std::unique_ptr<PrimeCtx>>& ctxs,
                unsigned long prime_min, EvalCache* cache) {
  Outcome o;
  o.theorem = row.inst.theorem;
  o.params = row.inst.params;
  try {
    if (row.kind == TheoremKind::symbolic) {
      SymbolicResult r = check_symbolic(row.inst);
      o.status = r.pass ? "pass" : "fail";
      o.residual = r.residual;
      return o;
    }
    NumericCheck chk = build_numeric(row.inst);
    unsigned long floor = prime_min;
    if (row.kind == TheoremKind::numeric)
      floor = std::max<unsigned long>(floor, chk.weight + 3);
    bool failed = false;
    for (int p : primes) {
      if (static_cast<unsigned long>(p) < floor) continue;
      const PrimeCtx& ctx = *ctxs.at(p);
      FpPoly res;
      try {
        res = eval_numeric(chk, ctx, cache);
      } catch (const PDividesDenominator&) {
        ++o.skips;
        continue;
      }
      if (!res.is_zero()) {
        failed = true;
        o.prime = p;
        o.residual = res.to_string();
        break;
      }
      ++o.primes;
    }
    if (failed)
      o.status = "fail";
    else if (o.primes == 0 && o.skips > 0)
      o.status = "skipped";
    else
      o.status = "pass";
  } catch (const std::exception& e) {
    o.status = "fail";
    o.residual = std::string("error: ") + e.what();
  }
  return o;
}

}  // namespace

Report run_suite(const SuiteConfig& cfg) {
  Report rep;
  rep.ids = resolve_ids(cfg.ids);
  rep.bounds = cfg.bounds;
  rep.prime_min = cfg.prime_min;
  rep.prime_max = cfg.prime_max;

  std::vector<Row> rows;
  for (const auto& id : rep.ids) {
    const TheoremDescriptor* d = find_theorem(id);
    for (auto& inst : instances(id, cfg.bounds))
      rows.push_back({d->kind, std::move(inst)});
  }

  auto primes = odd_primes_in(static_cast<int>(cfg.prime_min),
                              static_cast<int>(cfg.prime_max));
  std::map<int, std::unique_ptr<PrimeCtx>> ctxs;
  for (int p : primes) ctxs.emplace(p, std::make_unique<PrimeCtx>(p));

  EvalCache cache;
  std::string cache_path;
  if (!cfg.cache_dir.empty()) {
    cache_path = cfg.cache_dir + "/cache.jsonl";
    CacheLoadResult loaded = load_cache_file(cache_path);
    std::size_t rejected = cache.seed(loaded.records);
    rep.cache_corrupt = loaded.corrupt_lines + rejected;
    if (rep.cache_corrupt > 0)
      std::cerr << "fmzv: cache: ignored " << rep.cache_corrupt
                << " unusable line(s) in " << cache_path << "\n";
  }

  rep.outcomes.resize(rows.size());
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= rows.size()) break;
      rep.outcomes[i] =
          run_row(rows[i], primes, ctxs, cfg.prime_min, &cache);
    }
  };
  int jobs = std::max(1, cfg.jobs);
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < jobs; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  for (const auto& o : rep.outcomes) {
    if (o.status == "pass") ++rep.pass;
    else if (o.status == "fail") ++rep.fail;
    else ++rep.skipped;
    rep.prime_skips += o.skips;
  }

  if (!cache_path.empty()) {
    auto fresh = cache.drain_new();
    if (!fresh.empty()) {
      try {
        append_cache_records(cache_path, fresh);
      } catch (const std::exception& e) {
        std::cerr << "fmzv: cache: " << e.what() << "\n";
      }
    }
  }
  return rep;
}

namespace {

nlohmann::ordered_json bounds_json(const Bounds& b) {
  return {
      {"max-weight", b.max_weight},
      {"max-depth", b.max_depth},
      {"pair-weight", b.pair_weight},
      {"word-weight", b.word_weight},
      {"deriv-max-order", b.deriv_max_order},
      {"bb-lm", b.bb_lm},
      {"bb-parts", b.bb_parts},
      {"sym-cyclic-weight", b.sym_cyclic_weight},
      {"sym-section4-weight", b.sym_section4_weight},
      {"sym-word-weight", b.sym_word_weight},
      {"sym-pair-weight", b.sym_pair_weight},
  };
}

}  // namespace

std::string report_json(const Report& r) {
  nlohmann::ordered_json j;
  j["suite"] = "fmzv";
  j["ids"] = r.ids;
  j["bounds"] = bounds_json(r.bounds);
  j["primes"] = {{"min", r.prime_min}, {"max", r.prime_max}};
  auto rows = nlohmann::ordered_json::array();
  for (const auto& o : r.outcomes) {
    nlohmann::ordered_json row;
    row["theorem"] = o.theorem;
    row["params"] = o.params;
    row["status"] = o.status;
    row["primes"] = o.primes;
    row["skips"] = o.skips;
    if (o.prime) row["prime"] = o.prime;
    if (!o.residual.empty()) row["residual"] = o.residual;
    rows.push_back(std::move(row));
  }
  j["outcomes"] = std::move(rows);
  j["summary"] = {{"pass", r.pass},
                  {"fail", r.fail},
                  {"skipped", r.skipped},
                  {"prime_skips", r.prime_skips}};
  return j.dump(2) + "\n";
}

namespace {

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    out += c;
  }
  out += "\"";
  return out;
}

}  // namespace

std::string report_csv(const Report& r) {
  std::string out = "theorem,params,status,primes,skips,prime,residual\n";
  for (const auto& o : r.outcomes) {
    out += o.theorem;
    out += ",";
    out += csv_quote(o.params);
    out += ",";
    out += o.status;
    out += ",";
    out += std::to_string(o.primes);
    out += ",";
    out += std::to_string(o.skips);
    out += ",";
    if (o.prime) out += std::to_string(o.prime);
    out += ",";
    out += csv_quote(o.residual);
    out += "\n";
  }
  return out;
}

}  // namespace fmzv
