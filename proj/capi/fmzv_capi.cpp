#include "fmzv.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "fmzv/errors.hpp"
#include "fmzv/fp_eval.hpp"
#include "fmzv/suite.hpp"
#include "json.hpp"

namespace {

thread_local std::string g_last_error;

int set_error(int code, const std::string& msg) {
  g_last_error = msg;
  return code;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs `fn`, translating exceptions into error codes.
template <typename Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const fmzv::NotPrimeError& e) {
    return set_error(FMZV_ERR_NOT_PRIME, e.what());
  } catch (const fmzv::ParseError& e) {
    return set_error(FMZV_ERR_PARSE, e.what());
  } catch (const fmzv::PDividesDenominator& e) {
    return set_error(FMZV_ERR_DOMAIN, e.what());
  } catch (const fmzv::DomainError& e) {
    return set_error(FMZV_ERR_DOMAIN, e.what());
  } catch (const std::exception& e) {
    return set_error(FMZV_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(FMZV_ERR_INTERNAL, "unknown error");
  }
}

}  // namespace

struct fmzv_prime_ctx {
  fmzv::PrimeCtx ctx;
  explicit fmzv_prime_ctx(unsigned long p) : ctx(p) {}
};

struct fmzv_suite {
  fmzv::SuiteConfig cfg;
  fmzv::Report rep;
  bool ran = false;
};

extern "C" {

const char* fmzv_version(void) { return "0.1.0"; }

const char* fmzv_last_error(void) { return g_last_error.c_str(); }

void fmzv_free_string(char* s) { std::free(s); }

int fmzv_prime_ctx_new(unsigned long p, fmzv_prime_ctx** out) {
  if (!out) return set_error(FMZV_ERR_USAGE, "out pointer is null");
  *out = nullptr;
  return guarded([&]() {
    *out = new fmzv_prime_ctx(p);
    return FMZV_OK;
  });
}

void fmzv_prime_ctx_free(fmzv_prime_ctx* ctx) { delete ctx; }

int fmzv_eval_tpoly_json(fmzv_prime_ctx* ctx, const char* index_csv,
                         char** out_json) {
  if (!ctx || !index_csv || !out_json)
    return set_error(FMZV_ERR_USAGE, "null argument");
  *out_json = nullptr;
  return guarded([&]() {
    fmzv::Index k = fmzv::Index::parse(index_csv);
    fmzv::FpPoly v = fmzv::fmzv_t_eval(ctx->ctx, k);
    nlohmann::ordered_json j;
    j["p"] = ctx->ctx.p();
    j["index"] = k.parts();
    j["tcoeffs"] = v.coeffs();
    *out_json = dup_string(j.dump());
    if (!*out_json) return set_error(FMZV_ERR_INTERNAL, "out of memory");
    return FMZV_OK;
  });
}

int fmzv_eval_scalar(fmzv_prime_ctx* ctx, const char* index_csv, int star,
                     unsigned long* out_value) {
  if (!ctx || !index_csv || !out_value)
    return set_error(FMZV_ERR_USAGE, "null argument");
  return guarded([&]() {
    fmzv::Index k = fmzv::Index::parse(index_csv);
    *out_value = fmzv::fmzv_eval(ctx->ctx, k, star != 0);
    return FMZV_OK;
  });
}

int fmzv_registry_json(char** out_json) {
  if (!out_json) return set_error(FMZV_ERR_USAGE, "out pointer is null");
  *out_json = nullptr;
  return guarded([&]() {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& d : fmzv::registry()) {
      nlohmann::ordered_json row;
      row["id"] = d.id;
      row["kind"] = fmzv::kind_name(d.kind);
      row["statement"] = d.statement;
      arr.push_back(std::move(row));
    }
    *out_json = dup_string(arr.dump(2));
    if (!*out_json) return set_error(FMZV_ERR_INTERNAL, "out of memory");
    return FMZV_OK;
  });
}

int fmzv_suite_new(fmzv_suite** out) {
  if (!out) return set_error(FMZV_ERR_USAGE, "out pointer is null");
  *out = new fmzv_suite();
  return FMZV_OK;
}

void fmzv_suite_free(fmzv_suite* s) { delete s; }

int fmzv_suite_add_id(fmzv_suite* s, const char* id) {
  if (!s || !id) return set_error(FMZV_ERR_USAGE, "null argument");
  return guarded([&]() {
    if (std::string(id) != "all")
      fmzv::resolve_ids({id});  // throws with the known-id listing
    s->cfg.ids.push_back(id);
    return FMZV_OK;
  });
}

int fmzv_suite_set_bound(fmzv_suite* s, const char* name, int value) {
  if (!s || !name) return set_error(FMZV_ERR_USAGE, "null argument");
  if (value < 0)
    return set_error(FMZV_ERR_USAGE, "bound values must be non-negative");
  if (!fmzv::set_bound(s->cfg.bounds, name, value))
    return set_error(FMZV_ERR_USAGE,
                     std::string("unknown bound name \"") + name + "\"");
  return FMZV_OK;
}

int fmzv_suite_set_primes(fmzv_suite* s, unsigned long lo, unsigned long hi) {
  if (!s) return set_error(FMZV_ERR_USAGE, "null argument");
  if (lo > hi)
    return set_error(FMZV_ERR_USAGE, "prime range is empty (lo > hi)");
  s->cfg.prime_min = lo;
  s->cfg.prime_max = hi;
  return FMZV_OK;
}

int fmzv_suite_set_jobs(fmzv_suite* s, int jobs) {
  if (!s) return set_error(FMZV_ERR_USAGE, "null argument");
  if (jobs < 1) return set_error(FMZV_ERR_USAGE, "jobs must be >= 1");
  s->cfg.jobs = jobs;
  return FMZV_OK;
}

int fmzv_suite_set_cache_dir(fmzv_suite* s, const char* dir) {
  if (!s || !dir) return set_error(FMZV_ERR_USAGE, "null argument");
  s->cfg.cache_dir = dir;
  return FMZV_OK;
}

int fmzv_suite_run(fmzv_suite* s) {
  if (!s) return set_error(FMZV_ERR_USAGE, "null argument");
  if (s->cfg.ids.empty())
    return set_error(FMZV_ERR_USAGE, "no theorem ids added");
  return guarded([&]() {
    s->rep = fmzv::run_suite(s->cfg);
    s->ran = true;
    if (s->rep.fail > 0)
      return set_error(FMZV_ERR_VERIFY_FAILED,
                       std::to_string(s->rep.fail) +
                           " theorem instance(s) failed");
    return FMZV_OK;
  });
}

int fmzv_suite_report(fmzv_suite* s, const char* format, char** out_report) {
  if (!s || !format || !out_report)
    return set_error(FMZV_ERR_USAGE, "null argument");
  if (!s->ran) return set_error(FMZV_ERR_USAGE, "suite has not been run");
  *out_report = nullptr;
  std::string fmt(format);
  if (fmt != "json" && fmt != "csv")
    return set_error(FMZV_ERR_USAGE, "format must be \"json\" or \"csv\"");
  return guarded([&]() {
    std::string text =
        fmt == "json" ? fmzv::report_json(s->rep) : fmzv::report_csv(s->rep);
    *out_report = dup_string(text);
    if (!*out_report) return set_error(FMZV_ERR_INTERNAL, "out of memory");
    return FMZV_OK;
  });
}

int fmzv_suite_count(fmzv_suite* s, const char* status, long* out_count) {
  if (!s || !status || !out_count)
    return set_error(FMZV_ERR_USAGE, "null argument");
  if (!s->ran) return set_error(FMZV_ERR_USAGE, "suite has not been run");
  std::string st(status);
  if (st == "pass") *out_count = s->rep.pass;
  else if (st == "fail") *out_count = s->rep.fail;
  else if (st == "skipped") *out_count = s->rep.skipped;
  else if (st == "prime-skips") *out_count = s->rep.prime_skips;
  else return set_error(FMZV_ERR_USAGE,
                        "status must be pass, fail, skipped or prime-skips");
  return FMZV_OK;
}

}  // extern "C"
