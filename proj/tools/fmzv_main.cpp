#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fmzv.h"

namespace {

// Usage-class API errors map to exit 2; failing checks map to exit 1.
int fail_with(int rc) {
  std::cerr << "fmzv: " << fmzv_last_error() << "\n";
  return rc == FMZV_ERR_VERIFY_FAILED ? 1 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of interpolated finite multiple zeta values"};
  app.require_subcommand(1);

  auto* eval = app.add_subcommand("eval", "evaluate one index mod p");
  unsigned long prime = 0;
  std::string index_csv;
  bool star = false;
  bool strict = false;
  eval->add_option("--prime", prime, "odd prime modulus")->required();
  eval->add_option("--index", index_csv, "comma-separated index, e.g. 1,2")
      ->required();
  auto* star_flag =
      eval->add_flag("--star", star, "print the weak-inequality scalar sum");
  eval->add_flag("--strict", strict, "print the strict-inequality scalar sum")
      ->excludes(star_flag);

  auto* verify = app.add_subcommand("verify", "check theorem instances");
  std::vector<std::string> ids;
  unsigned long prime_min = 11;
  unsigned long prime_max = 199;
  int max_weight = 8;
  int max_depth = 5;
  int jobs = 1;
  std::string format = "json";
  std::string out_file;
  std::string cache_dir;
  verify->add_option("ids", ids, "theorem ids; \"all\" runs the registry");
  verify->add_option("--prime-min", prime_min, "smallest prime to test");
  verify->add_option("--prime-max", prime_max, "largest prime to test");
  verify->add_option("--max-weight", max_weight, "index weight bound");
  verify->add_option("--max-depth", max_depth, "index depth bound");
  verify->add_option("--jobs", jobs, "worker threads");
  verify->add_option("--format", format, "report format")
      ->check(CLI::IsMember({"json", "csv"}));
  verify->add_option("--out", out_file, "write the report to this file");
  verify->add_option("--cache", cache_dir,
                     "directory for the persistent evaluation cache "
                     "(FMZV_CACHE_DIR is the fallback)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (eval->parsed()) {
    fmzv_prime_ctx* ctx = nullptr;
    int rc = fmzv_prime_ctx_new(prime, &ctx);
    if (rc != FMZV_OK) return fail_with(rc);
    int code = 0;
    if (star || strict) {
      unsigned long value = 0;
      rc = fmzv_eval_scalar(ctx, index_csv.c_str(), star ? 1 : 0, &value);
      if (rc != FMZV_OK)
        code = fail_with(rc);
      else
        std::cout << value << "\n";
    } else {
      char* json = nullptr;
      rc = fmzv_eval_tpoly_json(ctx, index_csv.c_str(), &json);
      if (rc != FMZV_OK) {
        code = fail_with(rc);
      } else {
        std::cout << json << "\n";
        fmzv_free_string(json);
      }
    }
    fmzv_prime_ctx_free(ctx);
    return code;
  }

  if (ids.empty()) ids.push_back("all");
  if (cache_dir.empty()) {
    const char* env = std::getenv("FMZV_CACHE_DIR");
    if (env && *env) cache_dir = env;
  }

  fmzv_suite* suite = nullptr;
  if (fmzv_suite_new(&suite) != FMZV_OK) return fail_with(FMZV_ERR_INTERNAL);
  struct SuiteGuard {
    fmzv_suite* s;
    ~SuiteGuard() { fmzv_suite_free(s); }
  } guard{suite};

  for (const auto& id : ids) {
    int rc = fmzv_suite_add_id(suite, id.c_str());
    if (rc != FMZV_OK) return fail_with(rc);
  }
  int rc = fmzv_suite_set_primes(suite, prime_min, prime_max);
  if (rc != FMZV_OK) return fail_with(rc);
  rc = fmzv_suite_set_bound(suite, "max-weight", max_weight);
  if (rc != FMZV_OK) return fail_with(rc);
  rc = fmzv_suite_set_bound(suite, "max-depth", max_depth);
  if (rc != FMZV_OK) return fail_with(rc);
  rc = fmzv_suite_set_jobs(suite, jobs);
  if (rc != FMZV_OK) return fail_with(rc);
  if (!cache_dir.empty()) {
    rc = fmzv_suite_set_cache_dir(suite, cache_dir.c_str());
    if (rc != FMZV_OK) return fail_with(rc);
  }

  int run_rc = fmzv_suite_run(suite);
  if (run_rc != FMZV_OK && run_rc != FMZV_ERR_VERIFY_FAILED)
    return fail_with(run_rc);

  char* report = nullptr;
  rc = fmzv_suite_report(suite, format.c_str(), &report);
  if (rc != FMZV_OK) return fail_with(rc);
  if (out_file.empty()) {
    std::cout << report;
  } else {
    std::ofstream f(out_file, std::ios::binary);
    f << report;
    f.flush();
    if (!f) {
      std::cerr << "fmzv: cannot write report to " << out_file << "\n";
      fmzv_free_string(report);
      return 2;
    }
  }
  fmzv_free_string(report);

  if (run_rc == FMZV_ERR_VERIFY_FAILED) {
    long fails = 0;
    fmzv_suite_count(suite, "fail", &fails);
    std::cerr << "fmzv: " << fails << " failing instance(s)\n";
    return 1;
  }
  return 0;
}
