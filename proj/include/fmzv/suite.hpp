#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fmzv/theorems.hpp"

namespace fmzv {

struct SuiteConfig {
  std::vector<std::string> ids;  // may contain "all"
  Bounds bounds;
  unsigned long prime_min = 11;
  unsigned long prime_max = 199;
  int jobs = 1;
  std::string cache_dir;  // empty: no persistent cache
};

struct Outcome {
  std::string theorem;
  std::string params;
  std::string status;      // "pass" | "fail" | "skipped"
  int primes = 0;          // primes actually tested (numeric kinds)
  int skips = 0;           // per-prime denominator skips
  unsigned long prime = 0; // first failing prime, when a numeric check fails
  std::string residual;    // non-zero value / difference / note
};

struct Report {
  std::vector<std::string> ids;  // resolved, in registry order of request
  Bounds bounds;
  unsigned long prime_min = 0;
  unsigned long prime_max = 0;
  std::vector<Outcome> outcomes;
  int pass = 0;
  int fail = 0;
  int skipped = 0;
  int prime_skips = 0;
  std::size_t cache_corrupt = 0;  // reported on stderr, never serialized
};

// Expands "all" to the full registry and validates every id; throws
// DomainError naming the known ids on an unknown one.  Duplicates are kept
// in request order.
std::vector<std::string> resolve_ids(const std::vector<std::string>& ids);

Report run_suite(const SuiteConfig& cfg);

std::string report_json(const Report& r);
std::string report_csv(const Report& r);

}  // namespace fmzv
