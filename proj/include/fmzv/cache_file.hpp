#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace fmzv {

// One line of the evaluation cache: the interpolation coefficients of the
// index's value mod p.  Serialized as JSON Lines:
//   {"p":5,"index":[1,2],"tcoeffs":[1]}
struct CacheRecord {
  unsigned long p = 0;
  std::vector<int> index;
  std::vector<unsigned long> tcoeffs;
};

struct CacheLoadResult {
  std::vector<CacheRecord> records;
  std::size_t corrupt_lines = 0;  // skipped, never fatal
};

// Missing file loads as empty.  Unreadable paths and structurally broken
// lines count as corrupt; IO failure opening an existing file throws.
CacheLoadResult load_cache_file(const std::string& path);

// Appends records (sorted by (p, index) for reproducibility).  Throws
// std::runtime_error when the file cannot be opened for writing.
void append_cache_records(const std::string& path,
                          std::vector<CacheRecord> records);

}  // namespace fmzv
