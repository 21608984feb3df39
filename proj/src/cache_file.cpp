#include "fmzv/cache_file.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace fmzv {

using nlohmann::json;

CacheLoadResult load_cache_file(const std::string& path) {
  CacheLoadResult out;
  std::ifstream in(path);
  if (!in.is_open()) return out;  // no cache yet
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("p") ||
        !j.contains("index") || !j.contains("tcoeffs") ||
        !j["p"].is_number_unsigned() || !j["index"].is_array() ||
        !j["tcoeffs"].is_array()) {
      ++out.corrupt_lines;
      continue;
    }
    CacheRecord rec;
    rec.p = j["p"].get<unsigned long>();
    bool ok = true;
    for (const auto& v : j["index"]) {
      if (!v.is_number_integer() || v.get<long long>() < 1) {
        ok = false;
        break;
      }
      rec.index.push_back(v.get<int>());
    }
    for (const auto& v : j["tcoeffs"]) {
      if (!ok) break;
      if (!v.is_number_unsigned() || v.get<unsigned long>() >= rec.p) {
        ok = false;
        break;
      }
      rec.tcoeffs.push_back(v.get<unsigned long>());
    }
    if (!ok || rec.p < 3) {
      ++out.corrupt_lines;
      continue;
    }
    out.records.push_back(std::move(rec));
  }
  return out;
}

void append_cache_records(const std::string& path,
                          std::vector<CacheRecord> records) {
  if (records.empty()) return;
  std::sort(records.begin(), records.end(),
            [](const CacheRecord& a, const CacheRecord& b) {
              if (a.p != b.p) return a.p < b.p;
              return a.index < b.index;
            });
  std::ofstream out(path, std::ios::app);
  if (!out.is_open())
    throw std::runtime_error("cannot open cache file for writing: " + path);
  for (const auto& rec : records) {
    nlohmann::ordered_json j;
    j["p"] = rec.p;
    j["index"] = rec.index;
    j["tcoeffs"] = rec.tcoeffs;
    out << j.dump() << "\n";
  }
}

}  // namespace fmzv
