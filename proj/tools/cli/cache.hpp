#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "antimagic/graph.hpp"
#include "antimagic/labeling.hpp"

namespace antimagic::cli {

struct CacheRecord {
  std::string graph_hash;
  std::optional<std::string> family;
  std::optional<std::int64_t> lower;
  std::optional<std::int64_t> upper;
  std::optional<std::int64_t> exact;
  // Relative to the cache directory.
  std::string certificate_path;
  std::string created_at;
};

// Append-only JSONL store of solver and construction results. The last record
// for a graph hash wins. Writers hold an exclusive advisory lock on the log.
class CertificateCache {
 public:
  explicit CertificateCache(std::filesystem::path dir);

  // --cache-dir, then ANTIMAGIC_CACHE_DIR, then ./.antimagic-cache.
  static std::filesystem::path resolve_dir(const std::optional<std::string>& flag);

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path log_path() const { return dir_ / "records.jsonl"; }

  // Writes the certificate file and appends a record pointing at it.
  CacheRecord store(const Graph& g, const Certificate& cert, std::optional<std::int64_t> lower,
                    std::optional<std::int64_t> upper, std::optional<std::int64_t> exact);

  std::map<std::string, CacheRecord> load() const;
  std::optional<CacheRecord> lookup(const std::string& graph_hash) const;

  // The cached certificate, only if it still verifies against g.
  std::optional<Certificate> verified_certificate(const CacheRecord& record, const Graph& g) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace antimagic::cli
