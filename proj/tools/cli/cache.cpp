#include "cli/cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "antimagic/errors.hpp"
#include "antimagic/io.hpp"

namespace antimagic::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// flock(2) on a sidecar file for the lifetime of the object.
class FileLock {
 public:
  FileLock(const fs::path& path, bool exclusive) {
    fd_ = ::open(path.c_str(), O_RDWR | O_CREAT, 0644);
    if (fd_ >= 0) ::flock(fd_, exclusive ? LOCK_EX : LOCK_SH);
  }
  ~FileLock() {
    if (fd_ >= 0) {
      ::flock(fd_, LOCK_UN);
      ::close(fd_);
    }
  }
  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;

 private:
  int fd_ = -1;
};

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json opt(const std::optional<std::int64_t>& v) { return v ? json(*v) : json(nullptr); }

std::optional<std::int64_t> opt_int(const json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  return j[key].get<std::int64_t>();
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

CertificateCache::CertificateCache(fs::path dir) : dir_(std::move(dir)) {}

fs::path CertificateCache::resolve_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return *flag;
  if (const char* env = std::getenv("ANTIMAGIC_CACHE_DIR"); env && *env) return env;
  return ".antimagic-cache";
}

CacheRecord CertificateCache::store(const Graph& g, const Certificate& cert,
                                    std::optional<std::int64_t> lower,
                                    std::optional<std::int64_t> upper,
                                    std::optional<std::int64_t> exact) {
  fs::create_directories(dir_ / "certs");
  CacheRecord rec;
  rec.graph_hash = g.content_hash();
  rec.family = g.family();
  rec.lower = lower;
  rec.upper = upper;
  rec.exact = exact;
  rec.certificate_path = "certs/" + rec.graph_hash + "-" + std::to_string(cert.color_count) + ".json";
  rec.created_at = utc_now();

  FileLock lock(dir_ / "records.lock", true);
  {
    const fs::path tmp = dir_ / (rec.certificate_path + ".tmp");
    std::ofstream out(tmp);
    out << certificate_to_json(cert) << '\n';
    out.close();
    fs::rename(tmp, dir_ / rec.certificate_path);
  }
  json line{{"schema_version", kSchemaVersion},
            {"graph_hash", rec.graph_hash},
            {"family", rec.family ? json(*rec.family) : json(nullptr)},
            {"p", g.order()},
            {"q", g.size()},
            {"lower", opt(lower)},
            {"upper", opt(upper)},
            {"exact", opt(exact)},
            {"certificate", rec.certificate_path},
            {"created_at", rec.created_at}};
  std::ofstream log(log_path(), std::ios::app);
  log << line.dump() << '\n';
  return rec;
}

std::map<std::string, CacheRecord> CertificateCache::load() const {
  std::map<std::string, CacheRecord> out;
  if (!fs::exists(log_path())) return out;
  FileLock lock(dir_ / "records.lock", false);
  std::ifstream in(log_path());
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    // A torn final line from a crashed writer is skipped.
    const json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("graph_hash")) continue;
    CacheRecord rec;
    rec.graph_hash = j["graph_hash"].get<std::string>();
    if (j.contains("family") && j["family"].is_string()) rec.family = j["family"].get<std::string>();
    rec.lower = opt_int(j, "lower");
    rec.upper = opt_int(j, "upper");
    rec.exact = opt_int(j, "exact");
    rec.certificate_path = j.value("certificate", "");
    rec.created_at = j.value("created_at", "");
    out[rec.graph_hash] = std::move(rec);
  }
  return out;
}

std::optional<CacheRecord> CertificateCache::lookup(const std::string& graph_hash) const {
  auto all = load();
  auto it = all.find(graph_hash);
  if (it == all.end()) return std::nullopt;
  return it->second;
}

std::optional<Certificate> CertificateCache::verified_certificate(const CacheRecord& record,
                                                                  const Graph& g) const {
  const fs::path path = dir_ / record.certificate_path;
  if (record.certificate_path.empty() || !fs::exists(path)) return std::nullopt;
  try {
    Certificate c = certificate_from_json(read_file(path));
    if (!verify_certificate(c, g) || !c.verdict.local_antimagic()) return std::nullopt;
    return c;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace antimagic::cli
