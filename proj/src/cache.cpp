#include "pel/cache.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <unistd.h>
#include <sstream>

namespace pel::cache {

namespace fs = std::filesystem;

std::optional<std::string> directory() {
  if (const char* env = std::getenv("PEL_CACHE_DIR")) {
    if (std::string(env) == "none") return std::nullopt;
    return std::string(env);
  }
  if (const char* home = std::getenv("HOME")) return std::string(home) + "/.cache/pel";
  return std::string(".pel-cache");
}

std::string key_for(const std::string& canonical_spec, uint64_t prime,
                    const std::string& invariant) {
  std::string material = std::string(kEngineVersion) + "|" + canonical_spec + "|" +
                         std::to_string(prime) + "|" + invariant;
  uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char c : material) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << invariant << "-" << std::hex << h;
  return out.str();
}

std::optional<std::string> lookup(const std::string& key) {
  auto dir = directory();
  if (!dir) return std::nullopt;
  std::ifstream in(fs::path(*dir) / key, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void store(const std::string& key, const std::string& value) {
  auto dir = directory();
  if (!dir) return;
  std::error_code ec;
  fs::create_directories(*dir, ec);
  if (ec) return;
  // write-then-rename so concurrent readers never see partial entries
  fs::path final_path = fs::path(*dir) / key;
  fs::path tmp = final_path;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) return;
    out << value;
  }
  fs::rename(tmp, final_path, ec);
  if (ec) fs::remove(tmp, ec);
}

uint64_t clear() {
  auto dir = directory();
  if (!dir) return 0;
  std::error_code ec;
  uint64_t removed = 0;
  for (fs::directory_iterator it(*dir, ec), end; !ec && it != end; it.increment(ec)) {
    if (it->is_regular_file(ec)) {
      fs::remove(it->path(), ec);
      if (!ec) ++removed;
    }
  }
  return removed;
}

}  // namespace pel::cache
