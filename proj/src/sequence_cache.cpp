#include "circperm/sequence_cache.hpp"

#include <atomic>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>

#include <unistd.h>

namespace circperm {

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

SequenceCache::SequenceCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path SequenceCache::default_dir() {
  if (const char* d = std::getenv("CIRCPERM_CACHE_DIR"); d && *d) return d;
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return std::filesystem::path(x) / "circperm";
  if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "circperm";
  return std::filesystem::temp_directory_path() / "circperm";
}

std::filesystem::path SequenceCache::path_for(const PatternSet& ps) const {
  return dir_ / (fnv1a_hex(ps.key()) + ".b");
}

std::optional<std::vector<BigInt>> SequenceCache::load(const PatternSet& ps) const {
  std::lock_guard lock(mutex_);
  std::ifstream in(path_for(ps));
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line) || line != "# " + ps.key()) return std::nullopt;
  std::vector<BigInt> terms;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    long n = 0;
    std::string value;
    if (!(ls >> n >> value) || n != static_cast<long>(terms.size()) + 1) return std::nullopt;
    try {
      terms.emplace_back(value);
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  return terms;
}

void SequenceCache::store(const PatternSet& ps, const std::vector<BigInt>& terms) {
  if (terms.empty()) return;
  if (auto old = load(ps); old && old->size() >= terms.size()) return;
  std::lock_guard lock(mutex_);
  std::filesystem::create_directories(dir_);
  static std::atomic<unsigned> counter{0};
  const auto target = path_for(ps);
  auto tmp = target;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(tmp);
    out << "# " << ps.key() << "\n";
    for (std::size_t i = 0; i < terms.size(); ++i) out << i + 1 << " " << terms[i] << "\n";
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw std::runtime_error("sequence cache: cannot write " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace circperm
