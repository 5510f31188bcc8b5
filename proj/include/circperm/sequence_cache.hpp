#pragma once

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "circperm/bigint.hpp"
#include "circperm/permutation.hpp"

namespace circperm {

// 64-bit FNV-1a, as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view data);

// Avoidance sequences on disk, one b-file per reduced pattern set.  The
// file name is the hash of PatternSet::key(); the first line repeats the
// key so that collisions are detected.  Writes go to a temporary file
// that is renamed into place.
class SequenceCache {
 public:
  explicit SequenceCache(std::filesystem::path dir);

  // $CIRCPERM_CACHE_DIR, else $XDG_CACHE_HOME/circperm, else ~/.cache/circperm.
  static std::filesystem::path default_dir();

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(const PatternSet& ps) const;

  // Terms for n = 1..N as stored, or nothing if absent or unreadable.
  std::optional<std::vector<BigInt>> load(const PatternSet& ps) const;
  // Keeps whichever of the stored and the given sequence is longer.
  void store(const PatternSet& ps, const std::vector<BigInt>& terms);

 private:
  std::filesystem::path dir_;
  mutable std::mutex mutex_;
};

}  // namespace circperm
