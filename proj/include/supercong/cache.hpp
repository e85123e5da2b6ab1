#pragma once

// Residue cache backed by an append-only CSV file
//
//   quantity,p,r,params,residue
//
// Lookups are exact matches on (quantity, p, r, params). The file is read
// once at construction and each miss that gets stored is appended
// immediately, so interrupted sweeps keep what they computed.

#include "supercong/modring.hpp"

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>

namespace supercong {

class ResidueCache {
 public:
  /// Opens (or creates) the cache file. Malformed lines are ignored.
  explicit ResidueCache(std::filesystem::path path);

  std::optional<u64> lookup(const std::string& quantity, u64 p, unsigned r, const std::string& params) const;
  void store(const std::string& quantity, u64 p, unsigned r, const std::string& params, u64 residue);

  std::size_t size() const;
  std::uint64_t hits() const;
  std::uint64_t misses() const;

  const std::filesystem::path& path() const noexcept { return path_; }

  /// Environment variable naming the default cache file.
  static constexpr const char* kEnvVar = "SUPERCONG_CACHE";

 private:
  using Key = std::tuple<std::string, u64, unsigned, std::string>;

  std::filesystem::path path_;
  mutable std::mutex mutex_;
  std::map<Key, u64> entries_;
  mutable std::uint64_t hits_ = 0;
  mutable std::uint64_t misses_ = 0;
};

}  // namespace supercong
