#include "supercong/cache.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace supercong {

namespace {

constexpr const char* kHeader = "quantity,p,r,params,residue";

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string item;
  while (std::getline(ss, item, ',')) fields.push_back(item);
  return fields;
}

}  // namespace

ResidueCache::ResidueCache(std::filesystem::path path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) {
    std::ofstream create(path_);
    if (!create) throw std::runtime_error("cannot create cache file " + path_.string());
    create << kHeader << '\n';
    return;
  }
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line == kHeader) continue;
    auto f = split(line);
    if (f.size() != 5) continue;
    try {
      entries_[Key{f[0], std::stoull(f[1]), static_cast<unsigned>(std::stoul(f[2])), f[3]}] = std::stoull(f[4]);
    } catch (const std::exception&) {
      continue;
    }
  }
}

std::optional<u64> ResidueCache::lookup(const std::string& quantity, u64 p, unsigned r,
                                        const std::string& params) const {
  std::lock_guard lock(mutex_);
  auto it = entries_.find(Key{quantity, p, r, params});
  if (it == entries_.end()) {
    ++misses_;
    return std::nullopt;
  }
  ++hits_;
  return it->second;
}

void ResidueCache::store(const std::string& quantity, u64 p, unsigned r, const std::string& params, u64 residue) {
  // params must not contain commas; the CSV has no quoting.
  if (params.find(',') != std::string::npos || quantity.find(',') != std::string::npos) {
    throw std::invalid_argument("cache keys may not contain commas");
  }
  std::lock_guard lock(mutex_);
  auto [it, inserted] = entries_.emplace(Key{quantity, p, r, params}, residue);
  if (!inserted) return;
  std::ofstream out(path_, std::ios::app);
  if (!out) throw std::runtime_error("cannot append to cache file " + path_.string());
  out << quantity << ',' << p << ',' << r << ',' << params << ',' << residue << '\n';
}

std::size_t ResidueCache::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

std::uint64_t ResidueCache::hits() const {
  std::lock_guard lock(mutex_);
  return hits_;
}

std::uint64_t ResidueCache::misses() const {
  std::lock_guard lock(mutex_);
  return misses_;
}

}  // namespace supercong
