#include "supercong/mhs.hpp"

#include <charconv>
#include <map>

namespace supercong {

Composition::Composition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  for (unsigned s : parts_) {
    if (s == 0) throw DomainError("composition parts must be positive");
  }
}

Composition Composition::parse(std::string_view text) {
  std::vector<unsigned> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw DomainError("cannot parse composition '" + std::string(text) + "'");
    }
    parts.push_back(v);
    pos = end + 1;
  }
  if (parts.empty()) throw DomainError("empty composition");
  return Composition(std::move(parts));
}

Composition Composition::repeated(unsigned s, unsigned n) {
  return Composition(std::vector<unsigned>(n, s));
}

unsigned Composition::weight() const noexcept {
  unsigned w = 0;
  for (unsigned s : parts_) w += s;
  return w;
}

std::string Composition::str() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

namespace {

// Suffix DP: level[j] accumulates chains formed by the last j parts with all
// indices below the current k.
Residue harmonic_dp(u64 N, const Composition& s, const PrimePowerModulus& mod, bool restricted) {
  const auto& parts = s.parts();
  const std::size_t d = parts.size();
  if (d == 0) return Residue::one(mod);
  std::vector<u64> level(d + 1, 0);
  level[0] = mod.reduce(1);
  std::vector<u64> weight(d);
  for (u64 k = 1; k <= N; ++k) {
    if (!mod.is_unit(k)) {
      if (restricted) continue;
      throw NonUnitError("H_N(s) with N = " + std::to_string(N) + " needs 1/" + std::to_string(k) +
                         " mod " + std::to_string(mod.value()));
    }
    u64 inv_k = mod.inv(k);
    for (std::size_t j = d; j >= 1; --j) {
      u64 w = mod.pow(inv_k, parts[d - j]);
      level[j] = mod.add(level[j], mod.mul(level[j - 1], w));
    }
  }
  return {level[d], mod};
}

}  // namespace

Residue mhs(u64 N, const Composition& s, const PrimePowerModulus& modulus) {
  return harmonic_dp(N, s, modulus, false);
}

Residue mhs_restricted(u64 N, const Composition& s, const PrimePowerModulus& modulus) {
  return harmonic_dp(N, s, modulus, true);
}

Residue restricted_power_sum(u64 limit, unsigned s, const PrimePowerModulus& modulus) {
  u64 acc = 0;
  for (u64 l = 1; l < limit; ++l) {
    if (!modulus.is_unit(l)) continue;
    acc = modulus.add(acc, modulus.pow(modulus.inv(l), s));
  }
  return {acc, modulus};
}

Residue unordered_sum(u64 b, const Composition& alphas, const PrimePowerModulus& modulus) {
  if (b == 0) throw DomainError("unordered_sum needs b >= 1");
  const auto& a = alphas.parts();
  const std::size_t n = a.size();
  if (n == 0) return Residue::one(modulus);
  if (n > kUnorderedSumMaxDepth) {
    throw ScaleError("unordered_sum supports at most " + std::to_string(kUnorderedSumMaxDepth) + " indices");
  }
  const u64 limit = b * modulus.prime();

  std::map<unsigned, u64> power_sums;
  auto power_sum = [&](unsigned s) {
    auto it = power_sums.find(s);
    if (it == power_sums.end()) {
      it = power_sums.emplace(s, restricted_power_sum(limit, s, modulus).value()).first;
    }
    return it->second;
  };

  // (|B| - 1)! for block sizes up to n.
  std::vector<u64> factorial(n + 1, 1);
  for (std::size_t i = 1; i <= n; ++i) factorial[i] = factorial[i - 1] * i;

  // Walk restricted growth strings; block[i] is the block holding index i.
  std::vector<std::size_t> block(n, 0), running_max(n, 0);
  u64 total = 0;
  while (true) {
    std::size_t blocks = running_max[n - 1] + 1;
    std::vector<unsigned> block_weight(blocks, 0);
    std::vector<std::size_t> block_size(blocks, 0);
    for (std::size_t i = 0; i < n; ++i) {
      block_weight[block[i]] += a[i];
      ++block_size[block[i]];
    }
    u64 term = modulus.reduce(1);
    bool negative = false;
    for (std::size_t k = 0; k < blocks; ++k) {
      term = modulus.mul(term, modulus.reduce(factorial[block_size[k] - 1]));
      term = modulus.mul(term, power_sum(block_weight[k]));
      if (block_size[k] % 2 == 0) negative = !negative;
    }
    total = negative ? modulus.sub(total, term) : modulus.add(total, term);

    // Next restricted growth string.
    std::size_t i = n - 1;
    while (i > 0 && block[i] == running_max[i - 1] + 1) --i;
    if (i == 0) break;
    ++block[i];
    running_max[i] = std::max(running_max[i - 1], block[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      block[j] = 0;
      running_max[j] = running_max[i];
    }
  }
  return {total, modulus};
}

Residue unordered_sum_direct(u64 b, const Composition& alphas, const PrimePowerModulus& modulus) {
  if (b == 0) throw DomainError("unordered_sum needs b >= 1");
  const u64 limit = b * modulus.prime();
  std::vector<u64> units;
  for (u64 l = 1; l < limit; ++l) {
    if (modulus.is_unit(l)) units.push_back(l);
  }
  const auto& a = alphas.parts();
  double tuples = 1;
  for (std::size_t i = 0; i < a.size(); ++i) tuples *= static_cast<double>(units.size()) - static_cast<double>(i);
  if (tuples > 5e7) throw ScaleError("direct un-ordered sum would enumerate too many tuples");

  // weights[i][t] = units[t]^{-a[i]}
  std::vector<std::vector<u64>> weights(a.size(), std::vector<u64>(units.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t t = 0; t < units.size(); ++t) weights[i][t] = modulus.pow(modulus.inv(units[t]), a[i]);
  }
  std::vector<bool> used(units.size(), false);
  auto rec = [&](auto&& self, std::size_t depth) -> u64 {
    if (depth == a.size()) return modulus.reduce(1);
    u64 acc = 0;
    for (std::size_t t = 0; t < units.size(); ++t) {
      if (used[t]) continue;
      used[t] = true;
      acc = modulus.add(acc, modulus.mul(weights[depth][t], self(self, depth + 1)));
      used[t] = false;
    }
    return acc;
  };
  return {rec(rec, 0), modulus};
}

}  // namespace supercong
