#include "supercong/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <charconv>
#include <thread>
#include <tuple>

namespace supercong {

i64 ClaimInstance::extra_int(const std::string& key) const {
  auto it = extra.find(key);
  if (it == extra.end()) throw DomainError("instance of " + claim_id + " has no parameter '" + key + "'");
  i64 v = 0;
  const std::string& s = it->second;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw DomainError("parameter " + key + "=" + s + " is not an integer");
  }
  return v;
}

std::string ClaimInstance::extras_string() const {
  std::string out;
  for (const auto& [k, v] : extra) {
    if (!out.empty()) out += ';';
    out += k + "=" + v;
  }
  return out;
}

bool operator<(const ClaimInstance& a, const ClaimInstance& b) {
  return std::tie(a.claim_id, a.p, a.r, a.m, a.n, a.extra) < std::tie(b.claim_id, b.p, b.r, b.m, b.n, b.extra);
}

std::string status_name(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::pass: return "pass";
    case ClaimStatus::fail: return "fail";
    case ClaimStatus::skip: return "skip";
    case ClaimStatus::error: return "error";
  }
  return "?";
}

Residue EvalContext::comp_sum(const CompSumSpec& spec, const PrimePowerModulus& modulus) {
  if (cache_) {
    if (auto hit = cache_->lookup("compsum", modulus.prime(), modulus.exponent(), spec.key())) {
      return {*hit, modulus};
    }
  }
  Residue value = supercong::comp_sum(spec, modulus);
  if (cache_) cache_->store("compsum", modulus.prime(), modulus.exponent(), spec.key(), value.value());
  return value;
}

void Registry::add(Claim claim) {
  if (find(claim.id)) throw DomainError("claim " + claim.id + " registered twice");
  claims_.push_back(std::move(claim));
}

const Claim* Registry::find(const std::string& id) const {
  for (const auto& c : claims_) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

std::vector<std::string> Registry::ids() const {
  std::vector<std::string> out;
  for (const auto& c : claims_) out.push_back(c.id);
  return out;
}

std::string replay_command(const ClaimInstance& instance) {
  std::string cmd = "verify --claims " + instance.claim_id;
  cmd += " --primes " + std::to_string(instance.p) + ".." + std::to_string(instance.p);
  cmd += " --r " + std::to_string(instance.r) + ".." + std::to_string(instance.r);
  cmd += " --m " + std::to_string(instance.m);
  cmd += " --n " + std::to_string(instance.n);
  for (const auto& [k, v] : instance.extra) cmd += " --set " + k + "=" + v;
  return cmd;
}

ClaimReport verify(const Claim& claim, const ClaimInstance& instance, EvalContext& context, bool timings) {
  ClaimReport report;
  report.instance = instance;
  report.quote_anchor = claim.statement;
  report.replay = replay_command(instance);

  auto start = std::chrono::steady_clock::now();
  if (auto reason = claim.hypothesis(instance)) {
    report.status = ClaimStatus::skip;
    report.note = "hypothesis: " + *reason;
  } else {
    try {
      ClaimEvaluation e = claim.evaluate(instance, context);
      report.lhs = e.lhs.value();
      report.rhs = e.rhs.value();
      report.modulus = e.lhs.modulus().value();
      bool ok = e.lhs == e.rhs;
      report.status = ok ? ClaimStatus::pass : ClaimStatus::fail;
      report.note = e.note;
      if (!ok && claim.kind == ClaimKind::conjecture) {
        report.note = report.note.empty() ? "conjecture counterexample" : "conjecture counterexample; " + report.note;
      }
    } catch (const std::exception& ex) {
      report.status = ClaimStatus::error;
      report.lhs.reset();
      report.rhs.reset();
      report.modulus.reset();
      report.note = ex.what();
    }
  }
  if (timings) {
    std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - start;
    report.elapsed_ms = dt.count();
  }
  return report;
}

ClaimReport verify(const ClaimInstance& instance, EvalContext& context, bool timings) {
  const Claim* claim = default_registry().find(instance.claim_id);
  if (!claim) throw DomainError("unknown claim id " + instance.claim_id);
  return verify(*claim, instance, context, timings);
}

std::vector<ClaimReport> sweep(const Registry& registry, const std::vector<std::string>& claim_ids,
                               const Grid& grid, const SweepOptions& options) {
  std::vector<std::pair<const Claim*, ClaimInstance>> work;
  for (const auto& id : claim_ids) {
    const Claim* claim = registry.find(id);
    if (!claim) throw DomainError("unknown claim id " + id);
    for (auto& inst : claim->enumerate(grid)) {
      bool keep = true;
      for (const auto& [k, v] : grid.pinned) {
        auto it = inst.extra.find(k);
        if (it != inst.extra.end() && it->second != v) keep = false;
      }
      if (keep) work.emplace_back(claim, std::move(inst));
    }
  }
  std::sort(work.begin(), work.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  work.erase(std::unique(work.begin(), work.end(),
                         [](const auto& a, const auto& b) { return !(a.second < b.second) && !(b.second < a.second); }),
             work.end());

  std::vector<ClaimReport> reports(work.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    EvalContext context(options.cache);
    for (std::size_t i = next.fetch_add(1); i < work.size(); i = next.fetch_add(1)) {
      reports[i] = verify(*work[i].first, work[i].second, context, options.timings);
    }
  };
  unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1 || work.size() < 2) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  return reports;
}

}  // namespace supercong
