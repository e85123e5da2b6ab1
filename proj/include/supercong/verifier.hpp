#pragma once

// Claim registry and sweep driver.
//
// Each claim is a congruence "lhs == rhs (mod p^k)" parameterized by a prime
// p, an exponent r, a multiplier m, a size n (part count, depth or weight,
// depending on the claim) and claim-specific extras (a, b, alphas, ...).
// A claim enumerates its instances from a Grid, gates each on the
// statement's hypotheses (violations become Skipped reports) and evaluates
// lhs with the composition-sum / harmonic-sum machinery and rhs from
// Bernoulli numbers and rational constants.

#include "supercong/cache.hpp"
#include "supercong/compsum.hpp"
#include "supercong/modring.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace supercong {

using Extras = std::map<std::string, std::string>;

struct ClaimInstance {
  std::string claim_id;
  u64 p = 0;
  unsigned r = 1;
  u64 m = 1;
  unsigned n = 0;
  Extras extra;

  /// Integer-valued extra; DomainError if absent or malformed.
  i64 extra_int(const std::string& key) const;
  std::string extras_string() const;  // "a=1;b=2", keys sorted

  /// Report ordering: (claim_id, p, r, m, n, extras).
  friend bool operator<(const ClaimInstance& a, const ClaimInstance& b);
};

enum class ClaimStatus { pass, fail, skip, error };
std::string status_name(ClaimStatus s);

enum class ClaimKind { theorem, conjecture };

struct ClaimReport {
  ClaimInstance instance;
  ClaimStatus status = ClaimStatus::skip;
  std::optional<u64> lhs;
  std::optional<u64> rhs;
  std::optional<u64> modulus;
  std::optional<double> elapsed_ms;  // only recorded when timings are requested
  std::string note;
  std::string quote_anchor;
  std::string replay;
};

/// Parameter ranges for a sweep. Absent axes fall back to each claim's own
/// defaults; pinned extras filter the enumerated instances by exact value.
struct Grid {
  std::optional<std::vector<u64>> primes;
  std::optional<std::vector<unsigned>> rs;
  std::optional<std::vector<u64>> ms;
  std::optional<std::vector<unsigned>> ns;
  Extras pinned;
};

/// Shared evaluation services; comp_sum calls go through the optional cache.
class EvalContext {
 public:
  explicit EvalContext(ResidueCache* cache = nullptr) : cache_(cache) {}

  Residue comp_sum(const CompSumSpec& spec, const PrimePowerModulus& modulus);

 private:
  ResidueCache* cache_;
};

struct ClaimEvaluation {
  Residue lhs;
  Residue rhs;
  std::string note;
};

struct Claim {
  std::string id;
  ClaimKind kind = ClaimKind::theorem;
  std::string statement;  // compact formula, emitted as quote_anchor
  std::function<std::vector<ClaimInstance>(const Grid&)> enumerate;
  /// Reason the instance falls outside the statement's hypotheses, if any.
  std::function<std::optional<std::string>(const ClaimInstance&)> hypothesis;
  std::function<ClaimEvaluation(const ClaimInstance&, EvalContext&)> evaluate;
};

class Registry {
 public:
  void add(Claim claim);
  const Claim* find(const std::string& id) const;
  const std::vector<Claim>& claims() const noexcept { return claims_; }
  std::vector<std::string> ids() const;

 private:
  std::vector<Claim> claims_;
};

/// Every registered congruence, as stated.
const Registry& default_registry();

/// Command line (without the program name) that reproduces this instance.
std::string replay_command(const ClaimInstance& instance);

/// Evaluates one instance. Hypothesis violations give skip; exceptions from
/// the arithmetic give error.
ClaimReport verify(const Claim& claim, const ClaimInstance& instance, EvalContext& context, bool timings = false);
ClaimReport verify(const ClaimInstance& instance, EvalContext& context, bool timings = false);

struct SweepOptions {
  unsigned jobs = 1;
  bool timings = false;
  ResidueCache* cache = nullptr;
};

/// Cartesian evaluation of the listed claims over the grid. Reports are
/// sorted by instance key whatever the completion order. DomainError on an
/// unknown claim id.
std::vector<ClaimReport> sweep(const Registry& registry, const std::vector<std::string>& claim_ids,
                               const Grid& grid, const SweepOptions& options = {});

}  // namespace supercong
