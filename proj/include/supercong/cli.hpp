#pragma once

// Command-line front end.
//
//   verify   --claims ID[,ID..]|ALL [--primes a..b] [--r a..b] [--m ..] [--n ..]
//            [--set key=value]... [--format json|csv|md] [--out FILE]
//            [--cache FILE | --no-cache] [--jobs N] [--timings] [--stats] [--list]
//   compute  bernoulli|mhs|s|r|count|u  (see --help of each)
//   search   --family qd|c|cprime --d D [--m M] --primes a..b [--report]
//   oracle   mhs|s|r|u  (same quantities through the brute-force evaluators)
//
// Exit status: 0 when nothing failed, 1 when a congruence failed, 2 on usage
// errors or when an instance could not be evaluated.

#include "supercong/report.hpp"
#include "supercong/verifier.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace supercong::cli {

/// Integers from "a..b" (inclusive), "a,b,c" or a mix such as "3,5..9".
/// DomainError on malformed input or a reversed range.
std::vector<u64> parse_int_list(const std::string& text);

/// parse_int_list with non-primes dropped.
std::vector<u64> parse_prime_list(const std::string& text);

struct RunConfig {
  std::string subcommand;  // verify | compute | search | oracle
  std::vector<std::string> claim_ids;
  std::optional<std::vector<u64>> primes;
  std::optional<std::vector<unsigned>> rs;
  std::optional<std::vector<u64>> ms;
  std::optional<std::vector<unsigned>> ns;
  Extras pinned;
  ReportFormat format = ReportFormat::json;
  std::optional<std::string> out_path;
  std::optional<std::string> cache_path;
  unsigned jobs = 1;
  bool timings = false;
  bool stats = false;
};

/// Runs one invocation. `args` excludes the program name. Claims are looked
/// up in `registry`, which lets tests inject their own.
int run(const std::vector<std::string>& args, const Registry& registry, std::ostream& out, std::ostream& err);

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return run(args, default_registry(), out, err);
}

}  // namespace supercong::cli
