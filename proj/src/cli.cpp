#include "supercong/cli.hpp"

#include "supercong/bernoulli.hpp"
#include "supercong/cache.hpp"
#include "supercong/compsum.hpp"
#include "supercong/mhs.hpp"
#include "supercong/ratrecon.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <memory>
#include <thread>

namespace supercong::cli {

namespace {

u64 parse_u64(std::string_view s) {
  u64 v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw DomainError("'" + std::string(s) + "' is not a non-negative integer");
  }
  return v;
}

template <typename T>
std::vector<T> narrow(const std::vector<u64>& values) {
  std::vector<T> out;
  for (u64 v : values) {
    if (v > std::numeric_limits<T>::max()) throw DomainError(std::to_string(v) + " is out of range");
    out.push_back(static_cast<T>(v));
  }
  return out;
}

// Options of the single-quantity commands, shared by compute and oracle.
struct QuantityArgs {
  u64 N = 0, p = 0, m = 1, b = 1, k = 0;
  unsigned r = 1, n = 0;
  i64 a = 0;
  std::string s, alphas;
  bool restricted = false;
  std::optional<u64> mod_p;
};

CLI::App* add_mhs(CLI::App& parent, QuantityArgs& q) {
  auto* c = parent.add_subcommand("mhs", "multiple harmonic sum H_N(s) mod p^r");
  c->add_option("--N", q.N, "upper summation limit")->required();
  c->add_option("--s", q.s, "exponents, e.g. 1,1,2")->required();
  c->add_option("--p", q.p, "prime")->required();
  c->add_option("--r", q.r, "exponent of the modulus")->capture_default_str();
  c->add_flag("--restricted", q.restricted, "restrict every index to integers prime to p");
  return c;
}

CLI::App* add_s(CLI::App& parent, QuantityArgs& q) {
  auto* c = parent.add_subcommand("s", "S_n^(m)(p^r): parts below p^r summing to m p^r, mod p^r");
  c->add_option("--n", q.n, "number of parts")->required();
  c->add_option("--m", q.m, "multiplier")->capture_default_str();
  c->add_option("--p", q.p, "prime")->required();
  c->add_option("--r", q.r, "exponent")->capture_default_str();
  return c;
}

CLI::App* add_r(CLI::App& parent, QuantityArgs& q) {
  auto* c = parent.add_subcommand("r", "R_n^(m)(p): unbounded parts summing to m p, mod p");
  c->add_option("--n", q.n, "number of parts")->required();
  c->add_option("--m", q.m, "multiplier")->capture_default_str();
  c->add_option("--p", q.p, "prime")->required();
  return c;
}

CLI::App* add_u(CLI::App& parent, QuantityArgs& q) {
  auto* c = parent.add_subcommand("u", "U_b(alphas): distinct indices below b p, mod p^r");
  c->add_option("--b", q.b, "range multiplier")->capture_default_str();
  c->add_option("--alphas", q.alphas, "exponents, e.g. 1,2")->required();
  c->add_option("--p", q.p, "prime")->required();
  c->add_option("--r", q.r, "exponent of the modulus")->capture_default_str();
  return c;
}

// Exact sum over N >= k_1 > ... > k_d > 0 by enumeration.
void mhs_enumerate(u64 upper, const std::vector<unsigned>& s, std::size_t depth, u64 p, bool restricted,
                   const Rational& partial, Rational& total) {
  if (depth == s.size()) {
    total += partial;
    return;
  }
  const u64 remaining = s.size() - depth;
  for (u64 k = upper; k >= remaining; --k) {
    if (restricted && k % p == 0) continue;
    BigInt denom = boost::multiprecision::pow(BigInt(k), s[depth]);
    mhs_enumerate(k - 1, s, depth + 1, p, restricted, partial / Rational(denom), total);
  }
}

Residue mhs_bruteforce(u64 N, const Composition& s, u64 p, bool restricted, const PrimePowerModulus& M) {
  constexpr double kMaxTuples = 2e6;
  double tuples = 1;
  for (std::size_t i = 0; i < s.depth(); ++i) tuples = tuples * double(N - i) / double(i + 1);
  if (tuples > kMaxTuples) throw ScaleError("brute-force harmonic sum would enumerate too many tuples");
  Rational total = 0;
  if (s.depth() <= N) mhs_enumerate(N, s.parts(), 0, p, restricted, Rational(1), total);
  if (s.empty()) total = 1;
  return rational_to_residue(total, M);
}

struct Evaluated {
  Residue fast;
  std::optional<Residue> brute;
};

Evaluated evaluate_quantity(const std::string& which, const QuantityArgs& q, bool oracle) {
  if (which == "mhs") {
    PrimePowerModulus M(q.p, q.r);
    Composition s = Composition::parse(q.s);
    Residue fast = q.restricted ? mhs_restricted(q.N, s, M) : mhs(q.N, s, M);
    if (!oracle) return {fast, {}};
    return {fast, mhs_bruteforce(q.N, s, q.p, q.restricted, M)};
  }
  if (which == "s" || which == "r") {
    CompSumSpec spec = which == "s" ? CompSumSpec::s_type(q.n, q.m, q.p, q.r) : CompSumSpec::r_type(q.n, q.m, q.p);
    Residue fast = comp_sum(spec);
    if (!oracle) return {fast, {}};
    return {fast, comp_sum_bruteforce(spec)};
  }
  if (which == "u") {
    PrimePowerModulus M(q.p, q.r);
    Composition alphas = Composition::parse(q.alphas);
    Residue fast = unordered_sum(q.b, alphas, M);
    if (!oracle) return {fast, {}};
    return {fast, unordered_sum_direct(q.b, alphas, M)};
  }
  if (which == "count") {
    return {count_solutions(q.a, q.m, q.n, q.p, PrimePowerModulus(q.p, q.r)), {}};
  }
  throw DomainError("unknown quantity " + which);
}

const CLI::App* deepest(const CLI::App* app) {
  for (const auto* sub : app->get_subcommands()) return deepest(sub);
  return app;
}

int usage_error(const CLI::App& app, const std::string& message, std::ostream& err) {
  err << "error: " << message << "\n\n" << deepest(&app)->help();
  return 2;
}

int run_verify(const RunConfig& cfg, bool list, const Registry& registry, std::ostream& out, std::ostream& err) {
  if (list) {
    for (const auto& c : registry.claims()) {
      out << c.id << '\t' << (c.kind == ClaimKind::conjecture ? "conjecture" : "theorem") << '\t' << c.statement
          << '\n';
    }
    return 0;
  }
  std::vector<std::string> ids;
  for (const auto& id : cfg.claim_ids) {
    if (id == "ALL") {
      for (const auto& all : registry.ids()) ids.push_back(all);
    } else {
      ids.push_back(id);
    }
  }

  Grid grid{cfg.primes, cfg.rs, cfg.ms, cfg.ns, cfg.pinned};
  std::unique_ptr<ResidueCache> cache;
  if (cfg.cache_path) cache = std::make_unique<ResidueCache>(*cfg.cache_path);

  const auto evaluations_before = comp_sum_evaluations();
  SweepOptions options{cfg.jobs, cfg.timings, cache.get()};
  auto reports = sweep(registry, ids, grid, options);

  if (cfg.out_path) {
    emit_report(reports, cfg.format, std::filesystem::path(*cfg.out_path));
  } else {
    emit_report(reports, cfg.format, out);
  }

  ReportTally t = tally(reports);
  err << reports.size() << " instances: " << t.pass << " pass, " << t.fail << " fail, " << t.skip << " skip, "
      << t.error << " error";
  if (t.conjecture_fail) err << " (" << t.conjecture_fail << " conjecture counterexamples)";
  err << '\n';
  if (cfg.stats) {
    err << "comp_sum evaluations: " << comp_sum_evaluations() - evaluations_before << '\n';
    if (cache) {
      err << "cache " << cache->path().string() << ": " << cache->hits() << " hits, " << cache->misses()
          << " misses, " << cache->size() << " entries\n";
    }
  }
  if (t.error) return 2;
  return t.fail ? 1 : 0;
}

int run_search(const std::string& family_name_arg, unsigned d, u64 m, const std::vector<u64>& primes, bool report,
               std::ostream& out) {
  ConstantFamily family = parse_family(family_name_arg);
  HuntResult h = hunt_constant(family, d, m, primes);
  const auto& res = h.result;
  out << "family " << family_name(family) << " d=" << d << " m=" << m << '\n';
  out << "method: modular rational reconstruction in lieu of PSLQ\n";
  out << "primes used: " << h.observations.size() - h.held_out << " fitted, " << h.held_out
      << " held out for checking, " << h.skipped.size() << " skipped\n";
  out << "combined modulus: " << res.combined_modulus << " (" << res.combined_modulus.str().size() << " digits)\n";
  out << "bound: " << res.bound << " (" << res.bound.str().size() << " digits)\n";
  if (res.found()) {
    out << "result: found " << to_string(res.candidate) << '\n';
  } else {
    out << "result: not found (no fraction with numerator and denominator up to the bound";
    out << (h.rejected ? " agrees with the held-out primes)\n" : ")\n");
  }
  if (h.rejected) out << "rejected candidate: " << to_string(*h.rejected) << '\n';
  if (report) {
    for (const auto& o : h.observations) out << "  p=" << o.p << " normalized=" << o.value << '\n';
    for (const auto& s : h.skipped) out << "  p=" << s.p << " skipped: " << s.reason << '\n';
  }
  return 0;
}

}  // namespace

std::vector<u64> parse_int_list(const std::string& text) {
  std::vector<u64> out;
  std::string_view rest = text;
  while (true) {
    auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    auto dots = item.find("..");
    if (dots == std::string_view::npos) {
      out.push_back(parse_u64(item));
    } else {
      u64 lo = parse_u64(item.substr(0, dots)), hi = parse_u64(item.substr(dots + 2));
      if (lo > hi) throw DomainError("reversed range '" + std::string(item) + "'");
      if (hi - lo > 1'000'000) throw DomainError("range '" + std::string(item) + "' is too long");
      for (u64 v = lo; v <= hi; ++v) out.push_back(v);
    }
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

std::vector<u64> parse_prime_list(const std::string& text) {
  std::vector<u64> out;
  for (u64 v : parse_int_list(text)) {
    if (is_prime(v)) out.push_back(v);
  }
  return out;
}

int run(const std::vector<std::string>& args, const Registry& registry, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multiple harmonic sum congruence verifier", "supercong"};
  app.require_subcommand(1);

  RunConfig cfg;
  cfg.jobs = std::max(1u, std::thread::hardware_concurrency());

  // verify
  std::string primes_text, r_text, m_text, n_text, format_text = "json", cache_text;
  std::vector<std::string> sets;
  bool list = false, no_cache = false;
  auto* verify = app.add_subcommand("verify", "check registered congruences over a parameter grid");
  verify->add_option("--claims", cfg.claim_ids, "claim ids, comma separated, or ALL")->delimiter(',');
  verify->add_option("--primes", primes_text, "primes as a..b or a list; non-primes are dropped");
  verify->add_option("--r", r_text, "exponents r");
  verify->add_option("--m", m_text, "multipliers m");
  verify->add_option("--n", n_text, "sizes n (parts, depth or weight depending on the claim)");
  verify->add_option("--set", sets, "pin a claim parameter, key=value (repeatable)")->allow_extra_args(false);
  verify->add_option("--format", format_text, "json, csv or md")->capture_default_str();
  verify->add_option("--out", cfg.out_path, "write the report here instead of stdout");
  verify->add_option("--cache", cache_text, std::string("residue cache file (default: $") + ResidueCache::kEnvVar + ")");
  verify->add_flag("--no-cache", no_cache, "ignore the cache environment variable");
  verify->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--timings", cfg.timings, "record elapsed_ms per instance (output is no longer byte-stable)");
  verify->add_flag("--stats", cfg.stats, "print evaluation and cache counters to stderr");
  verify->add_flag("--list", list, "list registered claims and exit");

  // compute
  QuantityArgs cq;
  auto* compute = app.add_subcommand("compute", "evaluate a single quantity");
  compute->require_subcommand(1);
  auto* bern = compute->add_subcommand("bernoulli", "B_k exactly, or mod a prime");
  bern->add_option("--k", cq.k, "index")->required();
  bern->add_option("--mod-p", cq.mod_p, "reduce modulo this prime");
  add_mhs(*compute, cq);
  add_s(*compute, cq);
  add_r(*compute, cq);
  add_u(*compute, cq);
  auto* count = compute->add_subcommand("count", "C^(m)_{a,p}(n) mod p^r");
  count->add_option("--n", cq.n, "number of variables")->required();
  count->add_option("--a", cq.a, "offset a")->required();
  count->add_option("--m", cq.m, "multiplier")->capture_default_str();
  count->add_option("--p", cq.p, "prime")->required();
  count->add_option("--r", cq.r, "exponent of the modulus");

  // search
  std::string family_text, search_primes;
  unsigned search_d = 0;
  u64 search_m = 1;
  bool search_report = false;
  auto* search = app.add_subcommand("search", "recover a rational constant from residues mod many primes");
  search->add_option("--family", family_text, "qd, c or cprime")->required();
  search->add_option("--d", search_d, "depth d")->required();
  search->add_option("--m", search_m, "multiplier")->capture_default_str();
  search->add_option("--primes", search_primes, "primes as a..b or a list")->required();
  search->add_flag("--report", search_report, "list the per-prime observations");

  // oracle
  QuantityArgs oq;
  auto* oracle = app.add_subcommand("oracle", "evaluate through the brute-force evaluators and compare");
  oracle->require_subcommand(1);
  add_mhs(*oracle, oq);
  add_s(*oracle, oq);
  add_r(*oracle, oq);
  add_u(*oracle, oq);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << deepest(&app)->help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    return usage_error(app, e.what(), err);
  }

  try {
    if (verify->parsed()) {
      cfg.subcommand = "verify";
      cfg.format = parse_format(format_text);
      if (!list && cfg.claim_ids.empty()) return usage_error(app, "--claims is required", err);
      if (!primes_text.empty()) cfg.primes = parse_prime_list(primes_text);
      if (!r_text.empty()) cfg.rs = narrow<unsigned>(parse_int_list(r_text));
      if (!m_text.empty()) cfg.ms = parse_int_list(m_text);
      if (!n_text.empty()) cfg.ns = narrow<unsigned>(parse_int_list(n_text));
      for (const auto& kv : sets) {
        auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) return usage_error(app, "--set expects key=value, got " + kv, err);
        cfg.pinned[kv.substr(0, eq)] = kv.substr(eq + 1);
      }
      if (!cache_text.empty()) {
        cfg.cache_path = cache_text;
      } else if (const char* env = std::getenv(ResidueCache::kEnvVar); env && *env && !no_cache) {
        cfg.cache_path = env;
      }
      return run_verify(cfg, list, registry, out, err);
    }
    if (compute->parsed()) {
      if (bern->parsed()) {
        if (cq.k > std::numeric_limits<unsigned>::max()) throw DomainError("k is out of range");
        if (cq.mod_p) {
          out << bernoulli_mod_p(static_cast<unsigned>(cq.k), *cq.mod_p).value() << '\n';
        } else {
          out << to_string(bernoulli_exact(static_cast<unsigned>(cq.k))) << '\n';
        }
        return 0;
      }
      out << evaluate_quantity(deepest(compute)->get_name(), cq, false).fast.value() << '\n';
      return 0;
    }
    if (search->parsed()) {
      return run_search(family_text, search_d, search_m, parse_prime_list(search_primes), search_report, out);
    }
    if (oracle->parsed()) {
      Evaluated e = evaluate_quantity(deepest(oracle)->get_name(), oq, true);
      bool agree = e.fast == *e.brute;
      out << "fast=" << e.fast.value() << " brute=" << e.brute->value() << " modulus=" << e.fast.modulus().value()
          << (agree ? " agree" : " DISAGREE") << '\n';
      return agree ? 0 : 1;
    }
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return 2;
  }
  return usage_error(app, "no subcommand", err);
}

}  // namespace supercong::cli
