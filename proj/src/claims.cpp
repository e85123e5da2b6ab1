// The registered congruences, encoded as stated, including the ones that
// turn out to be false. Bounds that go beyond a statement's own hypotheses
// say so in the skip reason.

#include "supercong/bernoulli.hpp"
#include "supercong/compsum.hpp"
#include "supercong/mhs.hpp"
#include "supercong/verifier.hpp"

#include <optional>

namespace supercong {

namespace {

using Reason = std::optional<std::string>;

std::vector<u64> primes_between(u64 lo, u64 hi) {
  std::vector<u64> out;
  for (u64 q = lo; q <= hi; ++q) {
    if (is_prime(q)) out.push_back(q);
  }
  return out;
}

template <typename T>
std::vector<T> range(T lo, T hi) {
  std::vector<T> out;
  for (T v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

struct Defaults {
  std::vector<u64> primes;
  std::vector<unsigned> rs{1};
  std::vector<u64> ms{1};
  std::vector<unsigned> ns{0};
};

enum Axis : unsigned { kR = 1, kM = 2, kN = 4 };

// Cartesian product over the axes a claim uses; unused axes keep the first
// default value. `extras` expands each point into extra-parameter variants.
std::vector<ClaimInstance> product(const std::string& id, const Grid& g, const Defaults& d, unsigned axes,
                                   const std::function<std::vector<Extras>(const ClaimInstance&)>& extras = {}) {
  const auto& primes = g.primes ? *g.primes : d.primes;
  std::vector<unsigned> rs = (axes & kR) && g.rs ? *g.rs : (axes & kR) ? d.rs : std::vector<unsigned>{d.rs.front()};
  std::vector<u64> ms = (axes & kM) && g.ms ? *g.ms : (axes & kM) ? d.ms : std::vector<u64>{d.ms.front()};
  std::vector<unsigned> ns = (axes & kN) && g.ns ? *g.ns : (axes & kN) ? d.ns : std::vector<unsigned>{d.ns.front()};
  std::vector<ClaimInstance> out;
  for (u64 p : primes) {
    for (unsigned r : rs) {
      for (u64 m : ms) {
        for (unsigned n : ns) {
          ClaimInstance inst{id, p, r, m, n, {}};
          if (!extras) {
            out.push_back(inst);
            continue;
          }
          for (auto& e : extras(inst)) {
            inst.extra = e;
            out.push_back(inst);
          }
        }
      }
    }
  }
  return out;
}

// Helpers for right-hand sides.

Rational factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return Rational(f);
}

Residue bern(u64 p, i64 k) {
  if (k < 0) throw DomainError("negative Bernoulli index " + std::to_string(k));
  return bernoulli_mod_p(static_cast<unsigned>(k), p);
}

/// c * B mod p, lifted by p^j into the instance modulus.
Residue times_bern(const Rational& c, u64 p, i64 k, unsigned j, const PrimePowerModulus& target) {
  PrimePowerModulus mod_p(p, 1);
  Residue cofactor = rational_to_residue(c, mod_p) * bern(p, k);
  return scale_by_prime_power(cofactor, j, target);
}

Rational sign(unsigned e) { return e % 2 ? Rational(-1) : Rational(1); }

Reason need(bool ok, const char* what) { return ok ? Reason{} : Reason{what}; }

// All compositions (ordered) of w.
std::vector<std::vector<unsigned>> compositions(unsigned w) {
  std::vector<std::vector<unsigned>> out;
  if (w == 0) return out;
  for (u64 mask = 0; mask < (u64{1} << (w - 1)); ++mask) {
    std::vector<unsigned> parts;
    unsigned run = 1;
    for (unsigned i = 0; i + 1 < w; ++i) {
      if (mask >> i & 1) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    out.push_back(std::move(parts));
  }
  return out;
}

std::string join(const std::vector<unsigned>& v) { return Composition(v).str(); }

// Predicted U_b(alphas): mod p^3 for odd weight, mod p^2 for even weight.
Residue unordered_prediction(u64 b, const Composition& alphas, const PrimePowerModulus& target) {
  const u64 p = target.prime();
  const unsigned w = alphas.weight();
  const unsigned n = static_cast<unsigned>(alphas.depth());
  if (w % 2 == 1) {
    Rational c = sign(n) * factorial(n - 1) * Rational(BigInt(b * b) * w * (w + 1), BigInt(2) * (w + 2));
    return times_bern(c, p, static_cast<i64>(p) - w - 2, 2, target);
  }
  Rational c = sign(n - 1) * factorial(n - 1) * Rational(BigInt(b) * w, BigInt(w + 1));
  return times_bern(c, p, static_cast<i64>(p) - w - 1, 1, target);
}

// Sum over a + b + c = (n-3)/2, a, b, c >= 1 of
// B_{p-2a-1} B_{p-2b-1} B_{p-2c-1} / ((2a+1)(2b+1)(2c+1)), mod p.
Residue triple_bernoulli(unsigned n, u64 p) {
  PrimePowerModulus mod_p(p, 1);
  Residue acc = Residue::zero(mod_p);
  const unsigned total = (n - 3) / 2;
  for (unsigned a = 1; a <= total; ++a) {
    for (unsigned b = 1; a + b < total; ++b) {
      unsigned c = total - a - b;
      Residue t = bern(p, static_cast<i64>(p) - 2 * a - 1) * bern(p, static_cast<i64>(p) - 2 * b - 1) *
                  bern(p, static_cast<i64>(p) - 2 * c - 1);
      acc += t * rational_to_residue(Rational(BigInt(1), BigInt((2 * a + 1) * (2 * b + 1) * (2 * c + 1))), mod_p);
    }
  }
  return acc;
}

Residue poly_in_m(std::initializer_list<std::pair<int, unsigned>> terms, u64 m, const PrimePowerModulus& mod) {
  BigInt v = 0;
  for (auto [coef, e] : terms) v += BigInt(coef) * boost::multiprecision::pow(BigInt(m), e);
  return {mod.reduce(v), mod};
}

PrimePowerModulus mod_of(u64 p, unsigned r) { return PrimePowerModulus(p, r); }

// ---------------------------------------------------------------------------

void add_intro_claims(Registry& reg) {
  reg.add(Claim{
      "EQ-1.1", ClaimKind::theorem, "sum_{i+j+k=p; i,j,k>0} 1/(ijk) == -2 B_{p-3} (mod p)",
      [](const Grid& g) { return product("EQ-1.1", g, {primes_between(5, 97), {1}, {1}, {3}}, 0); },
      [](const ClaimInstance& i) { return need(i.p >= 3, "requires p >= 3"); },
      [](const ClaimInstance& i, EvalContext& ctx) {
        auto M = mod_of(i.p, 1);
        return ClaimEvaluation{ctx.comp_sum(CompSumSpec::r_type(3, 1, i.p), M),
                               times_bern(Rational(-2), i.p, static_cast<i64>(i.p) - 3, 0, M), ""};
      }});

  reg.add(Claim{
      "EQ-1.2", ClaimKind::theorem,
      "sum_{l_1+..+l_d=p^r; l_i in P_p} 1/(l_1..l_d) == q_d p^{r-1} B_{p-d} (mod p^r), q_3=-2, q_5=-5!/6",
      [](const Grid& g) { return product("EQ-1.2", g, {{7, 11, 13, 17}, {2, 3}, {1}, {3, 5}}, kR | kN); },
      [](const ClaimInstance& i) -> Reason {
        if (i.n != 3 && i.n != 5) return "q_d is known only for d in {3, 5}";
        if (i.r < 2) return "requires r >= 2";
        return need(i.p > i.n, "requires p > d");
      },
      [](const ClaimInstance& i, EvalContext& ctx) {
        auto M = mod_of(i.p, i.r);
        Rational q = i.n == 3 ? Rational(-2) : Rational(-20);
        return ClaimEvaluation{ctx.comp_sum(CompSumSpec::unbounded(i.n, 1, i.p, i.r), M),
                               times_bern(q, i.p, static_cast<i64>(i.p) - i.n, i.r - 1, M), ""};
      }});

  reg.add(Claim{
      "THM-1.1-i", ClaimKind::theorem,
      "sum_{l_1+..+l_7=mp; l_i in P_p} 1/(l_1..l_7) == -(504m+210m^3+6m^5) B_{p-7} (mod p)",
      [](const Grid& g) { return product("THM-1.1-i", g, {primes_between(11, 47), {1}, {1, 2, 3}, {7}}, kM); },
      [](const ClaimInstance& i) -> Reason {
        if (i.p <= 7) return "requires p > 7";
        return need(i.m % i.p != 0, "requires p not dividing m");
      },
      [](const ClaimInstance& i, EvalContext& ctx) {
        auto M = mod_of(i.p, 1);
        Residue c = -poly_in_m({{504, 1}, {210, 3}, {6, 5}}, i.m, M);
        return ClaimEvaluation{ctx.comp_sum(CompSumSpec::unbounded(7, i.m, i.p, 1), M),
                               c * bern(i.p, static_cast<i64>(i.p) - 7), ""};
      }});

  reg.add(Claim{
      "THM-1.1-ii", ClaimKind::theorem,
      "sum_{l_1+..+l_7=mp^r; l_i in P_p} 1/(l_1..l_7) == -(7!/10) m p^{r-1} B_{p-7} (mod p^r), r >= 2",
      [](const Grid& g) { return product("THM-1.1-ii", g, {{11, 13}, {2, 3}, {1, 2}, {7}}, kR | kM); },
      [](const ClaimInstance& i) -> Reason {
        if (i.p <= 7) return "requires p > 7";
        if (i.m % i.p == 0) return "requires p not dividing m";
        return need(i.r >= 2, "requires r >= 2");
      },
      [](const ClaimInstance& i, EvalContext& ctx) {
        auto M = mod_of(i.p, i.r);
        Rational c = -factorial(7) / 10 * Rational(BigInt(i.m));
        return ClaimEvaluation{ctx.comp_sum(CompSumSpec::unbounded(7, i.m, i.p, i.r), M),
                               times_bern(c, i.p, static_cast<i64>(i.p) - 7, i.r - 1, M), ""};
      }});

  reg.add(Claim{
      "EQ-1.3", ClaimKind::theorem, "S_n^(1)(p^{r+1}) == p S_n^(1)(p^r) (mod p^{r+1}), r >= 2",
      [](const Grid& g) { return product("EQ-1.3", g, {{11, 13}, {2}, {1}, {7}}, kR | kN); },
      [](const ClaimInstance& i) -> Reason {
        if (i.r < 2) return "requires r >= 2";
        if (i.n < 2) return "requires n >= 2";
        return need(i.p > i.n, "requires p > n");
      },
      [](const ClaimInstance& i, EvalContext& ctx) {
        auto M = mod_of(i.p, i.r + 1);
        Residue upper = ctx.comp_sum(CompSumSpec::s_type(i.n, 1, i.p, i.r + 1), M);
        Residue lower = ctx.comp_sum(CompSumSpec::s_type(i.n, 1, i.p, i.r), M);
        return ClaimEvaluation{upper, Residue(i.p, M) * lower, ""};
      }});
}

void add_counting_claims(Registry& reg) {
  reg.add(Claim{
      "LEM-2.1", ClaimKind::theorem,
      "C^(m)_{a,p}(n) == (-1)^{m-1} binom(n-2,m-1) gamma_n(a) p (mod p^2), gamma_n(a)=(-1)^{a-1}/(a binom(n-1,a))",
      [](const Grid& g) {
        std::vector<ClaimInstance> out;
        const auto primes = g.primes ? *g.primes : std::vector<u64>{11, 13, 17};
        const auto ns = g.ns ? *g.ns : range<unsigned>(3, 9);
        for (u64 p : primes) {
          for (unsigned n : ns) {
            const auto ms = g.ms ? *g.ms : range<u64>(1, n > 1 ? n - 1 : 1);
            for (u64 m : ms) {
              for (unsigned a = 1; a + 1 <= std::max(n, 2u); ++a) {
                out.push_back({"LEM-2.1", p, 1, m, n, {{"a", std::to_string(a)}}});
              }
            }
          }
        }
        return out;
      },
      [](const ClaimInstance& i) -> Reason {
        i64 a = i.extra_int("a");
        if (i.n < 2 || a < 1 || a > static_cast<i64>(i.n) - 1) return "requires 1 <= a <= n - 1";
        if (i.m < 1) return "requires m >= 1";
        Rational g = gamma_n(static_cast<unsigned>(a), i.n);
        return need(denominator_of(g) % i.p != 0, "gamma_n(a) has p in its denominator");
      },
      [](const ClaimInstance& i, EvalContext&) {
        auto M = mod_of(i.p, 2);
        const unsigned a = static_cast<unsigned>(i.extra_int("a"));
        Rational c = sign(static_cast<unsigned>((i.m - 1) % 2)) * Rational(binomial(i.n - 2, i.m - 1)) * gamma_n(a, i.n);
        PrimePowerModulus mod_p(i.p, 1);
        return ClaimEvaluation{count_solutions(a, i.m, i.n, i.p, M),
                               scale_by_prime_power(rational_to_residue(c, mod_p), 1, M), ""};
      }});

  struct Difference {
    u64 m;
    unsigned a, a2;
    int num, den;
  };
  static const std::vector<Difference> differences{
      {2, 1, 6, -5, 3}, {3, 1, 6, 10, 3}, {3, 2, 5, -2, 3}, {2, 2, 5, 1, 3}, {3, 3, 4, 1, 3}, {2, 3, 4, -1, 6}};
  reg.add(Claim{
      "COR-2.2", ClaimKind::theorem,
      "n=7: C^(2)_1-C^(2)_6 == -(5/3)p, C^(3)_1-C^(3)_6 == (10/3)p, C^(3)_2-C^(3)_5 == -(2/3)p, "
      "C^(2)_2-C^(2)_5 == (1/3)p, C^(3)_3-C^(3)_4 == (1/3)p, C^(2)_3-C^(2)_4 == -(1/6)p (mod p^2)",
      [](const Grid& g) {
        std::vector<ClaimInstance> out;
        const auto primes = g.primes ? *g.primes : std::vector<u64>{11, 13, 17};
        for (u64 p : primes) {
          for (const auto& d : differences) {
            if (g.ms && std::find(g.ms->begin(), g.ms->end(), d.m) == g.ms->end()) continue;
            out.push_back({"COR-2.2", p, 1, d.m, 7, {{"a", std::to_string(d.a)}, {"a2", std::to_string(d.a2)}}});
          }
        }
        return out;
      },
      [](const ClaimInstance& i) { return need(i.p >= 7, "requires p >= 7 (gamma_7 denominators)"); },
      [](const ClaimInstance& i, EvalContext&) {
        auto M = mod_of(i.p, 2);
        const auto a = i.extra_int("a"), a2 = i.extra_int("a2");
        Rational v;
        for (const auto& d : differences) {
          if (d.m == i.m && d.a == a && d.a2 == a2) v = Rational(d.num, d.den);
        }
        Residue lhs = count_solutions(a, i.m, 7, i.p, M) - count_solutions(a2, i.m, 7, i.p, M);
        return ClaimEvaluation{lhs, scale_by_prime_power(rational_to_residue(v, mod_of(i.p, 1)), 1, M), ""};
      }});

  reg.add(Claim{
      "LEM-2.3-i", ClaimKind::theorem, "S_n^(k)(p^r) == (-1)^n S_n^(n-k)(p^r) (mod p^r), 1 <= k <= n-1, p > n",
      [](const Grid& g) {
        return product("LEM-2.3-i", g, {{11, 13}, {1, 2}, {1}, range<unsigned>(3, 8)}, kR | kN,
                       [](const ClaimInstance& base) {
                         std::vector<Extras> out;
                         for (unsigned k = 1; k < base.n; ++k) out.push_back({{"k", std::to_string(k)}});
                         return out;
                       });
      },
      [](const ClaimInstance& i) -> Reason {
        i64 k = i.extra_int("k");
        if (k < 1 || k > static_cast<i64>(i.n) - 1) return "requires 1 <= k <= n - 1";
        return need(i.p > i.n, "requires p > n");
      },
      [](const ClaimInstance& i, EvalContext& ctx) {
        auto M = mod_of(i.p, i.r);
        const u64 k = static_cast<u64>(i.extra_int("k"));
        Residue lhs = ctx.comp_sum(CompSumSpec::s_type(i.n, k, i.p, i.r), M);
        Residue mirror = ctx.comp_sum(CompSumSpec::s_type(i.n, i.n - k, i.p, i.r), M);
        return ClaimEvaluation{lhs, i.n % 2 ? -mirror : mirror, ""};
      }});

  reg.add(Claim{
      "LEM-2.3-ii", ClaimKind::theorem,
      "S_n^(m)(p^{r+1}) == sum_{a=1}^{n-1} C^(m)_{a,p}(n) S_n^(a)(p^r) (mod p^{r+1}), p > n",
      [](const Grid& g) { return product("LEM-2.3-ii", g, {{11}, {1, 2}, {1, 2, 3}, {7}}, kR | kM | kN); },
      [](const ClaimInstance& i) -> Reason {
        if (i.n < 2) return "requires n >= 2";
        if (i.m < 1) return "requires m >= 1";
        return need(i.p > i.n, "requires p > n");
      },
      [](const ClaimInstance& i, EvalContext& ctx) {
        auto M = mod_of(i.p, i.r + 1);
        Residue lhs = ctx.comp_sum(CompSumSpec::s_type(i.n, i.m, i.p, i.r + 1), M);
        Residue rhs = Residue::zero(M);
        for (unsigned a = 1; a < i.n; ++a) {
          rhs += count_solutions(a, i.m, i.n, i.p, M) * ctx.comp_sum(CompSumSpec::s_type(i.n, a, i.p, i.r), M);
        }
        return ClaimEvaluation{lhs, rhs, ""};
      }});
}

void add_harmonic_claims(Registry& reg) {
  // n is the weight for the un-ordered sum claims.
  auto alphas_of_weight = [](const ClaimInstance& base) {
    std::vector<Extras> out;
    for (const auto& c : compositions(base.n)) out.push_back({{"alphas", join(c)}});
    return out;
  };
  auto unordered_hypothesis = [](const ClaimInstance& i) -> Reason {
    if (i.p < 5) return "requires p >= 5";
    Composition alphas = Composition::parse(i.extra.at("alphas"));
    if (alphas.weight() != i.n) return "alphas must have weight n";
    return need(alphas.weight() + 3 <= i.p, "requires weight <= p - 3");
  };
  auto unordered_eval = [](const ClaimInstance& i, u64 b) {
    Composition alphas = Composition::parse(i.extra.at("alphas"));
    auto M = mod_of(i.p, alphas.weight() % 2 ? 3 : 2);
    return ClaimEvaluation{unordered_sum(b, alphas, M), unordered_prediction(b, alphas, M), ""};
  };

  reg.add(Claim{
      "LEM-3.1", ClaimKind::theorem,
      "U_1(alphas) == (-1)^n (n-1)! w(w+1)/(2(w+2)) B_{p-w-2} p^2 (mod p^3) for odd weight w; "
      "(-1)^{n-1} (n-1)! w/(w+1) B_{p-w-1} p (mod p^2) for even w; w <= p-3",
      [alphas_of_weight](const Grid& g) {
        return product("LEM-3.1", g, {primes_between(11, 31), {1}, {1}, range<unsigned>(1, 8)}, kN, alphas_of_weight);
      },
      unordered_hypothesis, [unordered_eval](const ClaimInstance& i, EvalContext&) { return unordered_eval(i, 1); }});

  reg.add(Claim{
      "COR-3.2", ClaimKind::theorem,
      "H({alpha}^n) == (-1)^n alpha(n alpha+1)/(2(n alpha+2)) B_{p-n alpha-2} p^2 (mod p^3) for odd n alpha; "
      "(-1)^{n-1} alpha/(n alpha+1) B_{p-n alpha-1} p (mod p^2) for even n alpha",
      [](const Grid& g) {
        return product("COR-3.2", g, {primes_between(11, 31), {1}, {1}, range<unsigned>(1, 8)}, kN,
                       [](const ClaimInstance& base) {
                         std::vector<Extras> out;
                         for (unsigned a = 1; base.n * a <= 8; ++a) out.push_back({{"alpha", std::to_string(a)}});
                         return out;
                       });
      },
      [](const ClaimInstance& i) -> Reason {
        i64 alpha = i.extra_int("alpha");
        if (i.n < 1 || alpha < 1) return "requires n, alpha >= 1";
        return need(static_cast<u64>(i.n * alpha) + 3 <= i.p, "requires n alpha <= p - 3 (added bound)");
      },
      [](const ClaimInstance& i, EvalContext&) {
        const unsigned alpha = static_cast<unsigned>(i.extra_int("alpha"));
        const unsigned w = i.n * alpha;
        auto M = mod_of(i.p, w % 2 ? 3 : 2);
        Residue lhs = mhs(i.p - 1, Composition::repeated(alpha, i.n), M);
        Residue rhs = w % 2 ? times_bern(sign(i.n) * Rational(BigInt(alpha) * (w + 1), BigInt(2) * (w + 2)), i.p,
                                         static_cast<i64>(i.p) - w - 2, 2, M)
                            : times_bern(sign(i.n - 1) * Rational(BigInt(alpha), BigInt(w + 1)), i.p,
                                         static_cast<i64>(i.p) - w - 1, 1, M);
        return ClaimEvaluation{lhs, rhs, ""};
      }});

  reg.add(Claim{
      "LEM-3.3", ClaimKind::theorem,
      "R_n^(1)(p) == -(n-1)! B_{p-n} (mod p) for odd n; -(n n!/(n+1)) B_{p-n-1} p (mod p^2) for even n; p > n+1",
      [](const Grid& g) { return product("LEM-3.3", g, {primes_between(11, 31), {1}, {1}, range<unsigned>(2, 9)}, kN); },
      [](const ClaimInstance& i) -> Reason {
        if (i.n < 2) return "requires n > 1";
        return need(i.p > i.n + 1, "requires p > n + 1");
      },
      [](const ClaimInstance& i, EvalContext& ctx) {
        if (i.n % 2) {
          auto M = mod_of(i.p, 1);
          return ClaimEvaluation{ctx.comp_sum(CompSumSpec::r_type(i.n, 1, i.p), M),
                                 times_bern(-factorial(i.n - 1), i.p, static_cast<i64>(i.p) - i.n, 0, M), ""};
        }
        auto M = mod_of(i.p, 2);
        Rational c = -Rational(BigInt(i.n)) * factorial(i.n) / Rational(i.n + 1);
        return ClaimEvaluation{ctx.comp_sum(CompSumSpec::r_type(i.n, 1, i.p), M),
                               times_bern(c, i.p, static_cast<i64>(i.p) - i.n - 1, 1, M), ""};
      }});

  reg.add(Claim{
      "LEM-3.4", ClaimKind::theorem,
      "U_b(alphas) == (-1)^n (n-1)! b^2 w(w+1)/(2(w+2)) B_{p-w-2} p^2 (mod p^3) for odd weight w; "
      "(-1)^{n-1} (n-1)! b w/(w+1) B_{p-w-1} p (mod p^2) for even w; w <= p-3",
      [alphas_of_weight](const Grid& g) {
        return product("LEM-3.4", g, {primes_between(11, 31), {1}, {1}, range<unsigned>(1, 8)}, kN,
                       [alphas_of_weight](const ClaimInstance& base) {
                         std::vector<Extras> out;
                         for (auto e : alphas_of_weight(base)) {
                           for (unsigned b = 1; b <= 3; ++b) {
                             e["b"] = std::to_string(b);
                             out.push_back(e);
                           }
                         }
                         return out;
                       });
      },
      [unordered_hypothesis](const ClaimInstance& i) -> Reason {
        if (i.extra_int("b") < 1) return "requires b >= 1";
        return unordered_hypothesis(i);
      },
      [unordered_eval](const ClaimInstance& i, EvalContext&) {
        return unordered_eval(i, static_cast<u64>(i.extra_int("b")));
      }});

  reg.add(Claim{
      "LEM-3.5", ClaimKind::theorem, "R_n^(2)(p) == -((n+1)/2) (n-1)! B_{p-n} (mod p), n odd",
      [](const Grid& g) { return product("LEM-3.5", g, {primes_between(11, 31), {1}, {2}, {3, 5, 7, 9}}, kN); },
      [](const ClaimInstance& i) -> Reason {
        if (i.n % 2 == 0) return "requires odd n";
        if (i.n < 3) return "requires n >= 3 (B_{p-1} has a pole at p)";
        return need(i.p > i.n + 1, "requires p > n + 1 (added bound)");
      },
      [](const ClaimInstance& i, EvalContext& ctx) {
        auto M = mod_of(i.p, 1);
        Rational c = -Rational(i.n + 1, 2) * factorial(i.n - 1);
        return ClaimEvaluation{ctx.comp_sum(CompSumSpec::r_type(i.n, 2, i.p), M),
                               times_bern(c, i.p, static_cast<i64>(i.p) - i.n, 0, M), ""};
      }});

  reg.add(Claim{
      "COR-3.6", ClaimKind::theorem, "S_n^(2)(p) == ((n-1)/2) (n-1)! B_{p-n} (mod p), n odd >= 5, p > n",
      [](const Grid& g) { return product("COR-3.6", g, {primes_between(11, 31), {1}, {2}, {5, 7, 9}}, kN); },
      [](const ClaimInstance& i) -> Reason {
        if (i.n % 2 == 0 || i.n < 5) return "requires odd n >= 5";
        return need(i.p > i.n, "requires p > n");
      },
      [](const ClaimInstance& i, EvalContext& ctx) {
        auto M = mod_of(i.p, 1);
        Rational c = Rational(i.n - 1, 2) * factorial(i.n - 1);
        return ClaimEvaluation{ctx.comp_sum(CompSumSpec::s_type(i.n, 2, i.p, 1), M),
                               times_bern(c, i.p, static_cast<i64>(i.p) - i.n, 0, M), ""};
      }});

  auto three_p_hypothesis = [](const ClaimInstance& i) -> Reason {
    if (i.n % 2 == 0 || i.n < 3) return "requires odd n >= 3";
    return need(i.p >= std::max<u64>(i.n, 5), "requires p >= max(n, 5)");
  };
  reg.add(Claim{
      "LEM-3.7", ClaimKind::theorem,
      "R_n^(3)(p) == -(1/n) binom(n+2,3) (n-1)! B_{p-n} - (n!/6) sum_{a+b+c=(n-3)/2; a,b,c>=1} "
      "B_{p-2a-1} B_{p-2b-1} B_{p-2c-1}/((2a+1)(2b+1)(2c+1)) (mod p)",
      [](const Grid& g) { return product("LEM-3.7", g, {primes_between(11, 31), {1}, {3}, {3, 5, 7, 9}}, kN); },
      three_p_hypothesis,
      [](const ClaimInstance& i, EvalContext& ctx) {
        auto M = mod_of(i.p, 1);
        Rational c = -Rational(binomial(i.n + 2, 3), BigInt(i.n)) * factorial(i.n - 1);
        Residue rhs = times_bern(c, i.p, static_cast<i64>(i.p) - i.n, 0, M) -
                      rational_to_residue(factorial(i.n) / 6, M) * triple_bernoulli(i.n, i.p);
        return ClaimEvaluation{ctx.comp_sum(CompSumSpec::r_type(i.n, 3, i.p), M), rhs, ""};
      }});

  reg.add(Claim{
      "COR-3.8", ClaimKind::theorem,
      "S_n^(3)(p) == -(1/n) binom(n,3) (n-1)! B_{p-n} - (n!/6) sum_{a+b+c=(n-3)/2; a,b,c>=1} "
      "B_{p-2a-1} B_{p-2b-1} B_{p-2c-1}/((2a+1)(2b+1)(2c+1)) (mod p)",
      [](const Grid& g) { return product("COR-3.8", g, {primes_between(11, 31), {1}, {3}, {3, 5, 7, 9}}, kN); },
      three_p_hypothesis,
      [](const ClaimInstance& i, EvalContext& ctx) {
        auto M = mod_of(i.p, 1);
        Rational c = -Rational(binomial(i.n, 3), BigInt(i.n)) * factorial(i.n - 1);
        Residue rhs = times_bern(c, i.p, static_cast<i64>(i.p) - i.n, 0, M) -
                      rational_to_residue(factorial(i.n) / 6, M) * triple_bernoulli(i.n, i.p);
        return ClaimEvaluation{ctx.comp_sum(CompSumSpec::s_type(i.n, 3, i.p, 1), M), rhs, ""};
      }});
}

void add_seven_part_claims(Registry& reg) {
  reg.add(Claim{
      "PROP-4.1", ClaimKind::theorem,
      "S_7^(1)(p^r) == -(7!/10) B_{p-7} p^{r-1} (mod p^r), r >= 2, p > 7 (r is the exponent of the sum)",
      [](const Grid& g) { return product("PROP-4.1", g, {{11, 13}, {2, 3}, {1}, {7}}, kR); },
      [](const ClaimInstance& i) -> Reason {
        if (i.p <= 7) return "requires p > 7";
        return need(i.r >= 2, "requires r >= 2");
      },
      [](const ClaimInstance& i, EvalContext& ctx) {
        auto M = mod_of(i.p, i.r);
        return ClaimEvaluation{ctx.comp_sum(CompSumSpec::s_type(7, 1, i.p, i.r), M),
                               times_bern(-factorial(7) / 10, i.p, static_cast<i64>(i.p) - 7, i.r - 1, M), ""};
      }});

  reg.add(Claim{
      "EQ-4.1", ClaimKind::theorem,
      "sum_{l_1+..+l_7=mp^r; l_i in P_p} 1/(l_1..l_7) == sum_{a=1}^{6} binom(m+6-a,6) S_7^(a)(p^r) (mod p^r)",
      [](const Grid& g) { return product("EQ-4.1", g, {{11}, {1, 2}, {1, 2, 3}, {7}}, kR | kM); },
      [](const ClaimInstance& i) -> Reason {
        if (i.p <= 7) return "requires p > 7";
        if (i.m < 1) return "requires m >= 1";
        return need(i.m % i.p != 0, "requires p not dividing m");
      },
      [](const ClaimInstance& i, EvalContext& ctx) {
        auto M = mod_of(i.p, i.r);
        Residue rhs = Residue::zero(M);
        for (unsigned a = 1; a <= 6; ++a) {
          Residue c(M.reduce(binomial(i.m + 6 - a, 6)), M);
          rhs += c * ctx.comp_sum(CompSumSpec::s_type(7, a, i.p, i.r), M);
        }
        return ClaimEvaluation{ctx.comp_sum(CompSumSpec::unbounded(7, i.m, i.p, i.r), M), rhs, ""};
      }});
}

void add_remark_claims(Registry& reg) {
  auto depth_one_hypothesis = [](const ClaimInstance& i) -> Reason {
    if (i.n % 2 == 0 || i.n < 3) return "requires odd d >= 3";
    if (i.m != 1 && i.m != 2) return "constants are stated for m in {1, 2}";
    return need(i.p > i.n, "requires p > d");
  };
  reg.add(Claim{
      "EQ-5.1", ClaimKind::theorem, "S_d^(m)(p) == c_{d,m} (d-1)! B_{p-d} (mod p), c_{d,1}=-1, c_{d,2}=(d-1)/2",
      [](const Grid& g) { return product("EQ-5.1", g, {primes_between(11, 31), {1}, {1, 2}, {3, 5, 7, 9}}, kM | kN); },
      depth_one_hypothesis,
      [](const ClaimInstance& i, EvalContext& ctx) {
        auto M = mod_of(i.p, 1);
        Rational c = i.m == 1 ? Rational(-1) : Rational(i.n - 1, 2);
        return ClaimEvaluation{ctx.comp_sum(CompSumSpec::s_type(i.n, i.m, i.p, 1), M),
                               times_bern(c * factorial(i.n - 1), i.p, static_cast<i64>(i.p) - i.n, 0, M), ""};
      }});

  reg.add(Claim{
      "EQ-5.2", ClaimKind::theorem,
      "R_d^(m)(p) == c'_{d,m} (d-1)! B_{p-d} (mod p), c'_{d,1}=-1, c'_{d,2}=-(d+1)/2",
      [](const Grid& g) { return product("EQ-5.2", g, {primes_between(11, 31), {1}, {1, 2}, {3, 5, 7, 9}}, kM | kN); },
      depth_one_hypothesis,
      [](const ClaimInstance& i, EvalContext& ctx) {
        auto M = mod_of(i.p, 1);
        Rational c = i.m == 1 ? Rational(-1) : -Rational(i.n + 1, 2);
        return ClaimEvaluation{ctx.comp_sum(CompSumSpec::r_type(i.n, i.m, i.p), M),
                               times_bern(c * factorial(i.n - 1), i.p, static_cast<i64>(i.p) - i.n, 0, M), ""};
      }});

  auto conj_hypothesis = [](const ClaimInstance& i) -> Reason {
    if (i.p < 11) return "requires p >= 11";
    if (i.m < 1) return "requires m >= 1";
    return need(i.m % i.p != 0, "requires p not dividing m");
  };
  auto conj_enumerate = [](const char* id, unsigned weight) {
    return [id, weight](const Grid& g) {
      return product(id, g, {primes_between(11, 31), {1}, range<u64>(1, 4), {weight}}, kM);
    };
  };

  reg.add(Claim{
      "CONJ-5.1-w8", ClaimKind::conjecture,
      "R_8^(m)(p) == (112/5) m (m^2+16)(m^2-1) B_{p-3} B_{p-5} (mod p), p >= 11", conj_enumerate("CONJ-5.1-w8", 8),
      conj_hypothesis,
      [](const ClaimInstance& i, EvalContext& ctx) {
        auto M = mod_of(i.p, 1);
        Residue poly = poly_in_m({{1, 5}, {15, 3}, {-16, 1}}, i.m, M);  // m (m^2+16)(m^2-1)
        Residue rhs = rational_to_residue(Rational(112, 5), M) * poly * bern(i.p, i.p - 3) * bern(i.p, i.p - 5);
        return ClaimEvaluation{ctx.comp_sum(CompSumSpec::r_type(8, i.m, i.p), M), rhs, ""};
      }});

  reg.add(Claim{
      "CONJ-5.1-w9", ClaimKind::conjecture,
      "R_9^(m)(p) == -(8!/18) binom(m+2,5) B_{p-3}^3 - 8m(m^6+126m^4+1869m^2+3044) B_{p-9} (mod p), p >= 11",
      conj_enumerate("CONJ-5.1-w9", 9), conj_hypothesis,
      [](const ClaimInstance& i, EvalContext& ctx) {
        auto M = mod_of(i.p, 1);
        Residue b3 = bern(i.p, i.p - 3);
        Residue first = rational_to_residue(-factorial(8) / 18 * Rational(binomial(i.m + 2, 5)), M) * b3 * b3 * b3;
        Residue second = poly_in_m({{8, 7}, {8 * 126, 5}, {8 * 1869, 3}, {8 * 3044, 1}}, i.m, M) * bern(i.p, i.p - 9);
        return ClaimEvaluation{ctx.comp_sum(CompSumSpec::r_type(9, i.m, i.p), M), first - second, ""};
      }});

  reg.add(Claim{
      "CONJ-5.1-w10", ClaimKind::conjecture,
      "R_10^(m)(p) == -(24/35) m (m^4+71m^2+540)(m^2-1) (50 B_{p-3} B_{p-7} + 21 B_{p-5}^2) (mod p), p >= 11",
      conj_enumerate("CONJ-5.1-w10", 10), conj_hypothesis,
      [](const ClaimInstance& i, EvalContext& ctx) {
        auto M = mod_of(i.p, 1);
        // m (m^4+71m^2+540)(m^2-1) = m^7 + 70 m^5 + 469 m^3 - 540 m
        Residue poly = poly_in_m({{1, 7}, {70, 5}, {469, 3}, {-540, 1}}, i.m, M);
        Residue b5 = bern(i.p, i.p - 5);
        Residue mix = Residue(50, M) * bern(i.p, i.p - 3) * bern(i.p, i.p - 7) + Residue(21, M) * b5 * b5;
        Residue rhs = rational_to_residue(Rational(-24, 35), M) * poly * mix;
        return ClaimEvaluation{ctx.comp_sum(CompSumSpec::r_type(10, i.m, i.p), M), rhs, ""};
      }});
}

}  // namespace

const Registry& default_registry() {
  static const Registry registry = [] {
    Registry reg;
    add_intro_claims(reg);
    add_counting_claims(reg);
    add_harmonic_claims(reg);
    add_seven_part_claims(reg);
    add_remark_claims(reg);
    return reg;
  }();
  return registry;
}

}  // namespace supercong
