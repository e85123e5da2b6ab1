#include "doctest.h"

#include "supercong/cli.hpp"
#include "supercong/compsum.hpp"
#include "supercong/report.hpp"

#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace supercong;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args, const Registry& reg = default_registry()) {
  std::ostringstream out, err;
  int code = cli::run(args, reg, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split_words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

std::vector<std::string> lines(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

Registry registry_with_false_claim(bool include_false) {
  Registry reg;
  auto constant = [](const char* id, u64 lhs) {
    return Claim{id, ClaimKind::theorem, "x == 1 (mod p)",
                 [id](const Grid& g) {
                   std::vector<ClaimInstance> out;
                   for (u64 p : g.primes ? *g.primes : std::vector<u64>{5, 7}) out.push_back({id, p, 1, 1, 1, {}});
                   return out;
                 },
                 [](const ClaimInstance& i) -> std::optional<std::string> {
                   if (i.p == 5) return "requires p > 5";
                   return std::nullopt;
                 },
                 [lhs](const ClaimInstance& i, EvalContext&) {
                   PrimePowerModulus M(i.p, 1);
                   return ClaimEvaluation{Residue(lhs, M), Residue::one(M), ""};
                 }};
  };
  reg.add(constant("T-TRUE", 1));
  if (include_false) reg.add(constant("T-FALSE", 2));
  return reg;
}

}  // namespace

TEST_SUITE("report") {

TEST_CASE("empty report lists still form valid documents") {
  std::ostringstream csv, json, md;
  emit_report({}, ReportFormat::csv, csv);
  CHECK(csv.str() == "claim_id,p,r,m,n,extra,lhs,rhs,modulus,status,note,quote_anchor,elapsed_ms,replay\n");
  emit_report({}, ReportFormat::json, json);
  CHECK(nlohmann::json::parse(json.str()).empty());
  emit_report({}, ReportFormat::md, md);
  CHECK(md.str().rfind("# Claim reports", 0) == 0);
}

TEST_CASE("one passing row carries the full schema") {
  EvalContext ctx;
  auto rep = verify(ClaimInstance{"EQ-1.1", 11, 1, 1, 3, {}}, ctx);
  std::ostringstream out;
  emit_report({rep}, ReportFormat::json, out);
  auto doc = nlohmann::json::parse(out.str());
  REQUIRE(doc.size() == 1);
  const auto& row = doc[0];
  for (const char* key : {"claim_id", "p", "r", "m", "n", "extra", "lhs", "rhs", "modulus", "status", "note",
                          "quote_anchor", "elapsed_ms", "replay"}) {
    CHECK_MESSAGE(row.contains(key), key);
  }
  CHECK(row["status"] == "pass");
  CHECK(row["modulus"] == 11);
  CHECK(row["elapsed_ms"].is_null());
  CHECK(row["lhs"] == row["rhs"]);
}

TEST_CASE("csv quoting and one markdown table per claim") {
  EvalContext ctx;
  std::vector<ClaimReport> reps{verify(ClaimInstance{"EQ-1.1", 11, 1, 1, 3, {}}, ctx),
                                verify(ClaimInstance{"EQ-1.1", 13, 1, 1, 3, {}}, ctx),
                                verify(ClaimInstance{"EQ-5.1", 11, 1, 2, 5, {}}, ctx)};
  std::ostringstream csv, md;
  emit_report(reps, ReportFormat::csv, csv);
  auto rows = lines(csv.str());
  CHECK(rows.size() == 4);
  CHECK(rows[1].find(",\"sum_{i+j+k=p; i,j,k>0}") != std::string::npos);
  emit_report(reps, ReportFormat::md, md);
  std::string text = md.str();
  CHECK(text.find("## EQ-1.1") != std::string::npos);
  CHECK(text.find("## EQ-5.1") != std::string::npos);
  std::size_t tables = 0;
  for (std::size_t pos = 0; (pos = text.find("| claim_id |", pos)) != std::string::npos; ++pos) ++tables;
  CHECK(tables == 2);
}

TEST_CASE("format names and unwritable paths") {
  CHECK(parse_format("md") == ReportFormat::md);
  CHECK_THROWS_AS(parse_format("xml"), DomainError);
  CHECK_THROWS(emit_report({}, ReportFormat::csv, std::filesystem::path("/nonexistent-dir/x/report.csv")));
}

}  // TEST_SUITE

TEST_SUITE("cli") {

TEST_CASE("list parsing") {
  CHECK(cli::parse_int_list("3") == std::vector<u64>{3});
  CHECK(cli::parse_int_list("1..4") == std::vector<u64>{1, 2, 3, 4});
  CHECK(cli::parse_int_list("1,5..6,9") == std::vector<u64>{1, 5, 6, 9});
  CHECK(cli::parse_prime_list("5..20") == std::vector<u64>{5, 7, 11, 13, 17, 19});
  CHECK_THROWS_AS(cli::parse_int_list("9..3"), DomainError);
  CHECK_THROWS_AS(cli::parse_int_list("a..3"), DomainError);
  CHECK_THROWS_AS(cli::parse_int_list(""), DomainError);
}

TEST_CASE("three-part sum over 5..97 passes on all 23 primes") {
  auto r = run({"verify", "--claims", "EQ-1.1", "--primes", "5..97", "--format", "csv"});
  CHECK(r.code == 0);
  auto rows = lines(r.out);
  CHECK(rows.size() == 24);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].find(",pass,") != std::string::npos);
}

TEST_CASE("compute subcommands") {
  CHECK(run({"compute", "bernoulli", "--k", "4"}).out == "-1/30\n");
  CHECK(run({"compute", "bernoulli", "--k", "4", "--mod-p", "11"}).out == "4\n");
  CHECK(run({"compute", "bernoulli", "--k", "10", "--mod-p", "11"}).code == 2);
  CHECK(run({"compute", "u", "--b", "1", "--alphas", "1,1", "--p", "7", "--r", "2"}).out == "35\n");
  CHECK(run({"compute", "r", "--n", "3", "--m", "1", "--p", "5"}).out == "3\n");
  CHECK(run({"compute", "count", "--n", "3", "--a", "1", "--m", "1", "--p", "5", "--r", "2"}).out == "15\n");
  CHECK(run({"compute", "mhs", "--N", "4", "--s", "1", "--p", "101"}).code == 0);
  CHECK(run({"compute", "s", "--n", "7", "--m", "1", "--p", "11", "--r", "2"}).code == 0);
}

TEST_CASE("oracle subcommands agree with the fast paths") {
  CHECK(run({"oracle", "s", "--n", "5", "--m", "2", "--p", "7"}).out.find(" agree") != std::string::npos);
  CHECK(run({"oracle", "r", "--n", "4", "--m", "3", "--p", "11"}).code == 0);
  CHECK(run({"oracle", "u", "--b", "2", "--alphas", "1,2", "--p", "5", "--r", "2"}).code == 0);
  CHECK(run({"oracle", "mhs", "--N", "25", "--s", "2,1", "--p", "7", "--r", "2", "--restricted"}).code == 0);
}

TEST_CASE("search reports the recovered constant and its bound") {
  auto r = run({"search", "--family", "qd", "--d", "3", "--primes", "7..31"});
  CHECK(r.code == 0);
  CHECK(r.out.find("result: found -2\n") != std::string::npos);
  CHECK(r.out.find("bound: ") != std::string::npos);
  CHECK(run({"search", "--family", "qd", "--d", "9", "--primes", "5..7"}).code == 2);
}

TEST_CASE("usage errors exit 2 and print help") {
  auto none = run({});
  CHECK(none.code == 2);
  CHECK(none.err.find("Usage") != std::string::npos);
  CHECK(run({"verify"}).code == 2);
  CHECK(run({"verify", "--claims", "EQ-1.1", "--format", "xml"}).code == 2);
  CHECK(run({"verify", "--claims", "NOPE"}).code == 2);
  CHECK(run({"verify", "--claims", "EQ-1.1", "--set", "novalue"}).code == 2);
  CHECK(run({"compute", "s", "--n", "3"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("exit code follows the worst outcome") {
  auto good = registry_with_false_claim(false);
  auto bad = registry_with_false_claim(true);
  CHECK(run({"verify", "--claims", "ALL"}, good).code == 0);  // p = 5 rows are skips
  auto r = run({"verify", "--claims", "ALL", "--format", "csv"}, bad);
  CHECK(r.code == 1);
  CHECK(r.err.find("1 fail") != std::string::npos);
  CHECK(run({"verify", "--claims", "T-FALSE", "--primes", "5"}, bad).code == 0);  // only a skip
  CHECK(run({"verify", "--claims", "T-TRUE"}, bad).code == 0);
}

TEST_CASE("every row's replay command reproduces that row") {
  auto full = run({"verify", "--claims", "LEM-2.1,COR-2.2,LEM-3.4", "--primes", "11", "--n", "4", "--format", "csv"});
  auto rows = lines(full.out);
  REQUIRE(rows.size() > 10);
  for (std::size_t i = 1; i < rows.size(); i += 7) {
    std::string replay_field;
    if (rows[i].back() == '"') {
      auto start = rows[i].rfind(",\"verify ");
      REQUIRE(start != std::string::npos);
      replay_field = rows[i].substr(start + 2, rows[i].size() - start - 3);
    } else {
      auto start = rows[i].rfind(",verify ");
      REQUIRE(start != std::string::npos);
      replay_field = rows[i].substr(start + 1);
    }
    auto args = split_words(replay_field);
    args.insert(args.end(), {"--format", "csv"});
    auto replay = run(args);
    auto replay_rows = lines(replay.out);
    REQUIRE(replay_rows.size() == 2);
    CHECK(replay_rows[1] == rows[i]);
  }
}

TEST_CASE("cached reruns are byte-identical and skip every evaluation") {
  auto path = std::filesystem::temp_directory_path() / "supercong_test_cli_cache.csv";
  std::filesystem::remove(path);
  std::vector<std::string> args{"verify", "--claims", "EQ-1.1,EQ-5.2,LEM-2.3-i", "--primes", "11..17",
                                "--cache", path.string(), "--stats"};
  auto first = run(args);
  auto second = run(args);
  CHECK(first.out == second.out);
  CHECK(first.err.find("comp_sum evaluations: 0") == std::string::npos);
  CHECK(second.err.find("comp_sum evaluations: 0\n") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("cache path from the environment") {
  auto path = std::filesystem::temp_directory_path() / "supercong_test_env_cache.csv";
  std::filesystem::remove(path);
  setenv(ResidueCache::kEnvVar, path.string().c_str(), 1);
  run({"verify", "--claims", "EQ-1.1", "--primes", "11"});
  CHECK(std::filesystem::exists(path));
  std::filesystem::remove(path);
  run({"verify", "--claims", "EQ-1.1", "--primes", "11", "--no-cache"});
  CHECK_FALSE(std::filesystem::exists(path));
  unsetenv(ResidueCache::kEnvVar);
}

TEST_CASE("reports written to a file match stdout") {
  auto path = std::filesystem::temp_directory_path() / "supercong_test_report.md";
  auto to_stdout = run({"verify", "--claims", "EQ-5.1", "--primes", "11..13", "--format", "md"});
  run({"verify", "--claims", "EQ-5.1", "--primes", "11..13", "--format", "md", "--out", path.string()});
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  CHECK(s.str() == to_stdout.out);
  std::filesystem::remove(path);
}

}  // TEST_SUITE
