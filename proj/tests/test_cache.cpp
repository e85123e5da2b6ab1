#include "doctest.h"

#include "supercong/cache.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace supercong;

namespace {

std::filesystem::path scratch(const std::string& name) {
  auto path = std::filesystem::temp_directory_path() / ("supercong_test_" + name + ".csv");
  std::filesystem::remove(path);
  return path;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_SUITE("cache") {

TEST_CASE("new file gets a header and entries persist across instances") {
  auto path = scratch("persist");
  {
    ResidueCache cache(path);
    CHECK(cache.size() == 0);
    CHECK(!cache.lookup("compsum", 11, 2, "n=7;N=121;bound=121"));
    cache.store("compsum", 11, 2, "n=7;N=121;bound=121", 77);
    CHECK(cache.lookup("compsum", 11, 2, "n=7;N=121;bound=121") == 77u);
    CHECK(cache.hits() == 1);
    CHECK(cache.misses() == 1);
  }
  CHECK(slurp(path) == "quantity,p,r,params,residue\ncompsum,11,2,n=7;N=121;bound=121,77\n");
  ResidueCache again(path);
  CHECK(again.size() == 1);
  CHECK(again.lookup("compsum", 11, 2, "n=7;N=121;bound=121") == 77u);
  // exact match only
  CHECK(!again.lookup("compsum", 11, 3, "n=7;N=121;bound=121"));
  CHECK(!again.lookup("compsum", 11, 2, "n=7;N=121"));
  std::filesystem::remove(path);
}

TEST_CASE("malformed lines are ignored") {
  auto path = scratch("malformed");
  {
    std::ofstream out(path);
    out << "quantity,p,r,params,residue\ngarbage\ncompsum,x,1,k,3\ncompsum,7,1,k,5\n";
  }
  ResidueCache cache(path);
  CHECK(cache.size() == 1);
  CHECK(cache.lookup("compsum", 7, 1, "k") == 5u);
  std::filesystem::remove(path);
}

}  // TEST_SUITE
