#include <doctest.h>

#include <cstdio>
#include <unistd.h>
#include <filesystem>
#include <fstream>

#include "kromatic/graph6.hpp"
#include "kromatic/search.hpp"
#include "kromatic/verify.hpp"

using namespace kromatic;

namespace {

Graph complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

struct TempFile {
  std::filesystem::path path;
  TempFile() {
    path = std::filesystem::temp_directory_path() /
           ("kromatic-test-" + std::to_string(::getpid()) + ".tsv");
    std::filesystem::remove(path);
  }
  ~TempFile() { std::filesystem::remove(path); }
};

}  // namespace

TEST_CASE("no collisions at small vertex counts") {
  CHECK(search_equal_ksf(4).empty());
  CHECK(search_equal_ksf(5).empty());
  CHECK(search_equal_ksf(6).empty());
  CHECK_THROWS_AS(search_equal_ksf(0), capacity_error);
}

TEST_CASE("pair verification record") {
  const VerifyRecord same = verify_pair(complete(3), complete(3), 5);
  CHECK(same.fingerprints_equal);
  CHECK(!same.nonisomorphic);
  CHECK(same.truncated_series_equal);
  CHECK(same.csf_equal);

  const VerifyRecord diff = verify_pair(complete(2), Graph(2), 4);
  CHECK(!diff.fingerprints_equal);
  CHECK(diff.nonisomorphic);
  CHECK(!diff.truncated_series_equal);
  CHECK(!diff.csf_equal);

  CHECK_THROWS_AS(verify_pair(complete(2), complete(3), 4), input_error);
}

TEST_CASE("fingerprint cache is idempotent") {
  TempFile tmp;
  const std::size_t first = cache_fingerprints(generate_all(4), tmp.path.string());
  CHECK(first == 11);
  CHECK(cache_fingerprints(generate_all(4), tmp.path.string()) == 0);
  // appending a smaller level adds only the new keys
  CHECK(cache_fingerprints(generate_all(3), tmp.path.string()) == 4);

  std::ifstream in(tmp.path);
  std::string line;
  std::size_t lines = 0;
  while (std::getline(in, line)) {
    ++lines;
    const auto tab = line.find('\t');
    REQUIRE(tab != std::string::npos);
    CHECK(line.size() - tab - 1 == 32);
    CHECK_NOTHROW(graph6_decode(line.substr(0, tab)));
  }
  CHECK(lines == 15);
}

TEST_CASE("corrupt cache lines are fatal with a line number") {
  TempFile tmp;
  {
    std::ofstream out(tmp.path);
    out << "C~\t0123456789abcdef0123456789abcdef\n";
    out << "garbage without a tab\n";
  }
  try {
    cache_fingerprints(generate_all(3), tmp.path.string());
    FAIL("expected input_error");
  } catch (const input_error& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}
