// Command-line front end: generation, fingerprints, collision search,
// constructions, instance scans, and identity suites.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "kromatic/canonical.hpp"
#include "kromatic/constructions.hpp"
#include "kromatic/generate.hpp"
#include "kromatic/graph6.hpp"
#include "kromatic/independence.hpp"
#include "kromatic/search.hpp"
#include "kromatic/verify.hpp"

using nlohmann::json;
using namespace kromatic;

namespace {

std::vector<Graph> read_graph_lines(const std::string& path) {
  std::istream* in = &std::cin;
  std::ifstream file;
  if (!path.empty() && path != "-") {
    file.open(path);
    if (!file) throw input_error("cannot open " + path);
    in = &file;
  }
  std::stringstream buf;
  buf << in->rdbuf();
  return graph6_read_lines(buf.str());
}

std::string cache_dir() {
  const char* dir = std::getenv("KROMATIC_CACHE_DIR");
  return dir ? std::string(dir) : std::string();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for the K-theoretic chromatic symmetric function"};
  app.require_subcommand(1);

  int gen_n = 5;
  auto* gen = app.add_subcommand("gen", "emit all n-vertex graphs, canonical graph6");
  gen->add_option("--n", gen_n, "vertex count")->check(CLI::Range(1, kMaxGenerateVertices));

  std::string fp_in;
  int fp_n = 0;
  auto* fp = app.add_subcommand(
      "fingerprint", "canonical graph6 and fingerprint digest per input graph");
  fp->add_option("--in", fp_in, "graph6 file, - for stdin");
  fp->add_option("--n", fp_n,
                 "fingerprint every n-vertex graph instead of reading input "
                 "(cached under KROMATIC_CACHE_DIR when set)")
      ->check(CLI::Range(1, kMaxGenerateVertices));

  int search_n = 8, search_d = 0;
  auto* search = app.add_subcommand("search-equal-ksf",
                                    "equal-fingerprint pairs among n-vertex graphs");
  search->add_option("--n", search_n, "vertex count")
      ->check(CLI::Range(1, kMaxGenerateVertices));
  search->add_option("--degree", search_d,
                     "also verify each pair's truncated series at this bound");

  int iu_n = 5;
  auto* iu = app.add_subcommand("indunique-count",
                                "graphs whose independence polynomial is unshared");
  iu->add_option("--n", iu_n, "vertex count")->check(CLI::Range(1, kMaxGenerateVertices));

  std::string census_pattern, census_in;
  auto* census = app.add_subcommand("census", "induced copies of a pattern per graph");
  census->add_option("--pattern", census_pattern, "pattern graph6")->required();
  census->add_option("--in", census_in, "graph6 file, - for stdin")->required();

  std::string con_op, con_g, con_h;
  int con_v = 0;
  auto* con = app.add_subcommand("construct", "combine graphs, emit graph6");
  con->add_option("--op", con_op, "union|join|attach-except|attach-vertex|split")
      ->required()
      ->check(CLI::IsMember({"union", "join", "attach-except", "attach-vertex", "split"}));
  con->add_option("--g", con_g, "first graph6")->required();
  con->add_option("--with", con_h, "second graph6 (unused for split)");
  con->add_option("--v", con_v, "excepted/target vertex for attach ops");

  int os_max = 6;
  auto* fos = app.add_subcommand("find-os", "edge-swap instances as JSON lines");
  fos->add_option("--max-n", os_max, "largest vertex count scanned")
      ->check(CLI::Range(4, kMaxGenerateVertices));

  int acsz_max = 6;
  auto* facsz = app.add_subcommand("find-acsz", "hat-swap instances as JSON lines");
  facsz->add_option("--max-n", acsz_max, "largest vertex count scanned")
      ->check(CLI::Range(2, kMaxGenerateVertices));

  std::string suite;
  int suite_max = 0;
  auto* verify = app.add_subcommand("verify", "run an identity suite; exit 0 iff it passes");
  verify->add_option("--suite", suite, "f-identity|join|union|clan|attach|os|split")
      ->required()
      ->check(CLI::IsMember({"f-identity", "join", "union", "clan", "attach", "os", "split"}));
  verify->add_option("--max-n", suite_max, "override the suite's default bound");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      for (const Graph& g : all_graphs(gen_n)) std::cout << graph6_encode(g) << '\n';
    } else if (fp->parsed()) {
      if (fp_n > 0) {
        const std::string dir = cache_dir();
        if (!dir.empty()) {
          const std::string path = dir + "/fingerprints-n" + std::to_string(fp_n) + ".tsv";
          const std::size_t written = cache_fingerprints(generate_all(fp_n), path);
          std::cerr << written << " new entries in " << path << '\n';
        }
        for (const Graph& g : all_graphs(fp_n))
          std::cout << graph6_encode(g) << '\t'
                    << fingerprint_digest_hex(ksf_fingerprint(g)) << '\n';
      } else {
        for (const Graph& g : read_graph_lines(fp_in))
          std::cout << graph6_encode(canonical_form(g).graph) << '\t'
                    << fingerprint_digest_hex(ksf_fingerprint(g)) << '\n';
      }
    } else if (search->parsed()) {
      for (const PairReport& r : search_equal_ksf(search_n)) {
        json rec{{"g1", r.g1},
                 {"g2", r.g2},
                 {"n", r.n},
                 {"fingerprint_digest", r.fingerprint_digest},
                 {"nonisomorphic", r.nonisomorphic},
                 {"vertex_pair_count", r.vertex_pair_count}};
        if (r.min_edge_deletions)
          rec["min_edge_deletions"] = *r.min_edge_deletions;
        else
          rec["min_edge_deletions"] = nullptr;
        if (search_d > 0) {
          const VerifyRecord v =
              verify_pair(graph6_decode(r.g1), graph6_decode(r.g2), search_d);
          rec["truncated_series_equal"] = v.truncated_series_equal;
          rec["csf_equal"] = v.csf_equal;
        }
        std::cout << rec.dump() << '\n';
      }
    } else if (iu->parsed()) {
      std::cout << independence_unique_count(iu_n) << '\n';
    } else if (census->parsed()) {
      const Graph pattern = graph6_decode(census_pattern);
      for (const Graph& g : read_graph_lines(census_in)) {
        json rec{{"g6", graph6_encode(g)}, {"count", count_induced_copies(g, pattern)}};
        std::cout << rec.dump() << '\n';
      }
    } else if (con->parsed()) {
      const Graph g = graph6_decode(con_g);
      Graph out;
      if (con_op == "split") {
        out = split_graph(g);
      } else {
        if (con_h.empty()) throw input_error("--with is required for op " + con_op);
        const Graph h = graph6_decode(con_h);
        if (con_op == "union")
          out = disjoint_union(g, h);
        else if (con_op == "join")
          out = join(g, h);
        else if (con_op == "attach-except")
          out = attach_except(g, con_v, h);
        else
          out = attach_to_vertex(g, con_v, h);
      }
      std::cout << graph6_encode(out) << '\n';
    } else if (fos->parsed()) {
      for (const OSInstance& inst : find_os_instances(os_max)) {
        const auto [left, right] = os_claw_margin(inst);
        json rec{{"g6", graph6_encode(inst.g)},
                 {"vertices", {inst.u, inst.v, inst.w, inst.z}},
                 {"kind", "os"},
                 {"distinguishing", os_phi_pointwise(inst) && left != right}};
        std::cout << rec.dump() << '\n';
      }
    } else if (facsz->parsed()) {
      for (const ACSZInstance& inst : find_acsz_instances(acsz_max)) {
        json rec{{"g6", graph6_encode(inst.g)},
                 {"vertices", {inst.u, inst.v, inst.uprime, inst.vprime}},
                 {"kind", "acsz"},
                 {"distinguishing", check_acsz_distinguishing(inst)}};
        std::cout << rec.dump() << '\n';
      }
    } else if (verify->parsed()) {
      const SuiteResult r = run_suite(suite, suite_max);
      std::cout << r.name << ": " << (r.passed ? "pass" : "FAIL") << " (" << r.checks
                << " checks)";
      if (!r.detail.empty()) std::cout << " first failure: " << r.detail;
      std::cout << '\n';
      return r.passed ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
