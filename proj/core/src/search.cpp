#include "kromatic/search.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <string>

#include "kromatic/canonical.hpp"
#include "kromatic/constructions.hpp"
#include "kromatic/graph6.hpp"
#include "kromatic/independence.hpp"
#include "kromatic/ksf.hpp"

namespace kromatic {

std::vector<PairReport> search_equal_ksf(int n) {
  if (n < 1 || n > kMaxGenerateVertices)
    throw capacity_error("vertex count outside generation bound");
  const std::vector<Graph>& graphs = all_graphs(n);
  std::map<std::string, std::vector<std::size_t>> buckets;
  std::vector<Fingerprint> fingerprints(graphs.size());
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    fingerprints[i] = ksf_fingerprint(graphs[i]);
    buckets[fingerprint_digest_hex(fingerprints[i])].push_back(i);
  }
  std::vector<PairReport> reports;
  for (const auto& [digest, members] : buckets) {
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        const std::size_t i = members[a], j = members[b];
        if (!(fingerprints[i] == fingerprints[j])) continue;
        // Generation emits one canonical representative per class, so any
        // bucketed pair is automatically nonisomorphic.
        PairReport r;
        r.g1 = graph6_encode(graphs[i]);
        r.g2 = graph6_encode(graphs[j]);
        if (r.g2 < r.g1) std::swap(r.g1, r.g2);
        r.n = n;
        r.fingerprint_digest = digest;
        r.nonisomorphic = !is_isomorphic(graphs[i], graphs[j]);
        r.min_edge_deletions = min_edge_deletions_to_isomorphic(graphs[i], graphs[j], 3);
        r.vertex_pair_count =
            static_cast<int>(find_ksf_equal_vertex_pairs(graphs[i], graphs[j]).size());
        reports.push_back(std::move(r));
      }
  }
  std::sort(reports.begin(), reports.end(), [](const PairReport& a, const PairReport& b) {
    return std::tie(a.g1, a.g2) < std::tie(b.g1, b.g2);
  });
  return reports;
}

VerifyRecord verify_pair(const Graph& g1, const Graph& g2, int d) {
  if (g1.n != g2.n) throw input_error("vertex counts differ");
  VerifyRecord rec;
  rec.fingerprints_equal = ksf_fingerprint(g1) == ksf_fingerprint(g2);
  rec.nonisomorphic = !is_isomorphic(g1, g2);
  rec.truncated_series_equal =
      series_equal(ksf_mbar_truncated(g1, d), ksf_mbar_truncated(g2, d));
  rec.csf_equal = series_equal(csf_mtilde(g1), csf_mtilde(g2));
  return rec;
}

std::size_t cache_fingerprints(GraphStream stream, const std::string& cache_path) {
  std::set<std::string> known;
  {
    std::ifstream in(cache_path);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      const auto tab = line.find('\t');
      if (tab == std::string::npos || tab == 0 || line.size() - tab - 1 != 32)
        throw input_error("corrupt cache line " + std::to_string(lineno) + " in " +
                          cache_path);
      known.insert(line.substr(0, tab));
    }
  }
  std::ofstream out(cache_path, std::ios::app);
  if (!out) throw input_error("cannot open cache file " + cache_path);
  std::size_t written = 0;
  stream.reset();
  while (auto g = stream.next()) {
    const std::string g6 = graph6_encode(canonical_form(*g).graph);
    if (!known.insert(g6).second) continue;
    out << g6 << '\t' << fingerprint_digest_hex(ksf_fingerprint(*g)) << '\n';
    ++written;
  }
  return written;
}

}  // namespace kromatic
