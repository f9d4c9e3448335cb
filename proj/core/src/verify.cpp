#include "kromatic/verify.hpp"

#include <map>

#include "kromatic/canonical.hpp"
#include "kromatic/constructions.hpp"
#include "kromatic/generate.hpp"
#include "kromatic/graph6.hpp"
#include "kromatic/independence.hpp"
#include "kromatic/ksf.hpp"

namespace kromatic {

namespace {

void record_failure(SuiteResult& r, const std::string& detail) {
  if (r.passed) r.detail = detail;
  r.passed = false;
}

SymSeries one_plus_m1(int d) {
  SymSeries s(Basis::k_augmented, d);
  s.add_term(Partition{}, 1);
  s.add_term(Partition({1}), 1);
  return s;
}

SymSeries m1(int d) {
  SymSeries s(Basis::k_augmented, d);
  s.add_term(Partition({1}), 1);
  return s;
}

std::string case_label(const Graph& g, int v) {
  return graph6_encode(g) + " v=" + std::to_string(v);
}

}  // namespace

SuiteResult verify_f_identity(int max_n) {
  SuiteResult r{"f-identity"};
  for (int n = 1; n <= max_n; ++n) {
    const int d = n + 2;
    const SymSeries geom = odot_geometric_inverse_one_plus_m1(d);
    for (const Graph& g : all_graphs(n)) {
      const SymSeries xg = ksf_mbar_truncated(g, d);
      for (int v = 0; v < n; ++v) {
        const SymSeries xgv = ksf_mbar_truncated(delete_vertex(g, v), d);
        const SymSeries f = f_series(g, v, d);
        const SymSeries rhs =
            odot_product(xgv, m1(d)) + odot_product(f, one_plus_m1(d));
        ++r.checks;
        if (!series_equal(xg, rhs)) record_failure(r, case_label(g, v) + " identity");
        const SymSeries solved = odot_product(xg - odot_product(xgv, m1(d)), geom);
        ++r.checks;
        if (!series_equal(f, solved)) record_failure(r, case_label(g, v) + " solved f");
      }
    }
  }
  return r;
}

SuiteResult verify_join(int max_total) {
  SuiteResult r{"join"};
  for (int a = 1; a < max_total; ++a)
    for (int b = a; a + b <= max_total; ++b) {
      const int d = a + b + 2;
      for (const Graph& g : all_graphs(a))
        for (const Graph& h : all_graphs(b)) {
          ++r.checks;
          const SymSeries lhs = ksf_mbar_truncated(join(g, h), d);
          const SymSeries rhs =
              odot_product(ksf_mbar_truncated(g, d), ksf_mbar_truncated(h, d));
          if (!series_equal(lhs, rhs))
            record_failure(r, graph6_encode(g) + " join " + graph6_encode(h));
        }
    }
  return r;
}

SuiteResult verify_union(int max_total) {
  SuiteResult r{"union"};
  for (int a = 1; a < max_total; ++a)
    for (int b = a; a + b <= max_total; ++b) {
      const int d = a + b + 2;
      for (const Graph& g : all_graphs(a))
        for (const Graph& h : all_graphs(b)) {
          ++r.checks;
          const SymSeries lhs = ksf_monomial_truncated(disjoint_union(g, h), d);
          const SymSeries rhs = ordinary_product(ksf_monomial_truncated(g, d),
                                                 ksf_monomial_truncated(h, d));
          if (!series_equal(lhs, rhs))
            record_failure(r, graph6_encode(g) + " union " + graph6_encode(h));
        }
    }
  return r;
}

SuiteResult verify_clan(int max_n) {
  SuiteResult r{"clan"};
  for (int n = 1; n <= max_n; ++n) {
    const int d = n + 1;
    for (const Graph& g : all_graphs(n)) {
      const SymSeries lhs = convert(ksf_mbar_truncated(g, d), Basis::augmented);
      SymSeries rhs(Basis::augmented, d);
      // compositions alpha in Z_{>0}^n with sum <= d (larger ones vanish)
      std::vector<int> alpha(n, 1);
      auto sweep = [&](auto&& self, int i, int budget) -> void {
        if (i == n) {
          BigInt fact = 1;
          for (int a : alpha)
            for (int k = 2; k <= a; ++k) fact *= k;
          const SymSeries term = csf_mtilde(clan_graph(WeightedGraph(g), alpha));
          for (const auto& [key, value] : term.coeffs)
            rhs.add_term(key, value / Rational(fact));
          return;
        }
        for (alpha[i] = 1; alpha[i] <= budget - (n - i - 1); ++alpha[i])
          self(self, i + 1, budget - alpha[i]);
        alpha[i] = 1;
      };
      sweep(sweep, 0, d);
      ++r.checks;
      if (!series_equal(lhs, rhs)) record_failure(r, graph6_encode(g));
    }
  }
  return r;
}

SuiteResult verify_attach() {
  SuiteResult r{"attach"};
  std::vector<Graph> hosts;
  for (int n = 1; n <= 4; ++n)
    for (const Graph& g : all_graphs(n)) hosts.push_back(g);
  std::vector<Graph> attachments{Graph(0)};
  for (int n = 1; n <= 2; ++n)
    for (const Graph& h : all_graphs(n)) attachments.push_back(h);
  for (const Graph& g : hosts)
    for (const Graph& h : attachments)
      for (int v = 0; v < g.n; ++v) {
        const int d = g.n + h.n + 2;
        ++r.checks;
        const SymSeries direct = ksf_mbar_truncated(attach_except(g, v, h), d);
        const SymSeries formula = gprime_series_formula(g, v, h, d);
        if (!series_equal(direct, formula))
          record_failure(r, case_label(g, v) + " H=" + graph6_encode(h));
      }
  return r;
}

SuiteResult verify_os(int max_n) {
  SuiteResult r{"os"};
  std::map<std::string, SymSeries> csf_cache;
  std::map<std::string, Fingerprint> fp_cache;
  auto csf_of = [&](const Graph& g) -> const SymSeries& {
    const std::string key = graph6_encode(canonical_form(g).graph);
    auto it = csf_cache.find(key);
    if (it == csf_cache.end()) it = csf_cache.emplace(key, csf_mtilde(g)).first;
    return it->second;
  };
  auto fp_of = [&](const Graph& g) -> const Fingerprint& {
    const std::string key = graph6_encode(canonical_form(g).graph);
    auto it = fp_cache.find(key);
    if (it == fp_cache.end()) it = fp_cache.emplace(key, ksf_fingerprint(g)).first;
    return it->second;
  };
  for (const OSInstance& inst : find_os_instances(max_n)) {
    const auto [h, j] = os_pair(inst);
    const std::string label = graph6_encode(inst.g) + " uvwz=" + std::to_string(inst.u) +
                              std::to_string(inst.v) + std::to_string(inst.w) +
                              std::to_string(inst.z);
    ++r.checks;
    if (!series_equal(csf_of(h), csf_of(j))) record_failure(r, label + " csf");
    if (!os_phi_pointwise(inst)) continue;
    const auto [left, right] = os_claw_margin(inst);
    if (left == right) continue;
    ++r.checks;
    if (count_claws(h) == count_claws(j)) record_failure(r, label + " claws");
    ++r.checks;
    if (fp_of(h) == fp_of(j)) record_failure(r, label + " fingerprint");
  }
  return r;
}

SuiteResult verify_split(int max_n) {
  SuiteResult r{"split"};
  std::map<std::string, SymSeries> csf_cache;
  std::map<std::string, Fingerprint> fp_cache;
  std::map<std::string, std::uint64_t> pattern_cache;
  auto key_of = [](const Graph& g) { return graph6_encode(canonical_form(g).graph); };
  for (const ACSZInstance& inst : find_acsz_instances(max_n)) {
    if (inst.g.n + inst.g.edge_count() + 1 > kMaxFingerprintVertices) continue;
    const auto [a, b] = acsz_pair(inst);
    const std::string ka = key_of(a), kb = key_of(b);
    const std::string label = graph6_encode(inst.g) + " pairs=" + std::to_string(inst.u) +
                              std::to_string(inst.v) + "/" + std::to_string(inst.uprime) +
                              std::to_string(inst.vprime);
    if (!csf_cache.count(ka)) csf_cache.emplace(ka, csf_mtilde(a));
    if (!csf_cache.count(kb)) csf_cache.emplace(kb, csf_mtilde(b));
    ++r.checks;
    if (!series_equal(csf_cache.at(ka), csf_cache.at(kb)))
      record_failure(r, label + " csf");
    if (!check_acsz_distinguishing(inst)) continue;
    if (!pattern_cache.count(ka)) pattern_cache.emplace(ka, count_h1_h2(a));
    if (!pattern_cache.count(kb)) pattern_cache.emplace(kb, count_h1_h2(b));
    ++r.checks;
    if (!(pattern_cache.at(ka) > pattern_cache.at(kb)))
      record_failure(r, label + " pattern count");
    if (!fp_cache.count(ka)) fp_cache.emplace(ka, ksf_fingerprint(a));
    if (!fp_cache.count(kb)) fp_cache.emplace(kb, ksf_fingerprint(b));
    ++r.checks;
    if (fp_cache.at(ka) == fp_cache.at(kb)) record_failure(r, label + " fingerprint");
  }
  return r;
}

SuiteResult run_suite(const std::string& name, int max_n) {
  if (name == "f-identity") return verify_f_identity(max_n > 0 ? max_n : 6);
  if (name == "join") return verify_join(max_n > 0 ? max_n : 6);
  if (name == "union") return verify_union(max_n > 0 ? max_n : 6);
  if (name == "clan") return verify_clan(max_n > 0 ? max_n : 4);
  if (name == "attach") return verify_attach();
  if (name == "os") return verify_os(max_n > 0 ? max_n : 7);
  if (name == "split") return verify_split(max_n > 0 ? max_n : 6);
  throw input_error("unknown suite: " + name);
}

}  // namespace kromatic
