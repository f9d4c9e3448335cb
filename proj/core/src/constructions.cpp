#include "kromatic/constructions.hpp"

#include <algorithm>
#include <bit>

#include "kromatic/canonical.hpp"
#include "kromatic/generate.hpp"
#include "kromatic/independence.hpp"
#include "kromatic/ksf.hpp"

namespace kromatic {

namespace {

void check_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.n) throw input_error("vertex out of range");
}

Graph attach(const Graph& g, const Graph& h, std::uint64_t g_targets) {
  Graph out = disjoint_union(g, h);
  for (std::uint64_t rest = g_targets; rest;) {
    const int t = std::countr_zero(rest);
    rest &= rest - 1;
    for (int j = 0; j < h.n; ++j) out.add_edge(t, g.n + j);
  }
  return out;
}

}  // namespace

Graph attach_except(const Graph& g, int v, const Graph& h) {
  check_vertex(g, v);
  return attach(g, h, g.full_mask() & ~(std::uint64_t{1} << v));
}

Graph attach_to_vertex(const Graph& g, int v, const Graph& h) {
  check_vertex(g, v);
  return attach(g, h, std::uint64_t{1} << v);
}

SymSeries gprime_series_formula(const Graph& g, int v, const Graph& h, int d) {
  check_vertex(g, v);
  const Graph h_plus_v = disjoint_union(h, Graph(1));
  const SymSeries xh = ksf_mbar_truncated(h, d);
  const SymSeries xg_minus_v = ksf_mbar_truncated(delete_vertex(g, v), d);
  SymSeries one_plus_m1(Basis::k_augmented, d);
  one_plus_m1.add_term(Partition{}, 1);
  one_plus_m1.add_term(Partition({1}), 1);
  const SymSeries left = f_series(h_plus_v, h.n, d) + xh;
  const SymSeries right = f_series(g, v, d) + xg_minus_v;
  return odot_product(odot_product(left, right), one_plus_m1) -
         odot_product(xh, xg_minus_v);
}

std::vector<std::pair<int, int>> find_ksf_equal_vertex_pairs(const Graph& g1,
                                                             const Graph& g2) {
  if (g1.n != g2.n) throw input_error("vertex counts differ");
  std::vector<Fingerprint> f1(g1.n), f2(g2.n);
  for (int v = 0; v < g1.n; ++v) {
    f1[v] = ksf_fingerprint(delete_vertex(g1, v));
    f2[v] = ksf_fingerprint(delete_vertex(g2, v));
  }
  std::vector<std::pair<int, int>> out;
  for (int v1 = 0; v1 < g1.n; ++v1)
    for (int v2 = 0; v2 < g2.n; ++v2)
      if (f1[v1] == f2[v2]) out.emplace_back(v1, v2);
  return out;
}

Graph split_graph(const Graph& g) {
  const auto edge_list = g.edges();
  if (g.n + static_cast<int>(edge_list.size()) > kMaxVertices)
    throw capacity_error("split graph exceeds vertex capacity");
  Graph out(g.n + static_cast<int>(edge_list.size()));
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j) out.add_edge(i, j);
  for (std::size_t k = 0; k < edge_list.size(); ++k) {
    out.add_edge(g.n + static_cast<int>(k), edge_list[k].first);
    out.add_edge(g.n + static_cast<int>(k), edge_list[k].second);
  }
  return out;
}

namespace {

void check_os_vertices(const OSInstance& inst) {
  const int vs[4] = {inst.u, inst.v, inst.w, inst.z};
  for (int x : vs) check_vertex(inst.g, x);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (vs[i] == vs[j]) throw input_error("instance vertices must be distinct");
}

}  // namespace

bool check_os(const OSInstance& inst) {
  check_os_vertices(inst);
  const Graph& g = inst.g;
  if (!g.has_edge(inst.u, inst.z) || !g.has_edge(inst.w, inst.z) ||
      !g.has_edge(inst.v, inst.w))
    return false;
  if (g.has_edge(inst.u, inst.w) || g.has_edge(inst.v, inst.z)) return false;
  Graph cut = g;
  cut.remove_edge(inst.w, inst.z);
  for (const auto& phi : automorphisms(cut)) {
    const bool uw_to_vz = (phi[inst.u] == inst.v && phi[inst.w] == inst.z) ||
                          (phi[inst.u] == inst.z && phi[inst.w] == inst.v);
    const bool vz_to_uw = (phi[inst.v] == inst.u && phi[inst.z] == inst.w) ||
                          (phi[inst.v] == inst.w && phi[inst.z] == inst.u);
    if (uw_to_vz && vz_to_uw) return true;
  }
  return false;
}

std::pair<Graph, Graph> os_pair(const OSInstance& inst) {
  if (!check_os(inst)) throw input_error("instance fails edge-swap conditions");
  Graph h = inst.g, j = inst.g;
  h.add_edge(inst.u, inst.w);
  j.add_edge(inst.v, inst.z);
  return {std::move(h), std::move(j)};
}

bool os_phi_pointwise(const OSInstance& inst) {
  check_os_vertices(inst);
  Graph cut = inst.g;
  if (!cut.has_edge(inst.w, inst.z)) return false;
  cut.remove_edge(inst.w, inst.z);
  for (const auto& phi : automorphisms(cut))
    if (phi[inst.u] == inst.z && phi[inst.z] == inst.u && phi[inst.w] == inst.v &&
        phi[inst.v] == inst.w)
      return true;
  return false;
}

std::pair<int, int> os_claw_margin(const OSInstance& inst) {
  if (!check_os(inst)) throw input_error("instance fails edge-swap conditions");
  const Graph& g = inst.g;
  const std::uint64_t named = (std::uint64_t{1} << inst.u) | (std::uint64_t{1} << inst.v) |
                              (std::uint64_t{1} << inst.w) | (std::uint64_t{1} << inst.z);
  auto count = [&](int hub, int a, int b) {
    return std::popcount(g.neighbors(hub) & ~g.neighbors(a) & ~g.neighbors(b) & ~named);
  };
  const int left = count(inst.w, inst.u, inst.v) + count(inst.w, inst.z, inst.v);
  const int right = count(inst.z, inst.u, inst.v) + count(inst.z, inst.u, inst.w);
  return {left, right};
}

bool check_acsz(const ACSZInstance& inst) {
  const int vs[4] = {inst.u, inst.v, inst.uprime, inst.vprime};
  for (int x : vs) check_vertex(inst.g, x);
  if (inst.g.has_edge(inst.u, inst.v) || inst.g.has_edge(inst.uprime, inst.vprime))
    return false;
  const std::vector<int> orbit = automorphism_orbits(inst.g);
  return orbit[inst.u] == orbit[inst.uprime] && orbit[inst.v] == orbit[inst.vprime];
}

std::pair<Graph, Graph> acsz_pair(const ACSZInstance& inst) {
  if (!check_acsz(inst)) throw input_error("instance fails hat-swap conditions");
  Graph a = inst.g, b = inst.g;
  a.add_edge(inst.u, inst.v);
  b.add_edge(inst.uprime, inst.vprime);
  return {split_graph(a), split_graph(b)};
}

bool check_acsz_distinguishing(const ACSZInstance& inst) {
  if (!check_acsz(inst)) throw input_error("instance fails hat-swap conditions");
  const Graph& g = inst.g;
  const std::uint64_t common = g.neighbors(inst.u) & g.neighbors(inst.v);
  if (common == 0) return false;
  if (g.neighbors(inst.uprime) & g.neighbors(inst.vprime)) return false;
  if (g.n < 6) return false;
  if (g.degree(inst.u) >= 2 || g.degree(inst.v) >= 2) return true;
  for (std::uint64_t rest = common; rest;) {
    const int x = std::countr_zero(rest);
    rest &= rest - 1;
    if (g.degree(x) >= 3) return true;
  }
  return false;
}

std::uint64_t count_h1_h2(const Graph& g) {
  static const std::vector<Graph> patterns =
      find_graphs_with_polynomial(7, Polynomial{{1, 7, 15, 16, 9, 2}});
  std::uint64_t total = 0;
  for (const Graph& p : patterns) total += count_induced_copies(g, p);
  return total;
}

std::vector<OSInstance> find_os_instances(int max_n) {
  std::vector<OSInstance> found;
  for (int n = 4; n <= max_n; ++n) {
    for (const Graph& g : all_graphs(n)) {
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)  // (u,v,w,z) ~ (v,u,z,w): keep u < v
          for (int w = 0; w < n; ++w) {
            if (w == u || w == v) continue;
            for (int z = 0; z < n; ++z) {
              if (z == u || z == v || z == w) continue;
              OSInstance inst{g, u, v, w, z};
              if (g.has_edge(u, z) && g.has_edge(w, z) && g.has_edge(v, w) &&
                  !g.has_edge(u, w) && !g.has_edge(v, z) && check_os(inst))
                found.push_back(std::move(inst));
            }
          }
    }
  }
  return found;
}

std::vector<ACSZInstance> find_acsz_instances(int max_n) {
  std::vector<ACSZInstance> found;
  for (int n = 2; n <= max_n; ++n) {
    for (const Graph& g : all_graphs(n)) {
      const std::vector<int> orbit = automorphism_orbits(g);
      std::vector<std::pair<int, int>> nonedges;
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          if (!g.has_edge(a, b)) nonedges.emplace_back(a, b);
      for (std::size_t i = 0; i < nonedges.size(); ++i)
        for (std::size_t j = i + 1; j < nonedges.size(); ++j) {
          const auto [a, b] = nonedges[i];
          const auto [c, d] = nonedges[j];
          // orientation of each unordered pair: u -> u', v -> v'
          const std::pair<int, int> prime_orders[2] = {{c, d}, {d, c}};
          for (const auto& [up, vp] : prime_orders) {
            if (orbit[a] == orbit[up] && orbit[b] == orbit[vp]) {
              found.push_back(ACSZInstance{g, a, b, up, vp});
              break;  // one orientation per pair of pairs is enough
            }
          }
        }
    }
  }
  return found;
}

}  // namespace kromatic
