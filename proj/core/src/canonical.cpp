#include "kromatic/canonical.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "kromatic/graph6.hpp"

namespace kromatic {

namespace {

// Backtracking over vertex orderings. The partial objective at level j is the
// column of adjacency bits between the candidate vertex and the already
// placed prefix, so comparing column words level by level is exactly the
// lexicographic comparison of upper-triangle bit strings. Whenever a column
// beats the incumbent the incumbent is adopted immediately, which keeps the
// "greater than best" prune valid on every branch. Leaves reached this way
// are precisely the minimal relabelings, i.e. one per automorphism.
struct CanonSearch {
  const Graph& g;
  int n;
  std::vector<int> order;              // order[pos] = source vertex
  std::vector<std::uint64_t> best_col; // incumbent column words
  std::vector<int> best_order;
  std::set<int> last_orbit;
  std::vector<std::vector<int>>* all_min_orders = nullptr;

  explicit CanonSearch(const Graph& graph)
      : g(graph),
        n(graph.n),
        order(static_cast<std::size_t>(graph.n)),
        best_col(static_cast<std::size_t>(graph.n), ~std::uint64_t{0}) {}

  std::uint64_t column(int level, int v) const {
    std::uint64_t col = 0;
    for (int i = 0; i < level; ++i)
      col = col << 1 | (g.has_edge(order[i], v) ? 1u : 0u);
    return col;
  }

  void dfs(int level, std::uint64_t used) {
    if (level == n) {
      if (best_order.empty()) best_order = order;
      last_orbit.insert(order[n - 1]);
      if (all_min_orders) all_min_orders->push_back(order);
      return;
    }
    std::vector<std::pair<std::uint64_t, int>> cands;
    cands.reserve(static_cast<std::size_t>(n - level));
    for (int v = 0; v < n; ++v)
      if (!(used >> v & 1u)) cands.emplace_back(column(level, v), v);
    std::sort(cands.begin(), cands.end());
    for (auto [col, v] : cands) {
      if (col > best_col[level]) break;
      if (col < best_col[level]) {
        best_col[level] = col;
        for (int k = level + 1; k < n; ++k) best_col[k] = ~std::uint64_t{0};
        best_order.clear();
        last_orbit.clear();
        if (all_min_orders) all_min_orders->clear();
      }
      order[level] = v;
      dfs(level + 1, used | std::uint64_t{1} << v);
    }
  }

  void run() {
    if (n == 0) {
      best_order.clear();
      return;
    }
    dfs(0, 0);
  }
};

Graph relabeled(const Graph& g, const std::vector<int>& order) {
  Graph out(g.n);
  for (int p = 0; p < g.n; ++p)
    for (int q = p + 1; q < g.n; ++q)
      if (g.has_edge(order[p], order[q])) out.add_edge(p, q);
  return out;
}

}  // namespace

std::string CanonicalForm::code() const {
  return graph.n == 0 ? std::string() : graph6_encode(graph);
}

CanonicalForm canonical_form(const Graph& g) {
  CanonSearch search(g);
  search.run();
  CanonicalForm cf;
  cf.perm.assign(static_cast<std::size_t>(g.n), 0);
  if (g.n == 0) {
    cf.graph = Graph(0);
    return cf;
  }
  for (int pos = 0; pos < g.n; ++pos) cf.perm[search.best_order[pos]] = pos;
  cf.graph = relabeled(g, search.best_order);
  cf.last_orbit.assign(search.last_orbit.begin(), search.last_orbit.end());
  return cf;
}

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.n != h.n || g.edge_count() != h.edge_count()) return false;
  return canonical_form(g).graph == canonical_form(h).graph;
}

std::vector<std::vector<int>> automorphisms(const Graph& g, int max_n) {
  if (g.n > max_n) throw capacity_error("automorphism enumeration bound exceeded");
  if (g.n == 0) return {{}};
  CanonSearch search(g);
  std::vector<std::vector<int>> min_orders;
  search.all_min_orders = &min_orders;
  search.run();
  // Orders o and o0 reach the same canonical graph, so v -> o[pos_in_o0(v)]
  // preserves adjacency; ranging over all minimal orders yields the group.
  const std::vector<int>& o0 = min_orders.front();
  std::vector<int> pos0(static_cast<std::size_t>(g.n));
  for (int p = 0; p < g.n; ++p) pos0[o0[p]] = p;
  std::vector<std::vector<int>> group;
  group.reserve(min_orders.size());
  for (const auto& o : min_orders) {
    std::vector<int> a(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v) a[v] = o[pos0[v]];
    group.push_back(std::move(a));
  }
  std::sort(group.begin(), group.end());
  return group;
}

std::vector<int> automorphism_orbits(const Graph& g, int max_n) {
  std::vector<int> orbit(static_cast<std::size_t>(g.n));
  for (int v = 0; v < g.n; ++v) orbit[v] = v;
  for (const auto& a : automorphisms(g, max_n))
    for (int v = 0; v < g.n; ++v) {
      int ra = a[v], rb = v;
      while (orbit[ra] != ra) ra = orbit[ra];
      while (orbit[rb] != rb) rb = orbit[rb];
      if (ra != rb) orbit[std::max(ra, rb)] = std::min(ra, rb);
    }
  for (int v = 0; v < g.n; ++v) {
    int r = v;
    while (orbit[r] != r) r = orbit[r];
    orbit[v] = r;
  }
  return orbit;
}

namespace {

void deletion_codes(const Graph& g, int t, std::size_t from,
                    std::vector<std::pair<int, int>>& removed,
                    const std::vector<std::pair<int, int>>& edges,
                    std::set<std::string>& out) {
  if (static_cast<int>(removed.size()) == t) {
    Graph h = g;
    for (auto [u, v] : removed) h.remove_edge(u, v);
    out.insert(canonical_form(h).code());
    return;
  }
  for (std::size_t i = from; i < edges.size(); ++i) {
    removed.push_back(edges[i]);
    deletion_codes(g, t, i + 1, removed, edges, out);
    removed.pop_back();
  }
}

}  // namespace

std::optional<int> min_edge_deletions_to_isomorphic(const Graph& g, const Graph& h,
                                                    int k_max) {
  if (g.n != h.n) throw input_error("vertex counts differ");
  const auto eg = g.edges();
  const auto eh = h.edges();
  for (int t = 0; t <= k_max; ++t) {
    if (t > static_cast<int>(eg.size()) || t > static_cast<int>(eh.size())) break;
    std::set<std::string> a, b;
    std::vector<std::pair<int, int>> scratch;
    deletion_codes(g, t, 0, scratch, eg, a);
    deletion_codes(h, t, 0, scratch, eh, b);
    for (const auto& code : a)
      if (b.count(code)) return t;
  }
  return std::nullopt;
}

}  // namespace kromatic
