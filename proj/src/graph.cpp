#include "bei/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace bei {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 1) throw std::invalid_argument("Graph: need n >= 1");
  for (auto& e : edges) {
    e = mk_edge(e.first, e.second);
    if (e.first == e.second) throw std::invalid_argument("Graph: loop edge");
    if (e.first < 1 || e.second > n) throw std::invalid_argument("Graph: vertex out of range");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("Graph: duplicate edge");
  edges_ = std::move(edges);
  adj_.assign(n + 1, {});
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::has_edge(int u, int v) const {
  Edge e = mk_edge(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

int Graph::degree(int v) const {
  if (v < 1 || v > n_) throw std::out_of_range("degree: bad vertex");
  return static_cast<int>(adj_[v].size());
}

const std::vector<int>& Graph::neighbors(int v) const {
  if (v < 1 || v > n_) throw std::out_of_range("neighbors: bad vertex");
  return adj_[v];
}

Graph Graph::with_edge(int u, int v) const {
  auto es = edges_;
  es.push_back(mk_edge(u, v));
  return Graph(n_, std::move(es));
}

Graph Graph::without_edge(int u, int v) const {
  Edge e = mk_edge(u, v);
  auto es = edges_;
  auto it = std::find(es.begin(), es.end(), e);
  if (it == es.end()) throw std::invalid_argument("without_edge: not an edge");
  es.erase(it);
  return Graph(n_, std::move(es));
}

std::optional<int> Graph::edge_index(int u, int v) const {
  Edge e = mk_edge(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

namespace {

// BFS over the subgraph induced on `alive`; fills comp ids starting at `next_id`
int flood(const Graph& g, const std::vector<char>& alive, std::vector<int>& comp) {
  int ncomp = 0;
  for (int s = 1; s <= g.n(); ++s) {
    if (!alive[s] || comp[s] >= 0) continue;
    ++ncomp;
    std::queue<int> q;
    comp[s] = ncomp;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : g.neighbors(u))
        if (alive[w] && comp[w] < 0) {
          comp[w] = ncomp;
          q.push(w);
        }
    }
  }
  return ncomp;
}

}  // namespace

std::vector<std::vector<int>> components(const Graph& g) {
  return components_after_removal(g, {});
}

std::vector<std::vector<int>> components_after_removal(const Graph& g,
                                                       const std::vector<int>& removed) {
  std::vector<char> alive(g.n() + 1, 1);
  alive[0] = 0;
  for (int v : removed) {
    if (v < 1 || v > g.n()) throw std::out_of_range("components_after_removal: bad vertex");
    alive[v] = 0;
  }
  std::vector<int> comp(g.n() + 1, -1);
  int ncomp = flood(g, alive, comp);
  std::vector<std::vector<int>> parts(ncomp);
  for (int v = 1; v <= g.n(); ++v)
    if (alive[v]) parts[comp[v] - 1].push_back(v);
  return parts;  // already ordered by smallest vertex, members ascending
}

int girth(const Graph& g) {
  // per-root BFS; shortest cycle through the root's BFS tree edges
  int best = 0;
  for (int s = 1; s <= g.n(); ++s) {
    std::vector<int> dist(g.n() + 1, -1), par(g.n() + 1, 0);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          par[w] = u;
          q.push(w);
        } else if (w != par[u]) {
          int len = dist[u] + dist[w] + 1;
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

GraphInfo analyze(const Graph& g) {
  GraphInfo info;
  const int n = g.n();
  info.degrees.assign(n + 1, 0);
  for (int v = 1; v <= n; ++v) {
    info.degrees[v] = g.degree(v);
    if (info.degrees[v] == 1) info.pendants.push_back(v);
  }
  auto comps = components(g);
  info.connected = comps.size() == 1;
  info.girth = girth(g);
  info.is_forest = info.girth == 0;
  info.is_tree = info.connected && info.is_forest;
  info.is_unicyclic = info.connected && g.m() == n;

  // triangles
  for (const auto& [u, v] : g.edges()) {
    const auto& a = g.neighbors(u);
    const auto& b = g.neighbors(v);
    std::vector<int> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    for (int w : common)
      if (w > v) ++info.k3;
  }

  if (info.is_tree) {
    int maxdeg = 0, ones = 0;
    for (int v = 1; v <= n; ++v) {
      maxdeg = std::max(maxdeg, info.degrees[v]);
      if (info.degrees[v] == 1) ++ones;
    }
    info.is_path = n == 1 || (maxdeg <= 2 && ones == 2);
  }
  if (info.is_unicyclic) {
    // strip pendants until only the cycle remains
    std::vector<char> alive(n + 1, 1);
    std::vector<int> deg = info.degrees;
    std::queue<int> q;
    for (int v = 1; v <= n; ++v)
      if (deg[v] == 1) q.push(v);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      alive[v] = 0;
      for (int w : g.neighbors(v))
        if (alive[w] && --deg[w] == 1) q.push(w);
    }
    std::vector<int> cyc;
    for (int v = 1; v <= n; ++v)
      if (alive[v]) cyc.push_back(v);
    // canonical cyclic order: start at the smallest cycle vertex, walk toward
    // its smaller cycle neighbor
    int start = cyc.front();
    std::vector<int> nbrs;
    for (int w : g.neighbors(start))
      if (alive[w]) nbrs.push_back(w);
    info.cycle.push_back(start);
    int prev = start, cur = std::min(nbrs[0], nbrs[1]);
    while (cur != start) {
      info.cycle.push_back(cur);
      int nxt = -1;
      for (int w : g.neighbors(cur))
        if (alive[w] && w != prev) {
          nxt = w;
          break;
        }
      prev = cur;
      cur = nxt;
    }
    info.is_cycle = static_cast<int>(info.cycle.size()) == n;
  }
  return info;
}

bool has_cut_point_property(const Graph& g, const std::vector<int>& T) {
  std::vector<char> in_t(g.n() + 1, 0);
  for (int v : T) in_t[v] = 1;
  for (int i : T) {
    // components of the graph induced on (V \ T) + i, with and without i
    std::vector<char> alive(g.n() + 1, 1);
    alive[0] = 0;
    for (int v : T) alive[v] = 0;
    std::vector<int> comp(g.n() + 1, -1);
    int without_i = flood(g, alive, comp);
    alive[i] = 1;
    comp.assign(g.n() + 1, -1);
    int with_i = flood(g, alive, comp);
    if (without_i <= with_i) return false;  // i is not a cut vertex there
  }
  return true;
}

std::vector<std::vector<int>> cut_point_sets(const Graph& g, int max_size) {
  if (components(g).size() != 1)
    throw std::invalid_argument("cut_point_sets: graph must be connected");
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // subsets by size, lexicographic within a size
  auto rec = [&](auto&& self, int next, int want) -> void {
    if (static_cast<int>(cur.size()) == want) {
      if (has_cut_point_property(g, cur)) out.push_back(cur);
      return;
    }
    for (int v = next; v <= g.n(); ++v) {
      cur.push_back(v);
      self(self, v + 1, want);
      cur.pop_back();
    }
  };
  for (int size = 0; size <= std::min(max_size, g.n()); ++size) rec(rec, 1, size);
  return out;
}

std::vector<Claw> induced_claws(const Graph& g) {
  std::vector<Claw> out;
  for (int c = 1; c <= g.n(); ++c) {
    const auto& nb = g.neighbors(c);
    const int d = static_cast<int>(nb.size());
    for (int a = 0; a < d; ++a)
      for (int b = a + 1; b < d; ++b) {
        if (g.has_edge(nb[a], nb[b])) continue;
        for (int e = b + 1; e < d; ++e) {
          if (g.has_edge(nb[a], nb[e]) || g.has_edge(nb[b], nb[e])) continue;
          out.push_back(Claw{c, {nb[a], nb[b], nb[e]}});
        }
      }
  }
  return out;
}

Graph clique_complete_at(const Graph& g, int v) {
  auto es = g.edges();
  const auto& nb = g.neighbors(v);
  for (size_t a = 0; a < nb.size(); ++a)
    for (size_t b = a + 1; b < nb.size(); ++b)
      if (!g.has_edge(nb[a], nb[b])) es.push_back(mk_edge(nb[a], nb[b]));
  return Graph(g.n(), std::move(es));
}

Graph complete_graph_on(int n, const std::vector<int>& verts) {
  std::vector<Edge> es;
  for (size_t a = 0; a < verts.size(); ++a)
    for (size_t b = a + 1; b < verts.size(); ++b) es.push_back(mk_edge(verts[a], verts[b]));
  return Graph(n, std::move(es));
}

std::vector<std::vector<int>> simple_paths(const Graph& g, int u, int v) {
  std::vector<std::vector<int>> out;
  std::vector<char> used(g.n() + 1, 0);
  std::vector<int> cur{u};
  used[u] = 1;
  auto dfs = [&](auto&& self, int at) -> void {
    if (at == v) {
      out.push_back(cur);
      return;
    }
    for (int w : g.neighbors(at)) {
      if (used[w]) continue;
      used[w] = 1;
      cur.push_back(w);
      self(self, w);
      cur.pop_back();
      used[w] = 0;
    }
  };
  dfs(dfs, u);
  return out;
}

std::optional<std::vector<int>> path_order(const Graph& g, const std::vector<int>& comp) {
  if (comp.size() == 1) return comp;
  std::set<int> in(comp.begin(), comp.end());
  auto deg_in = [&](int v) {
    int d = 0;
    for (int w : g.neighbors(v))
      if (in.count(w)) ++d;
    return d;
  };
  std::vector<int> ends;
  for (int v : comp) {
    int d = deg_in(v);
    if (d == 1)
      ends.push_back(v);
    else if (d != 2)
      return std::nullopt;
  }
  if (ends.size() != 2) return std::nullopt;
  std::vector<int> order{std::min(ends[0], ends[1])};
  int prev = 0;
  while (order.size() < comp.size()) {
    int cur = order.back(), nxt = -1;
    for (int w : g.neighbors(cur))
      if (in.count(w) && w != prev) {
        nxt = w;
        break;
      }
    if (nxt < 0) return std::nullopt;  // disconnected or revisit
    order.push_back(nxt);
    prev = cur;
  }
  return order;
}

Graph path_graph(int n) {
  std::vector<Edge> es;
  for (int i = 1; i < n; ++i) es.push_back({i, i + 1});
  return Graph(n, std::move(es));
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
  auto es = path_graph(n).edges();
  es.push_back({1, n});
  return Graph(n, std::move(es));
}

Graph star_graph(int leaves) {
  std::vector<Edge> es;
  for (int i = 1; i <= leaves; ++i) es.push_back({i, leaves + 1});
  return Graph(leaves + 1, std::move(es));
}

Graph complete_graph(int n) {
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i + 1;
  return complete_graph_on(n, all);
}

}  // namespace bei
