#include "bei/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace bei {

Graph tree_from_pruefer(const std::vector<int>& code, int n) {
  if (n < 1) throw std::invalid_argument("tree_from_pruefer: n >= 1");
  if (static_cast<int>(code.size()) != std::max(0, n - 2))
    throw std::invalid_argument("tree_from_pruefer: code length must be n-2");
  if (n == 1) return Graph(1, {});
  std::vector<int> deg(n + 1, 1);
  for (int c : code) {
    if (c < 1 || c > n) throw std::invalid_argument("tree_from_pruefer: label out of range");
    ++deg[c];
  }
  std::vector<Edge> edges;
  std::set<int> leaves;
  for (int v = 1; v <= n; ++v)
    if (deg[v] == 1) leaves.insert(v);
  for (int c : code) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.push_back(mk_edge(leaf, c));
    if (--deg[c] == 1) leaves.insert(c);
  }
  int a = *leaves.begin(), b = *std::next(leaves.begin());
  edges.push_back(mk_edge(a, b));
  return Graph(n, edges);
}

std::vector<Graph> all_labeled_trees(int n) {
  std::vector<Graph> out;
  if (n <= 2) {
    out.push_back(n == 2 ? Graph(2, {{1, 2}}) : Graph(std::max(n, 1), {}));
    return out;
  }
  std::vector<int> code(n - 2, 1);
  while (true) {
    out.push_back(tree_from_pruefer(code, n));
    int i = n - 3;
    while (i >= 0 && code[i] == n) code[i--] = 1;
    if (i < 0) break;
    ++code[i];
  }
  return out;
}

std::vector<Graph> all_labeled_unicyclic(int n) {
  if (n < 3) throw std::invalid_argument("all_labeled_unicyclic: n >= 3");
  std::set<std::vector<Edge>> seen;
  std::vector<Graph> out;
  for (const auto& t : all_labeled_trees(n)) {
    for (int u = 1; u <= n; ++u) {
      for (int v = u + 1; v <= n; ++v) {
        if (t.has_edge(u, v)) continue;
        Graph g = t.with_edge(u, v);
        if (seen.insert(g.edges()).second) out.push_back(std::move(g));
      }
    }
  }
  return out;
}

namespace {

// canonical encoding of the subtree at v, parent excluded
std::string ahu(const Graph& g, int v, int parent) {
  std::vector<std::string> kids;
  for (int w : g.neighbors(v))
    if (w != parent) kids.push_back(ahu(g, w, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (auto& k : kids) s += k;
  s += ")";
  return s;
}

// center of a tree component by repeated leaf removal
std::vector<int> tree_centers(const Graph& g, const std::vector<int>& comp) {
  std::map<int, int> deg;
  std::set<int> alive(comp.begin(), comp.end());
  for (int v : comp) {
    int d = 0;
    for (int w : g.neighbors(v))
      if (alive.count(w)) ++d;
    deg[v] = d;
  }
  while (alive.size() > 2) {
    std::vector<int> drop;
    for (int v : alive)
      if (deg[v] <= 1) drop.push_back(v);
    for (int v : drop) {
      alive.erase(v);
      for (int w : g.neighbors(v))
        if (alive.count(w)) --deg[w];
    }
  }
  return {alive.begin(), alive.end()};
}

std::string tree_component_key(const Graph& g, const std::vector<int>& comp) {
  auto centers = tree_centers(g, comp);
  if (centers.size() == 1) return ahu(g, centers[0], 0);
  std::string a = ahu(g, centers[0], centers[1]);
  std::string b = ahu(g, centers[1], centers[0]);
  if (b < a) std::swap(a, b);
  return "[" + a + b + "]";
}

}  // namespace

std::string canonical_key(const Graph& g) {
  GraphInfo info = analyze(g);
  if (info.is_forest) {
    std::vector<std::string> keys;
    for (const auto& comp : components(g)) keys.push_back(tree_component_key(g, comp));
    std::sort(keys.begin(), keys.end());
    std::string out = "T:";
    for (auto& k : keys) out += k;
    return out;
  }
  const int n = g.n();
  if (n > 8) throw std::invalid_argument("canonical_key: permutation search limited to n <= 8");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::string best;
  do {
    std::vector<Edge> es;
    es.reserve(g.edges().size());
    for (const auto& [u, v] : g.edges()) es.push_back(mk_edge(perm[u - 1], perm[v - 1]));
    std::sort(es.begin(), es.end());
    std::string s;
    for (const auto& [u, v] : es) {
      s += static_cast<char>('0' + u);
      s += static_cast<char>('0' + v);
    }
    if (best.empty() || s < best) best = std::move(s);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return "P:" + std::to_string(n) + ":" + best;
}

IsoClasses iso_classes(const std::vector<Graph>& gs) {
  IsoClasses out;
  for (const auto& g : gs) {
    std::string key = canonical_key(g);
    if (out.index.emplace(key, static_cast<int>(out.reps.size())).second) out.reps.push_back(g);
  }
  return out;
}

}  // namespace bei
