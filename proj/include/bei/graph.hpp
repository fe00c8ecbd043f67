#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bei {

// Undirected edge, normalized so first < second.
using Edge = std::pair<int, int>;

inline Edge mk_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Finite simple graph on vertex set {1, ..., n}. Edges are kept sorted, which
// fixes the generator order of every ideal built from the graph.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<Edge> edges);  // rejects loops, duplicates, range errors

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int m() const { return static_cast<int>(edges_.size()); }

  bool has_edge(int u, int v) const;
  int degree(int v) const;
  const std::vector<int>& neighbors(int v) const;  // ascending

  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;
  // index of an edge in the sorted edge list
  std::optional<int> edge_index(int u, int v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;  // 1-based
};

// --- structure analysis ---

struct GraphInfo {
  bool connected = false;
  bool is_tree = false;       // connected and acyclic
  bool is_forest = false;     // acyclic
  bool is_unicyclic = false;  // connected with exactly one cycle
  bool is_path = false;
  bool is_cycle = false;
  int girth = 0;              // 0 for acyclic graphs
  std::vector<int> cycle;     // unicyclic only: the unique cycle in canonical cyclic order
  std::vector<int> degrees;   // 1-based, degrees[0] unused
  std::vector<int> pendants;  // degree-1 vertices, ascending
  long k3 = 0;                // number of triangles
};

GraphInfo analyze(const Graph& g);

int girth(const Graph& g);  // 0 = acyclic

// connected components as sorted vertex lists, ordered by smallest vertex
std::vector<std::vector<int>> components(const Graph& g);
std::vector<std::vector<int>> components_after_removal(const Graph& g,
                                                       const std::vector<int>& removed);

// T has the cut point property when every i in T is a cut vertex of the graph
// induced on (V \ T) + i. The empty set counts.
bool has_cut_point_property(const Graph& g, const std::vector<int>& T);

// all subsets with |T| <= max_size and the cut point property, by size then
// lexicographically; includes the empty set; requires g connected
std::vector<std::vector<int>> cut_point_sets(const Graph& g, int max_size);

struct Claw {
  int center;
  std::array<int, 3> leaves;  // ascending, pairwise non-adjacent
  friend bool operator==(const Claw&, const Claw&) = default;
};

// induced claws (center plus three pairwise non-adjacent neighbors)
std::vector<Claw> induced_claws(const Graph& g);

// add all edges between neighbors of v
Graph clique_complete_at(const Graph& g, int v);

// complete graph on the given vertices inside ambient 1..n
Graph complete_graph_on(int n, const std::vector<int>& verts);

// all simple paths from u to v as vertex sequences, lexicographic order
std::vector<std::vector<int>> simple_paths(const Graph& g, int u, int v);

// vertices of a path component in end-to-end order (smaller end first);
// nullopt if the component set is not a path
std::optional<std::vector<int>> path_order(const Graph& g, const std::vector<int>& comp);

// standard small graphs
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);  // K_{1,leaves} with center leaves+1, leaves 1..leaves
Graph complete_graph(int n);

}  // namespace bei
