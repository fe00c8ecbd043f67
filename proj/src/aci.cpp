#include "bei/aci.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bei {

std::string to_string(AciStatus s) {
  switch (s) {
    case AciStatus::CI: return "complete-intersection";
    case AciStatus::ACI: return "almost-complete-intersection";
    default: return "neither";
  }
}

std::string to_string(AciShape s) {
  switch (s) {
    case AciShape::path: return "path";
    case AciShape::two_paths_joined: return "two-paths-joined";
    case AciShape::path_with_chord: return "path-with-chord";
    case AciShape::triangle_with_paths: return "triangle-with-paths";
    default: return "other";
  }
}

namespace {

// edges whose removal leaves a disjoint union of paths, each with the
// concatenated end-to-end vertex order used for ranking
std::vector<std::pair<Edge, std::vector<int>>> ci_completion_edges(const Graph& g) {
  std::vector<std::pair<Edge, std::vector<int>>> out;
  for (const auto& e : g.edges()) {
    Graph h = g.without_edge(e.first, e.second);
    std::vector<int> concat;
    bool all_paths = true;
    for (const auto& comp : components(h)) {
      auto po = path_order(h, comp);
      if (!po) {
        all_paths = false;
        break;
      }
      concat.insert(concat.end(), po->begin(), po->end());
    }
    if (all_paths) out.emplace_back(e, std::move(concat));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  return out;
}

std::vector<int> degree_three_vertices(const Graph& g) {
  std::vector<int> out;
  for (int v = 1; v <= g.n(); ++v)
    if (g.degree(v) == 3) out.push_back(v);
  return out;
}

int max_degree(const Graph& g) {
  int d = 0;
  for (int v = 1; v <= g.n(); ++v) d = std::max(d, g.degree(v));
  return d;
}

}  // namespace

AciVerdict classify(const Graph& g) {
  GraphInfo info = analyze(g);
  if (!info.connected) throw std::invalid_argument("classify: connected graph required");
  AciVerdict v;

  if (info.is_tree) {
    if (info.is_path || g.n() == 1) {
      v.status = AciStatus::CI;
      v.shape = AciShape::path;
      v.detail = "path";
      return v;
    }
    auto d3 = degree_three_vertices(g);
    int dmax = max_degree(g);
    if (dmax > 3) {
      for (int u = 1; u <= g.n(); ++u)
        if (g.degree(u) == dmax) {
          v.vertices = {u};
          break;
        }
      v.detail = "a vertex of degree " + std::to_string(dmax) + " cannot lie on two joined paths";
      return v;
    }
    if (d3.size() > 2 || (d3.size() == 2 && !g.has_edge(d3[0], d3[1]))) {
      v.vertices = d3;
      v.detail = d3.size() > 2 ? "more than two degree-3 vertices"
                               : "two non-adjacent degree-3 vertices";
      return v;
    }
    auto cand = ci_completion_edges(g);
    if (cand.empty()) throw std::logic_error("classify: tree shape test out of sync");
    v.status = AciStatus::ACI;
    v.shape = AciShape::two_paths_joined;
    v.edge = cand.front().first;
    v.vertices = d3;
    v.detail = "two paths joined by an edge";
    return v;
  }

  if (!info.is_unicyclic) {
    v.detail = "more than one independent cycle";
    return v;
  }

  auto d3 = degree_three_vertices(g);
  int dmax = max_degree(g);
  std::vector<int> cyc_sorted = info.cycle;
  std::sort(cyc_sorted.begin(), cyc_sorted.end());

  if (info.girth == 3 && dmax == 3 && d3.size() == 3 && d3 == cyc_sorted) {
    v.status = AciStatus::ACI;
    v.shape = AciShape::triangle_with_paths;
    v.vertices = cyc_sorted;
    v.detail = "triangle with a path at each vertex";
    return v;
  }

  if (dmax > 3) {
    for (int u = 1; u <= g.n(); ++u)
      if (g.degree(u) == dmax) {
        v.vertices = {u};
        break;
      }
    v.detail = "a vertex of degree " + std::to_string(dmax) + " cannot lie on a chorded path";
    return v;
  }
  bool on_cycle_ok = true;
  for (int u : d3)
    if (!std::binary_search(cyc_sorted.begin(), cyc_sorted.end(), u)) on_cycle_ok = false;
  if (!on_cycle_ok || d3.size() > 2 || (d3.size() == 2 && !g.has_edge(d3[0], d3[1]))) {
    v.vertices = d3;
    if (!on_cycle_ok)
      v.detail = "a degree-3 vertex off the cycle";
    else if (d3.size() > 2)
      v.detail = "more than two degree-3 vertices";
    else
      v.detail = "two non-adjacent degree-3 cycle vertices";
    return v;
  }
  auto cand = ci_completion_edges(g);
  if (cand.empty()) throw std::logic_error("classify: chord shape test out of sync");
  v.status = AciStatus::ACI;
  v.shape = AciShape::path_with_chord;
  v.edge = cand.front().first;
  v.vertices = d3;
  v.detail = g.n() == static_cast<int>(info.cycle.size()) ? "cycle: path plus the closing chord"
                                                          : "path plus a chord";
  return v;
}

bool mu_equals_height_plus_one(const Graph& g) {
  auto R = standard_ring(g.n(), Field{});
  auto mp = minimal_primes_and_height(R, g);
  return g.m() == mp.height + 1;
}

DSeqResult is_d_sequence(const std::vector<Poly>& seq) {
  DSeqResult res;
  if (seq.empty()) throw std::invalid_argument("is_d_sequence: empty sequence");
  const RingPtr& R = seq.front().ring();
  for (const auto& d : seq)
    if (d.is_zero()) throw std::invalid_argument("is_d_sequence: zero element");
  const int r = static_cast<int>(seq.size());

  // minimal generation: no element lies in the ideal of the others
  for (int k = 0; k < r; ++k) {
    std::vector<Poly> others;
    for (int t = 0; t < r; ++t)
      if (t != k) others.push_back(seq[t]);
    if (others.empty()) continue;
    if (Ideal(R, others).contains(seq[k])) {
      res.failure = "element " + std::to_string(k + 1) + " lies in the ideal of the others";
      res.fail_i = k + 1;
      return res;
    }
  }

  res.cert.seq = seq;
  for (int i = 0; i <= r - 1; ++i) {
    std::vector<Poly> prefix(seq.begin(), seq.begin() + i);
    for (int j = i + 1; j <= r; ++j) {
      DSequence::ColonPair pair{i, j, Ideal(R, {}), Ideal(R, {})};
      if (i > 0) {
        Ideal I(R, prefix);
        pair.with_product = colon(I, seq[i] * seq[j - 1]);
        pair.plain = colon(I, seq[j - 1]);
        if (!ideal_equal(pair.with_product, pair.plain)) {
          res.failure = "colon equality fails at (i=" + std::to_string(i) +
                        ", j=" + std::to_string(j) + ")";
          res.fail_i = i;
          res.fail_j = j;
          return res;
        }
      }
      // i = 0: (0) : d_1 d_j = (0) : d_j = 0 in a domain
      res.cert.certificate.push_back(std::move(pair));
    }
  }
  res.ok = true;
  return res;
}

std::vector<Poly> aci_edge_d_sequence(const RingPtr& R, const Graph& g, const AciVerdict& v) {
  if (v.status != AciStatus::ACI)
    throw std::invalid_argument("aci_edge_d_sequence: ACI verdict required");
  if (v.shape == AciShape::triangle_with_paths)
    throw std::invalid_argument(
        "aci_edge_d_sequence: no canonical edge ordering forms a d-sequence for "
        "triangle-with-paths graphs");
  if (!v.edge) throw std::invalid_argument("aci_edge_d_sequence: verdict lacks the edge");
  Edge e = *v.edge;
  Graph h = g.without_edge(e.first, e.second);
  std::vector<Poly> seq;
  for (const auto& comp : components(h)) {
    auto po = path_order(h, comp);
    if (!po) throw std::logic_error("aci_edge_d_sequence: component is not a path");
    for (size_t t = 0; t + 1 < po->size(); ++t)
      seq.push_back(edge_binomial(R, mk_edge((*po)[t], (*po)[t + 1])));
  }
  seq.push_back(edge_binomial(R, e));
  return seq;
}

}  // namespace bei
