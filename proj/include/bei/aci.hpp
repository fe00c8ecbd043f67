#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "bei/beideal.hpp"

namespace bei {

enum class AciStatus { CI, ACI, Neither };
enum class AciShape { path, two_paths_joined, path_with_chord, triangle_with_paths, other };

std::string to_string(AciStatus s);
std::string to_string(AciShape s);

// Structural verdict. For CI-completion shapes the witness edge e is the
// distinguished edge with G minus e a disjoint union of paths; for
// triangle-with-paths the witness vertices are the triangle; for Neither they
// point at the obstruction (a high-degree vertex or a bad degree-3 pair).
struct AciVerdict {
  AciStatus status = AciStatus::Neither;
  AciShape shape = AciShape::other;
  std::optional<Edge> edge;
  std::vector<int> vertices;
  std::string detail;
};

// Purely structural classification: paths are complete intersections; trees
// are almost complete intersections exactly when they are two paths joined by
// an edge; non-trees exactly when they are a path plus a chord (cycles
// included) or a triangle with a path attached to each vertex. Requires G
// connected.
AciVerdict classify(const Graph& g);

// independent arithmetic test: number of edges equals height(J_G) + 1,
// heights from the minimal primes
bool mu_equals_height_plus_one(const Graph& g);

struct DSequence {
  std::vector<Poly> seq;
  struct ColonPair {
    int i;  // prefix length, 0 means the zero ideal
    int j;  // 1-based index with j >= i+1
    Ideal with_product;  // (d_1..d_i) : d_{i+1} d_j
    Ideal plain;         // (d_1..d_i) : d_j
  };
  std::vector<ColonPair> certificate;
};

struct DSeqResult {
  bool ok = false;
  DSequence cert;
  std::string failure;  // first failing condition when !ok
  int fail_i = -1, fail_j = -1;
};

// d-sequence test: the elements minimally generate their ideal and
// (d_1..d_i) : d_{i+1} d_j = (d_1..d_i) : d_j for all 0 <= i < r, j >= i+1.
// The i = 0 colons are trivial in a domain and recorded as zero ideals.
DSeqResult is_d_sequence(const std::vector<Poly>& seq);

// The edge binomial d-sequence of an ACI graph: path-order binomials of the
// disjoint paths G minus e, then f_e. Candidate edges are ranked by the
// concatenated path orders (components by smallest vertex, each path listed
// smaller end first) and the lexicographically smallest wins. Refuses the
// triangle-with-paths shape, where no edge ordering forms a d-sequence.
std::vector<Poly> aci_edge_d_sequence(const RingPtr& R, const Graph& g, const AciVerdict& v);

}  // namespace bei
