#pragma once

#include <map>
#include <string>
#include <vector>

#include "bei/graph.hpp"

namespace bei {

// tree on 1..n from a Pruefer code (length n-2, entries in 1..n)
Graph tree_from_pruefer(const std::vector<int>& code, int n);

// all n^(n-2) labeled trees in Pruefer order; n = 1, 2 give the trivial cases
std::vector<Graph> all_labeled_trees(int n);

// all connected labeled graphs with exactly one cycle (tree plus one edge,
// deduplicated); counts 1, 15, 222, 3660 for n = 3..6
std::vector<Graph> all_labeled_unicyclic(int n);

// isomorphism key: canonical rooted encoding at the tree center for forests,
// minimum relabeled edge list over all vertex permutations otherwise (meant
// for n <= 7)
std::string canonical_key(const Graph& g);

// representative per isomorphism class, keyed canonically, insertion order
// of first appearance preserved in the vector
struct IsoClasses {
  std::vector<Graph> reps;
  std::map<std::string, int> index;  // canonical key -> position in reps
};

IsoClasses iso_classes(const std::vector<Graph>& gs);

}  // namespace bei
