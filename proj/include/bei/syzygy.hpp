#pragma once

#include <string>
#include <vector>

#include "bei/betti.hpp"

namespace bei {

// 1-based position of i in the ascending ordering of A (i need not belong)
int p_index(const std::vector<int>& A, int i);

enum class SyzKind { koszul, claw, cycle, linear };

// one generator of the first syzygy of J_G, as a vector over the edge basis
struct SyzygyGen {
  SyzKind kind;
  std::string label;
  FreeVector v;
  int degree;  // internal degree in S(-2)^{edges}

  std::string str() const;  // "label: coords"
};

// f_{e1} e_{e2} - f_{e2} e_{e1}
SyzygyGen koszul_pair(const RingPtr& R, Edge e1, Edge e2);

// claw relation for center c and pairwise non-adjacent leaves {j,k,l}: the
// coordinate on e_{c,a} is (-1)^{p_A(a)} f_{A \ {c,a}} with A = {c,j,k,l}
SyzygyGen claw_relation(const RingPtr& R, int c, const std::array<int, 3>& leaves);

// coefficient vectors b_1..b_{m-1} for the degree-m cycle syzygies; cycle
// lists the vertices in cyclic order, entry k pairs with the edge
// (cycle[k], cycle[k+1]) and the last entry with (cycle[0], cycle[m-1]).
// Every entry is a single monomial; the recursion divides exactly.
std::vector<std::vector<Poly>> b_vectors(const RingPtr& R, const std::vector<int>& cycle);

// minimal first-syzygy generators of J_G for trees and connected unicyclic
// graphs: Koszul pairs, claw relations, plus the cycle vectors (girth >= 4)
// or the two linear Eagon-Northcott relations of the triangle (girth 3)
std::vector<SyzygyGen> first_syzygy(const RingPtr& R, const Graph& g);

struct SyzygyCheck {
  bool ok = false;
  std::string detail;  // first failure, or a summary of the passed checks
};

// Confirms that gens is a minimal generating set of the first syzygy of J_G:
// every generator maps to zero under e_e -> f_e, the count matches the
// closed-form second Betti numbers degree by degree, and in each degree the
// generators are independent modulo multiples of lower-degree kernel
// elements while spanning the full oracle kernel. Needs a prime field.
SyzygyCheck verify_first_syzygy(const RingPtr& R, const Graph& g,
                                const std::vector<SyzygyGen>& gens);

}  // namespace bei
