#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bei/beideal.hpp"
#include "bei/groebner.hpp"

namespace bei {

// S[T_e : e in E][t] with t heaviest, then the T block in edge order, then
// x_1..x_n, y_1..y_n
RingPtr rees_universe(const Graph& g, Field F = {});

// the presentation ring S[T], the universe without t
RingPtr rees_presentation_ring(const Graph& g, Field F = {});

// T-linear generators of the Rees kernel: first syzygies of the edge
// binomials with the basis vector e_{ij} replaced by T_{ij}. Connected trees
// and unicyclic graphs use the explicit generator families; anything else
// falls back to the syzygy_module oracle (rows split into their homogeneous
// components). Polynomials live in ST and are homogeneous with deg T = 1.
std::vector<Poly> linear_rees_generators(const RingPtr& ST, const Graph& g);

// true iff p vanishes under T_{ij} -> f_{ij} t with x, y fixed
bool delta_kernel_check(const Graph& g, const Poly& p);

// kernel of the substitution map, computed by eliminating t from
// (T_e - f_e t : e in E); lives in the presentation ring. A single edge gives
// the zero ideal. Caps in opts surface as ResourceCapError.
Ideal defining_ideal_by_elimination(const Graph& g, Field F = {},
                                    const BuchbergerOptions& opts = {});

struct LinearTypeResult {
  std::optional<bool> linear_type;  // empty when a resource cap interfered
  std::vector<Poly> linear_gens;    // in the presentation ring
  std::optional<Ideal> defining_ideal;
  std::optional<Poly> witness;  // kernel element outside the linear ideal
  std::string detail;
};

// decides whether the kernel equals the ideal of the T-linear generators.
// The containment linear <= kernel is rechecked unconditionally; when the
// converse fails, the smallest-degree kernel generator that is not in the
// linear ideal is reported as the witness.
LinearTypeResult is_linear_type(const Graph& g, Field F = {},
                                const BuchbergerOptions& opts = {});

}  // namespace bei
