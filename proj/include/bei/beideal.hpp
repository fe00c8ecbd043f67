#pragma once

#include "bei/graph.hpp"
#include "bei/groebner.hpp"
#include "bei/poly.hpp"

#include <map>
#include <vector>

namespace bei {

// K[x_1..x_n, y_1..y_n] with the lex order x_1 > ... > x_n > y_1 > ... > y_n
RingPtr standard_ring(int n, Field F = {});

// f_{uv} = x_u y_v - x_v y_u for u < v
Poly edge_binomial(const RingPtr& R, Edge e);

// J_G, generators in sorted edge order
Ideal binomial_edge_ideal(const RingPtr& R, const Graph& G);

// edge -> generator map, for evaluating module elements
std::map<Edge, Poly> edge_binomial_map(const RingPtr& R, const Graph& G);

// Prime P_T: variables x_i, y_i for i in T plus the edge ideals of the
// complete closures of the components left after removing T.
struct PrimeComponent {
  std::vector<int> T;
  std::vector<std::vector<int>> parts;  // components of G - T
  int height = 0;                       // n - c(T) + |T|
  std::vector<Poly> gens;
};

PrimeComponent prime_component(const RingPtr& R, const Graph& G, const std::vector<int>& T);

struct MinimalPrimes {
  std::vector<PrimeComponent> primes;  // T = empty set or T with the cut point property
  int height = 0;                      // min over the primes
};

// requires G connected
MinimalPrimes minimal_primes_and_height(const RingPtr& R, const Graph& G);

// Closed form for J_{G-e} : f_e. The ideal is generated by the edge binomials
// of the clique completion of G-e at both ends of e, plus one monomial for
// each interior-vertex stage of each simple path joining the ends of e.
struct FmColonData {
  Graph closure;                 // (G-e) completed at both endpoints of e
  std::vector<Poly> path_gens;   // monomials g_{P,t}, paths in lex order, t ascending
  std::vector<Poly> gens;        // closure binomials followed by path monomials
};

FmColonData fm_colon(const RingPtr& R, const Graph& G, Edge e);  // e must be an edge

// Path 1-2-...-n with one extra chord: family 1 adds {2, n-1}, family 2 adds
// {2, n}.
Graph chorded_path(int n, int family);

// Closed form for the lex initial ideal of J_{chorded_path(n, family)}:
// the edge monomials x_i y_{i+1}, the chord monomial, and the admissible-path
// monomials x_i x_{j+1}..x_top y_2..y_{i-1} y_j with top = n-1 (family 1) or
// n (family 2), over 2 <= j - i <= n-4 (family 1) or n-3 (family 2).
Ideal admissible_initial(const RingPtr& R, int n, int family);

}  // namespace bei
