#pragma once

#include <map>
#include <string>
#include <vector>

#include "bei/beideal.hpp"

namespace bei {

// Graded Betti numbers of S/I, (i, j) -> count, with a note on where each
// entry came from (formula name or oracle).
struct BettiTable {
  std::map<std::pair<int, int>, long> entries;
  std::map<std::pair<int, int>, std::string> source;

  long beta(int i, int j) const;
  void set(int i, int j, long v, const std::string& src);
  long row_total(int i) const;
  bool row_equal(const BettiTable& o, int i) const;  // compares sparse rows
  std::string str() const;                           // "beta[i][j] = v" lines
};

// Second graded Betti numbers of S/J_G by the closed formulas for trees,
// cycles, and connected unicyclic graphs. Girth-3 graphs also get the 2*k3
// cubic row entry.
BettiTable closed_form_beta2(const Graph& g);

// Graded-linear-algebra Betti oracle for rows i = 1, 2 of S/I, degrees up to
// j_max. Independent of Buchberger: works with evaluation matrices of
// monomial multiples of the generators. Requires a prime field and
// homogeneous generators whose ring fits Monomial::pack.
BettiTable oracle_beta(const Ideal& I, int i_max, int j_max);

// First-syzygy graded data reused by the syzygy verifier: kernel dimensions
// N_j and explicit kernel bases as rows over the generator list.
class SyzygyOracle {
 public:
  SyzygyOracle(const Ideal& I, int j_max);

  long kernel_dim(int j) const;
  // basis of the degree-j piece of the relation module among I's generators;
  // each row has one polynomial coordinate per generator
  const std::vector<std::vector<Poly>>& kernel_basis(int j) const;
  int j_max() const { return j_max_; }
  const Ideal& ideal() const { return ideal_; }

 private:
  Ideal ideal_;
  int j_max_;
  mutable std::map<int, long> dims_;
  mutable std::map<int, std::vector<std::vector<Poly>>> bases_;
};

struct PdDepthReport {
  int pd = 0;
  int depth = 0;
  bool exact = false;  // every level's generator search stabilized inside the caps
  std::string note;
  // minimal generator counts per homological level i >= 1, (degree, count)
  std::vector<std::map<int, long>> levels;
};

// Iterated syzygy-kernel minimal-generator extraction. Level i scans degrees
// until 2 quiet degrees follow the last minimal generator; hom_bound + i and
// degree_bound cap the scan per level and globally. pd is exact when no level
// hit a cap before its quiet window; depth = (ring vars) - pd by
// Auslander-Buchsbaum.
PdDepthReport pd_depth_oracle(const Ideal& I, int degree_bound, int hom_bound);

// Mapping-cone recursion for stars, rows i <= 2:
// beta_{i,j}(S/J_{K_{1,n}}) = beta_{i,j}(S/J_{K_{1,n-1}}) + beta_{i-1,j-2}(S/J_{K_n})
bool star_betti_recursion_check(int n);

}  // namespace bei
