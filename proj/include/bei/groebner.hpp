#pragma once

#include "bei/poly.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

namespace bei {

// thrown when a computation hits a configured resource cap
struct ResourceCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BuchbergerOptions {
  // drop S-pairs whose lcm degree exceeds this; with homogeneous input the
  // result is a degree-truncated basis, exact for queries up to the cap
  std::optional<int> degree_cap;
  long max_pairs = -1;  // -1 = unlimited; exceeded -> ResourceCapError
  long max_basis = -1;
};

struct BuchbergerStats {
  long pairs_processed = 0;
  long reductions_to_zero = 0;
  bool truncated = false;
  int basis_size = 0;
};

class Ideal {
 public:
  Ideal(RingPtr R, std::vector<Poly> gens);  // rejects zero generators

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& gens() const { return gens_; }

  // reduced Groebner basis in the ring's order, cached
  const std::vector<Poly>& gb(const BuchbergerOptions& opts = {}) const;
  const BuchbergerStats& stats() const;

  // basis valid for degree <= cap queries (homogeneous input)
  std::vector<Poly> truncated_gb(int degree_cap) const;

  bool is_homogeneous() const;
  bool contains(const Poly& p) const;

  // install a basis already known to be the reduced GB (e.g. from elimination)
  void set_gb(std::vector<Poly> basis, BuchbergerStats stats) const;

 private:
  RingPtr ring_;
  std::vector<Poly> gens_;
  mutable std::shared_ptr<std::pair<std::vector<Poly>, BuchbergerStats>> gb_;
};

// remainder of full division by `basis` (tail-reduced, deterministic)
Poly normal_form(const Poly& p, const std::vector<Poly>& basis);

Poly s_poly(const Poly& f, const Poly& g);

// equality via reduced Groebner bases; rings must agree
bool ideal_equal(const Ideal& I, const Ideal& J);

// I cap J by eliminating a fresh auxiliary variable from z*I + (1-z)*J
Ideal intersect(const Ideal& I, const Ideal& J);

// I : f, computed as (I cap (f)) / f with exact division
Ideal colon(const Ideal& I, const Poly& f);

// generators of I cap K[vars complement]; the result lives in the subring and
// its reduced basis cache is pre-filled
Ideal eliminate(const Ideal& I, const std::vector<VarName>& vars,
                const BuchbergerOptions& opts = {});

// leading monomials of the reduced basis, as a monomial ideal
Ideal initial_ideal(const Ideal& I);

// exact quotient p / f; throws if f does not divide p
Poly divide_exact(const Poly& p, const Poly& f);

// Generators of the module of relations sum_i v_i * gens[i] = 0, computed from
// a representation-tracked Buchberger run (Schreyer relations of the final
// working basis pushed back to the input generators). Criteria are disabled
// during tracked runs so every processed pair contributes its relation.
std::vector<std::vector<Poly>> syzygy_module(const RingPtr& R, const std::vector<Poly>& gens);

}  // namespace bei
