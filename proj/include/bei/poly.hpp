#pragma once

#include "bei/graph.hpp"
#include "bei/scalar.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace bei {

// x<i>, y<i>, edge variable T[i,j], the Rees variable t, elimination helper z
enum class VarKind : std::uint8_t { X, Y, TE, Tee, Aux };

struct VarName {
  VarKind kind = VarKind::X;
  std::int16_t a = 0, b = 0;  // X/Y: vertex; TE: edge endpoints; others unused

  friend auto operator<=>(const VarName&, const VarName&) = default;
  std::string str() const;
};

inline VarName vx(int i) { return {VarKind::X, static_cast<std::int16_t>(i), 0}; }
inline VarName vy(int i) { return {VarKind::Y, static_cast<std::int16_t>(i), 0}; }
inline VarName vT(Edge e) {
  return {VarKind::TE, static_cast<std::int16_t>(e.first), static_cast<std::int16_t>(e.second)};
}
inline VarName vt() { return {VarKind::Tee, 0, 0}; }
inline VarName vaux() { return {VarKind::Aux, 0, 0}; }

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// Exponent row over a ring's variable slots. Slot 0 is the heaviest variable;
// the monomial order is lex over that precedence. Exponents are capped at 255.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int nvars) : e_(nvars, 0) {}

  int nslots() const { return static_cast<int>(e_.size()); }
  int deg() const { return deg_; }
  int exp(int slot) const { return e_[slot]; }
  void set_exp(int slot, int v);
  bool is_one() const { return deg_ == 0; }

  static Monomial mul(const Monomial& a, const Monomial& b);
  static std::optional<Monomial> try_div(const Monomial& a, const Monomial& b);  // a/b
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static bool divides(const Monomial& b, const Monomial& a);  // b | a
  static bool coprime(const Monomial& a, const Monomial& b);
  static int cmp(const Monomial& a, const Monomial& b);  // lex over slots: -1,0,1

  friend bool operator==(const Monomial&, const Monomial&) = default;

  // 4 bits per slot; requires nslots <= 16 and every exponent <= 15
  std::uint64_t pack() const;

 private:
  std::vector<std::uint8_t> e_;
  int deg_ = 0;
};

// Polynomial ring presentation: coefficient field plus an ordered variable
// list (heaviest first). The active monomial order is always lex over the
// precedence; elimination orders are built by moving variables to the front.
class Ring {
 public:
  static RingPtr make(Field F, std::vector<VarName> precedence);
  // K[x_1..x_n, y_1..y_n], x block heavier, ascending index within blocks
  static RingPtr xy_lex(int n, Field F = {});

  RingPtr with_front(const std::vector<VarName>& front) const;  // reorder, front heaviest
  RingPtr without(const std::vector<VarName>& drop) const;      // subring

  const Field& field() const { return field_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  const VarName& var(int slot) const { return vars_[slot]; }
  const std::vector<VarName>& vars() const { return vars_; }
  std::optional<int> slot(const VarName& v) const;

  bool same(const Ring& o) const;  // identical field and precedence

  Monomial one() const { return Monomial(nvars()); }
  Monomial var_monomial(const VarName& v) const;
  std::string monomial_str(const Monomial& m) const;

 private:
  Field field_;
  std::vector<VarName> vars_;
  std::map<VarName, int> slot_;
};

struct Term {
  Monomial m;
  Scalar c;
  friend bool operator==(const Term&, const Term&) = default;
};

// Terms are kept strictly descending in the ring's order, so the leading term
// is terms().front().
class Poly {
 public:
  Poly() = default;
  explicit Poly(RingPtr R) : ring_(std::move(R)) {}

  static Poly zero(RingPtr R) { return Poly(std::move(R)); }
  static Poly constant(RingPtr R, const Scalar& c);
  static Poly variable(const RingPtr& R, const VarName& v);
  static Poly monomial(RingPtr R, Monomial m, Scalar c);
  static Poly parse(const RingPtr& R, const std::string& text);

  const RingPtr& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  int nterms() const { return static_cast<int>(terms_.size()); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& lt() const;
  const Monomial& lm() const { return lt().m; }
  const Scalar& lc() const { return lt().c; }
  int degree() const;  // total degree, -1 for zero
  bool is_homogeneous() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly mul_term(const Monomial& m, const Scalar& c) const;
  Poly scaled(const Scalar& c) const;
  Poly monic() const;

  // content equality: rings may be distinct objects as long as they agree
  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.ring_ != b.ring_ && (!a.ring_ || !b.ring_ || !a.ring_->same(*b.ring_))) return false;
    return a.terms_ == b.terms_;
  }

  std::string str() const;

  // reinterpret in S (same field); every variable must exist in S
  Poly change_ring(const RingPtr& S) const;
  // replace variables by polynomials in `target`; unmapped variables must
  // exist in target and map to themselves
  Poly substitute(const std::map<VarName, Poly>& images, const RingPtr& target) const;

  // build from unsorted term list (sorts, merges, drops zeros)
  static Poly from_terms(RingPtr R, std::vector<Term> ts);

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

// monomials of the given total degree in a subset of variables (all if empty),
// listed in decreasing ring order
std::vector<Monomial> graded_basis(const RingPtr& R, int degree,
                                   const std::vector<VarName>& vars = {});

// Element of the free module with basis indexed by graph edges.
class FreeVector {
 public:
  explicit FreeVector(RingPtr R) : ring_(std::move(R)) {}

  const RingPtr& ring() const { return ring_; }
  const std::map<Edge, Poly>& coords() const { return coords_; }
  bool is_zero() const { return coords_.empty(); }

  void add_to(Edge e, const Poly& p);
  Poly coord(Edge e) const;

  FreeVector operator+(const FreeVector& o) const;
  FreeVector operator-(const FreeVector& o) const;
  FreeVector scaled(const Scalar& c) const;
  FreeVector mul_term(const Monomial& m, const Scalar& c) const;

  // image under e_{uv} -> images.at({u,v})
  Poly apply(const std::map<Edge, Poly>& images) const;

  friend bool operator==(const FreeVector& a, const FreeVector& b) {
    if (a.ring_ != b.ring_ && (!a.ring_ || !b.ring_ || !a.ring_->same(*b.ring_))) return false;
    return a.coords_ == b.coords_;
  }

  std::string str() const;  // "e{1,2} <- ...; e{3,4} <- ..."

 private:
  RingPtr ring_;
  std::map<Edge, Poly> coords_;
};

}  // namespace bei
