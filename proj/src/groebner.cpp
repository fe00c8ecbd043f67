#include "bei/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace bei {

namespace {

struct Engine {
  RingPtr R;
  BuchbergerOptions opts;
  bool track = false;

  std::vector<Poly> basis;  // monic
  std::vector<std::vector<Poly>> reps;  // track: basis[k] = sum reps[k][i] * input[i]
  std::vector<std::vector<Poly>> syzygies;  // relations over the input generators
  std::set<std::tuple<int, int, int>> queue;  // (lcm degree, i, j)
  std::set<std::pair<int, int>> processed;
  BuchbergerStats stats;

  const Field& F() const { return R->field(); }

  void push_pair(int i, int j) {
    const Monomial l = Monomial::lcm(basis[i].lm(), basis[j].lm());
    if (opts.degree_cap && l.deg() > *opts.degree_cap) {
      stats.truncated = true;
      return;
    }
    queue.insert({l.deg(), i, j});
  }

  void add_basis(Poly p, std::vector<Poly> rep) {
    const Scalar c = inv(F(), p.lc());
    basis.push_back(p.scaled(c));
    if (track) {
      for (auto& r : rep) r = r.scaled(c);
      reps.push_back(std::move(rep));
    }
    const int k = static_cast<int>(basis.size()) - 1;
    if (opts.max_basis >= 0 && k + 1 > opts.max_basis)
      throw ResourceCapError("buchberger: basis size cap exceeded");
    for (int i = 0; i < k; ++i) push_pair(i, k);
  }

  // full tail reduction against the current basis; rep tracks the quotient
  // part over the input generators when tracking is on
  Poly reduce(Poly work, std::vector<Poly>* rep) {
    std::vector<Term> out;
    while (!work.is_zero()) {
      int red = -1;
      for (int k = 0; k < static_cast<int>(basis.size()); ++k)
        if (Monomial::divides(basis[k].lm(), work.lm())) {
          red = k;
          break;
        }
      if (red < 0) {
        out.push_back(work.lt());
        work = work - Poly::monomial(R, work.lm(), work.lc());
        continue;
      }
      const Monomial q = *Monomial::try_div(work.lm(), basis[red].lm());
      const Scalar c = work.lc();  // basis is monic
      work = work - basis[red].mul_term(q, c);
      if (rep)
        for (size_t i = 0; i < rep->size(); ++i)
          (*rep)[i] = (*rep)[i] - reps[red][i].mul_term(q, c);
    }
    return Poly::from_terms(R, std::move(out));
  }

  bool chain_criterion(int i, int j) {
    const Monomial l = Monomial::lcm(basis[i].lm(), basis[j].lm());
    for (int k = 0; k < static_cast<int>(basis.size()); ++k) {
      if (k == i || k == j) continue;
      if (!Monomial::divides(basis[k].lm(), l)) continue;
      if (processed.count({std::min(i, k), std::max(i, k)}) &&
          processed.count({std::min(j, k), std::max(j, k)}))
        return true;
    }
    return false;
  }

  void run(const std::vector<Poly>& input) {
    const size_t nin = input.size();
    for (size_t i = 0; i < nin; ++i) {
      std::vector<Poly> rep;
      if (track) {
        rep.assign(nin, Poly::zero(R));
        rep[i] = Poly::constant(R, scalar_of(F(), 1));
      }
      add_basis(input[i], std::move(rep));
    }
    while (!queue.empty()) {
      auto [deg, i, j] = *queue.begin();
      queue.erase(queue.begin());
      processed.insert({i, j});
      ++stats.pairs_processed;
      if (opts.max_pairs >= 0 && stats.pairs_processed > opts.max_pairs)
        throw ResourceCapError("buchberger: pair cap exceeded");
      if (!track) {
        if (Monomial::coprime(basis[i].lm(), basis[j].lm())) continue;
        if (chain_criterion(i, j)) continue;
      }
      const Monomial l = Monomial::lcm(basis[i].lm(), basis[j].lm());
      const Monomial ui = *Monomial::try_div(l, basis[i].lm());
      const Monomial uj = *Monomial::try_div(l, basis[j].lm());
      const Scalar one = scalar_of(F(), 1);
      Poly work = basis[i].mul_term(ui, one) - basis[j].mul_term(uj, one);
      std::vector<Poly> wrep;
      if (track) {
        wrep.assign(nin, Poly::zero(R));
        for (size_t a = 0; a < nin; ++a)
          wrep[a] = reps[i][a].mul_term(ui, one) - reps[j][a].mul_term(uj, one);
      }
      Poly r = reduce(std::move(work), track ? &wrep : nullptr);
      if (r.is_zero()) {
        ++stats.reductions_to_zero;
        if (track) {
          bool nonzero = false;
          for (const auto& p : wrep) nonzero = nonzero || !p.is_zero();
          if (nonzero) syzygies.push_back(std::move(wrep));
        }
      } else {
        add_basis(std::move(r), std::move(wrep));
      }
    }
    stats.basis_size = static_cast<int>(basis.size());
  }

  // unique reduced basis: minimal leading monomials, fully tail reduced, monic
  std::vector<Poly> reduced() {
    std::vector<int> order(basis.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return Monomial::cmp(basis[a].lm(), basis[b].lm()) < 0; });
    std::vector<Poly> kept;
    for (int idx : order) {
      bool covered = false;
      for (const auto& g : kept)
        if (Monomial::divides(g.lm(), basis[idx].lm())) {
          covered = true;
          break;
        }
      if (!covered) kept.push_back(basis[idx]);
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t k = 0; k < kept.size(); ++k) {
        std::vector<Poly> others;
        for (size_t a = 0; a < kept.size(); ++a)
          if (a != k) others.push_back(kept[a]);
        Poly r = normal_form(kept[k], others);
        if (!(r == kept[k])) {
          changed = true;
          if (r.is_zero()) {
            kept.erase(kept.begin() + static_cast<long>(k));
            --k;
          } else {
            kept[k] = r.monic();
          }
        }
      }
    }
    std::sort(kept.begin(), kept.end(),
              [](const Poly& a, const Poly& b) { return Monomial::cmp(a.lm(), b.lm()) > 0; });
    return kept;
  }
};

}  // namespace

Ideal::Ideal(RingPtr R, std::vector<Poly> gens) : ring_(std::move(R)), gens_(std::move(gens)) {
  // an empty generator list is the zero ideal (elimination kernels can be 0)
  for (const auto& g : gens_) {
    if (g.is_zero()) throw std::invalid_argument("Ideal: zero generator");
    if (!g.ring()->same(*ring_)) throw std::invalid_argument("Ideal: generator in wrong ring");
  }
}

const std::vector<Poly>& Ideal::gb(const BuchbergerOptions& opts) const {
  if (gb_ && !gb_->second.truncated) return gb_->first;
  Engine e{ring_, opts};
  e.run(gens_);
  auto basis = e.reduced();
  e.stats.basis_size = static_cast<int>(basis.size());
  gb_ = std::make_shared<std::pair<std::vector<Poly>, BuchbergerStats>>(std::move(basis), e.stats);
  return gb_->first;
}

const BuchbergerStats& Ideal::stats() const {
  if (!gb_) gb();
  return gb_->second;
}

std::vector<Poly> Ideal::truncated_gb(int degree_cap) const {
  if (gb_ && !gb_->second.truncated) return gb_->first;  // full basis is stronger
  BuchbergerOptions opts;
  opts.degree_cap = degree_cap;
  Engine e{ring_, opts};
  e.run(gens_);
  return e.reduced();
}

bool Ideal::is_homogeneous() const {
  for (const auto& g : gens_)
    if (!g.is_homogeneous()) return false;
  return true;
}

bool Ideal::contains(const Poly& p) const { return normal_form(p, gb()).is_zero(); }

void Ideal::set_gb(std::vector<Poly> basis, BuchbergerStats stats) const {
  gb_ = std::make_shared<std::pair<std::vector<Poly>, BuchbergerStats>>(std::move(basis), stats);
}

Poly normal_form(const Poly& p, const std::vector<Poly>& basis) {
  const RingPtr& R = p.ring();
  const Field& F = R->field();
  Poly work = p;
  std::vector<Term> out;
  while (!work.is_zero()) {
    int red = -1;
    for (int k = 0; k < static_cast<int>(basis.size()); ++k)
      if (Monomial::divides(basis[k].lm(), work.lm())) {
        red = k;
        break;
      }
    if (red < 0) {
      out.push_back(work.lt());
      work = work - Poly::monomial(R, work.lm(), work.lc());
    } else {
      const Monomial q = *Monomial::try_div(work.lm(), basis[red].lm());
      const Scalar c = div(F, work.lc(), basis[red].lc());
      work = work - basis[red].mul_term(q, c);
    }
  }
  return Poly::from_terms(R, std::move(out));
}

Poly s_poly(const Poly& f, const Poly& g) {
  const Field& F = f.ring()->field();
  const Monomial l = Monomial::lcm(f.lm(), g.lm());
  return f.mul_term(*Monomial::try_div(l, f.lm()), inv(F, f.lc())) -
         g.mul_term(*Monomial::try_div(l, g.lm()), inv(F, g.lc()));
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
  if (!I.ring()->same(*J.ring())) throw std::invalid_argument("ideal_equal: mixed rings");
  return I.gb() == J.gb();
}

Ideal intersect(const Ideal& I, const Ideal& J) {
  if (!I.ring()->same(*J.ring())) throw std::invalid_argument("intersect: mixed rings");
  const RingPtr& R = I.ring();
  if (R->slot(vaux())) throw std::invalid_argument("intersect: auxiliary variable in use");
  std::vector<VarName> vars{vaux()};
  for (const auto& v : R->vars()) vars.push_back(v);
  RingPtr Rz = Ring::make(R->field(), vars);
  const Poly z = Poly::variable(Rz, vaux());
  const Poly one_minus_z = Poly::constant(Rz, scalar_of(R->field(), 1)) - z;
  std::vector<Poly> gens;
  for (const auto& g : I.gens()) gens.push_back(z * g.change_ring(Rz));
  for (const auto& h : J.gens()) gens.push_back(one_minus_z * h.change_ring(Rz));
  Ideal big(Rz, std::move(gens));
  Ideal elim = eliminate(big, {vaux()});
  // rebuild over the caller's ring object
  std::vector<Poly> out;
  for (const auto& g : elim.gens()) out.push_back(g.change_ring(R));
  Ideal result(R, out);
  result.set_gb(out, elim.stats());
  return result;
}

Ideal colon(const Ideal& I, const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("colon: zero divisor polynomial");
  if (!f.ring()->same(*I.ring())) throw std::invalid_argument("colon: mixed rings");
  if (f.degree() == 0) return I;
  Ideal princ(I.ring(), {f});
  Ideal meet = intersect(I, princ);
  std::vector<Poly> out;
  for (const auto& g : meet.gens()) out.push_back(divide_exact(g, f));
  return Ideal(I.ring(), out);
}

Ideal eliminate(const Ideal& I, const std::vector<VarName>& vars, const BuchbergerOptions& opts) {
  RingPtr front = I.ring()->with_front(vars);
  std::vector<Poly> gens;
  for (const auto& g : I.gens()) gens.push_back(g.change_ring(front));
  Ideal J(front, std::move(gens));
  const auto& basis = J.gb(opts);
  RingPtr sub = I.ring()->without(vars);
  std::vector<Poly> out;
  for (const auto& g : basis) {
    bool uses = false;
    for (size_t s = 0; s < vars.size(); ++s)
      if (g.lm().exp(static_cast<int>(s)) > 0) uses = true;  // front slots are 0..k-1
    if (!uses) out.push_back(g.change_ring(sub));
  }
  Ideal result(sub, out);
  result.set_gb(out, J.stats());
  return result;
}

Ideal initial_ideal(const Ideal& I) {
  std::vector<Poly> out;
  const Scalar one = scalar_of(I.ring()->field(), 1);
  for (const auto& g : I.gb()) out.push_back(Poly::monomial(I.ring(), g.lm(), one));
  Ideal result(I.ring(), out);
  BuchbergerStats st;
  st.basis_size = static_cast<int>(out.size());
  result.set_gb(out, st);
  return result;
}

Poly divide_exact(const Poly& p, const Poly& f) {
  const RingPtr& R = p.ring();
  const Field& F = R->field();
  Poly work = p, quot = Poly::zero(R);
  while (!work.is_zero()) {
    auto q = Monomial::try_div(work.lm(), f.lm());
    if (!q) throw std::domain_error("divide_exact: not divisible");
    const Scalar c = div(F, work.lc(), f.lc());
    quot = quot + Poly::monomial(R, *q, c);
    work = work - f.mul_term(*q, c);
  }
  return quot;
}

std::vector<std::vector<Poly>> syzygy_module(const RingPtr& R, const std::vector<Poly>& gens) {
  for (const auto& g : gens)
    if (g.is_zero()) throw std::invalid_argument("syzygy_module: zero generator");
  Engine e{R, BuchbergerOptions{}};
  e.track = true;
  e.run(gens);
  // each collected relation must annihilate the generators
  for (const auto& s : e.syzygies) {
    Poly acc = Poly::zero(R);
    for (size_t i = 0; i < gens.size(); ++i) acc = acc + s[i] * gens[i];
    if (!acc.is_zero()) throw std::logic_error("syzygy_module: relation check failed");
  }
  return e.syzygies;
}

}  // namespace bei
