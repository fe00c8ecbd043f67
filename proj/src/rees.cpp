#include "bei/rees.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "bei/syzygy.hpp"

namespace bei {

RingPtr rees_universe(const Graph& g, Field F) {
  std::vector<VarName> prec;
  prec.push_back(vt());
  for (const auto& e : g.edges()) prec.push_back(vT(e));
  for (int i = 1; i <= g.n(); ++i) prec.push_back(vx(i));
  for (int i = 1; i <= g.n(); ++i) prec.push_back(vy(i));
  return Ring::make(F, prec);
}

RingPtr rees_presentation_ring(const Graph& g, Field F) {
  return rees_universe(g, F)->without({vt()});
}

namespace {

// split into total-degree homogeneous parts, ascending
std::vector<Poly> homogeneous_parts(const Poly& p) {
  std::map<int, std::vector<Term>> by_deg;
  for (const auto& t : p.terms()) by_deg[t.m.deg()].push_back(t);
  std::vector<Poly> out;
  for (auto& [d, ts] : by_deg) out.push_back(Poly::from_terms(p.ring(), std::move(ts)));
  return out;
}

}  // namespace

std::vector<Poly> linear_rees_generators(const RingPtr& ST, const Graph& g) {
  auto S = standard_ring(g.n(), ST->field());
  auto tvar = [&](Edge e) { return Poly::variable(ST, vT(e)); };
  std::vector<Poly> out;

  GraphInfo info = analyze(g);
  if (info.connected && (info.is_tree || info.is_unicyclic)) {
    for (const auto& s : first_syzygy(S, g)) {
      Poly p = Poly::zero(ST);
      for (const auto& [e, c] : s.v.coords()) p = p + c.change_ring(ST) * tvar(e);
      out.push_back(std::move(p));
    }
    return out;
  }

  auto gens = binomial_edge_ideal(S, g).gens();
  const auto& edges = g.edges();
  for (const auto& row : syzygy_module(S, gens)) {
    Poly p = Poly::zero(ST);
    for (size_t k = 0; k < edges.size(); ++k)
      if (!row[k].is_zero()) p = p + row[k].change_ring(ST) * tvar(edges[k]);
    for (auto& part : homogeneous_parts(p))
      if (std::find(out.begin(), out.end(), part) == out.end()) out.push_back(std::move(part));
  }
  return out;
}

bool delta_kernel_check(const Graph& g, const Poly& p) {
  RingPtr U = rees_universe(g, p.ring()->field());
  Poly t = Poly::variable(U, vt());
  std::map<VarName, Poly> images;
  for (const auto& e : g.edges()) images.emplace(vT(e), edge_binomial(U, e) * t);
  return p.substitute(images, U).is_zero();
}

Ideal defining_ideal_by_elimination(const Graph& g, Field F, const BuchbergerOptions& opts) {
  RingPtr U = rees_universe(g, F);
  Poly t = Poly::variable(U, vt());
  std::vector<Poly> gens;
  for (const auto& e : g.edges()) gens.push_back(Poly::variable(U, vT(e)) - edge_binomial(U, e) * t);
  return eliminate(Ideal(U, gens), {vt()}, opts);
}

LinearTypeResult is_linear_type(const Graph& g, Field F, const BuchbergerOptions& opts) {
  LinearTypeResult res;
  RingPtr ST = rees_presentation_ring(g, F);
  res.linear_gens = linear_rees_generators(ST, g);

  Ideal D(ST, {});
  try {
    D = defining_ideal_by_elimination(g, F, opts);
  } catch (const ResourceCapError& e) {
    res.detail = std::string("elimination hit a resource cap: ") + e.what();
    return res;
  }
  res.defining_ideal = D;

  for (const auto& p : res.linear_gens)
    if (!normal_form(p.change_ring(D.ring()), D.gb()).is_zero())
      throw std::logic_error("is_linear_type: linear generator outside the kernel");

  if (res.linear_gens.empty()) {
    if (D.gens().empty()) {
      res.linear_type = true;
      res.detail = "zero kernel";
    } else {
      res.linear_type = false;
      res.witness = D.gens().front().change_ring(ST);
      res.detail = "nonzero kernel with no linear part";
    }
    return res;
  }

  std::vector<Poly> dsorted;
  int dmax = 0;
  for (const auto& p : D.gens()) {
    dsorted.push_back(p.change_ring(ST));
    dmax = std::max(dmax, p.degree());
  }
  std::stable_sort(dsorted.begin(), dsorted.end(),
                   [](const Poly& a, const Poly& b) { return a.degree() < b.degree(); });

  Ideal L(ST, res.linear_gens);
  std::vector<Poly> basis;
  try {
    basis = L.truncated_gb(dmax);
  } catch (const ResourceCapError& e) {
    res.detail = std::string("membership basis hit a resource cap: ") + e.what();
    return res;
  }
  for (const auto& d : dsorted) {
    if (!normal_form(d, basis).is_zero()) {
      res.linear_type = false;
      res.witness = d;
      res.detail = "kernel generator of degree " + std::to_string(d.degree()) +
                   " outside the linear ideal";
      return res;
    }
  }
  res.linear_type = true;
  res.detail = "kernel equals the ideal of the linear generators";
  return res;
}

}  // namespace bei
