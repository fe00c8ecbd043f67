#include "bei/beideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace bei {

RingPtr standard_ring(int n, Field F) { return Ring::xy_lex(n, F); }

Poly edge_binomial(const RingPtr& R, Edge e) {
  e = mk_edge(e.first, e.second);
  const auto [u, v] = e;
  const Field& F = R->field();
  Monomial a = Monomial::mul(R->var_monomial(vx(u)), R->var_monomial(vy(v)));
  Monomial b = Monomial::mul(R->var_monomial(vx(v)), R->var_monomial(vy(u)));
  return Poly::monomial(R, a, scalar_of(F, 1)) + Poly::monomial(R, b, scalar_of(F, -1));
}

Ideal binomial_edge_ideal(const RingPtr& R, const Graph& G) {
  if (G.edges().empty()) throw std::invalid_argument("binomial_edge_ideal: no edges");
  std::vector<Poly> gens;
  for (const auto& e : G.edges()) gens.push_back(edge_binomial(R, e));
  return Ideal(R, std::move(gens));
}

std::map<Edge, Poly> edge_binomial_map(const RingPtr& R, const Graph& G) {
  std::map<Edge, Poly> m;
  for (const auto& e : G.edges()) m.emplace(e, edge_binomial(R, e));
  return m;
}

PrimeComponent prime_component(const RingPtr& R, const Graph& G, const std::vector<int>& T) {
  PrimeComponent out;
  out.T = T;
  std::sort(out.T.begin(), out.T.end());
  out.parts = components_after_removal(G, T);
  out.height = G.n() - static_cast<int>(out.parts.size()) + static_cast<int>(T.size());
  for (int v : out.T) {
    out.gens.push_back(Poly::variable(R, vx(v)));
    out.gens.push_back(Poly::variable(R, vy(v)));
  }
  for (const auto& part : out.parts) {
    if (part.size() < 2) continue;
    for (size_t a = 0; a < part.size(); ++a)
      for (size_t b = a + 1; b < part.size(); ++b)
        out.gens.push_back(edge_binomial(R, mk_edge(part[a], part[b])));
  }
  return out;
}

MinimalPrimes minimal_primes_and_height(const RingPtr& R, const Graph& G) {
  MinimalPrimes out;
  for (const auto& T : cut_point_sets(G, G.n())) out.primes.push_back(prime_component(R, G, T));
  out.height = out.primes.front().height;
  for (const auto& p : out.primes) out.height = std::min(out.height, p.height);
  return out;
}

FmColonData fm_colon(const RingPtr& R, const Graph& G, Edge e) {
  e = mk_edge(e.first, e.second);
  if (!G.has_edge(e.first, e.second)) throw std::invalid_argument("fm_colon: not an edge");
  const Graph minus = G.without_edge(e.first, e.second);
  FmColonData out;
  out.closure = clique_complete_at(clique_complete_at(minus, e.first), e.second);
  for (const auto& path : simple_paths(minus, e.first, e.second)) {
    // interior vertices i_1 .. i_s; stage t trades the first t of the y's for x's
    const int s = static_cast<int>(path.size()) - 2;
    if (s < 1) throw std::logic_error("fm_colon: unexpected direct path");
    for (int t = 0; t <= s; ++t) {
      Monomial m = R->one();
      for (int k = 1; k <= s; ++k) {
        const VarName v = k <= t ? vx(path[k]) : vy(path[k]);
        m = Monomial::mul(m, R->var_monomial(v));
      }
      out.path_gens.push_back(Poly::monomial(R, m, scalar_of(R->field(), 1)));
    }
  }
  for (const auto& edge : out.closure.edges()) out.gens.push_back(edge_binomial(R, edge));
  for (const auto& p : out.path_gens) out.gens.push_back(p);
  return out;
}

Graph chorded_path(int n, int family) {
  if (family != 1 && family != 2) throw std::invalid_argument("chorded_path: family is 1 or 2");
  if (n < 5) throw std::invalid_argument("chorded_path: need n >= 5");
  return path_graph(n).with_edge(2, family == 1 ? n - 1 : n);
}

Ideal admissible_initial(const RingPtr& R, int n, int family) {
  if (family != 1 && family != 2) throw std::invalid_argument("admissible_initial: family is 1 or 2");
  const Scalar one = scalar_of(R->field(), 1);
  std::vector<Poly> gens;
  auto mono = [&](std::vector<VarName> vs) {
    Monomial m = R->one();
    for (const auto& v : vs) m = Monomial::mul(m, R->var_monomial(v));
    gens.push_back(Poly::monomial(R, m, one));
  };
  for (int i = 1; i < n; ++i) mono({vx(i), vy(i + 1)});
  const int top = family == 1 ? n - 1 : n;
  mono({vx(2), vy(top)});
  const int gap = family == 1 ? n - 4 : n - 3;
  for (int i = 2; i <= top - 2; ++i)
    for (int j = i + 2; j <= top && j - i <= gap; ++j) {
      std::vector<VarName> vs{vx(i)};
      for (int k = j + 1; k <= top; ++k) vs.push_back(vx(k));
      for (int k = 2; k <= i - 1; ++k) vs.push_back(vy(k));
      vs.push_back(vy(j));
      mono(vs);
    }
  return Ideal(R, std::move(gens));
}

}  // namespace bei
