#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bei/rees.hpp"
#include "bei/syzygy.hpp"

using namespace bei;

namespace {

Graph bipartite_counterexample() {
  return Graph(8, {{1, 2}, {1, 4}, {1, 6}, {1, 8}, {3, 4}, {3, 6}, {3, 8}, {5, 6}, {5, 8}, {7, 8}});
}

Poly tvar(const RingPtr& R, int a, int b) { return Poly::variable(R, vT(mk_edge(a, b))); }
Poly xvar(const RingPtr& R, int i) { return Poly::variable(R, vx(i)); }

// the quadratic kernel element supported on the double star at 1 and 3
Poly star_pair_quadric(const RingPtr& ST) {
  auto T = [&](int a, int b) { return tvar(ST, a, b); };
  auto X = [&](int i) { return xvar(ST, i); };
  return X(8) * T(1, 6) * T(3, 4) - X(6) * T(1, 8) * T(3, 4) - X(8) * T(1, 4) * T(3, 6) +
         X(4) * T(1, 8) * T(3, 6) + X(6) * T(1, 4) * T(3, 8) - X(4) * T(1, 6) * T(3, 8);
}

}  // namespace

TEST_CASE("rees rings order t, then T block, then x and y") {
  Graph p3 = path_graph(3);
  auto U = rees_universe(p3);
  REQUIRE(U->nvars() == 9);
  CHECK(U->var(0) == vt());
  CHECK(U->var(1) == vT(mk_edge(1, 2)));
  CHECK(U->var(2) == vT(mk_edge(2, 3)));
  CHECK(U->var(3) == vx(1));
  CHECK(U->var(6) == vy(1));
  auto ST = rees_presentation_ring(p3);
  REQUIRE(ST->nvars() == 8);
  CHECK(ST->var(0) == vT(mk_edge(1, 2)));
}

TEST_CASE("linear generators count and pass the substitution check") {
  struct Case {
    Graph g;
    size_t count;
  };
  std::vector<Case> cases{{path_graph(4), 3},
                          {star_graph(3), 4},
                          {cycle_graph(4), 9},
                          {Graph(2, {{1, 2}}), 0}};
  for (const auto& [g, count] : cases) {
    auto ST = rees_presentation_ring(g);
    auto lin = linear_rees_generators(ST, g);
    CHECK(lin.size() == count);
    for (const auto& p : lin) {
      CHECK(p.is_homogeneous());
      CHECK(delta_kernel_check(g, p));
    }
  }
}

TEST_CASE("substitution separates kernel from non-kernel elements") {
  Graph p4 = path_graph(4);
  auto ST = rees_presentation_ring(p4);
  Poly koszul =
      edge_binomial(ST, mk_edge(1, 2)) * tvar(ST, 3, 4) - edge_binomial(ST, mk_edge(3, 4)) * tvar(ST, 1, 2);
  CHECK(delta_kernel_check(p4, koszul));
  CHECK_FALSE(delta_kernel_check(p4, tvar(ST, 1, 2)));
}

TEST_CASE("double star quadric is in the kernel, one sign flip is not") {
  Graph g = bipartite_counterexample();
  auto ST = rees_presentation_ring(g);
  Poly q = star_pair_quadric(ST);
  CHECK(q.degree() == 3);
  CHECK(delta_kernel_check(g, q));

  auto T = [&](int a, int b) { return tvar(ST, a, b); };
  auto X = [&](int i) { return xvar(ST, i); };
  Poly q_bad = X(8) * T(1, 6) * T(3, 4) - X(6) * T(1, 8) * T(3, 4) + X(8) * T(1, 4) * T(3, 6) -
               X(4) * T(1, 8) * T(3, 6) - X(6) * T(1, 4) * T(3, 8) + X(4) * T(1, 6) * T(3, 8);
  CHECK_FALSE(delta_kernel_check(g, q_bad));

  // outside the ideal of the linear generators
  auto lin = linear_rees_generators(ST, g);
  Ideal L(ST, lin);
  CHECK_FALSE(normal_form(q, L.truncated_gb(3)).is_zero());
}

TEST_CASE("elimination kernel for small graphs") {
  Graph single(2, {{1, 2}});
  CHECK(defining_ideal_by_elimination(single).gens().empty());

  Graph p3 = path_graph(3);
  auto ST3 = rees_presentation_ring(p3);
  Poly koszul =
      edge_binomial(ST3, mk_edge(1, 2)) * tvar(ST3, 2, 3) - edge_binomial(ST3, mk_edge(2, 3)) * tvar(ST3, 1, 2);
  CHECK(ideal_equal(defining_ideal_by_elimination(p3), Ideal(ST3, {koszul})));

  Graph c4 = cycle_graph(4);
  auto ST4 = rees_presentation_ring(c4);
  Ideal D = defining_ideal_by_elimination(c4);
  CHECK(ideal_equal(D, Ideal(ST4, linear_rees_generators(ST4, c4))));
  for (const auto& p : linear_rees_generators(ST4, c4)) CHECK(D.contains(p.change_ring(D.ring())));
}

TEST_CASE("linear type verdicts") {
  for (const auto& g : {path_graph(5), star_graph(3), cycle_graph(4), cycle_graph(5)}) {
    LinearTypeResult res = is_linear_type(g);
    REQUIRE(res.linear_type.has_value());
    CHECK(*res.linear_type);
    CHECK_FALSE(res.witness.has_value());
    CHECK(res.defining_ideal.has_value());
  }
}

TEST_CASE("bipartite counterexample is not of linear type") {
  Graph g = bipartite_counterexample();
  LinearTypeResult res = is_linear_type(g);
  REQUIRE(res.linear_type.has_value());
  CHECK_FALSE(*res.linear_type);
  REQUIRE(res.witness.has_value());
  CHECK(res.witness->degree() == 3);
  CHECK(delta_kernel_check(g, *res.witness));
  auto ST = rees_presentation_ring(g);
  CHECK(res.witness->monic() == star_pair_quadric(ST).monic());
}

TEST_CASE("resource caps surface as an empty verdict") {
  BuchbergerOptions opts;
  opts.max_pairs = 1;
  LinearTypeResult res = is_linear_type(cycle_graph(4), Field{}, opts);
  CHECK_FALSE(res.linear_type.has_value());
  CHECK(res.detail.find("resource cap") != std::string::npos);
}
