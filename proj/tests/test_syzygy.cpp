#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "bei/syzygy.hpp"

using namespace bei;

namespace {

RingPtr fp_ring(int n) { return standard_ring(n, Field{kDefaultPrime}); }

// minors for every vertex pair, not just graph edges
std::map<Edge, Poly> all_pair_minors(const RingPtr& R, int n) {
  std::map<Edge, Poly> m;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) m.emplace(Edge{a, b}, edge_binomial(R, {a, b}));
  return m;
}

Poly fij(const RingPtr& R, int a, int b) {
  Poly f = edge_binomial(R, a < b ? Edge{a, b} : Edge{b, a});
  return f;
}

}  // namespace

TEST_CASE("p_index positions") {
  std::vector<int> A = {2, 5, 7, 9};
  CHECK(p_index(A, 2) == 1);
  CHECK(p_index(A, 5) == 2);
  CHECK(p_index(A, 9) == 4);
  CHECK(p_index(A, 1) == 0);
  CHECK(p_index(A, 6) == 2);
}

TEST_CASE("koszul pair is a relation") {
  auto R = standard_ring(4, Field{});
  auto g = path_graph(4);
  auto s = koszul_pair(R, {3, 4}, {1, 2});
  CHECK(s.degree == 4);
  CHECK(s.label == "E[{3,4},{1,2}]");
  CHECK(s.v.apply(edge_binomial_map(R, g)).is_zero());
}

TEST_CASE("claw relation vanishes for any center position") {
  auto R = standard_ring(6, Field{});
  auto images = all_pair_minors(R, 6);
  // center smaller, inside, larger than the leaves
  CHECK(claw_relation(R, 1, {2, 3, 4}).v.apply(images).is_zero());
  CHECK(claw_relation(R, 3, {1, 2, 5}).v.apply(images).is_zero());
  CHECK(claw_relation(R, 6, {1, 4, 5}).v.apply(images).is_zero());

  // the spelled-out star case: center 1, leaves 2,3,4
  auto s = claw_relation(R, 1, {2, 3, 4});
  CHECK(s.v.coord({1, 2}) == fij(R, 3, 4));
  CHECK(s.v.coord({1, 3}) == Poly::zero(R) - fij(R, 2, 4));
  CHECK(s.v.coord({1, 4}) == fij(R, 2, 3));

  std::mt19937 rng(42);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<int> verts = {1, 2, 3, 4, 5, 6};
    std::shuffle(verts.begin(), verts.end(), rng);
    int c = verts[0];
    std::array<int, 3> leaves = {verts[1], verts[2], verts[3]};
    std::sort(leaves.begin(), leaves.end());
    CHECK(claw_relation(R, c, leaves).v.apply(images).is_zero());
  }
}

TEST_CASE("lifted claw identity") {
  auto R = standard_ring(6, Field{});
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<int> verts = {1, 2, 3, 4, 5, 6};
    std::shuffle(verts.begin(), verts.end(), rng);
    int v = verts[0], u = verts[1], k = verts[2], l = verts[3];
    std::vector<int> A = {v, u, k, l};
    std::sort(A.begin(), A.end());
    auto sgn = [&](int s) { return s % 2 == 0 ? 1 : -1; };
    Poly lhs = fij(R, u, l) * fij(R, v, k);
    if (sgn(p_index(A, k) + p_index(A, u) + 1) < 0) lhs = Poly::zero(R) - lhs;
    Poly t2 = fij(R, u, k) * fij(R, v, l);
    if (sgn(p_index(A, l) + p_index(A, u) + 1) < 0) t2 = Poly::zero(R) - t2;
    lhs = lhs + t2;
    CHECK(lhs == fij(R, k, l) * fij(R, u, v));
  }
}

TEST_CASE("b vectors on the standard cycle") {
  auto R = standard_ring(4, Field{});
  auto bs = b_vectors(R, {1, 2, 3, 4});
  REQUIRE(bs.size() == 3);
  CHECK(bs[0][0] == Poly::parse(R, "y3*y4"));
  CHECK(bs[0][1] == Poly::parse(R, "y1*y4"));
  CHECK(bs[0][2] == Poly::parse(R, "y1*y2"));
  CHECK(bs[0][3] == Poly::parse(R, "y2*y3"));
  CHECK(bs[1][1] == Poly::parse(R, "x1*y4"));
  CHECK(bs[2][0] == Poly::parse(R, "x3*x4"));
  CHECK(bs[2][2] == Poly::parse(R, "x1*x2"));
  CHECK_THROWS(b_vectors(R, {1, 2, 3}));
}

TEST_CASE("b vector commutation identity") {
  for (int m = 4; m <= 8; ++m) {
    auto R = standard_ring(m, Field{});
    std::vector<int> cyc(m);
    for (int i = 0; i < m; ++i) cyc[i] = i + 1;
    auto bs = b_vectors(R, cyc);
    for (const auto& b : bs) {
      Poly lhs = Poly::zero(R);
      for (int k = 1; k <= m - 1; ++k) lhs = lhs + b[k - 1] * fij(R, k, k + 1);
      CHECK(lhs == fij(R, 1, m) * b[m - 1]);
    }
  }
}

TEST_CASE("first syzygy families and verification") {
  struct Case {
    Graph g;
    long expect;
  };
  std::vector<Case> cases = {
      {path_graph(4), 3},
      {star_graph(3), 4},
      {cycle_graph(3), 2},
      {Graph(4, {{1, 2}, {1, 3}, {2, 3}, {1, 4}}), 5},
      {cycle_graph(4), 9},
      {cycle_graph(5), 14},
      {Graph(5, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 5}}), 14},
      {Graph(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}, {1, 6}}), 20},
      {Graph(5, {{2, 4}, {1, 4}, {1, 5}, {3, 5}, {2, 3}}), 14},  // relabeled C5
      {Graph(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}}), 11},
  };
  for (const auto& c : cases) {
    CAPTURE(c.g.n());
    auto R = fp_ring(c.g.n());
    auto gens = first_syzygy(R, c.g);
    CHECK(static_cast<long>(gens.size()) == c.expect);
    auto res = verify_first_syzygy(R, c.g, gens);
    CAPTURE(res.detail);
    CHECK(res.ok);
  }
}

TEST_CASE("verification catches corrupted generators") {
  auto R = fp_ring(4);
  auto g = cycle_graph(4);
  auto gens = first_syzygy(R, g);

  auto bad = gens;
  // flip the sign of one coordinate of the first Koszul pair
  FreeVector v(R);
  bool flipped = false;
  for (const auto& [e, p] : bad[0].v.coords()) {
    v.add_to(e, flipped ? p : Poly::zero(R) - p);
    flipped = true;
  }
  bad[0].v = v;
  auto res = verify_first_syzygy(R, g, bad);
  CHECK_FALSE(res.ok);
  CHECK(res.detail.find("nonzero image") != std::string::npos);

  auto short_list = gens;
  short_list.pop_back();
  res = verify_first_syzygy(R, g, short_list);
  CHECK_FALSE(res.ok);
  CHECK(res.detail.find("counts differ") != std::string::npos);

  auto dup = gens;
  // replace a cycle generator by a monomial multiple of a Koszul pair:
  // right degree, but dependent on the lower-degree part
  REQUIRE(dup.back().kind == SyzKind::cycle);
  dup.back() = dup.front();
  res = verify_first_syzygy(R, g, dup);
  CHECK_FALSE(res.ok);
  CHECK(res.detail.find("not minimal") != std::string::npos);
}

TEST_CASE("generator serialization") {
  auto R = standard_ring(4, Field{});
  auto s = koszul_pair(R, {1, 2}, {3, 4});
  CHECK(s.str().find("E[{1,2},{3,4}]: ") == 0);
  auto gens = first_syzygy(R, cycle_graph(4));
  CHECK(gens.back().label == "B[3]");
  auto tri = first_syzygy(R, Graph(4, {{1, 2}, {1, 3}, {2, 3}, {1, 4}}));
  CHECK(tri[0].label == "L[x]");
  CHECK(tri[1].label == "L[y]");
}
