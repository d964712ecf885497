#include <doctest.h>

#include "helpers.hpp"
#include "properties.hpp"

using namespace onepi;
using namespace testing;

namespace {

GraphSum S(const Graph &g, Rational c = 1) { return GraphSum::single(g, c); }

int total_ends(const Graph &g) {
  int n = 0;
  for (int k = 1; k <= g.num_vertices(); ++k) n += g.degree(k);
  return n;
}

}  // namespace

TEST_CASE("add_edge") {
  CHECK(add_edge(S(Graph(2)), 1, 2, 2) == S(G(2, "12^2")));
  CHECK(add_edge(S(G(3, "12,13,23")), 1, 1) == S(G(3, "12,13,23,11")));
  GraphSum two = S(G(3, "12"), Q(1, 2)) + S(G(3, "23"), Q(-3));
  CHECK(add_edge(two, 1, 3) == S(G(3, "12,13"), Q(1, 2)) + S(G(3, "23,13"), Q(-3)));
  CHECK_THROWS(add_edge(two, 1, 4));
}

TEST_CASE("embed") {
  Injection sigma(3, {1, 3});
  CHECK(embed(S(G(2, "12")), sigma) == S(G(3, "13")));
  GraphSum s = S(G(3, "12^2,23"), Q(2, 3));
  CHECK(embed(s, Injection::identity(3)) == s);
  Injection a(4, {2, 4, 1}), b(5, {5, 3, 1, 2});
  CHECK(embed(embed(s, a), b) == embed(s, b.after(a)));
  CHECK_THROWS(Injection(3, {1, 1}));
  CHECK_THROWS(Injection(3, {1, 4}));
  Graph legged = G(2, "12");
  legged.add_leg(2, "x");
  Graph moved = embed(legged, sigma);
  CHECK(moved.legs(3) == std::vector<std::string>{"x"});
}

TEST_CASE("glue follows the index convention") {
  // triangle glued at its vertex 3 to vertex 2 of an edge
  CHECK(glue(S(G(3, "12,13,23")), 3, S(G(2, "12")), 2) == S(G(4, "12,14,24,34")));
  CHECK(glue(S(Graph(1)), 1, S(Graph(1)), 1) == S(Graph(1)));
  GraphSum v12 = S(G(2, "12^2"), Q(1, 4));
  CHECK(glue(v12, 1, v12, 1) == S(G(3, "13^2,23^2"), Q(1, 16)));
}

TEST_CASE("glued vertex is an articulation vertex") {
  std::mt19937 rng(21);
  for (int n = 0; n < 100; ++n) {
    const int va = 2 + n % 3, vb = 2 + (n / 3) % 3;
    Graph a = random_graph(va, 2, true, rng), b = random_graph(vb, 2, true, rng);
    const int i = 1 + static_cast<int>(rng() % va), j = 1 + static_cast<int>(rng() % vb);
    GraphSum out = glue(S(a), i, S(b), j);
    REQUIRE(out.size() == 1);
    const Graph &g = out.begin()->first;
    CHECK(g.num_vertices() == va + vb - 1);
    CHECK(blocks(g).articulation_vertices.contains(va + vb - 1));
  }
}

TEST_CASE("coalgebra on 1VI classes") {
  FeynmanClass s = single_vertex_class();
  FeynmanClass tri = feynman_class(G(3, "12,13,23"));
  CHECK(cb_coproduct(s) == ClassTensor{{{s, s}, 1}});
  CHECK(cb_coproduct(tri) == ClassTensor{{{s, tri}, 1}, {{tri, s}, 1}});
  CHECK(cb_counit(tri) == 0);
  CHECK(cb_counit(s) == 1);
  CHECK(cb_degree(tri) == 2);
  CHECK(cb_degree(s) == 0);
  CHECK_THROWS(cb_coproduct(feynman_class(G(3, "12,23"))));
}

TEST_CASE("block_split examples") {
  CHECK(block_split(S(G(2, "12^2")), 1, 1) == S(G(3, "13^2")) + S(G(3, "23^2")));
  GraphSum s = S(G(3, "12,13,23"), Q(1, 3));
  CHECK(block_split(s, 2, 0) == s);
  CHECK_THROWS(block_split(s, 4, 1));
}

TEST_CASE("merge_map reproduces the two-triangle example") {
  GraphSum target = S(G(5, "12,13,23,34,35,45"));
  GraphSum out = merge_map(S(G(2, "12")), target, 3);
  GraphSum expected(6);
  for (const char *terms : {"34,12,13,23,35,36,56", "34,12,13,23,45,46,56",
                            "34,12,14,24,35,36,56", "34,12,14,24,45,46,56"})
    expected.add(G(6, terms), 1);
  CHECK(out == expected);
  auto classes = project(out);
  REQUIRE(classes.size() == 2);
  for (const auto &[cls, w] : classes) CHECK(w == 2);
}

TEST_CASE("merge_map further cases") {
  GraphSum target = S(G(3, "12^2,23"), Q(2, 5));
  CHECK(merge_map(S(Graph(1)), target, 2) == target);
  GraphSum v12 = S(G(2, "12^2"), Q(1, 4));
  CHECK(merge_map(v12, v12, 1) == S(G(3, "12^2,13^2"), Q(1, 16)) + S(G(3, "12^2,23^2"), Q(1, 16)));
  CHECK_THROWS(merge_map(S(G(3, "12,23")), target, 1));
}

TEST_CASE("block_split term counts") {
  std::mt19937 rng(8);
  for (int n = 0; n < 100; ++n) {
    const int v = 2 + n % 5;
    Graph g = random_graph(v, static_cast<int>(rng() % 4), true, rng);
    const int i = 1 + static_cast<int>(rng() % v);
    const int m = 1 + n % 3;
    const auto b = blocks(g).blocks_at(i);
    // sum of coefficients counts terms before merging
    Rational total = 0;
    for (const auto &[h, c] : block_split(S(g), i, m)) {
      total += c;
      CHECK(total_ends(h) == total_ends(g));
      CHECK(h.internal_edge_count() == g.internal_edge_count());
    }
    std::size_t expected = 1;
    for (std::size_t t = 0; t < b; ++t) expected *= m + 1;
    CHECK(total == Rational(static_cast<unsigned long>(expected)));
  }
}

TEST_CASE("self-loops and legs at the split vertex move as units") {
  Graph g = G(2, "12,11");
  g.add_leg(1, "x");
  GraphSum out = block_split(S(g), 1, 1);
  Rational total = 0;
  for (const auto &[h, c] : out) total += c;
  CHECK(total == 8);
}

TEST_CASE("split identity on random connected sums") {
  std::mt19937 rng(4);
  for (int n = 0; n < 100; ++n) {
    const int v = 1 + n % 5;
    GraphSum s = random_sum(v, 3, true, rng);
    CHECK(split_identity(s, 1 + static_cast<int>(rng() % v)));
  }
}

TEST_CASE("q_map examples") {
  GraphSum c2 = S(G(2, "12^2"));
  CHECK(q_map(c2, 1, 1) + q_map(c2, 2, 1) == S(G(3, "12,13,23"), 2));
  CHECK(q_map(c2, 1, 2) == S(G(3, "12^2,13,23")));
  CHECK(q_map(S(G(2, "12^3")), 1, 1) ==
        S(G(3, "12,13,23^2"), Q(3, 2)) + S(G(3, "12,13^2,23"), Q(3, 2)));
  CHECK_THROWS(q_map(c2, 1, 0));
  CHECK_THROWS(q_map(c2, 3, 1));
}

TEST_CASE("q_map counts and conservation") {
  std::mt19937 rng(12);
  for (int n = 0; n < 100; ++n) {
    const int v = 1 + n % 4;
    Graph g = random_graph(v, static_cast<int>(rng() % 4), true, rng);
    if (n % 3 == 0) g.add_self_loops(1);
    if (n % 4 == 0) g.add_leg(1, "x");
    const int i = 1 + static_cast<int>(rng() % v);
    const int rho = 1 + n % 3;
    const int d = g.degree(i);
    Rational total = 0;
    for (const auto &[h, c] : q_map(S(g), i, rho)) {
      total += c;
      CHECK(h.multiplicity(i, i + 1) >= rho);
      CHECK(total_ends(h) == total_ends(g) + 2 * rho);
    }
    const Rational splits = d >= 1 ? (1L << d) - 2 : 0;
    CHECK(total == splits / (2 * factorial(rho - 1)));
  }
}

TEST_CASE("qhat_map") {
  GraphSum bouquet = S(G(3, "12^2,13^2"));
  CHECK(qhat_map(bouquet, 1, 1) == S(G(4, "12,13,23,14,24"), 2));
  CHECK(qhat_map(S(G(3, "12,23")), 1, 1).empty());
  std::mt19937 rng(2);
  for (int n = 0; n < 60; ++n) {
    const int v = 2 + n % 4;
    Graph g = random_graph(v, 2 + static_cast<int>(rng() % 3), true, rng);
    if (!classify(g).one_vi) continue;
    const int i = 1 + static_cast<int>(rng() % v), rho = 1 + n % 2;
    CHECK(qhat_map(S(g), i, rho) == q_map(S(g), i, rho));
  }
}

TEST_CASE("selfloop_coproduct") {
  CHECK(selfloop_coproduct(2, 2) ==
        S(G(2, "11^2"), Q(1, 4)) + S(G(2, "11,22"), Q(1, 2)) + S(G(2, "22^2"), Q(1, 4)));
  CHECK(selfloop_coproduct(0, 3) == S(Graph(3)));
  CHECK(selfloop_coproduct(1, 3) ==
        S(G(3, "11"), Q(1, 2)) + S(G(3, "22"), Q(1, 2)) + S(G(3, "33"), Q(1, 2)));
}

TEST_CASE("distribute_legs") {
  GraphSum s = S(G(2, "12^2"), Q(1, 4));
  CHECK(distribute_legs(Monomial(), s) == s);
  GraphSum one = distribute_legs(Monomial{"x"}, s);
  Graph a = G(2, "12^2"), b = G(2, "12^2");
  a.add_leg(1, "x");
  b.add_leg(2, "x");
  CHECK(one == S(a, Q(1, 4)) + S(b, Q(1, 4)));
  CHECK(distribute_legs(Monomial{"x1", "x2"}, s).size() == 4);
  CHECK_THROWS(distribute_legs(Monomial{"x", "x"}, s));
}

TEST_CASE("operators are linear") {
  std::mt19937 rng(31);
  for (int n = 0; n < 60; ++n) {
    const int v = 2 + n % 3;
    GraphSum a = random_sum(v, 2, true, rng), b = random_sum(v, 2, true, rng);
    const Rational c = Q(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3));
    GraphSum mix = a + c * b;
    const int i = 1 + static_cast<int>(rng() % v);
    CHECK(block_split(mix, i, 2) == block_split(a, i, 2) + c * block_split(b, i, 2));
    CHECK(q_map(mix, i, 1) == q_map(a, i, 1) + c * q_map(b, i, 1));
    CHECK(qhat_map(mix, i, 2) == qhat_map(a, i, 2) + c * qhat_map(b, i, 2));
    CHECK(glue(mix, i, a, 1) == glue(a, i, a, 1) + c * glue(b, i, a, 1));
    CHECK(distribute_legs(Monomial{"x", "y"}, mix) ==
          distribute_legs(Monomial{"x", "y"}, a) + c * distribute_legs(Monomial{"x", "y"}, b));
    GraphSum core = S(G(2, "12^2"), Q(1, 4)) + S(G(2, "12"), Q(2));
    CHECK(merge_map(core, mix, i) == merge_map(core, a, i) + c * merge_map(core, b, i));
  }
}

TEST_CASE("coalgebra axioms on 1VI classes") {
  auto pool = onevi_class_pool(5, 2);
  REQUIRE(pool.size() > 10);
  for (const auto &c : pool) {
    CHECK(cb_coassociative(c));
    CHECK(cb_cocommutative(c));
    CHECK(cb_counit_law(c));
  }
}
