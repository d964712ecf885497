#ifndef ONEPI_TEST_HELPERS_HPP
#define ONEPI_TEST_HELPERS_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "onepi/canonical.hpp"
#include "onepi/graph.hpp"

namespace testing {

using onepi::BigInt;
using onepi::Graph;
using onepi::GraphSum;
using onepi::Rational;

// "12^2,13,23,11" on v vertices; "11" is a self-loop at 1
inline Graph G(int v, const std::string &edges = "") {
  Graph g(v);
  std::stringstream in(edges);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const int i = item[0] - '0', j = item[1] - '0';
    const int m = item.size() > 3 && item[2] == '^' ? std::stoi(item.substr(3)) : 1;
    g.add_edge(i, j, m);
  }
  return g;
}

inline Rational Q(long num, long den = 1) { return onepi::make_rational(num, den); }

inline bool connected_without(const Graph &g, int skip) {
  const int v = g.num_vertices();
  std::vector<int> seen(v + 1, 0);
  int start = skip == 1 ? 2 : 1;
  if (start > v) return true;
  std::vector<int> stack{start};
  seen[start] = 1;
  int count = 1;
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    for (int b = 1; b <= v; ++b)
      if (b != a && b != skip && !seen[b] && g.multiplicity(a, b) > 0) {
        seen[b] = 1;
        ++count;
        stack.push_back(b);
      }
  }
  return count == v - (skip ? 1 : 0);
}

// deletion oracle
inline onepi::Classification brute_classify(const Graph &g) {
  const int v = g.num_vertices();
  onepi::Classification c{connected_without(g, 0), true, true};
  if (!c.connected) return {false, false, false};
  if (v > 1)
    for (int k = 1; k <= v; ++k) c.one_vi = c.one_vi && connected_without(g, k);
  for (int i = 1; i <= v; ++i)
    for (int j = i + 1; j <= v; ++j)
      if (g.multiplicity(i, j) == 1) {
        Graph h(v);
        for (const auto &e : g.edges())
          if (!(e.i == i && e.j == j)) h.add_edge(e.i, e.j, e.mult);
        c.one_pi = c.one_pi && connected_without(h, 0);
      }
  return c;
}

// |{pi : g.relabeled(pi) == g}| over all v! permutations
inline BigInt brute_vertex_aut(const Graph &g) {
  std::vector<int> p(g.num_vertices());
  std::iota(p.begin(), p.end(), 1);
  BigInt n = 0;
  do {
    if (g.relabeled(p) == g) ++n;
  } while (std::next_permutation(p.begin(), p.end()));
  return n;
}

inline BigInt brute_aut(const Graph &g) {
  BigInt n = brute_vertex_aut(g);
  for (const auto &e : g.edges()) n *= onepi::factorial(e.mult);
  for (int k = 1; k <= g.num_vertices(); ++k) {
    const int s = g.self_loops(k);
    n *= onepi::factorial(s);
    for (int t = 0; t < s; ++t) n *= 2;
  }
  return n;
}

inline std::vector<int> random_permutation(int v, std::mt19937 &rng) {
  std::vector<int> p(v);
  std::iota(p.begin(), p.end(), 1);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// random multigraph on v vertices; connected when asked (spanning tree first)
inline Graph random_graph(int v, int extra_edges, bool connected, std::mt19937 &rng) {
  Graph g(v);
  std::uniform_int_distribution<int> pick(1, v);
  if (connected)
    for (int k = 2; k <= v; ++k) g.add_edge(std::uniform_int_distribution<int>(1, k - 1)(rng), k);
  if (v >= 2)
    for (int e = 0; e < extra_edges; ++e) {
      int a = pick(rng), b = pick(rng);
      while (b == a) b = pick(rng);
      g.add_edge(a, b);
    }
  return g;
}

inline GraphSum random_sum(int v, int terms, bool connected, std::mt19937 &rng) {
  GraphSum s(v);
  std::uniform_int_distribution<int> extra(0, 3), num(-5, 5), den(1, 4);
  for (int t = 0; t < terms; ++t) {
    int n = num(rng);
    if (n == 0) n = 1;
    s.add(random_graph(v, extra(rng), connected, rng), Q(n, den(rng)));
  }
  return s;
}

}  // namespace testing

#endif  // ONEPI_TEST_HELPERS_HPP
