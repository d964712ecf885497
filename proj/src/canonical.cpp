#include "onepi/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace onepi {
namespace {

struct VertexSignature {
  int edge_degree;
  int loops;
  std::vector<std::string> legs;
  std::vector<int> neighbour_mults;  // sorted descending, zeros dropped

  auto operator<=>(const VertexSignature &) const = default;
};

VertexSignature signature(const Graph &g, int u) {
  VertexSignature s{g.edge_degree(u), g.self_loops(u), g.legs(u), {}};
  for (int w = 1; w <= g.num_vertices(); ++w)
    if (w != u && g.multiplicity(u, w) > 0)
      s.neighbour_mults.push_back(g.multiplicity(u, w));
  std::sort(s.neighbour_mults.rbegin(), s.neighbour_mults.rend());
  return s;
}

}  // namespace

CanonicalForm canonical_form(const Graph &g) {
  const int v = g.num_vertices();

  // order[p] = original vertex placed at canonical position p + 1
  std::vector<int> order(v);
  std::iota(order.begin(), order.end(), 1);
  std::vector<VertexSignature> sig(v + 1);
  for (int u = 1; u <= v; ++u) sig[u] = signature(g, u);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return sig[a] < sig[b]; });

  // cells of equal signature; only permutations inside cells are tried
  std::vector<std::pair<int, int>> cells;
  for (int p = 0; p < v;) {
    int q = p + 1;
    while (q < v && sig[order[q]] == sig[order[p]]) ++q;
    if (q - p > 1) cells.emplace_back(p, q);
    p = q;
  }

  // Loops and legs are constant within a cell, so only the multiplicity
  // matrix varies between candidate orderings.
  auto key_of = [&](const std::vector<int> &ord, std::vector<int> &key) {
    key.clear();
    for (int a = 0; a < v; ++a)
      for (int b = a + 1; b < v; ++b) key.push_back(g.multiplicity(ord[a], ord[b]));
  };

  for (auto &[lo, hi] : cells) std::sort(order.begin() + lo, order.begin() + hi);

  // odometer over the product of per-cell permutations; every ordering is
  // visited once
  std::vector<int> best_order, key, best_key;
  BigInt hits = 0;
  while (true) {
    key_of(order, key);
    if (best_order.empty() || key < best_key) {
      best_key = key;
      best_order = order;
      hits = 1;
    } else if (key == best_key) {
      ++hits;
    }
    std::size_t c = 0;
    for (; c < cells.size(); ++c) {
      auto [lo, hi] = cells[c];
      if (std::next_permutation(order.begin() + lo, order.begin() + hi)) break;
    }
    if (c == cells.size()) break;
  }

  std::vector<int> perm(v);
  for (int p = 0; p < v; ++p) perm[best_order[p] - 1] = p + 1;
  return {g.relabeled(perm), hits};
}

BigInt aut_order(const Graph &g) {
  BigInt order = canonical_form(g).vertex_aut_order;
  for (const auto &e : g.edges()) order *= factorial(e.mult);
  for (int u = 1; u <= g.num_vertices(); ++u) {
    const int s = g.self_loops(u);
    BigInt two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, s);
    order *= factorial(s) * two_pow;
  }
  return order;
}

FeynmanClass feynman_class(const Graph &g) {
  return {canonical_form(g).graph, aut_order(g)};
}

ClassWeights project(const GraphSum &s) {
  ClassWeights out;
  for (const auto &[g, c] : s) {
    auto cls = feynman_class(g);
    auto [it, inserted] = out.try_emplace(std::move(cls), c);
    if (!inserted) it->second += c;
  }
  std::erase_if(out, [](const auto &kv) { return kv.second == 0; });
  return out;
}

}  // namespace onepi
