#include "onepi/tensor_ops.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace onepi {
namespace {

void check_index(const char *op, int i, int width) {
  if (i < 1 || i > width)
    throw std::out_of_range(std::string(op) + ": vertex " + std::to_string(i) +
                            " outside 1.." + std::to_string(width));
}

// Copy of `g` on `width` vertices without anything attached to `skip`;
// vertex k goes to shift(k).
template <class Shift>
Graph without_vertex(const Graph &g, int skip, int width, Shift shift) {
  Graph out(width);
  const int v = g.num_vertices();
  for (const auto &e : g.edges())
    if (e.i != skip && e.j != skip) out.add_edge(shift(e.i), shift(e.j), e.mult);
  for (int k = 1; k <= v; ++k) {
    if (k == skip) continue;
    out.add_self_loops(shift(k), g.self_loops(k));
    for (const auto &label : g.legs(k)) out.add_leg(shift(k), label);
  }
  return out;
}

Rational split_prefactor(int rho) {
  if (rho < 1) throw std::invalid_argument("q_map: rho must be >= 1");
  return make_rational(1, 2 * factorial(rho - 1));
}

// Half-edge ends at the split vertex. An end records where its far side
// lands in the widened graph, or which leg it is.
struct End {
  enum class Kind { Edge, LoopEnd, Leg } kind;
  int far = 0;        // Edge: shifted far vertex
  int loop = 0;       // LoopEnd: loop id
  std::string label;  // Leg
};

// Attaches ends to new vertices `base` (bit clear) or `base + 1` (bit set).
void attach(Graph &out, const std::vector<End> &ends, std::uint64_t mask, int base) {
  std::vector<int> loop_side;
  for (std::size_t k = 0; k < ends.size(); ++k) {
    const int side = base + static_cast<int>((mask >> k) & 1U);
    const End &e = ends[k];
    switch (e.kind) {
      case End::Kind::Edge:
        out.add_edge(side, e.far, 1);
        break;
      case End::Kind::Leg:
        out.add_leg(side, e.label);
        break;
      case End::Kind::LoopEnd:
        if (static_cast<int>(loop_side.size()) <= e.loop) loop_side.resize(e.loop + 1, 0);
        if (loop_side[e.loop] == 0)
          loop_side[e.loop] = side;
        else
          out.add_edge(loop_side[e.loop], side, 1);  // loop or bridge i,i+1
        break;
    }
  }
}

void check_end_count(std::size_t d) {
  if (d >= 63) throw std::length_error("q_map: too many ends at the split vertex");
}

}  // namespace

// ---------------------------------------------------------------------------

Injection::Injection(int target_width, std::vector<int> images)
    : target_(target_width), images_(std::move(images)) {
  std::vector<bool> used(static_cast<std::size_t>(std::max(target_width, 0)) + 1, false);
  for (int x : images_) {
    if (x < 1 || x > target_width)
      throw std::invalid_argument("Injection: image " + std::to_string(x) +
                                  " outside 1.." + std::to_string(target_width));
    if (used[x]) throw std::invalid_argument("Injection: map is not injective");
    used[x] = true;
  }
}

Injection Injection::identity(int width) {
  std::vector<int> images(width);
  for (int k = 0; k < width; ++k) images[k] = k + 1;
  return Injection(width, std::move(images));
}

Injection Injection::after(const Injection &first) const {
  if (first.target() != source())
    throw std::invalid_argument("Injection::after: widths do not compose");
  std::vector<int> images(first.source());
  for (int k = 1; k <= first.source(); ++k) images[k - 1] = (*this)(first(k));
  return Injection(target_, std::move(images));
}

Graph embed(const Graph &g, const Injection &inj) {
  if (inj.source() != g.num_vertices())
    throw std::invalid_argument("embed: injection source differs from graph width");
  Graph out(inj.target());
  for (const auto &e : g.edges()) out.add_edge(inj(e.i), inj(e.j), e.mult);
  for (int k = 1; k <= g.num_vertices(); ++k) {
    out.add_self_loops(inj(k), g.self_loops(k));
    for (const auto &label : g.legs(k)) out.add_leg(inj(k), label);
  }
  return out;
}

GraphSum embed(const GraphSum &s, const Injection &inj) {
  if (inj.source() != s.num_vertices())
    throw std::invalid_argument("embed: injection source differs from sum width");
  GraphSum out(inj.target());
  for (const auto &[g, c] : s) out.add(embed(g, inj), c);
  return out;
}

GraphSum add_edge(const GraphSum &s, int i, int j, int mult) {
  check_index("add_edge", i, s.num_vertices());
  check_index("add_edge", j, s.num_vertices());
  if (mult < 1) throw std::invalid_argument("add_edge: multiplicity must be >= 1");
  GraphSum out(s.num_vertices());
  for (const auto &[g, c] : s) {
    Graph h = g;
    h.add_edge(i, j, mult);
    out.add(h, c);
  }
  return out;
}

GraphSum glue(const GraphSum &a, int i, const GraphSum &b, int j) {
  const int va = a.num_vertices(), vb = b.num_vertices();
  check_index("glue", i, va);
  check_index("glue", j, vb);
  const int width = va + vb - 1;

  std::vector<int> left(va), right(vb);
  for (int k = 1; k <= va; ++k) left[k - 1] = k < i ? k : (k == i ? width : k - 1);
  for (int k = 1; k <= vb; ++k)
    right[k - 1] = k < j ? va - 1 + k : (k == j ? width : va + k - 2);
  const Injection ia(width, left), ib(width, right);

  GraphSum out(width);
  for (const auto &[ga, ca] : a) {
    const Graph ea = embed(ga, ia);
    for (const auto &[gb, cb] : b) out.add(ea * embed(gb, ib), ca * cb);
  }
  return out;
}

GraphSum block_split(const GraphSum &s, int i, int m) {
  const int v = s.num_vertices();
  check_index("block_split", i, v);
  if (m < 0) throw std::invalid_argument("block_split: m must be >= 0");
  if (m == 0) return s;
  const int width = v + m;
  auto shift = [&](int k) { return k < i ? k : k + m; };

  GraphSum out(width);
  for (const auto &[g, c] : s) {
    const auto dec = component_blocks(g);
    Graph base = without_vertex(g, i, width, shift);

    // units moved as a whole: blocks at i, then self-loops, then legs
    std::vector<const Block *> at_i;
    for (int b : dec.incidence[i]) at_i.push_back(&dec.blocks[b]);
    const int loops = g.self_loops(i);
    const auto &legs = g.legs(i);
    const std::size_t units = at_i.size() + loops + legs.size();

    std::vector<int> choice(units, 0);
    while (true) {
      Graph h = base;
      std::size_t u = 0;
      for (; u < at_i.size(); ++u)
        for (const auto &e : at_i[u]->edges) {
          // edges away from i are already in `base`
          const int far = e.i == i ? e.j : (e.j == i ? e.i : 0);
          if (far != 0) h.add_edge(i + choice[u], shift(far), e.mult);
        }
      for (int l = 0; l < loops; ++l, ++u) h.add_self_loops(i + choice[u], 1);
      for (const auto &label : legs) h.add_leg(i + choice[u++], label);
      out.add(h, c);

      std::size_t p = 0;
      while (p < units && ++choice[p] == m + 1) choice[p++] = 0;
      if (p == units) break;
    }
  }
  return out;
}

GraphSum q_map(const GraphSum &s, int i, int rho) {
  const int v = s.num_vertices();
  check_index("q_map", i, v);
  const Rational pre = split_prefactor(rho);
  auto shift = [&](int k) { return k <= i ? k : k + 1; };

  GraphSum out(v + 1);
  for (const auto &[g, c] : s) {
    std::vector<End> ends;
    for (int k = 1; k <= v; ++k)
      if (k != i)
        for (int n = 0; n < g.multiplicity(i, k); ++n)
          ends.push_back({End::Kind::Edge, shift(k), 0, {}});
    for (int l = 0; l < g.self_loops(i); ++l) {
      ends.push_back({End::Kind::LoopEnd, 0, l, {}});
      ends.push_back({End::Kind::LoopEnd, 0, l, {}});
    }
    for (const auto &label : g.legs(i)) ends.push_back({End::Kind::Leg, 0, 0, label});
    check_end_count(ends.size());
    if (ends.size() < 2) continue;

    Graph base = without_vertex(g, i, v + 1, shift);
    base.add_edge(i, i + 1, rho);
    const std::uint64_t full = (std::uint64_t{1} << ends.size()) - 1;
    const Rational coeff = c * pre;
    for (std::uint64_t mask = 1; mask < full; ++mask) {
      Graph h = base;
      attach(h, ends, mask, i);
      out.add(h, coeff);
    }
  }
  return out;
}

GraphSum qhat_map(const GraphSum &s, int i, int rho) {
  const int v = s.num_vertices();
  check_index("qhat_map", i, v);
  const Rational pre = split_prefactor(rho);
  auto shift = [&](int k) { return k <= i ? k : k + 1; };

  GraphSum out(v + 1);
  for (const auto &[g, c] : s) {
    const auto dec = component_blocks(g);
    if (dec.blocks.empty()) continue;
    const bool bouquet = std::all_of(dec.blocks.begin(), dec.blocks.end(), [&](const Block &b) {
      return std::binary_search(b.vertices.begin(), b.vertices.end(), i);
    });
    if (!bouquet) continue;  // Delta_{>=1}(1) = 0 for a block missing i

    // per-block end lists; self-loops and legs at i form one extra group
    // that is distributed without truncation
    std::vector<std::vector<End>> groups;
    for (const auto &b : dec.blocks) {
      std::vector<End> ends;
      for (const auto &e : b.edges) {
        const int far = e.i == i ? e.j : (e.j == i ? e.i : 0);
        for (int n = 0; far != 0 && n < e.mult; ++n)
          ends.push_back({End::Kind::Edge, shift(far), 0, {}});
      }
      check_end_count(ends.size());
      groups.push_back(std::move(ends));
    }
    std::vector<End> attached;
    for (int l = 0; l < g.self_loops(i); ++l) {
      attached.push_back({End::Kind::LoopEnd, 0, l, {}});
      attached.push_back({End::Kind::LoopEnd, 0, l, {}});
    }
    for (const auto &label : g.legs(i)) attached.push_back({End::Kind::Leg, 0, 0, label});
    check_end_count(attached.size());
    if (std::any_of(groups.begin(), groups.end(), [](const auto &e) { return e.size() < 2; }))
      continue;

    Graph base = without_vertex(g, i, v + 1, shift);
    base.add_edge(i, i + 1, rho);
    const Rational coeff = c * pre;

    // odometer: block masks range over 1..2^d-2, the attached group over
    // 0..2^d-1
    const std::size_t n = groups.size();
    std::vector<std::uint64_t> mask(n + 1, 1), lo(n + 1, 1), hi(n + 1);
    for (std::size_t k = 0; k < n; ++k) hi[k] = (std::uint64_t{1} << groups[k].size()) - 2;
    lo[n] = mask[n] = 0;
    hi[n] = (std::uint64_t{1} << attached.size()) - 1;
    while (true) {
      Graph h = base;
      for (std::size_t k = 0; k < n; ++k) attach(h, groups[k], mask[k], i);
      attach(h, attached, mask[n], i);
      out.add(h, coeff);

      std::size_t p = 0;
      while (p <= n && mask[p] == hi[p]) mask[p] = lo[p], ++p;
      if (p > n) break;
      ++mask[p];
    }
  }
  return out;
}

GraphSum merge_map(const GraphSum &core, const GraphSum &target, int i) {
  const int vc = core.num_vertices(), vt = target.num_vertices();
  check_index("merge_map", i, vt);
  for (const auto &[g, c] : core)
    if (!classify(g).one_vi) throw std::invalid_argument("merge_map: core term is not 1VI");

  const int width = vt + vc - 1;
  std::vector<int> window(vc);
  for (int a = 1; a <= vc; ++a) window[a - 1] = i + a - 1;
  return embed(core, Injection(width, window)) * block_split(target, i, vc - 1);
}

GraphSum selfloop_coproduct(int k, int width) {
  if (k < 0) throw std::invalid_argument("selfloop_coproduct: k must be >= 0");
  if (width < 1) throw std::invalid_argument("selfloop_coproduct: width must be >= 1");
  GraphSum out(width);
  BigInt two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, k);
  const BigInt kfact = factorial(k);

  // all compositions (k_1, ..., k_width) of k, weighted k!/(prod k_i! 2^k)
  std::vector<int> parts(width, 0);
  auto place = [&](auto &self, int slot, int left) -> void {
    if (slot == width - 1) {
      parts[slot] = left;
      Graph g(width);
      BigInt denom = two_pow;
      for (int p = 0; p < width; ++p) {
        g.add_self_loops(p + 1, parts[p]);
        denom *= factorial(parts[p]);
      }
      out.add(g, make_rational(kfact, denom));
      return;
    }
    for (int here = 0; here <= left; ++here) {
      parts[slot] = here;
      self(self, slot + 1, left - here);
    }
  };
  place(place, 0, k);
  return out;
}

GraphSum distribute_legs(const Monomial &labels, const GraphSum &s) {
  if (!labels.has_distinct_labels())
    throw std::invalid_argument("distribute_legs: leg labels must be distinct");
  const int v = s.num_vertices();
  const auto &names = labels.labels();
  GraphSum out(v);
  for (const auto &[g, c] : s) {
    std::vector<int> at(names.size(), 1);
    while (true) {
      Graph h = g;
      for (std::size_t k = 0; k < names.size(); ++k) h.add_leg(at[k], names[k]);
      out.add(h, c);
      std::size_t p = 0;
      while (p < at.size() && ++at[p] > v) at[p++] = 1;
      if (p == at.size()) break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

FeynmanClass single_vertex_class() { return feynman_class(Graph(1)); }

namespace {
void require_plain_one_vi(const FeynmanClass &c) {
  const Graph &g = c.representative;
  if (g.total_self_loops() != 0 || g.leg_count() != 0)
    throw std::invalid_argument("coalgebra on 1VI classes: loops and legs not allowed");
  if (!classify(g).one_vi) throw std::invalid_argument("coalgebra on 1VI classes: class is not 1VI");
}
}  // namespace

ClassTensor cb_coproduct(const FeynmanClass &c) {
  require_plain_one_vi(c);
  const FeynmanClass s = single_vertex_class();
  ClassTensor out;
  if (c == s) {
    out[{s, s}] = 1;
    return out;
  }
  out[{s, c}] += 1;
  out[{c, s}] += 1;
  return out;
}

Rational cb_counit(const FeynmanClass &c) {
  require_plain_one_vi(c);
  return c.num_vertices() == 1 ? 1 : 0;
}

int cb_degree(const FeynmanClass &c) { return c.num_vertices() - 1; }

}  // namespace onepi
