#include "onepi/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace onepi {

Graph::Graph(int num_vertices)
    : v_(num_vertices),
      mult_(static_cast<std::size_t>(num_vertices > 0 ? num_vertices : 0) *
                (num_vertices > 0 ? num_vertices : 0),
            0),
      loops_(num_vertices > 0 ? num_vertices : 0, 0),
      legs_(num_vertices > 0 ? num_vertices : 0) {
  if (num_vertices < 1)
    throw std::invalid_argument("Graph: number of vertices must be positive");
}

void Graph::check_vertex(int i) const {
  if (i < 1 || i > v_)
    throw std::out_of_range("Graph: vertex " + std::to_string(i) +
                            " outside 1.." + std::to_string(v_));
}

int Graph::multiplicity(int i, int j) const {
  check_vertex(i);
  check_vertex(j);
  if (i == j) return loops_[i - 1];
  return mult_[slot(i, j)];
}

int Graph::self_loops(int i) const {
  check_vertex(i);
  return loops_[i - 1];
}

const std::vector<std::string> &Graph::legs(int i) const {
  check_vertex(i);
  return legs_[i - 1];
}

void Graph::add_edge(int i, int j, int count) {
  check_vertex(i);
  check_vertex(j);
  if (count < 0) throw std::invalid_argument("Graph: negative edge count");
  if (i == j) {
    loops_[i - 1] += count;
    return;
  }
  mult_[slot(i, j)] += count;
  mult_[slot(j, i)] += count;
}

void Graph::add_self_loops(int i, int count) { add_edge(i, i, count); }

void Graph::add_leg(int i, std::string label) {
  check_vertex(i);
  auto &at = legs_[i - 1];
  at.insert(std::upper_bound(at.begin(), at.end(), label), std::move(label));
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int i = 1; i <= v_; ++i)
    for (int j = i + 1; j <= v_; ++j)
      if (int m = mult_[slot(i, j)]; m > 0) out.push_back({i, j, m});
  return out;
}

int Graph::internal_edge_count() const {
  int total = 0;
  for (int i = 1; i <= v_; ++i)
    for (int j = i + 1; j <= v_; ++j) total += mult_[slot(i, j)];
  return total;
}

int Graph::total_self_loops() const {
  return std::accumulate(loops_.begin(), loops_.end(), 0);
}

int Graph::leg_count() const {
  int n = 0;
  for (const auto &l : legs_) n += static_cast<int>(l.size());
  return n;
}

int Graph::edge_degree(int i) const {
  check_vertex(i);
  int d = 0;
  for (int j = 1; j <= v_; ++j)
    if (j != i) d += mult_[slot(i, j)];
  return d;
}

int Graph::degree(int i) const {
  return edge_degree(i) + 2 * loops_[i - 1] +
         static_cast<int>(legs_[i - 1].size());
}

Graph Graph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != v_)
    throw std::invalid_argument("Graph::relabeled: permutation size mismatch");
  std::vector<bool> seen(v_ + 1, false);
  for (int p : perm) {
    if (p < 1 || p > v_ || seen[p])
      throw std::invalid_argument("Graph::relabeled: not a permutation");
    seen[p] = true;
  }
  Graph out(v_);
  for (int i = 1; i <= v_; ++i) {
    const int pi = perm[i - 1];
    out.loops_[pi - 1] = loops_[i - 1];
    out.legs_[pi - 1] = legs_[i - 1];
    for (int j = 1; j <= v_; ++j)
      if (j != i) out.mult_[out.slot(pi, perm[j - 1])] = mult_[slot(i, j)];
  }
  return out;
}

Graph operator*(const Graph &a, const Graph &b) {
  if (a.v_ != b.v_)
    throw std::invalid_argument("Graph product: width mismatch");
  Graph out = a;
  for (std::size_t k = 0; k < out.mult_.size(); ++k) out.mult_[k] += b.mult_[k];
  for (int i = 0; i < out.v_; ++i) {
    out.loops_[i] += b.loops_[i];
    for (const auto &label : b.legs_[i]) out.add_leg(i + 1, label);
  }
  return out;
}

std::string describe(const Graph &g) {
  auto vertex = [](int k) {
    return k < 10 ? std::to_string(k) : "[" + std::to_string(k) + "]";
  };
  std::string out = "{";
  bool first = true;
  for (const auto &e : g.edges()) {
    if (!first) out += ",";
    first = false;
    out += vertex(e.i) + vertex(e.j);
    if (e.mult > 1) out += "^" + std::to_string(e.mult);
  }
  if (g.total_self_loops() > 0) {
    out += "; loops";
    for (int k = 1; k <= g.num_vertices(); ++k)
      if (int s = g.self_loops(k); s > 0)
        out += " " + vertex(k) + (s > 1 ? "^" + std::to_string(s) : "");
  }
  if (g.leg_count() > 0) {
    out += "; legs";
    for (int k = 1; k <= g.num_vertices(); ++k) {
      if (g.legs(k).empty()) continue;
      out += " " + vertex(k) + ":";
      for (std::size_t n = 0; n < g.legs(k).size(); ++n)
        out += (n ? "," : "") + g.legs(k)[n];
    }
  }
  return out + "}";
}

// ---------------------------------------------------------------------------

GraphSum::GraphSum(int num_vertices) : v_(num_vertices) {
  if (num_vertices < 1)
    throw std::invalid_argument("GraphSum: number of vertices must be positive");
}

GraphSum GraphSum::single(Graph g, Rational coeff) {
  GraphSum s(g.num_vertices());
  s.add(g, coeff);
  return s;
}

Rational GraphSum::coefficient(const Graph &g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GraphSum::add(const Graph &g, const Rational &coeff) {
  if (g.num_vertices() != v_)
    throw std::invalid_argument("GraphSum: term width " +
                                std::to_string(g.num_vertices()) +
                                " differs from " + std::to_string(v_));
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(g, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

GraphSum &GraphSum::operator+=(const GraphSum &other) {
  if (other.v_ != v_) throw std::invalid_argument("GraphSum: width mismatch");
  for (const auto &[g, c] : other.terms_) add(g, c);
  return *this;
}

GraphSum &GraphSum::operator*=(const Rational &scale) {
  if (scale == 0) {
    terms_.clear();
    return *this;
  }
  for (auto &[g, c] : terms_) c *= scale;
  return *this;
}

GraphSum operator*(const GraphSum &a, const GraphSum &b) {
  if (a.num_vertices() != b.num_vertices())
    throw std::invalid_argument("GraphSum product: width mismatch");
  GraphSum out(a.num_vertices());
  for (const auto &[ga, ca] : a)
    for (const auto &[gb, cb] : b) out.add(ga * gb, ca * cb);
  return out;
}

GraphSum relabeled(const GraphSum &s, std::span<const int> perm) {
  GraphSum out(s.num_vertices());
  for (const auto &[g, c] : s) out.add(g.relabeled(perm), c);
  return out;
}

// ---------------------------------------------------------------------------

bool is_connected(const Graph &g) {
  const int v = g.num_vertices();
  std::vector<bool> seen(v + 1, false);
  std::vector<int> stack{1};
  seen[1] = true;
  int reached = 1;
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    for (int b = 1; b <= v; ++b)
      if (b != a && !seen[b] && g.multiplicity(a, b) > 0) {
        seen[b] = true;
        ++reached;
        stack.push_back(b);
      }
  }
  return reached == v;
}

int loop_number_without_self_loops(const Graph &g) {
  if (!is_connected(g))
    throw std::invalid_argument("loop_number: graph is disconnected");
  return g.internal_edge_count() - g.num_vertices() + 1;
}

int loop_number(const Graph &g) {
  return loop_number_without_self_loops(g) + g.total_self_loops();
}

BlockDecomposition component_blocks(const Graph &g) {
  const int v = g.num_vertices();
  BlockDecomposition out;
  out.incidence.assign(v + 1, {});

  // Hopcroft-Tarjan on the underlying simple graph; parallel copies ride
  // along as multiplicities.
  std::vector<int> disc(v + 1, 0), low(v + 1, 0);
  std::vector<std::pair<int, int>> edge_stack;
  int timer = 0;

  auto emit_block = [&](int a, int b) {
    Block blk;
    std::set<int> verts;
    while (!edge_stack.empty()) {
      auto [x, y] = edge_stack.back();
      edge_stack.pop_back();
      verts.insert(x);
      verts.insert(y);
      blk.edges.push_back({std::min(x, y), std::max(x, y), g.multiplicity(x, y)});
      if ((x == a && y == b) || (x == b && y == a)) break;
    }
    std::sort(blk.edges.begin(), blk.edges.end());
    blk.vertices.assign(verts.begin(), verts.end());
    out.blocks.push_back(std::move(blk));
  };

  std::function<void(int, int)> dfs = [&](int a, int parent) {
    disc[a] = low[a] = ++timer;
    for (int b = 1; b <= v; ++b) {
      if (b == a || g.multiplicity(a, b) == 0 || b == parent) continue;
      if (disc[b] == 0) {
        edge_stack.emplace_back(a, b);
        dfs(b, a);
        low[a] = std::min(low[a], low[b]);
        if (low[b] >= disc[a]) emit_block(a, b);
      } else if (disc[b] < disc[a]) {
        edge_stack.emplace_back(a, b);
        low[a] = std::min(low[a], disc[b]);
      }
    }
  };
  for (int root = 1; root <= v; ++root)
    if (disc[root] == 0) dfs(root, 0);

  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const Block &x, const Block &y) { return x.edges < y.edges; });
  for (std::size_t k = 0; k < out.blocks.size(); ++k)
    for (int u : out.blocks[k].vertices)
      out.incidence[u].push_back(static_cast<int>(k));
  for (int u = 1; u <= v; ++u)
    if (out.incidence[u].size() >= 2) out.articulation_vertices.insert(u);
  return out;
}

BlockDecomposition blocks(const Graph &g) {
  if (!is_connected(g))
    throw std::invalid_argument("blocks: graph is disconnected");
  if (g.num_vertices() == 1) {
    BlockDecomposition out;
    out.incidence.assign(2, {});
    out.blocks.push_back({{1}, {}});
    out.incidence[1].push_back(0);
    return out;
  }
  return component_blocks(g);
}

Classification classify(const Graph &g) {
  Classification c{is_connected(g), false, false};
  if (!c.connected) return c;
  if (g.num_vertices() == 1) return {true, true, true};
  const auto dec = blocks(g);
  c.one_vi = dec.articulation_vertices.empty();
  c.one_pi = std::none_of(dec.blocks.begin(), dec.blocks.end(), [](const Block &b) {
    return b.edges.size() == 1 && b.edges.front().mult == 1;
  });
  return c;
}

}  // namespace onepi
