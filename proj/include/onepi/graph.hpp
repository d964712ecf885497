#ifndef ONEPI_GRAPH_HPP
#define ONEPI_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "onepi/rational.hpp"

namespace onepi {

/// One entry of the internal-edge multiset: the pair {i, j} (i < j) taken
/// `mult` times.
struct Edge {
  int i;
  int j;
  int mult;
  auto operator<=>(const Edge &) const = default;
};

/// Vertex-numbered multigraph with self-loops and labeled external legs.
///
/// Vertices are numbered 1..v. A graph on v vertices is the picture of one
/// basis tensor of S(V)^{(x)v}: internal edges are the R_{i,j} factors, self
/// loops the R_{i,i} factors, and the legs at vertex i the field-operator
/// monomial in the i-th tensor slot. Isolated vertices are allowed.
class Graph {
 public:
  explicit Graph(int num_vertices);

  int num_vertices() const { return v_; }

  /// Multiplicity of {i, j}; for i == j this is the self-loop count.
  int multiplicity(int i, int j) const;
  int self_loops(int i) const;
  const std::vector<std::string> &legs(int i) const;

  /// Adds `count` copies of {i, j}; i == j adds self-loops.
  void add_edge(int i, int j, int count = 1);
  void add_self_loops(int i, int count = 1);
  void add_leg(int i, std::string label);

  /// Sorted list of internal (non-loop) edges with multiplicities.
  std::vector<Edge> edges() const;
  /// Sum of internal edge multiplicities, self-loops excluded.
  int internal_edge_count() const;
  int total_self_loops() const;
  int leg_count() const;
  /// Number of ends at vertex i: edges + 2 * self-loops + legs.
  int degree(int i) const;
  /// Ends at vertex i belonging to non-loop internal edges.
  int edge_degree(int i) const;

  /// Renumbers vertices: old vertex k becomes perm[k - 1]. `perm` must be a
  /// permutation of 1..v.
  Graph relabeled(std::span<const int> perm) const;

  /// Componentwise product: union of edges, loops and legs. Widths must match.
  friend Graph operator*(const Graph &a, const Graph &b);

  friend auto operator<=>(const Graph &, const Graph &) = default;
  friend bool operator==(const Graph &, const Graph &) = default;

 private:
  void check_vertex(int i) const;
  std::size_t slot(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * v_ + (j - 1);
  }

  int v_;
  std::vector<int> mult_;  // symmetric v x v, diagonal unused
  std::vector<int> loops_;
  std::vector<std::vector<std::string>> legs_;  // each kept sorted
};

/// Formal linear combination of numbered graphs on a fixed number of
/// vertices with exact rational coefficients. Zero coefficients are never
/// stored; identical numbered graphs merge additively.
class GraphSum {
 public:
  using Terms = std::map<Graph, Rational>;

  explicit GraphSum(int num_vertices);
  static GraphSum single(Graph g, Rational coeff = 1);

  int num_vertices() const { return v_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms &terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  /// Coefficient of `g`, zero when absent.
  Rational coefficient(const Graph &g) const;

  void add(const Graph &g, const Rational &coeff);
  GraphSum &operator+=(const GraphSum &other);
  GraphSum &operator*=(const Rational &scale);
  friend GraphSum operator+(GraphSum a, const GraphSum &b) { return a += b; }
  friend GraphSum operator*(const Rational &c, GraphSum s) { return s *= c; }

  friend bool operator==(const GraphSum &, const GraphSum &) = default;

 private:
  int v_;
  Terms terms_;
};

/// Compact text form, e.g. "{12^2,13,23; loops 1; legs 1:x1 2:x2}". Vertex
/// numbers above 9 are bracketed.
std::string describe(const Graph &g);

/// Bilinear componentwise product of two sums of equal width.
GraphSum operator*(const GraphSum &a, const GraphSum &b);

/// Applies `relabeled(perm)` to every term.
GraphSum relabeled(const GraphSum &s, std::span<const int> perm);

/// Connectivity ignores self-loops and legs.
bool is_connected(const Graph &g);

/// Cyclomatic number E - v + 1 of a connected graph, self-loops excluded.
int loop_number_without_self_loops(const Graph &g);
/// E - v + 1 + s, every self-loop counted as a loop. Throws
/// std::invalid_argument on disconnected input.
int loop_number(const Graph &g);

struct Classification {
  bool connected;
  bool one_vi;
  bool one_pi;
  bool operator==(const Classification &) const = default;
};

/// 1VI: connected and stays connected after erasing any vertex with its
/// edges. 1PI: connected and stays connected after erasing any single copy of
/// an internal edge. A single vertex is both.
Classification classify(const Graph &g);

struct Block {
  std::vector<int> vertices;  // sorted
  std::vector<Edge> edges;    // sorted, full multiplicities
};

/// Maximal 1VI subgraphs of a connected graph. A bridge is its own block and
/// parallel edges always share a block. Self-loops and legs are vertex
/// attributes and belong to no block. A single vertex yields one edgeless
/// block.
struct BlockDecomposition {
  std::vector<Block> blocks;
  std::set<int> articulation_vertices;
  /// vertex -> indices into `blocks`; index 0 unused
  std::vector<std::vector<int>> incidence;

  std::size_t blocks_at(int vertex) const { return incidence.at(vertex).size(); }
};

BlockDecomposition blocks(const Graph &g);

/// Block decomposition of every connected component; isolated vertices own no
/// block. Used where an operator acts on transiently disconnected terms.
BlockDecomposition component_blocks(const Graph &g);

}  // namespace onepi

#endif  // ONEPI_GRAPH_HPP
