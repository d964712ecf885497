#ifndef ONEPI_CANONICAL_HPP
#define ONEPI_CANONICAL_HPP

#include <map>

#include "onepi/graph.hpp"

namespace onepi {

/// Isomorphism class of an unnumbered graph. Two numbered graphs share a class
/// iff some vertex renumbering maps one onto the other while preserving edge
/// multiplicities, self-loop counts and leg labels.
struct FeynmanClass {
  Graph representative;  // canonical numbering
  BigInt aut_order;      // full symmetry factor, see aut_order()

  int num_vertices() const { return representative.num_vertices(); }
  Rational weight() const { return make_rational(1, aut_order); }

  friend bool operator==(const FeynmanClass &a, const FeynmanClass &b) {
    return a.representative == b.representative;
  }
  friend auto operator<=>(const FeynmanClass &a, const FeynmanClass &b) {
    return a.representative <=> b.representative;
  }
};

struct CanonicalForm {
  Graph graph;
  /// Number of vertex permutations fixing the graph (legs pin vertices).
  BigInt vertex_aut_order;
};

/// Exhaustive minimisation over vertex orderings, restricted to orderings that
/// sort vertices by an isomorphism-invariant signature.
CanonicalForm canonical_form(const Graph &g);

/// |Vertex-Aut(g)| * prod m_ij! * prod (s_i! 2^{s_i}).
BigInt aut_order(const Graph &g);

FeynmanClass feynman_class(const Graph &g);

using ClassWeights = std::map<FeynmanClass, Rational>;

/// Sums coefficients of numbered terms per isomorphism class; classes whose
/// total cancels are dropped.
ClassWeights project(const GraphSum &s);

}  // namespace onepi

#endif  // ONEPI_CANONICAL_HPP
