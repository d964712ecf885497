#ifndef ONEPI_TENSOR_OPS_HPP
#define ONEPI_TENSOR_OPS_HPP

#include <map>
#include <vector>

#include "onepi/canonical.hpp"
#include "onepi/field_hopf.hpp"
#include "onepi/graph.hpp"

namespace onepi {

/// Injective map {1..source} -> {1..target}; moves a graph into a wider
/// tensor power, the remaining vertices staying isolated.
class Injection {
 public:
  Injection(int target_width, std::vector<int> images);
  static Injection identity(int width);

  int source() const { return static_cast<int>(images_.size()); }
  int target() const { return target_; }
  int operator()(int k) const { return images_.at(k - 1); }

  /// (*this) o first
  Injection after(const Injection &first) const;

 private:
  int target_;
  std::vector<int> images_;
};

Graph embed(const Graph &g, const Injection &inj);
GraphSum embed(const GraphSum &s, const Injection &inj);

/// Multiplies every term by R_{i,j}^mult (self-loops when i == j).
GraphSum add_edge(const GraphSum &s, int i, int j, int mult = 1);

/// Gluing product: vertices of `a` except i keep their order at 1..v-1, those
/// of `b` except j follow at v..v+v'-2, and the identified vertex is placed
/// last at v+v'-1.
GraphSum glue(const GraphSum &a, int i, const GraphSum &b, int j);

/// m-th iterate of the vertex-splitting map at i. Vertex i becomes i..i+m,
/// later vertices shift up by m, and every block at i (plus every self-loop
/// and leg at i, each as its own unit) independently picks one new vertex.
/// Terms may be disconnected; blocks are taken per component.
GraphSum block_split(const GraphSum &s, int i, int m);

/// Q_i^{(rho)}: split the ends at i over i and i+1 with both sides
/// nonempty, join the two with rho edges, scale by 1/(2(rho-1)!).
GraphSum q_map(const GraphSum &s, int i, int rho);

/// Q-hat_i^{(rho)}: like q_map, but the ends of each block at i are split
/// separately, each block keeping both sides nonempty. Terms with a block
/// that misses i contribute nothing.
GraphSum qhat_map(const GraphSum &s, int i, int rho);

/// core o block_split(target, i, v'-1): every 1VI core term is placed on the
/// window i..i+v'-1 in order and multiplied into the split target.
GraphSum merge_map(const GraphSum &core, const GraphSum &target, int i);

/// delta^{width-1}(T_1^k) with T_i = R_{i,i}/2: a multinomial sum over all
/// placements of k self-loops on `width` vertices.
GraphSum selfloop_coproduct(int k, int width);

/// Composition with Delta^{v-1}: attaches the labels as legs in all v^n
/// ways. Labels must be pairwise distinct.
GraphSum distribute_legs(const Monomial &labels, const GraphSum &s);

// Coalgebra on 1VI Feynman classes.

/// Formal sum of k-tuples of classes.
using ClassTensor = std::map<std::vector<FeynmanClass>, Rational>;

FeynmanClass single_vertex_class();

/// s (x) s for the single vertex, s (x) g + g (x) s otherwise. Throws
/// std::invalid_argument for classes that are not 1VI or carry loops/legs.
ClassTensor cb_coproduct(const FeynmanClass &c);
Rational cb_counit(const FeynmanClass &c);
/// Grading: v - 1.
int cb_degree(const FeynmanClass &c);

}  // namespace onepi

#endif  // ONEPI_TENSOR_OPS_HPP
