#ifndef ONEPI_EVAL_HPP
#define ONEPI_EVAL_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "onepi/canonical.hpp"
#include "onepi/serialize.hpp"

namespace onepi {

/// Zero-dimensional Feynman rules: the propagator is a number g, a vertex
/// with d ends is worth lambda_d. Values are held exactly; `inexact` records
/// that some input arrived as a float, which only changes how results print.
struct Theory {
  std::string name;
  Rational propagator = 1;
  std::map<int, Rational> couplings;
  std::set<int> allowed;
  bool inexact = false;
};

struct EvaluationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// "phi3" / "phi4": g = 1, the single coupling 1, allowed {3} resp. {4}.
Theory theory_preset(const std::string &name);
/// {"propagator": [num, den] | number, "couplings": {"3": ..., ...},
///  "allowed": [3, ...]}; `allowed` defaults to the coupling degrees.
Theory theory_from_json(const json &j);

/// Value of one graph: prod lambda_{deg} * g^(E + s + n). Every end carries a
/// propagator and every internal edge or self-loop an inverse one, which
/// leaves one g per internal edge, self-loop and leg.
Rational graph_value(const Graph &g, const Theory &th);

/// Sum of coefficient * graph_value. Throws EvaluationError for a degree
/// that is disallowed or has no coupling.
Rational evaluate(const GraphSum &s, const Theory &th);

/// Keeps the terms whose vertices all have an allowed degree.
GraphSum vertex_filter(const GraphSum &s, const std::set<int> &allowed);

/// Conventional low-point values of the 1PI functional: tau(1) = 0 and
/// tau(phi) = 0, i.e. the empty and one-leg sums do not contribute.
inline constexpr int kTauOfUnit = 0;
inline constexpr int kTauOfOnePoint = 0;
/// The conventional value when n <= 1, otherwise nullopt.
std::optional<int> tau_boundary_value(std::size_t legs);

struct VertexFunction {
  int vertex;
  std::vector<std::string> ends;  // leg labels first, then internal ends
};

/// Integrand of a graph: one vertex function per vertex, one inverse
/// propagator per internal edge copy, and external propagators only for the
/// degenerate bare-propagator graph.
struct IntegrandDescriptor {
  std::vector<VertexFunction> vertices;
  std::vector<std::pair<std::string, std::string>> inverse_propagators;
  std::vector<std::pair<std::string, std::string>> external_propagators;

  std::string to_string() const;
  json to_json() const;
};

/// Internal ends of the k-th edge copy are named yk (lower vertex) and yk'
/// (higher vertex). When `allowed` excludes degree 2, a single vertex carrying
/// exactly two legs is emitted as the bare propagator G(x1, x2).
IntegrandDescriptor emit_integrand(const Graph &g, const std::set<int> *allowed = nullptr);

}  // namespace onepi

#endif  // ONEPI_EVAL_HPP
