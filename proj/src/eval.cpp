#include "onepi/eval.hpp"

#include <sstream>

namespace onepi {

Theory theory_preset(const std::string &name) {
  Theory th;
  th.name = name;
  if (name == "phi3") {
    th.couplings[3] = 1;
    th.allowed = {3};
  } else if (name == "phi4") {
    th.couplings[4] = 1;
    th.allowed = {4};
  } else {
    throw EvaluationError("unknown theory preset '" + name + "'");
  }
  return th;
}

namespace {

Rational number_from_json(const json &j, bool &inexact) {
  if (j.is_number_float()) {
    inexact = true;
    return Rational(j.get<double>());
  }
  return rational_from_json(j);
}

}  // namespace

Theory theory_from_json(const json &j) {
  Theory th;
  th.name = j.value("name", "custom");
  th.propagator = number_from_json(j.at("propagator"), th.inexact);
  if (th.propagator == 0) throw EvaluationError("theory: propagator must be nonzero");
  for (const auto &[degree, value] : j.at("couplings").items())
    th.couplings[std::stoi(degree)] = number_from_json(value, th.inexact);
  if (j.contains("allowed"))
    for (int d : j.at("allowed")) th.allowed.insert(d);
  else
    for (const auto &[d, value] : th.couplings) th.allowed.insert(d);
  return th;
}

Rational graph_value(const Graph &g, const Theory &th) {
  Rational value = 1;
  for (int k = 1; k <= g.num_vertices(); ++k) {
    const int d = g.degree(k);
    if (!th.allowed.contains(d))
      throw EvaluationError("evaluate: vertex degree " + std::to_string(d) +
                            " not allowed in theory '" + th.name + "'");
    auto it = th.couplings.find(d);
    if (it == th.couplings.end())
      throw EvaluationError("evaluate: no coupling for vertex degree " + std::to_string(d));
    value *= it->second;
  }
  const int exponent = g.internal_edge_count() + g.total_self_loops() + g.leg_count();
  for (int e = 0; e < exponent; ++e) value *= th.propagator;
  return value;
}

Rational evaluate(const GraphSum &s, const Theory &th) {
  Rational total = 0;
  for (const auto &[g, c] : s) total += c * graph_value(g, th);
  return total;
}

GraphSum vertex_filter(const GraphSum &s, const std::set<int> &allowed) {
  GraphSum out(s.num_vertices());
  for (const auto &[g, c] : s) {
    bool keep = true;
    for (int k = 1; keep && k <= g.num_vertices(); ++k) keep = allowed.contains(g.degree(k));
    if (keep) out.add(g, c);
  }
  return out;
}

std::optional<int> tau_boundary_value(std::size_t legs) {
  if (legs == 0) return kTauOfUnit;
  if (legs == 1) return kTauOfOnePoint;
  return std::nullopt;
}

IntegrandDescriptor emit_integrand(const Graph &g, const std::set<int> *allowed) {
  IntegrandDescriptor out;
  const int v = g.num_vertices();
  if (v == 1 && g.total_self_loops() == 0 && g.legs(1).size() == 2 && allowed &&
      !allowed->contains(2)) {
    out.external_propagators.emplace_back(g.legs(1)[0], g.legs(1)[1]);
    return out;
  }
  if (!is_connected(g)) throw std::invalid_argument("emit_integrand: graph is disconnected");

  for (int k = 1; k <= v; ++k) out.vertices.push_back({k, g.legs(k)});
  int copy = 0;
  auto end_pair = [&](int a, int b) {
    ++copy;
    const std::string near = "y" + std::to_string(copy), far = near + "'";
    out.vertices[a - 1].ends.push_back(near);
    out.vertices[b - 1].ends.push_back(far);
    out.inverse_propagators.emplace_back(near, far);
  };
  for (const auto &e : g.edges())
    for (int n = 0; n < e.mult; ++n) end_pair(e.i, e.j);
  for (int k = 1; k <= v; ++k)
    for (int n = 0; n < g.self_loops(k); ++n) end_pair(k, k);
  return out;
}

std::string IntegrandDescriptor::to_string() const {
  std::ostringstream out;
  bool first = true;
  auto sep = [&] {
    if (!first) out << " ";
    first = false;
  };
  for (const auto &[a, b] : external_propagators) {
    sep();
    out << "G(" << a << "," << b << ")";
  }
  for (const auto &vf : vertices) {
    sep();
    out << "V" << vf.ends.size() << "(";
    for (std::size_t n = 0; n < vf.ends.size(); ++n) out << (n ? "," : "") << vf.ends[n];
    out << ")";
  }
  for (const auto &[a, b] : inverse_propagators) {
    sep();
    out << "Ginv(" << a << "," << b << ")";
  }
  return out.str();
}

json IntegrandDescriptor::to_json() const {
  json verts = json::array(), inv = json::array(), ext = json::array();
  for (const auto &vf : vertices)
    verts.push_back({{"vertex", vf.vertex}, {"degree", vf.ends.size()}, {"ends", vf.ends}});
  for (const auto &[a, b] : inverse_propagators) inv.push_back({a, b});
  for (const auto &[a, b] : external_propagators) ext.push_back({a, b});
  return {{"vertex_functions", verts}, {"inverse_propagators", inv}, {"propagators", ext}};
}

}  // namespace onepi
