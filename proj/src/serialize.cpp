#include "onepi/serialize.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace onepi {
namespace {

json integer_to_json(const BigInt &z) {
  if (z.fits_slong_p()) return json(z.get_si());
  return json(z.get_str());
}

BigInt integer_from_json(const json &j) {
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<long long>()));
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

}  // namespace

json rational_to_json(const Rational &r) {
  return json::array({integer_to_json(r.get_num()), integer_to_json(r.get_den())});
}

Rational rational_from_json(const json &j) {
  if (j.is_number_integer()) return make_rational(integer_from_json(j));
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("rational must be [num, den]: " + j.dump());
  const BigInt den = integer_from_json(j[1]);
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  return make_rational(integer_from_json(j[0]), den);
}

json graph_to_json(const Graph &g) {
  json edges = json::array();
  for (const auto &e : g.edges()) edges.push_back({e.i, e.j, e.mult});
  json loops = json::object(), legs = json::object();
  for (int k = 1; k <= g.num_vertices(); ++k) {
    if (g.self_loops(k) > 0) loops[std::to_string(k)] = g.self_loops(k);
    if (!g.legs(k).empty()) legs[std::to_string(k)] = g.legs(k);
  }
  return {{"v", g.num_vertices()}, {"edges", edges}, {"loops", loops}, {"legs", legs}};
}

Graph graph_from_json(const json &j) {
  Graph g(j.at("v").get<int>());
  for (const auto &e : j.at("edges")) {
    const int i = e.at(0), k = e.at(1), m = e.at(2);
    if (i >= k || m < 1) throw std::invalid_argument("bad edge entry " + e.dump());
    g.add_edge(i, k, m);
  }
  if (j.contains("loops"))
    for (const auto &[key, count] : j.at("loops").items())
      g.add_self_loops(std::stoi(key), count.get<int>());
  if (j.contains("legs"))
    for (const auto &[key, labels] : j.at("legs").items())
      for (const auto &label : labels) g.add_leg(std::stoi(key), label.get<std::string>());
  return g;
}

json sum_to_json(const GraphSum &s) {
  json terms = json::array();
  for (const auto &[g, c] : s)
    terms.push_back({{"graph", graph_to_json(g)}, {"coeff", rational_to_json(c)}});
  return {{"v", s.num_vertices()}, {"terms", terms}};
}

GraphSum sum_from_json(const json &j) {
  GraphSum s(j.at("v").get<int>());
  for (const auto &t : j.at("terms"))
    s.add(graph_from_json(t.at("graph")), rational_from_json(t.at("coeff")));
  return s;
}

json monomial_to_json(const Monomial &m) { return m.labels(); }

Monomial monomial_from_json(const json &j) {
  return Monomial(j.get<std::vector<std::string>>());
}

json classes_to_json(const ClassWeights &w) {
  json out = json::array();
  for (const auto &[cls, weight] : w)
    out.push_back({{"graph", graph_to_json(cls.representative)},
                   {"aut", integer_to_json(cls.aut_order)},
                   {"weight", rational_to_json(weight)}});
  return out;
}

}  // namespace onepi
