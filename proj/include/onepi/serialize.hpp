#ifndef ONEPI_SERIALIZE_HPP
#define ONEPI_SERIALIZE_HPP

#include <json.hpp>

#include "onepi/canonical.hpp"
#include "onepi/field_hopf.hpp"
#include "onepi/graph.hpp"

namespace onepi {

using json = nlohmann::json;

/// [num, den]; components outside the int64 range are written as strings.
json rational_to_json(const Rational &r);
Rational rational_from_json(const json &j);

/// {"v": int, "edges": [[i, j, mult], ...], "loops": {"i": count},
///  "legs": {"i": ["x1", ...]}}; empty loops/legs are omitted.
json graph_to_json(const Graph &g);
Graph graph_from_json(const json &j);

/// {"v": int, "terms": [{"graph": ..., "coeff": [num, den]}, ...]} in
/// canonical key order.
json sum_to_json(const GraphSum &s);
GraphSum sum_from_json(const json &j);

json monomial_to_json(const Monomial &m);
Monomial monomial_from_json(const json &j);

/// [{"graph": canonical graph, "aut": n, "weight": [num, den]}, ...]
json classes_to_json(const ClassWeights &w);

}  // namespace onepi

#endif  // ONEPI_SERIALIZE_HPP
