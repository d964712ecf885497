#include "onepi/oracle.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>

#include "onepi/recursion.hpp"

namespace onepi {

std::string to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::OneVI: return "1vi";
    case GraphKind::OnePI: return "1pi";
    case GraphKind::Connected: return "connected";
  }
  return "?";
}

GraphKind graph_kind_from_string(const std::string &name) {
  if (name == "1vi") return GraphKind::OneVI;
  if (name == "1pi") return GraphKind::OnePI;
  if (name == "connected") return GraphKind::Connected;
  throw std::invalid_argument("unknown graph kind '" + name + "'");
}

Monomial default_legs(int n) {
  std::vector<std::string> labels;
  for (int k = 1; k <= n; ++k) labels.push_back("x" + std::to_string(k));
  return Monomial(std::move(labels));
}

namespace {

bool has_kind(const Graph &g, GraphKind kind) {
  const auto c = classify(g);
  switch (kind) {
    case GraphKind::OneVI: return c.one_vi;
    case GraphKind::OnePI: return c.one_pi;
    case GraphKind::Connected: return c.connected;
  }
  return false;
}

// Calls visit(counts) for every composition of `total` into `parts`
// nonnegative parts, in lexicographic order.
template <class Visit>
void compositions(int total, int parts, Visit visit) {
  std::vector<int> counts(parts, 0);
  auto rec = [&](auto &self, int at, int left) -> void {
    if (at == parts - 1) {
      counts[at] = left;
      visit(counts);
      return;
    }
    for (int here = 0; here <= left; ++here) {
      counts[at] = here;
      self(self, at + 1, left - here);
    }
  };
  if (parts == 0) {
    if (total == 0) visit(counts);
    return;
  }
  rec(rec, 0, total);
}

}  // namespace

ClassWeights enumerate(int l, int v, GraphKind kind, int selfloops, const Monomial &legs,
                       const OracleLimits &limits) {
  if (l < 0 || v < 1 || selfloops < 0)
    throw OracleError("enumerate: need l >= 0, v >= 1, self-loops >= 0");
  if (v > limits.max_vertices || l + selfloops > limits.max_loops ||
      static_cast<int>(legs.degree()) > limits.max_legs)
    throw OracleError("enumerate: parameters exceed the oracle guard (v <= " +
                      std::to_string(limits.max_vertices) + ", l + l' <= " +
                      std::to_string(limits.max_loops) + ", n <= " +
                      std::to_string(limits.max_legs) + ")");
  if (!legs.has_distinct_labels()) throw OracleError("enumerate: leg labels must be distinct");

  // bare skeletons up to isomorphism
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= v; ++i)
    for (int j = i + 1; j <= v; ++j) pairs.emplace_back(i, j);
  std::set<Graph> skeletons;
  compositions(l + v - 1, static_cast<int>(pairs.size()), [&](const std::vector<int> &mult) {
    Graph g(v);
    for (std::size_t p = 0; p < pairs.size(); ++p)
      if (mult[p] > 0) g.add_edge(pairs[p].first, pairs[p].second, mult[p]);
    if (has_kind(g, kind)) skeletons.insert(canonical_form(g).graph);
  });

  // decorate every skeleton with self-loops and legs in all ways
  const auto &labels = legs.labels();
  ClassWeights out;
  for (const Graph &skeleton : skeletons) {
    compositions(selfloops, v, [&](const std::vector<int> &loops) {
      Graph looped = skeleton;
      for (int k = 1; k <= v; ++k) looped.add_self_loops(k, loops[k - 1]);
      std::vector<int> at(labels.size(), 1);
      while (true) {
        Graph g = looped;
        for (std::size_t n = 0; n < labels.size(); ++n) g.add_leg(at[n], labels[n]);
        FeynmanClass cls = feynman_class(g);
        Rational w = cls.weight();
        out.try_emplace(std::move(cls), w);
        std::size_t p = 0;
        while (p < at.size() && ++at[p] > v) at[p++] = 1;
        if (p == at.size()) break;
      }
    });
  }
  return out;
}

ClassWeights enumerate(int l, int v, GraphKind kind, int selfloops, int legs,
                       const OracleLimits &limits) {
  return enumerate(l, v, kind, selfloops, default_legs(legs), limits);
}

// ---------------------------------------------------------------------------

bool OracleReport::pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const OracleRow &r) { return r.pass(); });
}

std::size_t OracleReport::missing() const {
  return std::count_if(rows.begin(), rows.end(),
                       [](const OracleRow &r) { return r.oracle && !r.recursion; });
}

std::size_t OracleReport::spurious() const {
  return std::count_if(rows.begin(), rows.end(),
                       [](const OracleRow &r) { return !r.oracle && r.recursion; });
}

std::size_t OracleReport::mismatched() const {
  return std::count_if(rows.begin(), rows.end(), [](const OracleRow &r) {
    return r.oracle && r.recursion && *r.oracle != *r.recursion;
  });
}

json OracleReport::to_json() const {
  json table = json::array();
  for (const auto &r : rows)
    table.push_back({{"graph", graph_to_json(r.cls.representative)},
                     {"aut", r.cls.aut_order.get_str()},
                     {"oracle", r.oracle ? rational_to_json(*r.oracle) : json(nullptr)},
                     {"recursion", r.recursion ? rational_to_json(*r.recursion) : json(nullptr)},
                     {"verdict", r.pass() ? "pass" : "fail"}});
  return {{"kind", to_string(kind)},
          {"l", l},
          {"v", v},
          {"self_loops", selfloops},
          {"legs", monomial_to_json(legs)},
          {"classes", table},
          {"oracle_total", rational_to_json(oracle_total)},
          {"recursion_total", rational_to_json(recursion_total)},
          {"missing", missing()},
          {"spurious", spurious()},
          {"mismatched", mismatched()},
          {"verdict", pass() ? "pass" : "fail"}};
}

std::string OracleReport::to_table() const {
  std::ostringstream out;
  out << "verify " << to_string(kind) << " l=" << l << " v=" << v;
  if (selfloops) out << " self-loops=" << selfloops;
  if (legs.degree()) {
    out << " legs=";
    for (std::size_t n = 0; n < legs.degree(); ++n) out << (n ? "," : "") << legs.labels()[n];
  }
  out << "\n";
  out << std::left << std::setw(40) << "class" << std::setw(8) << "aut" << std::setw(14)
      << "oracle" << std::setw(14) << "recursion" << "verdict\n";
  for (const auto &r : rows)
    out << std::setw(40) << describe(r.cls.representative) << std::setw(8)
        << r.cls.aut_order.get_str() << std::setw(14)
        << (r.oracle ? r.oracle->get_str() : "-") << std::setw(14)
        << (r.recursion ? r.recursion->get_str() : "-") << (r.pass() ? "pass" : "FAIL") << "\n";
  out << "classes=" << rows.size() << " total oracle=" << oracle_total.get_str()
      << " recursion=" << recursion_total.get_str() << " missing=" << missing()
      << " spurious=" << spurious() << " mismatched=" << mismatched() << " => "
      << (pass() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

OracleReport compare(int l, int v, GraphKind kind, int selfloops, const Monomial &legs,
                     const ClassWeights &oracle, const ClassWeights &recursion) {
  OracleReport report;
  report.l = l;
  report.v = v;
  report.kind = kind;
  report.selfloops = selfloops;
  report.legs = legs;
  std::map<FeynmanClass, OracleRow> rows;
  for (const auto &[cls, w] : oracle) {
    rows.try_emplace(cls, OracleRow{cls, std::nullopt, std::nullopt}).first->second.oracle = w;
    report.oracle_total += w;
  }
  for (const auto &[cls, w] : recursion) {
    rows.try_emplace(cls, OracleRow{cls, std::nullopt, std::nullopt}).first->second.recursion = w;
    report.recursion_total += w;
  }
  for (auto &[cls, row] : rows) report.rows.push_back(std::move(row));
  return report;
}

OracleReport verify(int l, int v, GraphKind kind, Recursion &engine, int selfloops,
                    const Monomial &legs, const OracleLimits &limits) {
  const ClassWeights expected = enumerate(l, v, kind, selfloops, legs, limits);
  const bool decorated = selfloops > 0 || legs.degree() > 0;

  ClassWeights produced;
  switch (kind) {
    case GraphKind::OneVI:
      if (decorated || v < 2)
        throw OracleError("verify: 1VI sums exist only for v >= 2 without loops or legs");
      produced = project(engine.onevi(l, v));
      break;
    case GraphKind::OnePI:
      if (v == 1 || decorated) {
        if (!((v == 1 && l == 0) || (v >= 2 && l >= 1)))
          throw OracleError("verify: dressed 1PI sums need (v = 1, l = 0) or (v >= 2, l >= 1)");
        produced = project(engine.dressed(l, selfloops, v, legs));
      } else if (l >= 1) {
        produced = project(engine.onepi(l, v));
      }  // l = 0, v >= 2: no 1PI trees, the recursion side is empty
      break;
    case GraphKind::Connected:
      throw OracleError("verify: no recursion generates plain connected graphs");
  }
  return compare(l, v, kind, selfloops, legs, expected, produced);
}

}  // namespace onepi
