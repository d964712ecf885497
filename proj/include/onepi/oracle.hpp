#ifndef ONEPI_ORACLE_HPP
#define ONEPI_ORACLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "onepi/canonical.hpp"
#include "onepi/field_hopf.hpp"
#include "onepi/serialize.hpp"

namespace onepi {

class Recursion;

enum class GraphKind { OneVI, OnePI, Connected };

std::string to_string(GraphKind kind);
GraphKind graph_kind_from_string(const std::string &name);

/// Size guard for brute-force enumeration.
struct OracleLimits {
  int max_vertices = 7;
  int max_loops = 6;  // l + l'
  int max_legs = 4;
};

struct OracleError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Ground truth built from the definitions only: scans every multiplicity
/// matrix with l+v-1 edges (lexicographic order), every placement of the self
/// loops and every assignment of the legs, keeps graphs of the requested kind
/// and weights each isomorphism class by 1/aut_order.
ClassWeights enumerate(int l, int v, GraphKind kind, int selfloops,
                       const Monomial &legs, const OracleLimits &limits = {});
ClassWeights enumerate(int l, int v, GraphKind kind, int selfloops = 0, int legs = 0,
                       const OracleLimits &limits = {});

/// Labels x1..xn.
Monomial default_legs(int n);

struct OracleRow {
  FeynmanClass cls;
  std::optional<Rational> oracle;
  std::optional<Rational> recursion;
  bool pass() const { return oracle && recursion && *oracle == *recursion; }
};

struct OracleReport {
  int l = 0;
  int v = 0;
  GraphKind kind = GraphKind::OneVI;
  int selfloops = 0;
  Monomial legs;
  std::vector<OracleRow> rows;
  Rational oracle_total = 0;
  Rational recursion_total = 0;

  bool pass() const;
  std::size_t missing() const;   // in oracle, absent from recursion
  std::size_t spurious() const;  // in recursion, absent from oracle
  std::size_t mismatched() const;

  json to_json() const;
  std::string to_table() const;
};

/// Compares both sides class by class.
OracleReport compare(int l, int v, GraphKind kind, int selfloops, const Monomial &legs,
                     const ClassWeights &oracle, const ClassWeights &recursion);

/// Projects the recursion output (V, I or Gamma) and compares it with the
/// enumeration. OneVI/OnePI with selfloops = 0 and no legs use V or I; OnePI
/// with loops or legs uses Gamma.
OracleReport verify(int l, int v, GraphKind kind, Recursion &engine, int selfloops = 0,
                    const Monomial &legs = {}, const OracleLimits &limits = {});

}  // namespace onepi

#endif  // ONEPI_ORACLE_HPP
