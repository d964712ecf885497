#include "onepi/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "onepi/eval.hpp"
#include "onepi/oracle.hpp"
#include "onepi/recursion.hpp"

namespace onepi::cli {
namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

void usage_check(bool ok, const std::string &flag, const std::string &what) {
  if (!ok) throw UsageError(flag + ": " + what);
}

Monomial parse_legs(const std::vector<std::string> &labels) {
  for (const auto &label : labels) usage_check(!label.empty(), "--legs", "empty leg label");
  Monomial legs(labels);
  usage_check(legs.has_distinct_labels(), "--legs", "leg labels must be distinct");
  return legs;
}

std::string legs_text(const Monomial &legs) {
  std::string s;
  for (std::size_t n = 0; n < legs.degree(); ++n) s += (n ? "," : "") + legs.labels()[n];
  return s;
}

// Sum requested by generate/eval: V, I, or Gamma when decorated.
GraphSum requested_sum(Recursion &engine, GraphKind kind, int l, int v, int selfloops,
                       const Monomial &legs) {
  const bool decorated = selfloops > 0 || legs.degree() > 0;
  if (kind == GraphKind::OneVI) {
    usage_check(!decorated, "--kind", "1vi sums carry no self-loops or legs, use --kind 1pi");
    usage_check(v >= 2, "--vertices", "1vi sums need at least 2 vertices");
    return engine.onevi(l, v);
  }
  if (v == 1) {
    usage_check(l == 0, "--loops", "a single vertex has 0 loops");
    return engine.dressed(l, selfloops, v, legs);
  }
  usage_check(l >= 1, "--loops", "1pi sums on v >= 2 vertices need at least 1 loop");
  return decorated ? engine.dressed(l, selfloops, v, legs) : engine.onepi(l, v);
}

void write_table(std::ostream &out, const ClassWeights &classes) {
  out << std::left << std::setw(40) << "class" << std::setw(8) << "aut" << "weight\n";
  Rational total = 0;
  for (const auto &[cls, w] : classes) {
    out << std::setw(40) << describe(cls.representative) << std::setw(8)
        << cls.aut_order.get_str() << w.get_str() << "\n";
    total += w;
  }
  out << "classes=" << classes.size() << " total=" << total.get_str() << "\n";
}

void write_dot(std::ostream &out, const ClassWeights &classes) {
  int n = 0;
  for (const auto &[cls, w] : classes) {
    const Graph &g = cls.representative;
    out << "graph class" << ++n << " {\n";
    out << "  label=\"" << describe(g) << "  weight " << w.get_str() << "  aut "
        << cls.aut_order.get_str() << "\";\n";
    for (int k = 1; k <= g.num_vertices(); ++k) out << "  v" << k << " [label=\"" << k << "\"];\n";
    for (const auto &e : g.edges())
      for (int c = 0; c < e.mult; ++c) out << "  v" << e.i << " -- v" << e.j << ";\n";
    for (int k = 1; k <= g.num_vertices(); ++k) {
      for (int c = 0; c < g.self_loops(k); ++c) out << "  v" << k << " -- v" << k << ";\n";
      for (const auto &label : g.legs(k)) {
        out << "  \"" << label << "\" [shape=plaintext];\n";
        out << "  v" << k << " -- \"" << label << "\";\n";
      }
    }
    out << "}\n";
  }
}

struct Options {
  std::string kind = "1vi";
  int loops = -1;
  int vertices = -1;
  int selfloops = 0;
  std::vector<std::string> legs;
  std::string format = "table";
  int max_loops = -1;
  int max_vertices = -1;
  std::string theory;
  bool integrands = false;
  std::string cache_dir;
};

int cmd_generate(const Options &o, std::ostream &out) {
  const GraphKind kind = graph_kind_from_string(o.kind);
  const Monomial legs = parse_legs(o.legs);
  Recursion engine(Recursion::cache_dir_from_environment());
  const GraphSum sum = requested_sum(engine, kind, o.loops, o.vertices, o.selfloops, legs);
  const ClassWeights classes = project(sum);
  if (o.format == "json") {
    json doc = {{"kind", o.kind},
                {"l", o.loops},
                {"v", o.vertices},
                {"self_loops", o.selfloops},
                {"legs", monomial_to_json(legs)},
                {"sum", sum_to_json(sum)},
                {"classes", classes_to_json(classes)}};
    out << doc.dump(2) << "\n";
  } else if (o.format == "dot") {
    write_dot(out, classes);
  } else {
    out << "generate " << o.kind << " l=" << o.loops << " v=" << o.vertices;
    if (o.selfloops) out << " self-loops=" << o.selfloops;
    if (legs.degree()) out << " legs=" << legs_text(legs);
    out << "\n";
    write_table(out, classes);
  }
  return kOk;
}

int cmd_verify(const Options &o, std::ostream &out) {
  const GraphKind kind = graph_kind_from_string(o.kind);
  const Monomial legs = parse_legs(o.legs);
  const bool single = o.loops >= 0 || o.vertices >= 0;
  const bool sweep = o.max_loops >= 0 || o.max_vertices >= 0;
  usage_check(single != sweep, "--loops",
              "give either --loops/--vertices or --max-loops/--max-vertices");

  std::vector<std::pair<int, int>> cases;
  if (single) {
    usage_check(o.loops >= 0, "--loops", "required with --vertices");
    usage_check(o.vertices >= 1, "--vertices", "required with --loops (>= 1)");
    cases.emplace_back(o.loops, o.vertices);
  } else {
    usage_check(o.max_loops >= 0, "--max-loops", "required with --max-vertices");
    usage_check(o.max_vertices >= 2, "--max-vertices", "required with --max-loops (>= 2)");
    for (int l = kind == GraphKind::OneVI ? 0 : 1; l <= o.max_loops; ++l)
      for (int v = 2; v <= o.max_vertices; ++v) cases.emplace_back(l, v);
  }

  Recursion engine(Recursion::cache_dir_from_environment());
  std::vector<OracleReport> reports;
  for (const auto &[l, v] : cases) {
    if (kind == GraphKind::OneVI) {
      usage_check(o.selfloops == 0 && legs.degree() == 0, "--kind",
                  "1vi sums carry no self-loops or legs");
      usage_check(v >= 2, "--vertices", "1vi sums need at least 2 vertices");
    } else if (o.selfloops > 0 || legs.degree() > 0 || v == 1) {
      usage_check((v == 1 && l == 0) || (v >= 2 && l >= 1), "--loops",
                  "dressed 1pi sums need (v = 1, l = 0) or (v >= 2, l >= 1)");
    }
    try {
      reports.push_back(verify(l, v, kind, engine, o.selfloops, legs));
    } catch (const OracleError &e) {
      throw UsageError(std::string("--vertices/--loops: ") + e.what());
    }
  }

  bool ok = true;
  for (const auto &r : reports) ok = ok && r.pass();
  if (o.format == "json") {
    json doc = json::array();
    for (const auto &r : reports) doc.push_back(r.to_json());
    out << json{{"reports", doc}, {"verdict", ok ? "pass" : "fail"}}.dump(2) << "\n";
  } else {
    for (const auto &r : reports) out << r.to_table();
    out << "cases=" << reports.size() << " => " << (ok ? "PASS" : "FAIL") << "\n";
  }
  return ok ? kOk : kMismatch;
}

Theory load_theory(const std::string &name) {
  if (name == "phi3" || name == "phi4") return theory_preset(name);
  std::ifstream in(name);
  usage_check(static_cast<bool>(in), "--theory", "not a preset and no such file '" + name + "'");
  try {
    Theory th = theory_from_json(json::parse(in));
    if (th.name == "custom") th.name = name;
    return th;
  } catch (const std::exception &e) {
    throw UsageError(std::string("--theory: ") + e.what());
  }
}

std::string decimal(const Rational &r) {
  std::ostringstream s;
  s << std::setprecision(17) << r.get_d();
  return s.str();
}

int cmd_eval(const Options &o, std::ostream &out) {
  const Theory th = load_theory(o.theory);
  const Monomial legs = parse_legs(o.legs);
  Recursion engine(Recursion::cache_dir_from_environment());
  const GraphSum sum =
      requested_sum(engine, GraphKind::OnePI, o.loops, o.vertices, o.selfloops, legs);
  const GraphSum kept = vertex_filter(sum, th.allowed);
  const Rational value = evaluate(kept, th);
  const ClassWeights classes = project(kept);

  if (o.format == "json") {
    json rows = json::array();
    for (const auto &[cls, w] : classes) {
      json row = {{"graph", graph_to_json(cls.representative)},
                  {"weight", rational_to_json(w)},
                  {"value", rational_to_json(graph_value(cls.representative, th))}};
      if (o.integrands)
        row["integrand"] = emit_integrand(cls.representative, &th.allowed).to_json();
      rows.push_back(row);
    }
    json doc = {{"theory", th.name},
                {"l", o.loops},
                {"v", o.vertices},
                {"self_loops", o.selfloops},
                {"legs", monomial_to_json(legs)},
                {"classes", rows},
                {"value", rational_to_json(value)},
                {"inexact", th.inexact}};
    if (auto tau = tau_boundary_value(legs.degree())) doc["tau_convention"] = *tau;
    out << doc.dump(2) << "\n";
    return kOk;
  }

  out << "eval " << th.name << " l=" << o.loops << " v=" << o.vertices;
  if (o.selfloops) out << " self-loops=" << o.selfloops;
  if (legs.degree()) out << " legs=" << legs_text(legs);
  out << "\n";
  out << std::left << std::setw(40) << "class" << std::setw(12) << "weight" << "value\n";
  for (const auto &[cls, w] : classes) {
    out << std::setw(40) << describe(cls.representative) << std::setw(12) << w.get_str()
        << graph_value(cls.representative, th).get_str() << "\n";
    if (o.integrands)
      out << "  " << emit_integrand(cls.representative, &th.allowed).to_string() << "\n";
  }
  out << "classes=" << classes.size() << " (of " << project(sum).size() << ") value=" << value.get_str();
  if (th.inexact) out << " ~ " << decimal(value) << " (float input)";
  out << "\n";
  if (auto tau = tau_boundary_value(legs.degree()))
    out << "note: the " << legs.degree() << "-point 1PI function is fixed to " << *tau
        << " by convention\n";
  return kOk;
}

int cmd_export(const Options &o, std::ostream &out, std::ostream &err) {
  namespace fs = std::filesystem;
  usage_check(fs::is_directory(o.cache_dir), "--cache-dir",
              "no such directory '" + o.cache_dir + "'");
  bool ok = true;
  json entries = json::array();
  for (const auto &e : SumCache::scan(o.cache_dir)) {
    json row = {{"file", e.file.filename().string()}, {"checksum_ok", e.checksum_ok}};
    if (!e.header.empty()) row["header"] = json::parse(e.header);
    if (e.sum) {
      row["sum"] = sum_to_json(*e.sum);
      row["classes"] = classes_to_json(project(*e.sum));
    } else {
      ok = false;
      err << "onepi: corrupt cache entry " << e.file.filename().string() << "\n";
    }
    entries.push_back(row);
  }
  out << json{{"entries", entries}}.dump(2) << "\n";
  return ok ? kOk : kMismatch;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Weighted 1VI / 1PI Feynman graph sums", "onepi"};
  app.require_subcommand(1);
  Options o;

  const auto kinds = CLI::IsMember({"1vi", "1pi"});
  const auto formats = CLI::IsMember({"table", "json", "dot"});

  auto *gen = app.add_subcommand("generate", "weighted graph sum and its classes");
  gen->add_option("--kind", o.kind, "1vi or 1pi")->required()->check(kinds);
  gen->add_option("--loops", o.loops, "loop number l")->required()->check(CLI::NonNegativeNumber);
  gen->add_option("--vertices", o.vertices, "vertex number v")->required()->check(CLI::PositiveNumber);
  gen->add_option("--self-loops", o.selfloops, "self-loops l'")->check(CLI::NonNegativeNumber);
  gen->add_option("--legs", o.legs, "leg labels, e.g. x1,x2")->delimiter(',');
  gen->add_option("--format", o.format, "table, json or dot")->check(formats);

  auto *ver = app.add_subcommand("verify", "compare with brute-force enumeration");
  ver->add_option("--kind", o.kind, "1vi or 1pi")->required()->check(kinds);
  ver->add_option("--loops", o.loops)->check(CLI::NonNegativeNumber);
  ver->add_option("--vertices", o.vertices)->check(CLI::PositiveNumber);
  ver->add_option("--max-loops", o.max_loops)->check(CLI::NonNegativeNumber);
  ver->add_option("--max-vertices", o.max_vertices)->check(CLI::PositiveNumber);
  ver->add_option("--self-loops", o.selfloops)->check(CLI::NonNegativeNumber);
  ver->add_option("--legs", o.legs)->delimiter(',');
  ver->add_option("--format", o.format, "table or json")->check(CLI::IsMember({"table", "json"}));

  auto *ev = app.add_subcommand("eval", "evaluate a dressed 1pi sum under Feynman rules");
  ev->add_option("--theory", o.theory, "phi3, phi4 or a theory JSON file")->required();
  ev->add_option("--loops", o.loops)->required()->check(CLI::NonNegativeNumber);
  ev->add_option("--vertices", o.vertices)->required()->check(CLI::PositiveNumber);
  ev->add_option("--self-loops", o.selfloops)->check(CLI::NonNegativeNumber);
  ev->add_option("--legs", o.legs)->delimiter(',');
  ev->add_option("--format", o.format, "table or json")->check(CLI::IsMember({"table", "json"}));
  ev->add_flag("--integrands", o.integrands, "print the integrand of each class");

  auto *ex = app.add_subcommand("export", "dump and validate the cache directory");
  ex->add_option("--cache-dir", o.cache_dir)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError &e) {
    err << "onepi: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (gen->parsed()) return cmd_generate(o, out);
    if (ver->parsed()) return cmd_verify(o, out);
    if (ev->parsed()) return cmd_eval(o, out);
    return cmd_export(o, out, err);
  } catch (const UsageError &e) {
    err << "onepi: " << e.what() << "\n";
    return kUsage;
  } catch (const EvaluationError &e) {
    err << "onepi: --theory: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument &e) {
    err << "onepi: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace onepi::cli
