#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "onepi/cli.hpp"
#include "onepi/serialize.hpp"

namespace fs = std::filesystem;
using onepi::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = onepi::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string &text, const std::string &needle) {
  return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("generate") {
  auto r = run({"generate", "--kind", "1vi", "--loops", "1", "--vertices", "3", "--format", "table"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "{12,13,23}"));
  CHECK(has(r.out, "classes=1 total=1/6"));

  auto j = run({"generate", "--kind", "1pi", "--loops", "2", "--vertices", "3", "--format", "json"});
  CHECK(j.code == 0);
  json doc = json::parse(j.out);
  CHECK(doc["classes"].size() == 2);
  CHECK(doc["sum"]["v"] == 3);

  auto d = run({"generate", "--kind", "1pi", "--loops", "1", "--vertices", "2", "--self-loops", "1",
                "--legs", "x1,x2", "--format", "dot"});
  CHECK(d.code == 0);
  CHECK(has(d.out, "graph class1 {"));
  CHECK(has(d.out, "v1 -- v2;"));
  CHECK(has(d.out, "\"x1\" [shape=plaintext];"));

  auto single = run({"generate", "--kind", "1pi", "--loops", "0", "--vertices", "1", "--legs", "x1,x2,x3"});
  CHECK(single.code == 0);
  CHECK(has(single.out, "total=1"));
}

TEST_CASE("usage errors name the flag") {
  auto r = run({"generate", "--kind", "1pi", "--loops", "0", "--vertices", "3"});
  CHECK(r.code == 2);
  CHECK(has(r.err, "--loops"));
  auto k = run({"generate", "--loops", "1", "--vertices", "3"});
  CHECK(k.code == 2);
  CHECK(has(k.err, "--kind"));
  auto f = run({"generate", "--kind", "1vi", "--loops", "1", "--vertices", "3", "--format", "png"});
  CHECK(f.code == 2);
  CHECK(has(f.err, "--format"));
  auto legs = run({"generate", "--kind", "1vi", "--loops", "1", "--vertices", "3", "--legs", "x1"});
  CHECK(legs.code == 2);
  CHECK(has(legs.err, "--kind"));
  auto dup = run({"generate", "--kind", "1pi", "--loops", "1", "--vertices", "2", "--legs", "x,x"});
  CHECK(dup.code == 2);
  CHECK(has(dup.err, "--legs"));
  auto neg = run({"generate", "--kind", "1vi", "--loops", "-1", "--vertices", "3"});
  CHECK(neg.code == 2);
  CHECK(has(neg.err, "--loops"));
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  auto mixed = run({"verify", "--kind", "1vi", "--loops", "1", "--vertices", "3", "--max-loops", "2"});
  CHECK(mixed.code == 2);
  auto guard = run({"verify", "--kind", "1vi", "--loops", "1", "--vertices", "9"});
  CHECK(guard.code == 2);
  CHECK(has(guard.err, "--vertices"));
  auto theory = run({"eval", "--theory", "/nonexistent/theory.json", "--loops", "1", "--vertices", "2"});
  CHECK(theory.code == 2);
  CHECK(has(theory.err, "--theory"));
  CHECK(run({"generate", "--help"}).code == 0);
}

TEST_CASE("verify") {
  auto r = run({"verify", "--kind", "1pi", "--loops", "2", "--vertices", "3"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "classes=2"));
  CHECK(has(r.out, "PASS"));
  auto sweep = run({"verify", "--kind", "1vi", "--max-loops", "3", "--max-vertices", "4", "--format", "json"});
  CHECK(sweep.code == 0);
  json doc = json::parse(sweep.out);
  CHECK(doc["verdict"] == "pass");
  CHECK(doc["reports"].size() == 12);
  auto dressed = run({"verify", "--kind", "1pi", "--loops", "1", "--vertices", "2", "--self-loops", "1",
                      "--legs", "x1"});
  CHECK(dressed.code == 0);
}

TEST_CASE("eval") {
  auto r = run({"eval", "--theory", "phi3", "--loops", "1", "--vertices", "2", "--legs", "x1,x2"});
  CHECK(r.code == 0);
  // two classes: legs on one vertex each (weight 1/2) or together (degree 4 dropped)
  CHECK(has(r.out, "value=1/2"));

  auto t = run({"eval", "--theory", "phi4", "--loops", "0", "--vertices", "1", "--self-loops", "1",
                "--legs", "x1,x2", "--integrands"});
  CHECK(t.code == 0);
  CHECK(has(t.out, "value=1/2"));
  CHECK(has(t.out, "V4(x1,x2,y1,y1')"));

  const fs::path file = fs::temp_directory_path() / ("onepi_theory_" + std::to_string(::getpid()) + ".json");
  std::ofstream(file) << R"({"propagator": 0.5, "couplings": {"3": [2, 1]}, "allowed": [3]})";
  auto f = run({"eval", "--theory", file.string(), "--loops", "1", "--vertices", "2", "--legs", "x1,x2",
                "--format", "json"});
  fs::remove(file);
  CHECK(f.code == 0);
  json doc = json::parse(f.out);
  CHECK(doc["inexact"] == true);
  // 1/2 * 2^2 * (1/2)^(2 + 2)
  CHECK(doc["value"] == json::parse("[1,8]"));

  auto low = run({"eval", "--theory", "phi3", "--loops", "1", "--vertices", "2", "--legs", "x1"});
  CHECK(low.code == 0);
  CHECK(has(low.out, "by convention"));
}

TEST_CASE("cache: warm and cold runs agree, export validates") {
  const fs::path dir = fs::temp_directory_path() / ("onepi_cli_cache_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  ::setenv("ONEPI_CACHE_DIR", dir.c_str(), 1);
  std::vector<std::string> args{"generate", "--kind", "1pi", "--loops", "3", "--vertices", "4", "--format", "json"};
  auto cold = run(args);
  auto warm = run(args);
  ::unsetenv("ONEPI_CACHE_DIR");
  auto none = run(args);
  CHECK(cold.code == 0);
  CHECK(cold.out == warm.out);
  CHECK(cold.out == none.out);

  auto ex = run({"export", "--cache-dir", dir.string()});
  CHECK(ex.code == 0);
  json doc = json::parse(ex.out);
  CHECK(doc["entries"].size() > 3);

  std::ofstream(dir / "I_l3_v4.json") << "{\"header\": {}, \"sum\": 1}";
  auto bad = run({"export", "--cache-dir", dir.string()});
  CHECK(bad.code == 1);
  CHECK(has(bad.err, "I_l3_v4.json"));
  CHECK(run({"export", "--cache-dir", (dir / "missing").string()}).code == 2);
  fs::remove_all(dir);
}
