#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"
#include "twocat/json_io.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = "cd '" TWOCAT_FIXTURES "' && '" TWOCAT_CLI "' " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

twocat::json parse(const Run& r) { return twocat::json::parse(r.out); }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("exported fixtures match the committed files") {
  const fs::path tmp = fs::temp_directory_path() / "twocat_fixture_export";
  fs::remove_all(tmp);
  REQUIRE(std::system(("'" TWOCAT_EXPORT "' '" + tmp.string() + "'").c_str()) == 0);
  int n = 0;
  for (auto& e : fs::directory_iterator(tmp)) {
    const fs::path committed = fs::path(TWOCAT_FIXTURES) / e.path().filename();
    INFO(e.path().filename().string());
    REQUIRE(fs::exists(committed));
    CHECK(slurp(e.path()) == slurp(committed));
    ++n;
  }
  CHECK(n >= 28);
  fs::remove_all(tmp);
}

TEST_CASE("validate") {
  for (const char* f : {"FIX_T.json", "FIX_G2.json", "FIX_PROD_G2_C2.json", "id_G2.json", "pgm_C2.json"}) {
    Run r = run(std::string("validate ") + f);
    CHECK(r.code == 0);
    CHECK(parse(r)["valid"] == true);
  }
  Run g = run("validate FIX_G2.json");
  CHECK(parse(g)["counts"]["two_cells"] == 2);
  CHECK(parse(g)["manifest"]["inputs"][0]["sha256"].get<std::string>().size() == 64);
  Run missing = run("validate does_not_exist.json");
  CHECK(missing.code == 1);
  CHECK(parse(missing)["error"] == "input");
}

TEST_CASE("comma objects and pullbacks") {
  Run l = run("laco --cospan cospan_idG2_idG2.json");
  REQUIRE(l.code == 0);
  auto j = parse(l);
  CHECK(j["counts"]["objects"] == 1);
  CHECK(j["counts"]["one_cells"] == 2);
  CHECK(j["counts"]["two_cells"] == 8);
  Run p = run("pullback --cospan cospan_pr2_point0.json");
  REQUIRE(p.code == 0);
  CHECK(parse(p)["counts"]["two_cells"] == 2);
  CHECK(run("oplaco --cospan cospan_idI_point1.json").code == 0);
  Run f = run("fiber --functor pr2_G2xI.json --object 1");
  CHECK(f.code == 0);
}

TEST_CASE("nerve and homology") {
  Run n = run("nerve --input FIX_G2.json --max-dim 3");
  REQUIRE(n.code == 0);
  CHECK(parse(n)["level_counts"] == twocat::json::parse("[1,1,2,8]"));
  Run h = run("homology --input FIX_G2.json --trunc 4 --deg 2");
  REQUIRE(h.code == 0);
  CHECK(parse(h)["homology"]["canonical"] == "Z/2");
  Run z3 = run("homology --input FIX_I.json --trunc 3 --deg 0 --coeffs coeffs_Z3.json");
  REQUIRE(z3.code == 0);
  CHECK(parse(z3)["homology"]["canonical"] == "Z/3");
  Run t = run("homology --input FIX_G2.json --trunc 3 --deg 3");
  CHECK(t.code == 2);
}

TEST_CASE("opfibrations") {
  Run ok = run("opfib --functor pr2_G2xI.json");
  CHECK(ok.code == 0);
  CHECK(parse(ok)["opfibration"] == true);
  Run bad = run("opfib --functor discrete-to-interval.json");
  CHECK(bad.code == 2);
  CHECK(parse(bad)["counterexample"]["clause"] == "opcartesian-lift-missing");
}

TEST_CASE("spectral sequence output is deterministic") {
  Run a = run("ss --functor pr2_G2xC2.json --pmax 2 --qmax 2");
  Run b = run("ss --functor pr2_G2xC2.json --pmax 2 --qmax 2");
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("S⁻¹X and group completion") {
  Run s = run("sinv --pgm pgm_C2.json");
  REQUIRE(s.code == 0);
  CHECK(parse(s)["counts"]["objects"] == 4);
  Run g = run("gc-check --pgm pgm_M2.json --max-deg 1 --trunc 3");
  REQUIRE(g.code == 0);
  auto j = parse(g);
  CHECK(j["pi0"]["group"] == false);
  CHECK(j["degrees"][0]["H_X"]["canonical"] == "Z^2");
  CHECK(j["degrees"][0]["localized"]["canonical"] == "Z");
  CHECK(j["degrees"][0]["H_SinvX"]["canonical"] == "Z");
  CHECK(j["degrees"][0]["iso"] == true);
  Run h = run("gc-check --action action_C2_trivial_on_G2sat.json --max-deg 1 --trunc 3");
  CHECK(h.code == 2);
}

TEST_CASE("dualize") {
  Run d = run("dualize --input FIX_I.json --mode op");
  REQUIRE(d.code == 0);
  CHECK(run("dualize --input FIX_I.json --mode sideways").code != 0);
}
