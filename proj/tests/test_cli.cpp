#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(HILBCOEFF_BIN) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  RunResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    res.out.append(buf.data(), got);
  const int status = pclose(pipe);
  res.code = WEXITSTATUS(status);
  return res;
}

std::string fixture(const std::string& name) {
  return std::string(FIXTURES_DIR) + "/" + name;
}

} // namespace

TEST_CASE("coeffs over the plane") {
  const RunResult res =
      run("coeffs --ring " + fixture("poly2.ring") + " --q m --module R --json");
  CHECK(res.code == 0);
  const json rep = json::parse(res.out);
  CHECK(rep["schema_version"] == "1");
  CHECK(rep["results"]["e"]["values"] == json::array({1, 0, 0}));
}

TEST_CASE("named ideal and g/f kinds") {
  const RunResult g =
      run("coeffs --ring " + fixture("poly2.ring") + " --q q --k m --kind g --json");
  CHECK(g.code == 0);
  CHECK(json::parse(g.out)["results"]["g"]["values"].size() == 3);

  const RunResult f =
      run("coeffs --ring " + fixture("poly2.ring") + " --q m --k m --kind f --json");
  CHECK(f.code == 0);
  CHECK(json::parse(f.out)["results"]["f"]["values"] == json::array({1, 0}));
}

TEST_CASE("identities pass on the fixtures") {
  const RunResult res =
      run("identities --ring " + fixture("poly2.ring") + " --k m --q m");
  CHECK(res.code == 0);
  CHECK(res.out.find("PASS") != std::string::npos);
  CHECK(res.out.find("FAIL") == std::string::npos);

  const RunResult quadric =
      run("identities --ring " + fixture("quadric_pair.ring") + " --k m --q q0 --json");
  CHECK(quadric.code == 0);
  CHECK(json::parse(quadric.out)["results"]["all_ok"] == true);
}

TEST_CASE("length subcommand") {
  const RunResult res = run("length --ring " + fixture("poly2.ring") + " --q q --json");
  CHECK(res.code == 0);
  CHECK(json::parse(res.out)["results"]["length"] == 6);

  const RunResult inf =
      run("length --ring " + fixture("poly2.ring") + " --q \"x\" --json");
  CHECK(inf.code == 0);
  CHECK(json::parse(inf.out)["results"]["length"] == "infinite");
}

TEST_CASE("semigroup delta") {
  const RunResult res = run("semigroup delta --gens 3,4,5 --k m --json");
  CHECK(res.code == 0);
  const json rep = json::parse(res.out);
  CHECK(rep["results"]["delta_k"] == json::array({-1}));
  CHECK(rep["results"]["sup_ok"] == true);
  CHECK(rep["results"]["delta_r"] == json::array({0, 1, 2}));
}

TEST_CASE("semigroup info and e1") {
  const RunResult info = run("semigroup info --gens 3,4,5 --json");
  CHECK(info.code == 0);
  CHECK(json::parse(info.out)["results"]["semigroup"]["gaps"] == json::array({1, 2}));

  const RunResult e1 = run("semigroup e1 --gens 3,4,5 --i m --k m --json");
  CHECK(e1.code == 0);
  const json rep = json::parse(e1.out);
  CHECK(rep["results"]["ring"]["e1_blowup"] == 2);
  CHECK(rep["results"]["ring"]["match"] == true);
  CHECK(rep["results"]["k_module"]["g1"] == -1);
}

TEST_CASE("scaling both backends") {
  const RunResult ring =
      run("scaling --ring " + fixture("poly2.ring") + " --i m --kmax 3 --json");
  CHECK(ring.code == 0);
  CHECK(json::parse(ring.out)["results"]["all_ok"] == true);

  const RunResult sg = run("scaling --gens 3,4,5 --i m --kmax 4 --json");
  CHECK(sg.code == 0);
  const json rep = json::parse(sg.out);
  CHECK(rep["results"]["all_ok"] == true);
  CHECK(rep["results"]["rows"][3]["e0"] == 12);
}

TEST_CASE("explore determinism and structure") {
  const std::string cmd = "explore lambda --ring " + fixture("quadric_pair.ring") +
                          " --module R --i 1 --samples 4 --seed 7 --json";
  const RunResult a = run(cmd);
  const RunResult b = run(cmd);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const json rep = json::parse(a.out);
  CHECK(rep["results"]["observed"] == json::array({-1}));
  CHECK(rep["diagnostics"]["seed"] == 7);
  // Round-trip: parse(emit(report)) == report.
  CHECK(json::parse(rep.dump()) == rep);
}

TEST_CASE("explore probe and bounds") {
  const RunResult probe = run("explore probe --ring " + fixture("quadric_pair.ring") +
                              " --k m --samples 3 --seed 5 --json");
  CHECK(probe.code == 0);
  CHECK(json::parse(probe.out)["results"]["i_ring_constant"] == true);

  const RunResult bounds = run("explore bounds --ring " + fixture("quadric_pair.ring") +
                               " --k m --lh 0,1 --samples 3 --seed 5 --json");
  CHECK(bounds.code == 0);
  CHECK(json::parse(bounds.out)["results"]["g1_bounds"]["all_within"] == true);
}

TEST_CASE("i-invariant subcommand") {
  const RunResult res = run("i-invariant --ring " + fixture("quadric_pair.ring") +
                            " --q q0 --module R --json");
  CHECK(res.code == 0);
  CHECK(json::parse(res.out)["results"]["i_invariant"] == 1);
}

TEST_CASE("input errors exit 1 with structured diagnostics") {
  const RunResult missing = run("length --ring /nonexistent.ring --q m --json");
  CHECK(missing.code == 1);
  const json rep = json::parse(missing.out);
  CHECK(rep["diagnostics"]["error"]["kind"] == "input");
  CHECK(rep["results"].empty());

  const RunResult badgens = run("semigroup info --gens 4,6 --json");
  CHECK(badgens.code == 1);
  CHECK(json::parse(badgens.out)["diagnostics"]["error"]["kind"] == "input");
}

TEST_CASE("budget exhaustion exits 2") {
  const RunResult res = run("coeffs --ring " + fixture("quadric_pair.ring") +
                            " --q q0 --module R --budget 1 --json");
  CHECK(res.code == 2);
  CHECK(json::parse(res.out)["diagnostics"]["error"]["kind"] == "budget");
}

TEST_CASE("unreachable postulation exits 2 with its own kind") {
  const RunResult res = run("coeffs --ring " + fixture("poly2.ring") +
                            " --q m --module R --nmax 3 --json");
  CHECK(res.code == 2);
  CHECK(json::parse(res.out)["diagnostics"]["error"]["kind"] == "postulation");
}

TEST_CASE("scalar and simd kernel paths produce identical reports") {
  const std::string args = "identities --ring " + fixture("quadric_pair.ring") +
                           " --k m --q q0 --json";
  const RunResult simd = run(args);
  const std::string cmd = std::string("HILB_FORCE_SCALAR=1 ") + HILBCOEFF_BIN + " " +
                          args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  CHECK(WEXITSTATUS(pclose(pipe)) == 0);
  CHECK(simd.code == 0);
  CHECK(out == simd.out);
}

TEST_CASE("environment characteristic") {
  // Document omits char; HILB_CHAR drives the field.
  const std::string tmp = "/tmp/hilb_nochar.ring";
  {
    FILE* f = fopen(tmp.c_str(), "w");
    REQUIRE(f != nullptr);
    fputs("vars x,y; rel;", f);
    fclose(f);
  }
  const RunResult res =
      run("length --ring " + tmp + " --q \"x, y\" --json");
  CHECK(res.code == 0);
  const std::string cmd = std::string("HILB_CHAR=101 ") + HILBCOEFF_BIN +
                          " length --ring " + tmp + " --q \"x, y\" --json 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  CHECK(WEXITSTATUS(pclose(pipe)) == 0);
  CHECK(json::parse(out)["results"]["length"] == 1);
}
