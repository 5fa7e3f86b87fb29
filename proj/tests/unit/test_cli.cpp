#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <algorithm>

#include "json.hpp"

#include "doctest.h"
#include "legendre/cli.hpp"

namespace fs = std::filesystem;
using doctest::Approx;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = legendre::run(args, out, err);
  return {code, out.str(), err.str()};
}

// Scratch directory removed at scope exit.
struct Scratch {
  fs::path dir;
  Scratch() : dir(fs::temp_directory_path() / fs::path("legendre_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(dir);
  }
  ~Scratch() { fs::remove_all(dir); }
  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = dir / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string example(const std::string& name, std::vector<std::string> params = {}) const {
    std::vector<std::string> args = {"examples", "get", name};
    for (const std::string& kv : params) {
      args.push_back("--param");
      args.push_back(kv);
    }
    const Result r = run_cli(args);
    REQUIRE(r.code == 0);
    std::string file = name;
    for (const std::string& kv : params) file += "_" + kv;
    return write(file + ".json", r.out);
  }
};

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("examples list and get") {
  const Result list = run_cli({"examples", "list"});
  CHECK(list.code == 0);
  const auto j = nlohmann::json::parse(list.out);
  REQUIRE(j.is_array());
  CHECK(j.size() == 5);

  const Result get = run_cli({"examples", "get", "gamma_n", "--param", "n=5"});
  CHECK(get.code == 0);
  const auto spec = nlohmann::json::parse(get.out);
  CHECK(spec["closed"] == true);
  CHECK(spec["x"].get<std::string>().find("cos") != std::string::npos);

  const Result unknown = run_cli({"examples", "get", "nephroid"});
  CHECK(unknown.code == 1);
  CHECK(unknown.err.rfind("legendre: error: ", 0) == 0);
}

TEST_CASE("curvature samples") {
  Scratch s;
  const std::string circle = s.example("circle");
  const Result r = run_cli({"curvature", "--curve", circle, "--samples", "11"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("t,ell,beta\n", 0) == 0);
  CHECK(count_lines(r.out) == 12);
  CHECK(r.out.find("\n0,1,1\n") != std::string::npos);
}

TEST_CASE("signature, equivalence and parity") {
  Scratch s;
  const std::string n5 = s.example("gamma_n", {"n=5"});
  const std::string m3 = s.example("gamma_m", {"m=3"});
  const std::string n3 = s.example("gamma_n", {"n=3"});

  const Result sig = run_cli({"signature", "--curve", n5});
  REQUIRE(sig.code == 0);
  const auto j = nlohmann::json::parse(sig.out);
  CHECK(j["zeros"].size() == 4);
  CHECK(j["zeros"][0]["kind"] == "singular");
  CHECK(j["zeros"][0]["ord_ell"].is_null());

  const Result yes = run_cli({"equivalent", "--curve1", n5, "--curve2", m3});
  CHECK(nlohmann::json::parse(yes.out)["equivalent"] == true);
  const Result no = run_cli({"equivalent", "--curve1", n5, "--curve2", n3});
  CHECK(no.code == 0);
  CHECK(nlohmann::json::parse(no.out)["reason"] == "zero counts differ");

  const Result parity = run_cli({"parity", "--curve", n3});
  const auto p = nlohmann::json::parse(parity.out);
  CHECK(p["beta_odd_count"] == 2);
  CHECK(p["ok"] == true);
}

TEST_CASE("reconstruct") {
  const Result r = run_cli({"reconstruct", "--ell", "1", "--beta", "1", "--domain", "0:2*pi", "--steps", "64"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("t,gx,gy,nx,ny\n", 0) == 0);
  CHECK(count_lines(r.out) == 66);

  const Result bad = run_cli({"reconstruct", "--ell", "1 + * t", "--beta", "1", "--domain", "0:1"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("offset 4") != std::string::npos);
  CHECK(run_cli({"reconstruct", "--ell", "1", "--beta", "1", "--domain", "1:0"}).code == 2);
  CHECK(run_cli({"reconstruct", "--ell", "1", "--beta", "1", "--domain", "0:1", "--steps", "4"}).code == 2);
}

TEST_CASE("transform") {
  Scratch s;
  const std::string circle = s.example("circle");
  const Result r = run_cli({"transform", "--curve", circle, "--affine", "2,0,0,1", "--samples", "5"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("t,gx,gy,nx,ny,ell,beta\n", 0) == 0);
  CHECK(r.out.find("\n0,2,0,1,0,2,1\n") != std::string::npos);

  CHECK(run_cli({"transform", "--curve", circle}).code == 2);
  CHECK(run_cli({"transform", "--curve", circle, "--swap", "--negate-nu"}).code == 2);
  CHECK(run_cli({"transform", "--curve", circle, "--reparam", "2*t"}).code == 2);
  CHECK(run_cli({"transform", "--curve", circle, "--reparam", "2*t", "--domain", "0:pi"}).code == 0);
  const Result singular = run_cli({"transform", "--curve", circle, "--affine", "1,1,1,1"});
  CHECK(singular.code == 1);
  CHECK(singular.err.find("invertible") != std::string::npos);
}

TEST_CASE("normal-form") {
  const Result r = run_cli({"normal-form", "--case", "1", "--n", "2", "--m", "5"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["domain"][0] == -1.0);
  CHECK(run_cli({"normal-form", "--case", "3", "--n", "2"}).code == 2);
  CHECK(run_cli({"normal-form", "--case", "7", "--n", "2", "--m", "3"}).code == 2);
  CHECK(run_cli({"normal-form", "--case", "1", "--n", "3", "--m", "2"}).code == 1);
}

TEST_CASE("render writes a deterministic svg") {
  Scratch s;
  const std::string curve = s.example("gamma_n", {"n=3"});
  const std::string a = (s.dir / "a.svg").string();
  const std::string b = (s.dir / "b.svg").string();
  REQUIRE(run_cli({"render", "--curve", curve, "-o", a}).code == 0);
  REQUIRE(run_cli({"render", "--curve", curve, "--output", b}).code == 0);
  auto slurp = [](const std::string& p) {
    std::ifstream in(p);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  const std::string svg = slurp(a);
  CHECK(svg == slurp(b));
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("Z\"") != std::string::npos);
  std::size_t cusps = 0;
  for (std::size_t at = svg.find("fill=\"red\""); at != std::string::npos; at = svg.find("fill=\"red\"", at + 1)) ++cusps;
  CHECK(cusps == 2);
}

TEST_CASE("check") {
  Scratch s;
  const Result good = run_cli({"check", "--curve", s.example("circle")});
  CHECK(good.code == 0);
  CHECK(nlohmann::json::parse(good.out)["ok"] == true);

  const std::string bad = s.write("bad.json", R"js({"x": "cos(t)", "y": "sin(t)", "nu": ["sin(t)", "cos(t)"],
    "domain": [0, 3], "closed": true})js");
  const Result r = run_cli({"check", "--curve", bad});
  CHECK(r.code == 1);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["legendre"] == false);
  CHECK(j["closed_consistent"] == false);
}

TEST_CASE("usage errors") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"signature"}).code == 2);
  const Result missing = run_cli({"signature", "--curve", "/nonexistent/curve.json"});
  CHECK(missing.code == 2);
  CHECK(missing.err.rfind("legendre: usage error: ", 0) == 0);
  CHECK(run_cli({"--help"}).code == 0);
}
