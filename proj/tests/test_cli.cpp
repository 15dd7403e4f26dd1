// Copyright 2026 The athermal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <unistd.h>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "athermal/cli.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = athermal::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Scratch {
 public:
  Scratch() : dir_(fs::temp_directory_path() / ("athermal-cli-" + std::to_string(::getpid()))) {
    fs::create_directories(dir_);
  }
  ~Scratch() { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& body) const {
    const fs::path p = dir_ / name;
    std::ofstream(p) << body;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

 private:
  fs::path dir_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::pair<double, double>> read_csv(const std::string& path) {
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  REQUIRE(line == "x,y");
  std::vector<std::pair<double, double>> rows;
  while (std::getline(in, line)) {
    const auto comma = line.find(',');
    rows.emplace_back(std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1)));
  }
  return rows;
}

const std::string kContext = R"({"energies": [0, 1, 2], "beta": 1.2})";
const std::string kX = R"({"diag": [0.3333333333333333, 0.3333333333333333, 0.3333333333333334]})";
const std::string kY = R"({"diag": [0.6666666666666666, 0.3333333333333334, 0]})";

}  // namespace

TEST_CASE("number formatting") {
  using athermal::cli::format_number;
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(INFINITY) == "\"unbounded\"");
  CHECK(format_number(-INFINITY) == "\"-unbounded\"");
  CHECK(format_number(-0.0) == "0.0");
  CHECK(format_number(2.0) == "2.0");
}

TEST_CASE("check on the crossing pair") {
  Scratch s;
  const std::string ctx = s.write("ctx.json", kContext);
  const std::string x = s.write("x.json", kX);
  const std::string y = s.write("y.json", kY);
  const Result r = call({"check", "--context", ctx, "--x", x, "--y", y});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["thermo_majorizes"] == false);
  CHECK(j["reverse"] == false);
  CHECK(j["alpha_laws"].is_object());
  CHECK(j["alpha_laws"]["passed"].is_boolean());
  CHECK_FALSE(j["alpha_laws"].contains("table"));

  const Result laws = call({"check", "--context", ctx, "--x", x, "--y", y, "--laws", "--alpha-grid", "1,inf,-inf"});
  REQUIRE(laws.code == 0);
  const json t = json::parse(laws.out)["alpha_laws"]["table"];
  REQUIRE(t.size() == 4);
  CHECK(std::abs(t[0]["F_x"].get<double>() - 0.084) < 2e-3);
  CHECK(std::abs(t[0]["F_y"].get<double>() + 0.197) < 2e-3);
  CHECK(t[3]["alpha"] == "burg");
  CHECK(t[3]["F_y"] == "unbounded");

  const Result hot = call({"check", "--context", ctx, "--x", x, "--y", y, "--beta", "0"});
  REQUIRE(hot.code == 0);
  CHECK(json::parse(hot.out)["alpha_laws"].is_null());
}

TEST_CASE("curves") {
  Scratch s;
  const std::string ctx = s.write("ctx.json", kContext);
  const std::string x = s.write("x.json", kX);
  const std::string g = s.write("g.json", R"({"diag": [0.7184361377107102, 0.21638880630702366, 0.06517505598226614]})");
  const std::string csv = s.path("g.csv");
  const Result r = call({"curve", "--context", ctx, "--x", g, "--out", csv});
  REQUIRE(r.code == 0);
  const auto rows = read_csv(csv);
  const double z = 1.0 + std::exp(-1.2) + std::exp(-2.4);
  CHECK(std::abs(rows.back().first - z) < 1e-11);
  CHECK(std::abs(rows.back().second - 1.0) < 1e-11);
  for (const auto& [px, py] : rows) CHECK(std::abs(py - px / z) < 1e-11);

  const std::string lor = s.path("lorenz.csv");
  REQUIRE(call({"curve", "--lorenz", "--x", x, "--out", lor}).code == 0);
  const auto lrows = read_csv(lor);
  CHECK(lrows.size() == 4);
  for (std::size_t k = 1; k < lrows.size(); ++k) CHECK(lrows[k].first > lrows[k - 1].first);
  CHECK(json::parse(call({"curve", "--lorenz", "--x", x}).out)["kind"] == "lorenz");
}

TEST_CASE("construct") {
  Scratch s;
  const std::string ctx = s.write("ctx.json", R"({"energies": [0, 0.2876820724517809, 1.3862943611198906], "beta": 1})");
  const std::string x = s.write("x.json", R"({"diag": [0.1, 0.2, 0.7]})");
  const std::string g = s.write("g.json", R"({"diag": [0.5, 0.375, 0.125]})");
  const Result id = call({"construct", "--context", ctx, "--x", x, "--y", x});
  REQUIRE(id.code == 0);
  const json j = json::parse(id.out);
  CHECK(j["degeneracies"] == json::array({4, 3, 1}));
  CHECK(j["D"] == 8);
  CHECK(j["matrix"][0][0] == 1.0);
  CHECK(j["residual"].get<double>() < 1e-9);
  const Result th = call({"construct", "--context", ctx, "--x", x, "--y", g});
  REQUIRE(th.code == 0);
  const Result bad = call({"construct", "--context", ctx, "--x", g, "--y", x});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("ordering_error") != std::string::npos);
}

TEST_CASE("free energies and work") {
  Scratch s;
  const std::string ctx = s.write("ctx.json", kContext);
  const std::string y = s.write("y.json", kY);
  const std::string full = s.write("f.json", R"({"diag": [0.2, 0.3, 0.5]})");
  const Result fe = call({"free-energies", "--context", ctx, "--x", y, "--alpha-grid", "-0.5,1"});
  REQUIRE(fe.code == 0);
  const json f = json::parse(fe.out);
  CHECK(f["free_energies"][0]["F"] == "unbounded");
  CHECK(std::abs(f["free_energies"][1]["F"].get<double>() + 0.197) < 2e-3);
  CHECK(f["burg"] == "unbounded");

  const Result det = call({"work", "det", "--context", ctx, "--x", full});
  REQUIRE(det.code == 0);
  CHECK(json::parse(det.out)["work"] == 0.0);
  const Result det2 = call({"work", "det", "--context", ctx, "--x", y, "--oracle"});
  const json d = json::parse(det2.out);
  CHECK(std::abs(d["work"].get<double>() - 0.0561633273932) < 1e-12);
  CHECK(std::abs(d["oracle"].get<double>() - d["work"].get<double>()) < 1e-8);
  const json w = json::parse(call({"work", "for", "--context", ctx, "--x", y, "--oracle"}).out);
  CHECK(std::abs(w["work"].get<double>() - 0.360055142951) < 1e-12);
  CHECK(call({"work", "maybe", "--context", ctx, "--x", y}).code == 2);
}

TEST_CASE("quantum commands") {
  Scratch s;
  const std::string ctx = s.write("ctx.json", R"({"energies": [0, 1], "beta": 1})");
  const std::string plus = s.write("plus.json", R"({"re": [[0.5, 0.5], [0.5, 0.5]]})");
  const json modes = json::parse(call({"modes", "--context", ctx, "--state", plus}).out);
  CHECK(modes["frequencies"] == json::array({-1.0, 0.0, 1.0}));
  CHECK(modes["components"].size() == 3);

  const Result a = call({"asymmetry", "--context", ctx, "--state", plus, "--alpha", "0.5,2,inf"});
  REQUIRE(a.code == 0);
  const json aj = json::parse(a.out);
  CHECK(std::abs(aj["asymmetry"].get<double>() - std::log(2.0)) < 1e-11);
  CHECK(aj["asymmetry_alpha"].size() == 3);
  CHECK(std::abs(aj["qfi"].get<double>() - 1.0) < 1e-4);

  const json sp = json::parse(call({"split", "--context", ctx, "--state", plus}).out);
  CHECK(std::abs(sp["coherent"].get<double>() - std::log(2.0)) < 1e-11);
  CHECK(std::abs(sp["total"].get<double>() - sp["classical"].get<double>() - sp["coherent"].get<double>()) < 1e-11);

  const std::string csv = s.path("qubit.csv");
  const Result q = call({"qubit-region", "--context", ctx, "--p", "0.8", "--c", "0.3", "--samples", "11", "--out", csv});
  REQUIRE(q.code == 0);
  CHECK(json::parse(q.out)["boundary"].size() == 11);
  const auto rows = read_csv(csv);
  CHECK(rows.size() == 11);
  for (std::size_t k = 1; k < rows.size(); ++k) CHECK(rows[k].first > rows[k - 1].first);

  const std::string act = s.write("p.json", R"({"matrix": [[1, 0], [0, 1]]})");
  const json cp = json::parse(call({"cp-bound", "--context", ctx, "--state", plus, "--action", act, "--xp", "0", "--yp", "1"}).out);
  CHECK(cp["bound"] == 0.5);
}

TEST_CASE("ladder and bath") {
  Scratch s;
  const Result up = call({"ladder", "--beta", "1", "--direction", "up"});
  REQUIRE(up.code == 0);
  const json u = json::parse(up.out);
  CHECK(std::abs(u["factor"].get<double>() - std::exp(-1.0)) < 1e-11);
  const json dn = json::parse(call({"ladder", "--beta", "1"}).out);
  CHECK(std::abs(dn["factor"].get<double>() - 1.0) < 1e-11);
  const Result shallow = call({"ladder", "--beta", "0.01", "--n-trunc", "40"});
  CHECK(shallow.code == 1);
  CHECK(shallow.err.find("resolution_error") != std::string::npos);
  CHECK(call({"ladder", "--direction", "up"}).code == 2);

  const std::string ctx = s.write("ctx.json", R"({"energies": [0, 0.5, 1.0], "beta": 1})");
  const Result b1 = call({"simulate-bath", "--context", ctx, "--seed", "7", "--ge", "1000"});
  const Result b2 = call({"simulate-bath", "--context", ctx, "--seed", "7", "--ge", "1000"});
  REQUIRE(b1.code == 0);
  CHECK(b1.out == b2.out);
  CHECK(json::parse(b1.out)["residual"].get<double>() <= 3.0 / 1000.0);
  CHECK(call({"simulate-bath", "--context", ctx, "--ge", "0"}).code == 2);
}

TEST_CASE("input errors") {
  Scratch s;
  const std::string ctx = s.write("ctx.json", kContext);
  const std::string x = s.write("x.json", kX);
  const std::string broken = s.write("broken.json", "{\"diag\": [0.5,\n 0.5");
  const Result r1 = call({"check", "--context", ctx, "--x", broken, "--y", x});
  CHECK(r1.code == 2);
  CHECK(r1.err.find("broken.json") != std::string::npos);
  CHECK(r1.err.find("line") != std::string::npos);

  const std::string nofield = s.write("nofield.json", R"({"energies": [0, 1, 2]})");
  const Result r2 = call({"check", "--context", nofield, "--x", x, "--y", x});
  CHECK(r2.code == 2);
  CHECK(r2.err.find("beta") != std::string::npos);
  CHECK(call({"check", "--context", nofield, "--x", x, "--y", x, "--beta", "1"}).code == 0);

  const std::string unnorm = s.write("unnorm.json", R"({"diag": [0.5, 0.6, 0]})");
  const Result r3 = call({"check", "--context", ctx, "--x", unnorm, "--y", x});
  CHECK(r3.code == 2);
  CHECK(r3.err.find("invalid_input") != std::string::npos);

  const std::string wrongtype = s.write("wt.json", R"({"diag": "nope"})");
  const Result r4 = call({"check", "--context", ctx, "--x", wrongtype, "--y", x});
  CHECK(r4.code == 2);
  CHECK(r4.err.find("diag") != std::string::npos);

  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({}).code == 2);
  CHECK(call({"check", "--context", s.path("missing.json"), "--x", x, "--y", x}).code == 2);
}

TEST_CASE("deterministic output") {
  Scratch s;
  const std::string ctx = s.write("ctx.json", kContext);
  const std::string x = s.write("x.json", kX);
  const std::string y = s.write("y.json", kY);
  const std::vector<std::string> args{"check", "--context", ctx, "--x", x, "--y", y, "--laws"};
  const Result a = call(args);
  const Result b = call(args);
  CHECK(a.out == b.out);
  CHECK(json::accept(a.out));
  const std::string c1 = s.path("c1.csv");
  const std::string c2 = s.path("c2.csv");
  call({"curve", "--context", ctx, "--x", y, "--out", c1});
  call({"curve", "--context", ctx, "--x", y, "--out", c2});
  CHECK(slurp(c1) == slurp(c2));
}
