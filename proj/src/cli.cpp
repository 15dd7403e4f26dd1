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

#include "athermal/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>

#include <CLI11.hpp>
#include <json.hpp>

#include "athermal/coherence.hpp"
#include "athermal/core.hpp"
#include "athermal/divergences.hpp"
#include "athermal/majorization.hpp"
#include "athermal/random.hpp"
#include "athermal/thermo.hpp"
#include "athermal/work.hpp"

namespace athermal::cli {

namespace {

using json = nlohmann::ordered_json;

// Malformed input files; reported with exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json num(double v) {
  if (std::isnan(v)) return nullptr;
  if (std::isinf(v)) return v > 0 ? "unbounded" : "-unbounded";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  double r = std::strtod(buf, nullptr);
  if (r == 0.0) r = 0.0;
  return r;
}

json num_list(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) a.push_back(num(x));
  return a;
}

json real_matrix(const RealMatrix& m) {
  json a = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(num(m(i, j)));
    a.push_back(row);
  }
  return a;
}

json complex_matrix(const ComplexMatrix& m) {
  return json{{"re", real_matrix(m.real())}, {"im", real_matrix(m.imag())}};
}

json alpha_value(double a) { return num(a); }

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("'" + path + "': " + e.what());
  }
}

double as_number(const json& v, const std::string& path, const std::string& field) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "inf" || s == "unbounded") return kUnbounded;
    if (s == "-inf" || s == "-unbounded") return -kUnbounded;
  }
  throw InputError("'" + path + "': field '" + field + "' expects a number");
}

std::vector<double> as_vector(const json& doc, const std::string& path, const std::string& field) {
  if (!doc.contains(field)) throw InputError("'" + path + "': missing field '" + field + "'");
  const json& v = doc.at(field);
  if (!v.is_array()) throw InputError("'" + path + "': field '" + field + "' expects an array");
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(as_number(v[i], path, field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

RealMatrix as_matrix(const json& doc, const std::string& path, const std::string& field) {
  if (!doc.contains(field)) throw InputError("'" + path + "': missing field '" + field + "'");
  const json& v = doc.at(field);
  if (!v.is_array() || v.empty()) throw InputError("'" + path + "': field '" + field + "' expects a matrix");
  const auto rows = static_cast<Eigen::Index>(v.size());
  RealMatrix m;
  for (Eigen::Index i = 0; i < rows; ++i) {
    const std::string f = field + "[" + std::to_string(i) + "]";
    const json& row = v[static_cast<std::size_t>(i)];
    if (!row.is_array()) throw InputError("'" + path + "': field '" + f + "' expects an array");
    if (i == 0) m.resize(rows, static_cast<Eigen::Index>(row.size()));
    if (static_cast<Eigen::Index>(row.size()) != m.cols()) {
      throw InputError("'" + path + "': field '" + f + "' has the wrong length");
    }
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      m(i, j) = as_number(row[static_cast<std::size_t>(j)], path, f + "[" + std::to_string(j) + "]");
    }
  }
  return m;
}

GibbsContext load_context(const std::string& path, std::optional<double> beta) {
  const json doc = load_json(path);
  if (!doc.is_object()) throw InputError("'" + path + "': expected an object");
  std::vector<double> e = as_vector(doc, path, "energies");
  double b = 0.0;
  if (beta) {
    b = *beta;
  } else if (doc.contains("beta")) {
    b = as_number(doc.at("beta"), path, "beta");
  } else {
    throw InputError("'" + path + "': missing field 'beta' and no --beta given");
  }
  return GibbsContext(EnergySpectrum(std::move(e)), b);
}

DensityMatrix load_state(const std::string& path) {
  const json doc = load_json(path);
  if (!doc.is_object()) throw InputError("'" + path + "': expected an object");
  if (doc.contains("diag")) return DensityMatrix::diagonal(ProbVec(as_vector(doc, path, "diag")));
  const RealMatrix re = as_matrix(doc, path, "re");
  RealMatrix im = RealMatrix::Zero(re.rows(), re.cols());
  if (doc.contains("im")) im = as_matrix(doc, path, "im");
  if (im.rows() != re.rows() || im.cols() != re.cols()) {
    throw InputError("'" + path + "': fields 're' and 'im' differ in shape");
  }
  ComplexMatrix rho(re.rows(), re.cols());
  rho.real() = re;
  rho.imag() = im;
  return DensityMatrix(std::move(rho));
}

ProbVec load_populations(const std::string& path) { return population_of(load_state(path)); }

void write_csv(const std::string& path, const std::vector<Point>& pts) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  // Abscissas that coincide after rounding keep the last (largest) ordinate.
  std::vector<std::pair<std::string, std::string>> rows;
  for (const Point& p : pts) {
    std::string x = num(p.x).dump();
    std::string y = num(p.y).dump();
    if (!rows.empty() && rows.back().first == x) rows.back().second = std::move(y);
    else rows.emplace_back(std::move(x), std::move(y));
  }
  out << "x,y\n";
  for (const auto& [x, y] : rows) out << x << ',' << y << '\n';
}

json points_json(const std::vector<Point>& pts) {
  json a = json::array();
  for (const Point& p : pts) a.push_back(json::array({num(p.x), num(p.y)}));
  return a;
}

json verdict_json(const SecondLawsVerdict& v, bool table, const ProbVec& x, const ProbVec& y,
                  const GibbsContext& ctx) {
  json viol = json::array();
  for (const LawViolation& l : v.violations) {
    viol.push_back({{"alpha", l.alpha ? alpha_value(*l.alpha) : json("burg")}, {"delta", num(l.delta)}});
  }
  json out{{"passed", v.passed},
           {"strict_count", v.strict_count},
           {"tie_count", v.tie_count},
           {"violations", viol},
           {"alpha_grid", num_list(v.alpha_grid)},
           {"burg", v.burg_included}};
  if (table) {
    json rows = json::array();
    for (double a : v.alpha_grid) {
      rows.push_back({{"alpha", alpha_value(a)},
                      {"F_x", num(free_energy_alpha(x, ctx, a))},
                      {"F_y", num(free_energy_alpha(y, ctx, a))}});
    }
    if (v.burg_included) {
      rows.push_back({{"alpha", "burg"},
                      {"F_x", num(burg_free_energy(x, ctx))},
                      {"F_y", num(burg_free_energy(y, ctx))}});
    }
    out["table"] = rows;
  }
  return out;
}

struct Options {
  std::string context;
  std::optional<double> beta;
  double eps = tol::kOrder;
  std::string x;
  std::string y;
  std::string state;
  std::string out;
  std::vector<std::string> alpha_grid;
  bool laws = false;
  bool lorenz = false;
  std::int64_t d_max = kDefaultDenominatorCap;
  std::string kind;
  bool oracle = false;
  double tau = kSupportThreshold;
  double delta = -1.0;
  std::vector<std::string> alphas;
  double qfi_dt = 1e-3;
  std::string axis;
  double p = 0.0;
  double c = 0.0;
  std::size_t samples = 101;
  std::string action;
  std::size_t xp = 0;
  std::size_t yp = 0;
  std::int64_t ge = 1000;
  std::string target;
  std::uint64_t seed = 0;
  double de = 1.0;
  std::int64_t n_trunc = 40;
  std::string direction = "down";
  double max_tail = kDefaultLadderTail;
};

std::vector<double> parse_alphas(const std::vector<std::string>& items) {
  std::vector<double> out;
  for (const std::string& s : items) {
    if (s == "inf" || s == "+inf") {
      out.push_back(kUnbounded);
    } else if (s == "-inf") {
      out.push_back(-kUnbounded);
    } else {
      char* end = nullptr;
      const double v = std::strtod(s.c_str(), &end);
      if (end == s.c_str() || *end != '\0' || std::isnan(v)) throw InputError("bad alpha value '" + s + "'");
      out.push_back(v);
    }
  }
  return out;
}

json cmd_check(const Options& o) {
  const GibbsContext ctx = load_context(o.context, o.beta);
  const ProbVec x = load_populations(o.x);
  const ProbVec y = load_populations(o.y);
  json out{{"thermo_majorizes", thermo_majorizes(x, y, ctx, o.eps)},
           {"reverse", thermo_majorizes(y, x, ctx, o.eps)}};
  if (ctx.beta() > 0.0) {
    const std::vector<double> grid = o.alpha_grid.empty() ? default_alpha_grid() : parse_alphas(o.alpha_grid);
    out["alpha_laws"] = verdict_json(second_laws_check(x, y, ctx, grid, true, o.eps), o.laws, x, y, ctx);
  } else {
    out["alpha_laws"] = nullptr;
  }
  return out;
}

json cmd_curve(const Options& o) {
  const ProbVec x = load_populations(o.x);
  PLCurve curve;
  if (o.lorenz) {
    curve = lorenz_curve(x);
  } else {
    curve = thermo_curve(x, load_context(o.context, o.beta));
  }
  if (!o.out.empty()) write_csv(o.out, curve.points());
  return json{{"kind", o.lorenz ? "lorenz" : "thermo"}, {"points", points_json(curve.points())}};
}

json cmd_construct(const Options& o) {
  const GibbsContext ctx = load_context(o.context, o.beta);
  const ProbVec x = load_populations(o.x);
  const ProbVec y = load_populations(o.y);
  const EmbeddingSpec spec = rationalize(ctx, o.d_max);
  const StochasticMatrix G = construct_gibbs_stochastic(x, y, ctx, o.d_max, o.eps);
  const double residual = (G.matrix() * x.vector() - y.vector()).cwiseAbs().maxCoeff();
  json d = json::array();
  for (std::int64_t v : spec.d) d.push_back(v);
  return json{{"matrix", real_matrix(G.matrix())},
              {"degeneracies", d},
              {"D", spec.D},
              {"approx_error", num(spec.approx_error)},
              {"residual", num(residual)}};
}

json cmd_free_energies(const Options& o) {
  const GibbsContext ctx = load_context(o.context, o.beta);
  const ProbVec x = load_populations(o.x);
  const std::vector<double> grid = o.alpha_grid.empty() ? default_alpha_grid() : parse_alphas(o.alpha_grid);
  json rows = json::array();
  for (double a : grid) rows.push_back({{"alpha", alpha_value(a)}, {"F", num(free_energy_alpha(x, ctx, a))}});
  return json{{"kT", num(ctx.kT())},
              {"log_Z", num(ctx.log_partition())},
              {"free_energies", rows},
              {"burg", num(burg_free_energy(x, ctx))}};
}

json cmd_work(const Options& o) {
  const GibbsContext ctx = load_context(o.context, o.beta);
  const ProbVec x = load_populations(o.x);
  json out{{"kind", o.kind}};
  if (o.kind == "det") {
    out["work"] = num(w_det(x, ctx, o.tau));
    out["tau"] = num(o.tau);
    if (o.oracle) out["oracle"] = num(w_det_geometric_oracle(x, ctx));
  } else {
    out["work"] = num(w_for(x, ctx));
    if (o.oracle) out["oracle"] = num(w_for_geometric_oracle(x, ctx));
  }
  out["average_work_reference"] = num(average_work_reference(x, ctx));
  return out;
}

json cmd_modes(const Options& o) {
  const GibbsContext ctx = load_context(o.context, o.beta);
  const DensityMatrix rho = load_state(o.state);
  const ModeDecomposition md = mode_decompose(rho, ctx.spectrum(), o.delta);
  json comps = json::array();
  for (const ModeComponent& c : md.components) {
    json entry = complex_matrix(c.component);
    entry["omega"] = num(c.omega);
    comps.push_back(entry);
  }
  return json{{"frequencies", num_list(bohr_spectrum(ctx.spectrum(), o.delta).frequencies)},
              {"components", comps}};
}

json cmd_asymmetry(const Options& o) {
  const GibbsContext ctx = load_context(o.context, o.beta);
  const DensityMatrix rho = load_state(o.state);
  json out{{"asymmetry", num(asymmetry(rho, ctx.spectrum()))}};
  json rows = json::array();
  for (double a : parse_alphas(o.alphas)) {
    rows.push_back({{"alpha", alpha_value(a)}, {"value", num(asymmetry_alpha(rho, ctx.spectrum(), a))}});
  }
  out["asymmetry_alpha"] = rows;
  out["qfi"] = num(qfi(rho, ctx.spectrum(), o.qfi_dt));
  if (!o.axis.empty()) {
    const json doc = load_json(o.axis);
    out["holevo_asymmetry"] = num(holevo_asymmetry(rho, EnergySpectrum(as_vector(doc, o.axis, "energies"))));
  }
  return out;
}

json cmd_split(const Options& o) {
  const GibbsContext ctx = load_context(o.context, o.beta);
  const FreeEnergySplit s = free_energy_split(load_state(o.state), ctx);
  return json{{"total", num(s.total)}, {"classical", num(s.classical)}, {"coherent", num(s.coherent)}};
}

json cmd_qubit_region(const Options& o) {
  const GibbsContext ctx = load_context(o.context, o.beta);
  const auto pts = qubit_reachable_boundary(o.p, o.c, ctx, o.samples);
  json rows = json::array();
  std::vector<Point> bloch;
  for (const QubitBoundaryPoint& b : pts) {
    rows.push_back({{"lambda", num(b.lambda)}, {"q", num(b.q)}, {"d", num(b.d)},
                    {"x", num(b.bloch_x)}, {"z", num(b.bloch_z)}});
    bloch.push_back({b.bloch_x, b.bloch_z});
  }
  if (!o.out.empty()) {
    // Bloch x shrinks as lambda grows; write it ascending.
    std::ofstream out(o.out);
    if (!out) throw InputError("cannot write '" + o.out + "'");
    out << "x,y\n";
    for (auto it = bloch.rbegin(); it != bloch.rend(); ++it) {
      out << num(it->x).dump() << ',' << num(it->y).dump() << '\n';
    }
  }
  return json{{"boundary", rows}};
}

json cmd_cp_bound(const Options& o) {
  const GibbsContext ctx = load_context(o.context, o.beta);
  const DensityMatrix rho = load_state(o.state);
  const json doc = load_json(o.action);
  const StochasticMatrix P(as_matrix(doc, o.action, "matrix"));
  return json{{"xp", o.xp}, {"yp", o.yp}, {"bound", num(cp_bound(P, rho, ctx.spectrum(), o.xp, o.yp))}};
}

json cmd_simulate_bath(const Options& o) {
  const GibbsContext ctx = load_context(o.context, o.beta);
  std::optional<StochasticMatrix> target;
  if (!o.target.empty()) {
    const json doc = load_json(o.target);
    target.emplace(as_matrix(doc, o.target, "matrix"));
  } else {
    Rng rng(o.seed);
    target.emplace(random_gibbs_stochastic(ctx.gibbs(), rng));
  }
  const BathSimulation sim = bath_model_simulate(*target, ctx, o.ge);
  json d = json::array();
  for (std::int64_t v : sim.degeneracies) d.push_back(v);
  return json{{"gE", o.ge},
              {"degeneracies", d},
              {"target", real_matrix(target->matrix())},
              {"induced", real_matrix(sim.induced.matrix())},
              {"residual", num(sim.residual)}};
}

json cmd_ladder(const Options& o) {
  if (!o.beta) throw InputError("ladder needs --beta");
  LadderDirection dir{};
  if (o.direction == "down") dir = LadderDirection::kDown;
  else if (o.direction == "up") dir = LadderDirection::kUp;
  else throw InputError("direction must be 'up' or 'down'");
  // Coherence moved: (2,1) -> (1,0) going down, (1,0) -> (2,1) going up.
  const Eigen::Index in_r = dir == LadderDirection::kDown ? 2 : 1;
  const Eigen::Index out_r = dir == LadderDirection::kDown ? 1 : 2;
  ComplexMatrix rho;
  if (o.state.empty()) {
    ComplexVector psi = ComplexVector::Zero(3);
    psi(in_r) = psi(in_r - 1) = std::sqrt(0.5);
    rho = psi * psi.adjoint();
  } else {
    rho = load_state(o.state).matrix();
  }
  const DensityMatrix in(rho);
  const DensityMatrix outm = ladder_simulate(in, o.de, *o.beta, o.n_trunc, dir, o.max_tail);
  const double cin = std::abs(in(static_cast<std::size_t>(in_r), static_cast<std::size_t>(in_r - 1)));
  const double cout = std::abs(outm(static_cast<std::size_t>(out_r), static_cast<std::size_t>(out_r - 1)));
  json out{{"direction", o.direction},
           {"output", complex_matrix(outm.matrix())},
           {"factor", cin > 0.0 ? num(cout / cin) : json(nullptr)},
           {"mode_shift_bound", num(std::exp(-*o.beta * o.de))},
           {"tail_bound", num(ladder_tail_bound(o.de, *o.beta, o.n_trunc))}};
  return out;
}

}  // namespace

std::string format_number(double v) { return num(v).dump(); }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Thermal-operations toolbox", "athermal"};
  app.require_subcommand(1);
  Options o;

  auto add_ctx = [&](CLI::App* c, bool required = true) {
    auto* opt = c->add_option("--context", o.context, "Gibbs context JSON {energies, beta}");
    if (required) opt->required();
    c->add_option("--beta", o.beta, "Override the inverse temperature");
  };
  auto add_pair = [&](CLI::App* c) {
    c->add_option("--x", o.x, "Initial state JSON")->required();
    c->add_option("--y", o.y, "Target state JSON")->required();
    c->add_option("--eps", o.eps, "Ordering tolerance")->check(CLI::PositiveNumber);
  };

  auto* check = app.add_subcommand("check", "Thermo-majorization and second-law check");
  add_ctx(check);
  add_pair(check);
  check->add_flag("--laws", o.laws, "Include the full per-alpha table");
  check->add_option("--alpha-grid", o.alpha_grid, "Alpha values (inf, -inf allowed)")->delimiter(',');

  auto* curve = app.add_subcommand("curve", "Thermo-majorization or Lorenz curve");
  add_ctx(curve, false);
  curve->add_option("--x", o.x, "State JSON")->required();
  curve->add_flag("--lorenz", o.lorenz, "Plain Lorenz curve");
  curve->add_option("--out", o.out, "CSV output path");

  auto* construct = app.add_subcommand("construct", "Gibbs-stochastic matrix mapping x to y");
  add_ctx(construct);
  add_pair(construct);
  construct->add_option("--d-max", o.d_max, "Denominator cap")->check(CLI::PositiveNumber);

  auto* fe = app.add_subcommand("free-energies", "Alpha free energies and Burg free energy");
  add_ctx(fe);
  fe->add_option("--x", o.x, "State JSON")->required();
  fe->add_option("--alpha-grid", o.alpha_grid, "Alpha values")->delimiter(',');

  auto* work = app.add_subcommand("work", "Deterministic work or work of formation");
  work->add_option("kind", o.kind, "det or for")->required()->check(CLI::IsMember({"det", "for"}));
  add_ctx(work);
  work->add_option("--x", o.x, "State JSON")->required();
  work->add_flag("--oracle", o.oracle, "Run the bisection cross-check");
  work->add_option("--tau", o.tau, "Support threshold")->check(CLI::PositiveNumber);

  auto* modes = app.add_subcommand("modes", "Bohr spectrum and coherence modes");
  add_ctx(modes);
  modes->add_option("--state", o.state, "State JSON")->required();
  modes->add_option("--delta", o.delta, "Frequency clustering tolerance");

  auto* asym = app.add_subcommand("asymmetry", "Asymmetry monotones and QFI");
  add_ctx(asym);
  asym->add_option("--state", o.state, "State JSON")->required();
  asym->add_option("--alpha", o.alphas, "Orders for the alpha asymmetry")->delimiter(',');
  asym->add_option("--qfi-dt", o.qfi_dt, "QFI time step")->check(CLI::PositiveNumber);
  asym->add_option("--axis", o.axis, "Dephasing axis JSON {energies} for the Holevo asymmetry");

  auto* split = app.add_subcommand("split", "Classical and coherent free-energy split");
  add_ctx(split);
  split->add_option("--state", o.state, "State JSON")->required();

  auto* qr = app.add_subcommand("qubit-region", "Reachable qubit boundary");
  add_ctx(qr);
  qr->add_option("--p", o.p, "Ground population")->required();
  qr->add_option("--c", o.c, "Coherence magnitude")->required();
  qr->add_option("--samples", o.samples, "Boundary samples")->check(CLI::Range(2, 1000000));
  qr->add_option("--out", o.out, "CSV output path (Bloch x,z)");

  auto* cp = app.add_subcommand("cp-bound", "Coherence bound from a classical action");
  add_ctx(cp);
  cp->add_option("--state", o.state, "State JSON")->required();
  cp->add_option("--action", o.action, "Classical action JSON {matrix}")->required();
  cp->add_option("--xp", o.xp, "Output row index")->required();
  cp->add_option("--yp", o.yp, "Output column index")->required();

  auto* bath = app.add_subcommand("simulate-bath", "Finite-bath reproduction of a Gibbs-stochastic map");
  add_ctx(bath);
  bath->add_option("--ge", o.ge, "Bath degeneracy scale")->check(CLI::PositiveNumber);
  bath->add_option("--target", o.target, "Target matrix JSON {matrix}");
  bath->add_option("--seed", o.seed, "Seed for a random target");

  auto* ladder = app.add_subcommand("ladder", "Single-mode bath coherence transport");
  ladder->add_option("--beta", o.beta, "Inverse temperature")->required();
  ladder->add_option("--de", o.de, "Level spacing")->check(CLI::PositiveNumber);
  ladder->add_option("--n-trunc", o.n_trunc, "Bath levels kept")->check(CLI::Range(3, 100000000));
  ladder->add_option("--direction", o.direction, "up or down")->check(CLI::IsMember({"up", "down"}));
  ladder->add_option("--state", o.state, "Three-level state JSON");
  ladder->add_option("--max-tail", o.max_tail, "Largest accepted truncation tail")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "athermal: input_error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    json result;
    if (check->parsed()) result = cmd_check(o);
    else if (curve->parsed()) result = cmd_curve(o);
    else if (construct->parsed()) result = cmd_construct(o);
    else if (fe->parsed()) result = cmd_free_energies(o);
    else if (work->parsed()) result = cmd_work(o);
    else if (modes->parsed()) result = cmd_modes(o);
    else if (asym->parsed()) result = cmd_asymmetry(o);
    else if (split->parsed()) result = cmd_split(o);
    else if (qr->parsed()) result = cmd_qubit_region(o);
    else if (cp->parsed()) result = cmd_cp_bound(o);
    else if (bath->parsed()) result = cmd_simulate_bath(o);
    else if (ladder->parsed()) result = cmd_ladder(o);
    out << result.dump(2) << '\n';
    return kOk;
  } catch (const InputError& e) {
    err << "athermal: input_error: " << e.what() << '\n';
    return kInputError;
  } catch (const InvalidInput& e) {
    err << "athermal: " << e.name() << ": " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    err << "athermal: " << e.name() << ": " << e.what() << '\n';
    return kDomainError;
  }
}

}  // namespace athermal::cli
