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
#include <stdexcept>

#include "athermal/random.hpp"
#include "athermal/thermo.hpp"
#include "athermal/work.hpp"

using namespace athermal;

namespace {

const GibbsContext& example_ctx() {
  static const GibbsContext ctx(EnergySpectrum({0.0, 1.0, 2.0}), 1.2);
  return ctx;
}

bool same_curve(const PLCurve& a, const PLCurve& b, double eps) {
  return curve_dominates(a, b, eps) && curve_dominates(b, a, eps);
}

}  // namespace

TEST_CASE("deterministic work examples") {
  const GibbsContext& ctx = example_ctx();
  const ProbVec y({2.0 / 3, 1.0 / 3, 0.0});
  CHECK(std::abs(w_det(y, ctx) - 0.05616332739320201) < 1e-13);
  CHECK(w_det(ProbVec({0.2, 0.3, 0.5}), ctx) == 0.0);
  CHECK(w_det(ctx.gibbs(), ctx) == 0.0);
  CHECK(std::abs(w_det(ProbVec({1.0, 0.0, 0.0}), ctx) + ctx.kT() * std::log(ctx.gibbs()[0])) < 1e-14);
  CHECK(w_det(ProbVec({1.0 - 1e-13, 1e-13, 0.0}), ctx) == w_det(ProbVec({1.0, 0.0, 0.0}), ctx));
  CHECK(w_det(ProbVec({1.0 - 1e-13, 1e-13, 0.0}), ctx, 1e-14) == w_det(y, ctx));
  CHECK_THROWS_AS(w_det(y, GibbsContext(EnergySpectrum({0.0, 1.0, 2.0}), 0.0)), InvalidInput);
}

TEST_CASE("work of formation examples") {
  const GibbsContext& ctx = example_ctx();
  const ProbVec y({2.0 / 3, 1.0 / 3, 0.0});
  CHECK(std::abs(w_for(y, ctx) - 0.36005514295146992) < 1e-13);
  CHECK(std::abs(average_work_reference(y, ctx) - 0.07847024326255065) < 1e-13);
  CHECK(std::abs(w_for(ctx.gibbs(), ctx)) < 1e-14);
  const GibbsContext two(EnergySpectrum({0.0, 1.5}), 0.8);
  CHECK(std::abs(w_for(ProbVec({1.0, 0.0}), two) - two.kT() * two.log_partition()) < 1e-14);
}

TEST_CASE("geometric oracles") {
  const GibbsContext two(EnergySpectrum({0.0, 1.5}), 0.8);
  CHECK(std::abs(w_det_geometric_oracle(ProbVec({1.0, 0.0}), two) - w_det(ProbVec({1.0, 0.0}), two)) < 1e-8);
  CHECK(w_det_geometric_oracle(ProbVec({0.6, 0.4}), two) == 0.0);
  Rng rng(13);
  std::uniform_real_distribution<double> beta(0.3, 3.0);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 2 + static_cast<std::size_t>(k % 4);
    const GibbsContext ctx(random_spectrum(n, rng), beta(rng));
    const std::size_t zeros = 1 + static_cast<std::size_t>(k % (n - 1));
    const ProbVec x = random_prob_vec(n, rng, zeros);
    CHECK(std::abs(w_det_geometric_oracle(x, ctx) - w_det(x, ctx)) < 1e-8);
    CHECK(std::abs(w_for_geometric_oracle(x, ctx) - w_for(x, ctx)) < 1e-8);
    const ProbVec f = random_prob_vec(n, rng);
    CHECK(std::abs(w_for_geometric_oracle(f, ctx) - w_for(f, ctx)) < 1e-8);
  }
}

TEST_CASE("ordering and irreversibility") {
  Rng rng(14);
  std::uniform_real_distribution<double> beta(0.3, 3.0);
  for (int k = 0; k < 300; ++k) {
    const std::size_t n = 2 + static_cast<std::size_t>(k % 4);
    const GibbsContext ctx(random_spectrum(n, rng), beta(rng));
    const ProbVec x = random_prob_vec(n, rng, static_cast<std::size_t>(k % (n - 1)));
    const double d = w_det(x, ctx);
    const double f = w_for(x, ctx);
    CHECK(d >= 0.0);
    CHECK(f > d);
    CHECK(average_work_reference(x, ctx) <= f + 1e-12);
  }
  // Truncated Gibbs states reach equality, see the sharp ground state of a qubit.
  const GibbsContext two(EnergySpectrum({0.0, 1.0}), 1.0);
  CHECK(std::abs(w_for(ProbVec({1.0, 0.0}), two) - w_det(ProbVec({1.0, 0.0}), two)) < 1e-14);
}

TEST_CASE("deterministic work is monotone") {
  Rng rng(15);
  const GibbsContext ctx(EnergySpectrum({0.0, 0.5, 1.2, 2.0}), 1.1);
  for (int k = 0; k < 300; ++k) {
    const ProbVec x = random_prob_vec(4, rng, static_cast<std::size_t>(k % 3));
    const ProbVec y = random_prob_vec(4, rng, static_cast<std::size_t>((k / 3) % 3));
    if (thermo_majorizes(x, y, ctx)) {
      CHECK(w_det(x, ctx) >= w_det(y, ctx) - 1e-9);
      CHECK(w_for(x, ctx) >= w_for(y, ctx) - 1e-9);
    }
  }
}

TEST_CASE("battery rescaling") {
  const GibbsContext& ctx = example_ctx();
  const ProbVec y({0.5, 0.2, 0.3});
  CHECK(same_curve(battery_rescaled_curve(y, ctx, 0.0, true), battery_rescaled_curve(y, ctx, 0.0, false), 1e-15));

  const double W = 0.7;
  const PLCurve c = battery_rescaled_curve(ctx.gibbs(), ctx, W, true);
  const double end = std::exp(-ctx.beta() * W) * ctx.partition();
  const double slope = std::exp(ctx.beta() * W) / ctx.partition();
  for (double t : {0.1, 0.4, 0.9}) CHECK(std::abs(c.at(t * end) - slope * t * end) < 1e-12);
  CHECK(std::abs(c.at(end) - 1.0) < 1e-12);
  CHECK(c.at(2.0 * end) == 1.0);

  Rng rng(16);
  std::uniform_real_distribution<double> gap(0.0, 5.0);
  std::uniform_real_distribution<double> beta(0.1, 3.0);
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = 2 + static_cast<std::size_t>(k % 4);
    const GibbsContext rc(random_spectrum(n, rng), beta(rng));
    const ProbVec s = random_prob_vec(n, rng, static_cast<std::size_t>(k % 2));
    const double w = gap(rng);
    const PLCurve ground = battery_rescaled_curve(s, rc, w, false);
    const PLCurve raised = battery_rescaled_curve(s, rc, w, true);
    CHECK(same_curve(raised, ground.scaled_x(std::exp(-rc.beta() * w)), 1e-10));
  }
}

TEST_CASE("battery joint layout") {
  const BatteryJoint j = battery_joint(ProbVec({0.6, 0.4}), GibbsContext(EnergySpectrum({0.0, 1.0}), 1.0), 0.5, true);
  CHECK(j.ctx.spectrum().values() == std::vector<double>{0.0, 0.5, 1.0, 1.5});
  CHECK(j.state.values() == std::vector<double>{0.0, 0.6, 0.0, 0.4});
  CHECK_THROWS_AS(battery_joint(ProbVec({0.6, 0.4}), GibbsContext(EnergySpectrum({0.0, 1.0}), 1.0), -1.0, true),
                  InvalidInput);
}
