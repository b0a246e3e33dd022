// Copyright 2026 The Hornex Authors.
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

#include "hornex/verify.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

namespace hornex {
namespace {

// Re(h * r * conj(t)) by std::complex, independent of dim_score.
double oracle_phi(Complex h, Complex r, Complex t) { return (h * r * std::conj(t)).real(); }

TEST(InequalityTerms, CompositionHandExample) {
  const std::vector<Complex> ents = {{1, 0}, {1, 0}, {1, 0}};
  const auto terms = composition_terms({1, 0}, {1, 0}, {1, 0}, ents, 1.0);
  EXPECT_DOUBLE_EQ(terms.lhs, 0.25);
  EXPECT_DOUBLE_EQ(terms.rhs, 0.5);
}

TEST(InequalityTerms, HornMatchesComplexOracle) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t k = 1 + trial % 3;
    const double bound = 0.5 + u(rng);
    std::vector<Complex> body(k), ents(k + 1);
    for (auto& r : body) r = project_relation({bound * u(rng), bound * u(rng)}, bound);
    for (auto& e : ents) e = {u(rng), u(rng)};
    const Complex head = project_relation({bound * u(rng), bound * u(rng)}, bound);
    double lhs = 1.0;
    for (std::size_t i = 0; i < k; ++i) lhs *= oracle_phi(ents[i], body[i], ents[i + 1]) / bound;
    const auto terms = horn_terms(body, head, ents, bound);
    EXPECT_NEAR(terms.lhs, lhs, 1e-14);
    EXPECT_NEAR(terms.rhs, oracle_phi(ents.front(), head, ents.back()) / bound, 1e-14);
  }
}

TEST(InequalityTerms, WrongEntityCountThrows) {
  const std::vector<Complex> two = {{1, 0}, {0, 1}};
  EXPECT_THROW(composition_terms({1, 0}, {1, 0}, {1, 0}, two, 1.0), std::invalid_argument);
  const std::vector<Complex> body = {{1, 0}, {1, 0}};
  EXPECT_THROW(horn_terms(body, {1, 0}, two, 1.0), std::invalid_argument);
}

TEST(ProjectRelation, AgreesWithTableProjection) {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> n(0.5, 1.0);
  for (int i = 0; i < 1000; ++i) {
    double re = n(rng), im = n(rng);
    const auto z = project_relation({re, im}, 1.3);
    project_relation_dim(re, im, 1.3);
    EXPECT_EQ(z, Complex(re, im));
    EXPECT_LE(std::abs(z), 1.3 * (1 + 1e-15));
  }
}

class SufficientCondition : public ::testing::TestWithParam<std::tuple<std::size_t, std::size_t>> {};

TEST_P(SufficientCondition, HornHoldsAndControlFails) {
  const auto [k, d] = GetParam();
  const auto ok = check_sufficient_condition_horn(k, d, 1.0, 2000, 3);
  EXPECT_EQ(ok.violations, 0u) << "max violation " << ok.max_violation_magnitude;
  EXPECT_LT(ok.skipped, ok.trials / 10);
  const auto bad = check_sufficient_condition_horn(k, d, 1.0, 2000, 3, HeadConstruction::kViolated);
  EXPECT_GT(bad.violations, 0u);
}

TEST_P(SufficientCondition, HoldsForOtherBounds) {
  const auto [k, d] = GetParam();
  for (const double bound : {0.5, 2.0}) {
    EXPECT_EQ(check_sufficient_condition_horn(k, d, bound, 500, 4).violations, 0u) << bound;
  }
}

INSTANTIATE_TEST_SUITE_P(KAndDim, SufficientCondition,
                         ::testing::Combine(::testing::Values(1, 2, 3), ::testing::Values(2, 8)));

TEST(SufficientCondition, CompositionHoldsAndControlFails) {
  for (const std::size_t d : {2, 8, 32}) {
    EXPECT_EQ(check_sufficient_condition_composition(d, 1.0, 2000, 5).violations, 0u);
    EXPECT_GT(check_sufficient_condition_composition(d, 1.0, 2000, 5, HeadConstruction::kViolated).violations, 0u);
  }
}

TEST(SufficientCondition, ReportRecordsParameters) {
  const auto r = check_sufficient_condition_horn(2, 4, 1.0, 100, 6);
  EXPECT_EQ(r.check, "horn");
  EXPECT_EQ(r.k, 2u);
  EXPECT_EQ(r.dim, 4u);
  EXPECT_EQ(r.trials, 100u);
  EXPECT_EQ(r.seed, 6u);
  EXPECT_EQ(r.regime, "unit_disc");
  EXPECT_EQ(r.construction, "satisfied");
  EXPECT_FALSE(r.aligned_violations.has_value());
}

TEST(SufficientCondition, ParallelEqualsSerialAndIsDeterministic) {
  const auto a = check_sufficient_condition_horn(3, 8, 1.0, 3000, 7, HeadConstruction::kViolated);
  const auto b = serial::check_sufficient_condition_horn(3, 8, 1.0, 3000, 7, HeadConstruction::kViolated);
  EXPECT_EQ(a.violations, b.violations);
  EXPECT_EQ(a.skipped, b.skipped);
  EXPECT_EQ(a.max_violation_magnitude, b.max_violation_magnitude);
  const auto c = check_sufficient_condition_composition(8, 1.0, 1000, 8, HeadConstruction::kViolated);
  const auto s = serial::check_sufficient_condition_composition(8, 1.0, 1000, 8, HeadConstruction::kViolated);
  EXPECT_EQ(c.violations, s.violations);
  EXPECT_EQ(c.max_violation_magnitude, s.max_violation_magnitude);
}

TEST(SufficientCondition, RejectsDegenerateArguments) {
  EXPECT_THROW(check_sufficient_condition_horn(0, 2, 1.0, 10, 0), std::invalid_argument);
  EXPECT_THROW(check_sufficient_condition_horn(1, 0, 1.0, 10, 0), std::invalid_argument);
  EXPECT_THROW(check_sufficient_condition_horn(1, 2, 1.0, 0, 0), std::invalid_argument);
  EXPECT_THROW(check_sufficient_condition_horn(1, 2, 0.0, 10, 0), std::invalid_argument);
}

TEST(Unrestricted, AlignedVersionOfSameTrialsNeverViolates) {
  const auto r = counterexample_search_unrestricted(2, 4, 1.0, 2000, 9);
  ASSERT_TRUE(r.aligned_violations.has_value());
  EXPECT_EQ(*r.aligned_violations, 0u);
}

TEST(Suite, RolesAndCounts) {
  const std::vector<std::size_t> ks = {1, 2, 3};
  const std::vector<std::size_t> dims = {2, 8};
  const auto suite = run_theorem_suite(ks, dims, 1.0, 300, 10);
  std::size_t acceptance = 0, controls = 0, info = 0;
  for (const auto& e : suite) {
    switch (e.role) {
      case SuiteEntry::Role::kAcceptance: ++acceptance; break;
      case SuiteEntry::Role::kNegativeControl: ++controls; break;
      case SuiteEntry::Role::kInformational: ++info; break;
    }
    EXPECT_TRUE(e.passed()) << e.report.check << " k=" << e.report.k << " d=" << e.report.dim;
  }
  EXPECT_EQ(acceptance, 2u + 3u * 2u);
  EXPECT_EQ(controls, 1u + 3u);
  EXPECT_EQ(info, 2u * 3u);
}

TEST(GradientCheck, QuadraticExactAndWrongGradientDetected) {
  const std::vector<double> x = {0.3, -1.2, 2.0};
  auto f = [](std::span<const double> v) {
    double s = 0;
    for (const double a : v) s += a * a;
    return s;
  };
  const std::vector<double> good = {0.6, -2.4, 4.0};
  EXPECT_LT(gradient_check(f, x, good, 1e-5), 1e-8);
  const std::vector<double> bad = {0.6, -2.4, 4.5};
  EXPECT_GT(gradient_check(f, x, bad, 1e-5), 0.1);
}

TEST(GradientCheck, EveryObjectiveTerm) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto p = random_gradient_problem(6, 4, 8, 10, 3, seed, 1e-3);
    EXPECT_GE(hinge_margin(p.point, p.rules), 1e-3);
    for (const auto term : {LossTerm::kLogistic, LossTerm::kRulePenalty, LossTerm::kN3, LossTerm::kTotal}) {
      EXPECT_LT(gradient_check(term, p, 1e-6), 1e-5) << to_string(term) << " seed " << seed;
    }
  }
}

TEST(GradientCheck, TotalIsSumOfWeightedTerms) {
  auto p = random_gradient_problem(5, 3, 4, 6, 2, 11, 1e-3);
  p.mu = 0.7;
  p.eta = 0.05;
  const double total = objective_value(LossTerm::kTotal, p);
  const double parts = objective_value(LossTerm::kLogistic, p) + p.mu * objective_value(LossTerm::kRulePenalty, p) +
                       p.eta * objective_value(LossTerm::kN3, p);
  EXPECT_NEAR(total, parts, 1e-12 * std::abs(total));
}

}  // namespace
}  // namespace hornex
