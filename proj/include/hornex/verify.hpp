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

// Randomised checks of the per-dimension rule-satisfaction inequalities
// implied by the relation constraints, plus finite-difference gradient checks
// for the training objective.

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hornex/model.hpp"
#include "hornex/rules.hpp"
#include "hornex/training.hpp"

namespace hornex {

using Complex = std::complex<double>;

// Where sampled entity components live. Both keep 0 <= re, im <= 1; the disc
// additionally bounds the per-dimension modulus by 1.
enum class EntityRegime { kUnitBox, kUnitDisc };

// kSatisfied builds the head relation with non-negative real slack and equal
// imaginary part; kViolated shrinks the real part well below the body product
// (negative control).
enum class HeadConstruction { kSatisfied, kViolated };

const char* to_string(EntityRegime regime);
const char* to_string(HeadConstruction head);

struct TheoremReport {
  std::string check;  // composition | horn | unrestricted
  std::size_t k = 0;
  std::size_t dim = 0;
  double bound = 1.0;
  std::uint64_t seed = 0;
  std::string regime;
  std::string construction;
  double tolerance = 1e-9;

  std::size_t trials = 0;
  std::size_t violations = 0;
  std::size_t skipped = 0;  // head construction altered by projection
  double max_violation_magnitude = 0.0;
  // unrestricted search only: violations when the same trial's entities are
  // re-phased into alignment.
  std::optional<std::size_t> aligned_violations;
};

struct InequalityTerms {
  double lhs;
  double rhs;
};

// |phi_1/(2R)| * |phi_2/(2R)| versus |phi_3/(2R)| for a single dimension.
// `entities` holds (e1, e2, e3).
InequalityTerms composition_terms(Complex r1, Complex r2, Complex r3,
                                  std::span<const Complex> entities, double bound);

// prod_i phi_i/R versus phi/R for a single dimension, signed as written.
// `entities` holds the chain z_0..z_k.
InequalityTerms horn_terms(std::span<const Complex> body, Complex head,
                           std::span<const Complex> entities, double bound);

// Clamp to the quarter-plane box [0,R]^2 then onto the modulus-R disc; same
// arithmetic as project().
Complex project_relation(Complex r, double bound);

TheoremReport check_sufficient_condition_composition(
    std::size_t dim, double bound, std::size_t trials, std::uint64_t seed,
    HeadConstruction head = HeadConstruction::kSatisfied,
    EntityRegime regime = EntityRegime::kUnitBox, double tolerance = 1e-9);

TheoremReport check_sufficient_condition_horn(std::size_t k, std::size_t dim, double bound,
                                              std::size_t trials, std::uint64_t seed,
                                              HeadConstruction head = HeadConstruction::kSatisfied,
                                              EntityRegime regime = EntityRegime::kUnitDisc,
                                              double tolerance = 1e-9);

// Same relation construction, entity phases drawn independently.
TheoremReport counterexample_search_unrestricted(std::size_t k, std::size_t dim, double bound,
                                                 std::size_t trials, std::uint64_t seed,
                                                 EntityRegime regime = EntityRegime::kUnitDisc,
                                                 double tolerance = 1e-9);

namespace serial {
TheoremReport check_sufficient_condition_composition(
    std::size_t dim, double bound, std::size_t trials, std::uint64_t seed,
    HeadConstruction head = HeadConstruction::kSatisfied,
    EntityRegime regime = EntityRegime::kUnitBox, double tolerance = 1e-9);
TheoremReport check_sufficient_condition_horn(std::size_t k, std::size_t dim, double bound,
                                              std::size_t trials, std::uint64_t seed,
                                              HeadConstruction head = HeadConstruction::kSatisfied,
                                              EntityRegime regime = EntityRegime::kUnitDisc,
                                              double tolerance = 1e-9);
}  // namespace serial

struct SuiteEntry {
  TheoremReport report;
  // Acceptance entries must show zero violations; controls must show some.
  enum class Role { kAcceptance, kNegativeControl, kInformational } role;
  bool passed() const;
};

const char* to_string(SuiteEntry::Role role);

// Composition for every d, Horn for every (k, d), one negative control per
// check type, and the unrestricted search as informational entries.
std::vector<SuiteEntry> run_theorem_suite(std::span<const std::size_t> ks,
                                          std::span<const std::size_t> dims, double bound,
                                          std::size_t trials, std::uint64_t seed);

// Central differences per coordinate; max over coordinates of
// |analytic - numeric| / max(1, |analytic|). Throws on non-finite values.
double gradient_check(const std::function<double(std::span<const double>)>& f,
                      std::span<const double> point, std::span<const double> analytic,
                      double step);

enum class LossTerm { kLogistic, kRulePenalty, kN3, kTotal };
const char* to_string(LossTerm term);

struct GradientProblem {
  EmbeddingTable point;
  LabeledBatch batch;
  std::vector<HornRule> rules;
  double mu = 1.0;
  double eta = 1.0;
};

// Value and dense gradient (entity re, entity im, relation re, relation im)
// of one objective term at the problem's point. N3 covers objective_rows(),
// with the rules included when mu > 0, as in training.
double objective_value(LossTerm term, const GradientProblem& problem);
std::vector<double> objective_gradient(LossTerm term, const GradientProblem& problem);

double gradient_check(LossTerm term, const GradientProblem& problem, double step);

// Smallest |Re(hb_l)/R^k - Re(r_l)/R| over all rules and dimensions.
double hinge_margin(const EmbeddingTable& emb, std::span<const HornRule> rules);

// Random feasible table, labelled batch and rules, with relation rows
// resampled until every hinge argument is at least `kink_margin` away from 0.
GradientProblem random_gradient_problem(std::size_t num_entities, std::size_t num_relations,
                                        std::size_t dim, std::size_t batch_size,
                                        std::size_t num_rules, std::uint64_t seed,
                                        double kink_margin);

}  // namespace hornex
