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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

namespace hornex {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

double phi(Complex h, Complex r, Complex t) {
  return dim_score(h.real(), h.imag(), r.real(), r.imag(), t.real(), t.imag());
}

Complex clamp_entity(Complex z) {
  return {std::clamp(z.real(), 0.0, 1.0), std::clamp(z.imag(), 0.0, 1.0)};
}

// Largest modulus an entity with phase `angle` can have inside the regime.
double max_entity_modulus(double angle, EntityRegime regime) {
  if (regime == EntityRegime::kUnitDisc) return 1.0;
  return 1.0 / std::max(std::cos(angle), std::sin(angle));
}

// One trial's relations, head and entity chain, dimension-major:
// relations[l * k + i], entities[l * (k + 1) + i].
struct ChainSample {
  std::size_t k = 0;
  std::vector<Complex> relations;
  std::vector<Complex> head;
  std::vector<Complex> aligned;
  std::vector<Complex> unaligned;
  bool head_adjusted = false;
};

// Entity phases are sorted uniforms phase_0 <= ... <= phase_k in [0, pi/2],
// and relation i gets phase phase_i - phase_{i-1}. Every body triple then
// has theta_r + theta_head - theta_tail = 0, and all components stay
// non-negative.
ChainSample sample_chain(std::size_t k, std::size_t dim, double bound, EntityRegime regime,
                         HeadConstruction head_mode, bool with_unaligned, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  ChainSample s;
  s.k = k;
  s.relations.resize(dim * k);
  s.head.resize(dim);
  s.aligned.resize(dim * (k + 1));
  if (with_unaligned) s.unaligned.resize(dim * (k + 1));

  std::vector<double> phases(k + 1);
  for (std::size_t l = 0; l < dim; ++l) {
    for (auto& p : phases) p = kHalfPi * unit(rng);
    std::sort(phases.begin(), phases.end());

    Complex prod(1.0, 0.0);
    for (std::size_t i = 0; i < k; ++i) {
      const double rho = bound * (1.0 - unit(rng));  // (0, R]
      Complex r = project_relation(std::polar(rho, phases[i + 1] - phases[i]), bound);
      s.relations[l * k + i] = r;
      prod *= r / bound;
    }
    const Complex hat = bound * prod;

    for (std::size_t i = 0; i <= k; ++i) {
      const double frac = 1.0 - unit(rng);
      s.aligned[l * (k + 1) + i] =
          clamp_entity(std::polar(frac * max_entity_modulus(phases[i], regime), phases[i]));
      if (with_unaligned) {
        const double free_phase = kHalfPi * unit(rng);
        s.unaligned[l * (k + 1) + i] = clamp_entity(
            std::polar(frac * max_entity_modulus(free_phase, regime), free_phase));
      }
    }

    double re = 0.0;
    const double im = hat.imag();
    if (head_mode == HeadConstruction::kSatisfied) {
      const double room = std::sqrt(std::max(0.0, bound * bound - im * im)) - hat.real();
      re = std::min(bound, hat.real() + unit(rng) * std::max(0.0, room));
    } else {
      re = 0.1 * unit(rng) * hat.real();
    }
    const Complex raw(re, im);
    const Complex head = project_relation(raw, bound);
    s.head_adjusted = s.head_adjusted || head != raw;
    s.head[l] = head;
  }
  return s;
}

struct TrialOutcome {
  bool skipped = false;
  bool violated = false;
  bool aligned_violated = false;
  double magnitude = 0.0;
};

enum class Check { kComposition, kHorn, kUnrestricted };

TrialOutcome run_trial(Check check, std::size_t k, std::size_t dim, double bound,
                       EntityRegime regime, HeadConstruction head_mode, double tol,
                       std::uint64_t seed, std::size_t trial) {
  std::seed_seq seq{seed, static_cast<std::uint64_t>(trial)};
  std::mt19937_64 rng(seq);
  const bool unrestricted = check == Check::kUnrestricted;
  const auto s = sample_chain(k, dim, bound, regime, head_mode, unrestricted, rng);

  TrialOutcome out;
  if (s.head_adjusted) {
    out.skipped = true;
    return out;
  }
  for (std::size_t l = 0; l < dim; ++l) {
    const std::span<const Complex> body(s.relations.data() + l * k, k);
    const std::span<const Complex> aligned(s.aligned.data() + l * (k + 1), k + 1);
    InequalityTerms terms{};
    if (check == Check::kComposition) {
      terms = composition_terms(body[0], body[1], s.head[l], aligned, bound);
    } else if (check == Check::kHorn) {
      terms = horn_terms(body, s.head[l], aligned, bound);
    } else {
      const std::span<const Complex> free(s.unaligned.data() + l * (k + 1), k + 1);
      terms = horn_terms(body, s.head[l], free, bound);
      const auto at = horn_terms(body, s.head[l], aligned, bound);
      if (at.lhs > at.rhs + tol) out.aligned_violated = true;
    }
    if (terms.lhs > terms.rhs + tol) {
      out.violated = true;
      out.magnitude = std::max(out.magnitude, terms.lhs - terms.rhs);
    }
  }
  return out;
}

template <bool kParallel>
TheoremReport run_check(Check check, std::size_t k, std::size_t dim, double bound,
                        std::size_t trials, std::uint64_t seed, HeadConstruction head,
                        EntityRegime regime, double tol) {
  if (dim < 1 || trials < 1 || k < 1) throw std::invalid_argument("theorem check needs k, d, trials >= 1");
  if (!(bound > 0.0)) throw std::invalid_argument("theorem check needs R > 0");

  std::vector<TrialOutcome> outcomes(trials);
  const auto count = static_cast<std::ptrdiff_t>(trials);
#pragma omp parallel for schedule(static) if (kParallel)
  for (std::ptrdiff_t t = 0; t < count; ++t) {
    outcomes[t] = run_trial(check, k, dim, bound, regime, head, tol, seed, static_cast<std::size_t>(t));
  }

  TheoremReport report;
  report.check = check == Check::kComposition ? "composition"
                 : check == Check::kHorn      ? "horn"
                                              : "unrestricted";
  report.k = k;
  report.dim = dim;
  report.bound = bound;
  report.seed = seed;
  report.regime = to_string(regime);
  report.construction = to_string(head);
  report.tolerance = tol;
  report.trials = trials;
  std::size_t aligned = 0;
  for (const auto& o : outcomes) {
    if (o.skipped) {
      ++report.skipped;
      continue;
    }
    if (o.violated) {
      ++report.violations;
      report.max_violation_magnitude = std::max(report.max_violation_magnitude, o.magnitude);
    }
    if (o.aligned_violated) ++aligned;
  }
  if (check == Check::kUnrestricted) report.aligned_violations = aligned;
  return report;
}

}  // namespace

const char* to_string(EntityRegime regime) {
  return regime == EntityRegime::kUnitBox ? "unit_box" : "unit_disc";
}

const char* to_string(HeadConstruction head) {
  return head == HeadConstruction::kSatisfied ? "satisfied" : "violated";
}

Complex project_relation(Complex r, double bound) {
  double re = r.real();
  double im = r.imag();
  project_relation_dim(re, im, bound);
  return {re, im};
}

InequalityTerms composition_terms(Complex r1, Complex r2, Complex r3,
                                  std::span<const Complex> entities, double bound) {
  if (entities.size() != 3) throw std::invalid_argument("composition_terms needs 3 entities");
  const double two_r = 2.0 * bound;
  const double phi1 = phi(entities[0], r1, entities[1]);
  const double phi2 = phi(entities[1], r2, entities[2]);
  const double phi3 = phi(entities[0], r3, entities[2]);
  return {std::abs(phi1 / two_r) * std::abs(phi2 / two_r), std::abs(phi3 / two_r)};
}

InequalityTerms horn_terms(std::span<const Complex> body, Complex head,
                           std::span<const Complex> entities, double bound) {
  if (entities.size() != body.size() + 1) {
    throw std::invalid_argument("horn_terms needs k + 1 entities");
  }
  double lhs = 1.0;
  for (std::size_t i = 0; i < body.size(); ++i) lhs *= phi(entities[i], body[i], entities[i + 1]) / bound;
  const double rhs = phi(entities.front(), head, entities.back()) / bound;
  return {lhs, rhs};
}

TheoremReport check_sufficient_condition_composition(std::size_t dim, double bound,
                                                     std::size_t trials, std::uint64_t seed,
                                                     HeadConstruction head, EntityRegime regime,
                                                     double tolerance) {
  return run_check<true>(Check::kComposition, 2, dim, bound, trials, seed, head, regime, tolerance);
}

TheoremReport check_sufficient_condition_horn(std::size_t k, std::size_t dim, double bound,
                                              std::size_t trials, std::uint64_t seed,
                                              HeadConstruction head, EntityRegime regime,
                                              double tolerance) {
  return run_check<true>(Check::kHorn, k, dim, bound, trials, seed, head, regime, tolerance);
}

TheoremReport counterexample_search_unrestricted(std::size_t k, std::size_t dim, double bound,
                                                 std::size_t trials, std::uint64_t seed,
                                                 EntityRegime regime, double tolerance) {
  return run_check<true>(Check::kUnrestricted, k, dim, bound, trials, seed,
                         HeadConstruction::kSatisfied, regime, tolerance);
}

namespace serial {

TheoremReport check_sufficient_condition_composition(std::size_t dim, double bound,
                                                     std::size_t trials, std::uint64_t seed,
                                                     HeadConstruction head, EntityRegime regime,
                                                     double tolerance) {
  return run_check<false>(Check::kComposition, 2, dim, bound, trials, seed, head, regime, tolerance);
}

TheoremReport check_sufficient_condition_horn(std::size_t k, std::size_t dim, double bound,
                                              std::size_t trials, std::uint64_t seed,
                                              HeadConstruction head, EntityRegime regime,
                                              double tolerance) {
  return run_check<false>(Check::kHorn, k, dim, bound, trials, seed, head, regime, tolerance);
}

}  // namespace serial

bool SuiteEntry::passed() const {
  switch (role) {
    case Role::kAcceptance:
      return report.violations == 0;
    case Role::kNegativeControl:
      return report.violations > 0;
    case Role::kInformational:
      return true;
  }
  return false;
}

const char* to_string(SuiteEntry::Role role) {
  switch (role) {
    case SuiteEntry::Role::kAcceptance:
      return "acceptance";
    case SuiteEntry::Role::kNegativeControl:
      return "negative_control";
    case SuiteEntry::Role::kInformational:
      return "informational";
  }
  return "unknown";
}

std::vector<SuiteEntry> run_theorem_suite(std::span<const std::size_t> ks,
                                          std::span<const std::size_t> dims, double bound,
                                          std::size_t trials, std::uint64_t seed) {
  using Role = SuiteEntry::Role;
  std::vector<SuiteEntry> suite;
  for (const auto d : dims) {
    suite.push_back({check_sufficient_condition_composition(d, bound, trials, seed), Role::kAcceptance});
  }
  for (const auto k : ks) {
    for (const auto d : dims) {
      suite.push_back({check_sufficient_condition_horn(k, d, bound, trials, seed), Role::kAcceptance});
    }
  }
  if (!dims.empty()) {
    const auto d = dims.front();
    suite.push_back({check_sufficient_condition_composition(d, bound, trials, seed,
                                                            HeadConstruction::kViolated),
                     Role::kNegativeControl});
    for (const auto k : ks) {
      suite.push_back({check_sufficient_condition_horn(k, d, bound, trials, seed,
                                                       HeadConstruction::kViolated),
                       Role::kNegativeControl});
    }
    for (const auto k : ks) {
      suite.push_back({counterexample_search_unrestricted(k, d, bound, trials, seed), Role::kInformational});
      // Chain entities may reach modulus sqrt(2) in the full box.
      suite.push_back({check_sufficient_condition_horn(k, d, bound, trials, seed,
                                                       HeadConstruction::kSatisfied,
                                                       EntityRegime::kUnitBox),
                       Role::kInformational});
    }
  }
  return suite;
}

double gradient_check(const std::function<double(std::span<const double>)>& f,
                      std::span<const double> point, std::span<const double> analytic,
                      double step) {
  if (point.size() != analytic.size()) throw std::invalid_argument("gradient size mismatch");
  std::vector<double> x(point.begin(), point.end());
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double saved = x[i];
    x[i] = saved + step;
    const double up = f(x);
    x[i] = saved - step;
    const double down = f(x);
    x[i] = saved;
    const double numeric = (up - down) / (2.0 * step);
    if (!std::isfinite(numeric) || !std::isfinite(analytic[i])) {
      throw std::domain_error("gradient_check: non-finite value at coordinate " + std::to_string(i));
    }
    worst = std::max(worst, std::abs(analytic[i] - numeric) / std::max(1.0, std::abs(analytic[i])));
  }
  return worst;
}

const char* to_string(LossTerm term) {
  switch (term) {
    case LossTerm::kLogistic:
      return "logistic";
    case LossTerm::kRulePenalty:
      return "rule_penalty";
    case LossTerm::kN3:
      return "n3";
    case LossTerm::kTotal:
      return "total";
  }
  return "unknown";
}

namespace {

LossAndGrad evaluate_term(LossTerm term, const GradientProblem& p) {
  const auto& emb = p.point;
  // Same row set as a training step with these weights.
  const auto active_rules = p.mu > 0.0 ? std::span<const HornRule>(p.rules) : std::span<const HornRule>{};
  switch (term) {
    case LossTerm::kLogistic:
      return logistic_loss(emb, p.batch);
    case LossTerm::kRulePenalty:
      return rule_penalty(emb, p.rules);
    case LossTerm::kN3: {
      const auto rows = objective_rows(emb, p.batch, active_rules);
      return n3_regularization(emb, rows.entities, rows.relations);
    }
    case LossTerm::kTotal: {
      auto total = logistic_loss(emb, p.batch);
      const auto rp = rule_penalty(emb, p.rules);
      const auto rows = objective_rows(emb, p.batch, active_rules);
      const auto reg = n3_regularization(emb, rows.entities, rows.relations);
      total.loss += p.mu * rp.loss + p.eta * reg.loss;
      total.grad.add_scaled(rp.grad, p.mu);
      total.grad.add_scaled(reg.grad, p.eta);
      return total;
    }
  }
  throw std::invalid_argument("unknown loss term");
}

std::vector<double> flatten(const EmbeddingTable& emb) {
  std::vector<double> x;
  for (const auto* v : {&emb.entities.re(), &emb.entities.im(), &emb.relations.re(),
                        &emb.relations.im()}) {
    x.insert(x.end(), v->begin(), v->end());
  }
  return x;
}

void unflatten(std::span<const double> x, EmbeddingTable& emb) {
  auto it = x.begin();
  for (auto* v : {&emb.entities.re(), &emb.entities.im(), &emb.relations.re(), &emb.relations.im()}) {
    std::copy(it, it + static_cast<std::ptrdiff_t>(v->size()), v->begin());
    it += static_cast<std::ptrdiff_t>(v->size());
  }
}

}  // namespace

double objective_value(LossTerm term, const GradientProblem& problem) {
  return evaluate_term(term, problem).loss;
}

std::vector<double> objective_gradient(LossTerm term, const GradientProblem& problem) {
  const auto& emb = problem.point;
  const auto result = evaluate_term(term, problem);
  const std::size_t d = emb.dim();
  const std::size_t ent = emb.num_entities() * d;
  const std::size_t rel = emb.num_relations() * d;
  std::vector<double> grad(2 * ent + 2 * rel, 0.0);
  for (const auto i : result.grad.entities.touched()) {
    const auto g = result.grad.entities.row(i);
    for (std::size_t l = 0; l < d; ++l) {
      grad[i * d + l] = g.re[l];
      grad[ent + i * d + l] = g.im[l];
    }
  }
  for (const auto i : result.grad.relations.touched()) {
    const auto g = result.grad.relations.row(i);
    for (std::size_t l = 0; l < d; ++l) {
      grad[2 * ent + i * d + l] = g.re[l];
      grad[2 * ent + rel + i * d + l] = g.im[l];
    }
  }
  return grad;
}

double gradient_check(LossTerm term, const GradientProblem& problem, double step) {
  const auto analytic = objective_gradient(term, problem);
  GradientProblem probe = problem;
  auto f = [&](std::span<const double> x) {
    unflatten(x, probe.point);
    return objective_value(term, probe);
  };
  return gradient_check(f, flatten(problem.point), analytic, step);
}

double hinge_margin(const EmbeddingTable& emb, std::span<const HornRule> rules) {
  double margin = std::numeric_limits<double>::infinity();
  for (const auto& rule : rules) {
    const double bound_k = std::pow(emb.bound, static_cast<double>(rule.length()));
    const auto head = emb.relation(rule.head);
    for (std::size_t l = 0; l < emb.dim(); ++l) {
      Complex hb(1.0, 0.0);
      for (const auto r : rule.body) hb *= emb.relation(r)[l];
      margin = std::min(margin, std::abs(hb.real() / bound_k - head.re[l] / emb.bound));
    }
  }
  return margin;
}

GradientProblem random_gradient_problem(std::size_t num_entities, std::size_t num_relations,
                                        std::size_t dim, std::size_t batch_size,
                                        std::size_t num_rules, std::uint64_t seed,
                                        double kink_margin) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> entity(0, static_cast<std::uint32_t>(num_entities - 1));
  std::uniform_int_distribution<std::uint32_t> relation(0, static_cast<std::uint32_t>(num_relations - 1));
  std::uniform_int_distribution<std::size_t> length(1, 3);
  std::uniform_real_distribution<double> confidence(0.5, 1.0);
  std::bernoulli_distribution positive(0.5);

  GradientProblem p;
  p.point = init_embeddings(num_entities, num_relations, dim, 1.0, rng());
  for (std::size_t i = 0; i < batch_size; ++i) {
    p.batch.triples.push_back({EntityId{entity(rng)}, RelationId{relation(rng)}, EntityId{entity(rng)}});
    p.batch.labels.push_back(positive(rng) ? 1 : -1);
  }
  for (std::size_t i = 0; i < num_rules; ++i) {
    HornRule rule;
    const auto k = length(rng);
    for (std::size_t j = 0; j < k; ++j) rule.body.push_back(RelationId{relation(rng)});
    // k = 1 with head == body has a hinge argument of exactly 0 everywhere.
    do {
      rule.head = RelationId{relation(rng)};
    } while (k == 1 && rule.head == rule.body[0]);
    rule.confidence = confidence(rng);
    p.rules.push_back(std::move(rule));
  }

  for (int attempt = 0; hinge_margin(p.point, p.rules) < kink_margin; ++attempt) {
    if (attempt == 10000) throw std::runtime_error("could not find a point away from hinge kinks");
    const auto fresh = init_embeddings(num_entities, num_relations, dim, 1.0, rng());
    p.point.relations = fresh.relations;
  }
  return p;
}

}  // namespace hornex
