// Copyright 2026 The taskdp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TASKDP_PRIVACY_HPP_
#define TASKDP_PRIVACY_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "taskdp/graph.hpp"

namespace taskdp {

struct RdpEntry {
  std::string label;
  double coefficient = 0.0;
};

// Additive ledger for mechanisms whose Renyi-DP curve is linear in the
// order: each entry contributes rho(alpha) = coefficient * alpha, and
// composition adds coefficients. Mutation is meant to happen from a single
// logical writer; queries are pure.
class RdpAccountant {
 public:
  RdpAccountant() = default;

  // Marks the ledger as produced by a zero-noise (test only) run. Such an
  // accountant records coefficients normally but carries no privacy claim.
  static RdpAccountant non_private();

  void compose(double coefficient, const std::string& label);

  double total_coefficient() const { return total_; }
  const std::vector<RdpEntry>& entries() const { return entries_; }
  bool is_non_private() const { return non_private_; }

  // One `label,coefficient` line per entry.
  void write_csv(std::ostream& out) const;

 private:
  std::vector<RdpEntry> entries_;
  double total_ = 0.0;
  bool non_private_ = false;
};

struct DpStatement {
  double epsilon = 0.0;
  double delta = 0.0;

  std::string to_string() const;  // "epsilon=<v> delta=<v>"
};

// Linear RDP coefficient of a Gaussian release:
// c = l2_sensitivity^2 / (2 * noise_variance), so the release is
// (alpha, c * alpha)-RDP for every order alpha > 1.
double gaussian_rdp_coefficient(double l2_sensitivity_sq, double noise_variance);

// Tightest (epsilon, delta) statement for a linear curve rho(alpha) =
// beta * alpha: epsilon = beta + 2 * sqrt(beta * log(1/delta)), attained
// at alpha = 1 + sqrt(log(1/delta) / beta).
DpStatement rdp_to_dp(double total_coefficient, double delta);

// Inverse of rdp_to_dp in beta: the largest linear-curve coefficient whose
// conversion stays within the target epsilon.
double budget_for_epsilon(double epsilon, double delta);

// Conservative sufficient condition: beta <= epsilon^2 / (8 log(1/delta))
// with epsilon <= log(1/delta) certifies (epsilon, delta)-DP.
bool certifies(double total_coefficient, double epsilon, double delta);

// max over users of the sum of squared incident edge weights. Edge weights
// are indexed by graph edge id; users without edges contribute 0.
double per_user_budget(const std::vector<double>& edge_weights,
                       const TaskUserGraph& graph);

struct PrivateCounts {
  std::vector<double> estimates;      // noisy per-task sizes
  double accuracy = 0.0;              // additive error bound s
  double budget_coefficient = 0.0;    // RDP coefficient paid for the release
  bool exact = false;                 // zero-noise test mode
};

// Gaussian histogram release of the per-task sizes. Each user's
// contribution is capped at `user_cap` edges (kept in ascending task
// order) before counting, which bounds the per-user L2 sensitivity^2 of
// the count vector by user_cap. The accuracy s is the union-bound radius
// noise_std * sqrt(2 * log(2m / (1 - confidence))): all estimates are
// within s of the capped counts with probability >= confidence.
PrivateCounts private_counts(const TaskUserGraph& graph, double noise_std,
                             double confidence, std::uint64_t seed,
                             int user_cap = 100);

// Zero-noise counterpart used by oracle tests and zero-noise pipelines:
// exact counts, s = 0, no budget spent.
PrivateCounts exact_counts(const TaskUserGraph& graph);

// Per-task sizes after capping each user at `user_cap` incident edges.
std::vector<double> capped_task_counts(const TaskUserGraph& graph, int user_cap);

}  // namespace taskdp

#endif  // TASKDP_PRIVACY_HPP_
