// Copyright 2026-present the sparse-iht authors
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

#pragma once

// Iterative hard thresholding, x^{k+1} = H_s(x^k - gamma grad f(x^k)), with a
// descent certificate evaluated at every step.
//
// For 0 < gamma <= 1/L_s each step satisfies, with y the next iterate and
// c = 1 - L_s gamma:
//
//   union:   (gamma/2) c ||grad_{I_x u I_y} f(x)||^2          <= f(x) - f(y)
//   move:    c/(6 gamma) ||y - x||^2  <= (gamma/2) c ||grad_{I_x u I_y} f(x)||^2
//   own:     (gamma/2) ||grad_{I_x} f(x)||^2                  <= f(x) - f(y)
//
// I_x and I_y are the canonical top-s sets of x and y. At gamma = 1/L_s the
// first two collapse to f(y) <= f(x); the third stays strict.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sparse_iht/core_types.hpp"
#include "sparse_iht/objective.hpp"

namespace sparse_iht {

struct IHTConfig {
    double gamma = 0.0;
    std::size_t max_iters = 1000;
    // Stop once ||x^{k+1} - x^k||_2 <= conv_tol.
    double conv_tol = 1e-10;
    // 0 picks 1 for n <= 16 and 10 otherwise.
    std::size_t record_every = 0;
    bool enforce_gamma_bound = true;
};

inline constexpr double kGammaBoundSlack = 1e-15;
inline constexpr double kCertificateViolationTol = 1e-8;

struct StepCertificate {
    double union_grad_sq = 0.0;
    double own_grad_sq = 0.0;
    double move_sq = 0.0;
    double f_before = 0.0;
    double f_after = 0.0;
    // Right-hand side minus left-hand side of each inequality above.
    double eq5_slack = 0.0;  // union
    double eq6_slack = 0.0;  // move vs union
    double eq7_slack = 0.0;  // own
    bool tie_occurred = false;

    double min_slack() const;
};

struct StepOutcome {
    DenseVector next;
    StepCertificate certificate;
};

enum class Termination { converged, max_iters, certificate_violation };

std::string_view termination_name(Termination t);

struct Trajectory {
    // Step index of each entry in `iterates`.
    std::vector<std::size_t> recorded_steps;
    std::vector<DenseVector> iterates;
    // f(x^k) for every k = 0..steps_taken.
    std::vector<double> f_values;
    // certificates[k] covers the step x^k -> x^{k+1}.
    std::vector<StepCertificate> certificates;
    Termination termination = Termination::max_iters;
    DenseVector final_point = DenseVector::zeros(1);
    std::size_t steps_taken = 0;
    std::size_t tie_events = 0;
    // k with ||x^{k+1} - x^k|| <= conv_tol, when converged.
    std::optional<std::size_t> converged_at;
    std::string violation_message;
    double gamma = 0.0;
    double lipschitz = 0.0;
    std::size_t sparsity = 0;
};

/// Resolved recording stride for a config and dimension.
std::size_t effective_record_every(const IHTConfig& cfg, std::size_t n);

/// One IHT step plus its certificate. Throws CertificateViolation when a slack
/// drops below -1e-8 while gamma <= 1/L_s.
StepOutcome iht_step(const Objective& obj, const DenseVector& x, const IHTConfig& cfg,
                     const SparsityBudget& budget, double lipschitz);

/// Iterates until the iterate change reaches conv_tol, max_iters steps have
/// been taken, or a certificate fails. x0 must satisfy ||x0||_0 <= s.
Trajectory run_iht(const Objective& obj, const DenseVector& x0, const IHTConfig& cfg,
                   const SparsityBudget& budget, const RestrictedConstants& constants);

/// ||x^{k+1} - x*|| / ||x^k - x*|| over consecutive recorded iterates, skipping
/// denominators <= 1e-14.
std::vector<double> qlinear_rate(const Trajectory& traj, const DenseVector& x_star);

/// CSV: step, x_1..x_n, f, eq5_slack, eq6_slack, eq7_slack, support. One row per
/// recorded iterate; slacks belong to the step that produced the row's iterate
/// and are empty on row 0. Support is 1-based and ';'-joined.
std::string trajectory_to_csv(const Trajectory& traj);

/// JSON mirror of the CSV rows plus run metadata.
std::string trajectory_to_json(const Trajectory& traj);

}  // namespace sparse_iht
