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

#include "sparse_iht/iht_engine.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sparse_iht/errors.hpp"
#include "sparse_iht/ht_op.hpp"
#include "sparse_iht/kernels.hpp"

namespace sparse_iht {
namespace {

double SquaredNormOn(const DenseVector& g, const SupportSet& s) {
    double acc = 0.0;
    for (std::size_t i : s.indices()) acc += g[i] * g[i];
    return acc;
}

bool WithinBound(double gamma, double lipschitz) { return gamma <= 1.0 / lipschitz + kGammaBoundSlack; }

void ValidateStepInputs(const DenseVector& x, const IHTConfig& cfg, const SparsityBudget& budget,
                        double lipschitz) {
    if (!(cfg.gamma > 0.0) || !std::isfinite(cfg.gamma)) {
        throw ConfigError("stepsize gamma must be positive, got " + std::to_string(cfg.gamma));
    }
    if (!(lipschitz > 0.0) || !std::isfinite(lipschitz)) {
        throw ConfigError("L_s must be positive, got " + std::to_string(lipschitz));
    }
    if (cfg.enforce_gamma_bound && !WithinBound(cfg.gamma, lipschitz)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "stepsize " << cfg.gamma << " exceeds 1/L_s = " << 1.0 / lipschitz;
        throw ConfigError(msg.str());
    }
    if (x.size() != budget.n()) throw DomainError("iterate dimension differs from sparsity budget");
    if (l0_norm(x) > budget.s()) {
        throw DomainError("iterate has " + std::to_string(l0_norm(x)) + " nonzeros, budget is " +
                          std::to_string(budget.s()));
    }
}

}  // namespace

double StepCertificate::min_slack() const { return std::min({eq5_slack, eq6_slack, eq7_slack}); }

std::string_view termination_name(Termination t) {
    switch (t) {
        case Termination::converged:
            return "converged";
        case Termination::max_iters:
            return "max_iters";
        case Termination::certificate_violation:
            return "certificate_violation";
    }
    return "unknown";
}

std::size_t effective_record_every(const IHTConfig& cfg, std::size_t n) {
    if (cfg.record_every > 0) return cfg.record_every;
    return n <= 16 ? 1 : 10;
}

StepOutcome iht_step(const Objective& obj, const DenseVector& x, const IHTConfig& cfg,
                     const SparsityBudget& budget, double lipschitz) {
    ValidateStepInputs(x, cfg, budget, lipschitz);
    const double gamma = cfg.gamma;

    const DenseVector grad = gradient(obj, x);
    HTResult ht = ht_gradient_map(x, grad, gamma, budget);

    const SupportSet own = canonical_top_s(x.values(), budget.s());
    const SupportSet joint = own.united(ht.chosen);

    StepCertificate c;
    c.f_before = eval(obj, x);
    c.f_after = eval(obj, ht.projected);
    c.union_grad_sq = SquaredNormOn(grad, joint);
    c.own_grad_sq = SquaredNormOn(grad, own);
    c.move_sq = kernels::squared_distance(ht.projected.values(), x.values());
    c.tie_occurred = ht.tie_occurred;

    const double decrease = c.f_before - c.f_after;
    const double contraction = 1.0 - lipschitz * gamma;
    const double union_bound = 0.5 * gamma * contraction * c.union_grad_sq;
    c.eq5_slack = decrease - union_bound;
    c.eq6_slack = union_bound - contraction / (6.0 * gamma) * c.move_sq;
    c.eq7_slack = decrease - 0.5 * gamma * c.own_grad_sq;

    if (WithinBound(gamma, lipschitz) && c.min_slack() < -kCertificateViolationTol) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "descent certificate violated: eq5=" << c.eq5_slack << " eq6=" << c.eq6_slack
            << " eq7=" << c.eq7_slack;
        throw CertificateViolation(msg.str());
    }
    return StepOutcome{std::move(ht.projected), c};
}

Trajectory run_iht(const Objective& obj, const DenseVector& x0, const IHTConfig& cfg,
                   const SparsityBudget& budget, const RestrictedConstants& constants) {
    if (x0.size() != budget.n()) throw DomainError("x0 dimension differs from sparsity budget");
    if (l0_norm(x0) > budget.s()) {
        throw DomainError("infeasible start: ||x0||_0 = " + std::to_string(l0_norm(x0)) + " > s = " +
                          std::to_string(budget.s()));
    }
    if (cfg.max_iters == 0) throw ConfigError("max_iters must be positive");
    if (!(cfg.conv_tol >= 0.0)) throw ConfigError("conv_tol must be nonnegative");
    ValidateStepInputs(x0, cfg, budget, constants.lipschitz);

    const std::size_t stride = effective_record_every(cfg, budget.n());
    Trajectory t;
    t.gamma = cfg.gamma;
    t.lipschitz = constants.lipschitz;
    t.sparsity = budget.s();
    t.recorded_steps.push_back(0);
    t.iterates.push_back(x0);
    t.f_values.push_back(eval(obj, x0));

    DenseVector x = x0;
    while (t.steps_taken < cfg.max_iters) {
        StepOutcome step{x, {}};
        try {
            step = iht_step(obj, x, cfg, budget, constants.lipschitz);
        } catch (const CertificateViolation& e) {
            t.termination = Termination::certificate_violation;
            t.violation_message = e.what();
            break;
        }
        const double change = distance(step.next, x);
        const std::size_t k = t.steps_taken;
        t.certificates.push_back(step.certificate);
        t.f_values.push_back(step.certificate.f_after);
        if (step.certificate.tie_occurred) ++t.tie_events;
        x = std::move(step.next);
        ++t.steps_taken;
        if ((k + 1) % stride == 0) {
            t.recorded_steps.push_back(k + 1);
            t.iterates.push_back(x);
        }
        if (change <= cfg.conv_tol) {
            t.termination = Termination::converged;
            t.converged_at = k;
            break;
        }
    }
    if (t.recorded_steps.back() != t.steps_taken) {
        t.recorded_steps.push_back(t.steps_taken);
        t.iterates.push_back(x);
    }
    t.final_point = x;
    return t;
}

std::vector<double> qlinear_rate(const Trajectory& traj, const DenseVector& x_star) {
    std::vector<double> ratios;
    for (std::size_t k = 0; k + 1 < traj.iterates.size(); ++k) {
        const double den = distance(traj.iterates[k], x_star);
        if (den <= 1e-14) continue;
        ratios.push_back(distance(traj.iterates[k + 1], x_star) / den);
    }
    return ratios;
}

}  // namespace sparse_iht
