// Copyright 2026 The qcx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QCX_OPTIMIZER_HPP
#define QCX_OPTIMIZER_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "qcx/frames.hpp"
#include "qcx/representations.hpp"

namespace qcx {

struct OptimizerConfig {
    int restarts = 32;
    int max_iterations = 400;
    /// Stop a restart once the simplex spread in objective falls below this.
    double convergence = 1e-10;
    std::uint64_t seed = 1;
    /// Initial simplex edge length, in generator units (radians).
    double simplex_scale = 0.3;
    /// Worker cap for concurrent restarts. Results do not depend on it.
    int threads = 1;
    /// Start restart 1 from the eigenbasis of rho_m; otherwise it is random.
    bool spectral_start = true;

    /// Throws InvalidParameter when a field is non-positive.
    void validate() const;
};

/// Exponential of the anti-Hermitian matrix encoded by d^2 reals:
/// d diagonal phases, then (re, im) pairs of the strict upper triangle in
/// row-major order.
Operator unitary_from_params(std::span<const double> params, Dimension dim);

/// Inverse of unitary_from_params via the principal logarithm. The result
/// round-trips to U within ~1e-13.
std::vector<double> params_from_unitary(const Operator& u);

/// Frame decoded from 2 d^2 parameters (U block, then V block).
ExactFrame frame_from_params(std::span<const double> params, Dimension dim,
                             const Tolerances& tol = kDefaultTolerances);

struct FrameSearchPoint {
    std::vector<double> params;
    double objective = 0.0;
    int restart = 0;
    int iterations = 0;
};

struct RestartTrace {
    int restart = 0;
    int iterations = 0;
    double objective = 0.0;
};

struct SearchResult {
    FrameSearchPoint best;
    std::vector<RestartTrace> restarts;
};

/// What minimize_omega minimises: Omega(p, f) for the noisy magic state.
struct ObjectiveContext {
    Operator rho_m;
    OmegaScope scope = OmegaScope::state;
    Tolerances tol = kDefaultTolerances;
};

/// Omega at the decoded frame; +inf for degenerate frames.
double frame_objective(std::span<const double> params, const OperationalSet& set, OmegaScope scope,
                       const Tolerances& tol = kDefaultTolerances);

/// Starting point of restart r. Restart 0 is the computational/Fourier
/// frame, restart 1 the eigenbasis of rho_m against its Fourier rotation,
/// and later restarts are seeded Haar-random unitary pairs.
std::vector<double> restart_origin(int restart, const Operator& rho_m, std::uint64_t seed, bool spectral_start = true);

/// Downhill-simplex search over KD frames, one independent run per restart.
/// A restart stops early once its best objective is at or below the
/// classification tolerance. The best point is the minimum over
/// (objective, restart index).
SearchResult minimize_omega(double p, const ObjectiveContext& ctx, const OptimizerConfig& config);

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    int iterations = 0;
};

/// Nelder-Mead with reflection 1, expansion 2, contraction 0.5, shrink 0.5.
NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f, std::vector<double> x0,
                             double scale, int max_iterations, double convergence, double stop_below);

struct BisectionResult {
    double p = 1.0;
    /// Every predicate evaluation in call order.
    std::vector<std::pair<double, bool>> evaluations;
};

/// Smallest p in [0, 1] (to width tol) at which a monotone predicate turns
/// true. predicate(1) is evaluated first; NoThreshold if it is false.
/// Uses at most ceil(log2(1/tol)) + 1 evaluations.
BisectionResult bisect_threshold(const std::function<bool(double)>& predicate, double tol);

}  // namespace qcx

#endif
