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

#ifndef QCX_THRESHOLDS_HPP
#define QCX_THRESHOLDS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcx/frames.hpp"
#include "qcx/optimizer.hpp"
#include "qcx/representations.hpp"

namespace qcx {

enum class ThresholdKind { wigner, polytope, kd, crit };

std::string_view to_string(ThresholdKind kind);
ThresholdKind threshold_kind_from_string(std::string_view name);

struct PolytopeCertificate {
    /// One weight per stabiliser state, in StabilizerStateSet order.
    std::vector<double> coefficients;
    double residual = 0.0;
};

enum class Membership { feasible, infeasible, indeterminate };

std::string_view to_string(Membership m);

struct MembershipResult {
    Membership status = Membership::infeasible;
    double phase_one_objective = 0.0;
    /// Present exactly when status is feasible.
    std::optional<PolytopeCertificate> certificate;
};

/// Decides whether rho is a convex mixture of pure stabiliser states by
/// phase-one simplex over the 2 d^2 + 1 real equalities. Feasible needs a
/// reconstruction residual within lp_feasible; infeasible needs the
/// phase-one objective above lp_infeasible; anything between is
/// indeterminate.
MembershipResult polytope_membership(const Operator& rho, const Tolerances& tol = kDefaultTolerances);

/// Certificate when feasible, nothing otherwise.
std::optional<PolytopeCertificate> stabilizer_polytope_membership(const Operator& rho,
                                                                  const Tolerances& tol = kDefaultTolerances);

/// Frame and representation that witness classicality at the reported p.
struct FrameCertificate {
    std::string family;
    ExactFrame frame;
    QuasiDistribution representation;
    double witness = 0.0;
};

struct ThresholdResult {
    ThresholdKind kind = ThresholdKind::wigner;
    double p = 0.0;
    /// True when the value only bounds the true threshold from above.
    bool upper_bound = false;
    double tol = 0.0;
    std::uint64_t seed = 0;
    std::optional<FrameCertificate> frame_certificate;
    std::optional<PolytopeCertificate> polytope_certificate;
    /// (p, witness) pairs visited while locating the threshold.
    std::vector<std::pair<double, double>> scan;
    /// Verdicts and warnings, e.g. "POTENTIAL_GAP: ...".
    std::vector<std::string> diagnostics;
    /// Named auxiliary values (p_W next to p_stab, and so on).
    std::vector<std::pair<std::string, double>> related;
};

/// Gross-Wigner values of rho.
QuasiDistribution wigner_function(const Operator& rho);

/// Closed-form Wigner threshold d^2|w| / (1 + d^2|w|) for the most negative
/// phase-point value w, cross-checked against a scan with step 1e-6.
ThresholdResult wigner_threshold(const Operator& rho_m, const Tolerances& tol = kDefaultTolerances);

/// Bisection on polytope membership along the depolarising line.
ThresholdResult polytope_threshold(const Operator& rho_m, double bisect_tol = 1e-6,
                                   const Tolerances& tol = kDefaultTolerances);

struct KdThresholdOptions {
    OmegaScope scope = OmegaScope::state;
    double bisect_tol = 1e-6;
    OptimizerConfig optimizer;
    Tolerances tol = kDefaultTolerances;
};

/// Bisection on [min over searched KD frames of Omega <= classification].
/// Always an upper bound. Adds an ordering verdict against p_W and the
/// MUB stabiliser-state verdict. Throws NoThreshold when the predicate
/// fails at p = 1.
ThresholdResult kd_threshold(const Operator& rho_m, const KdThresholdOptions& options = {});

enum class FrameFamily { gross, kd };

/// Minimum over the requested families.
ThresholdResult crit_threshold(const Operator& rho_m, const std::vector<FrameFamily>& families,
                               const KdThresholdOptions& options = {});

struct MubStabilizerVerdict {
    /// Penalty of each stabiliser state's KD distribution in the
    /// computational/Fourier frame, in StabilizerStateSet order.
    std::vector<double> penalties;
    /// Largest penalty among states of the two frame-defining bases.
    double defining_bases_max = 0.0;
    /// Number of states outside the defining bases with non-zero penalty.
    int nonclassical_others = 0;
    /// True when every stabiliser state is classical in the frame.
    bool confirmed = false;
};

MubStabilizerVerdict mub_stabilizer_verdict(Dimension dim, const Tolerances& tol = kDefaultTolerances);

}  // namespace qcx

#endif
