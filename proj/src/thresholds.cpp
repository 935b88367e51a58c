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

#include "qcx/thresholds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>

#include "qcx/error.hpp"
#include "qcx/lp.hpp"

namespace qcx {

std::string_view to_string(ThresholdKind kind) {
    switch (kind) {
        case ThresholdKind::wigner: return "wigner";
        case ThresholdKind::polytope: return "polytope";
        case ThresholdKind::kd: return "kd";
        case ThresholdKind::crit: return "crit";
    }
    return "wigner";
}

ThresholdKind threshold_kind_from_string(std::string_view name) {
    if (name == "wigner") return ThresholdKind::wigner;
    if (name == "polytope") return ThresholdKind::polytope;
    if (name == "kd") return ThresholdKind::kd;
    if (name == "crit") return ThresholdKind::crit;
    throw InvalidInput("method must be one of wigner, polytope, kd, crit; got '" + std::string(name) + "'");
}

std::string_view to_string(Membership m) {
    switch (m) {
        case Membership::feasible: return "feasible";
        case Membership::infeasible: return "infeasible";
        case Membership::indeterminate: return "indeterminate";
    }
    return "infeasible";
}

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

}  // namespace

MembershipResult polytope_membership(const Operator& rho, const Tolerances& tol) {
    const Dimension dim = rho.dim();
    const int d = dim.value();
    const StabilizerStateSet stab = stabilizer_states(dim);
    const auto n = static_cast<Eigen::Index>(stab.size());
    const Eigen::Index rows = 2 * d * d + 1;

    std::vector<Matrix> projectors;
    projectors.reserve(stab.size());
    for (std::size_t k = 0; k < stab.size(); ++k) projectors.push_back(projector(stab.ket(k)));

    Eigen::MatrixXd a(rows, n);
    Eigen::VectorXd b(rows);
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) {
            const Eigen::Index re = r * d + c;
            const Eigen::Index im = d * d + re;
            for (Eigen::Index k = 0; k < n; ++k) {
                a(re, k) = projectors[k](r, c).real();
                a(im, k) = projectors[k](r, c).imag();
            }
            b(re) = rho(r, c).real();
            b(im) = rho(r, c).imag();
        }
    }
    a.row(rows - 1).setOnes();
    b(rows - 1) = 1.0;

    const PhaseOneResult lp = phase_one(a, b);
    MembershipResult out;
    out.phase_one_objective = lp.objective;

    Matrix mix = Matrix::Zero(d, d);
    for (Eigen::Index k = 0; k < n; ++k) mix += lp.x(k) * projectors[k];
    const double residual = std::max(max_abs(mix - rho.matrix()), std::abs(lp.x.sum() - 1.0));

    if (residual <= tol.lp_feasible) {
        out.status = Membership::feasible;
        out.certificate = PolytopeCertificate{{lp.x.data(), lp.x.data() + lp.x.size()}, residual};
    } else if (lp.objective > tol.lp_infeasible) {
        out.status = Membership::infeasible;
    } else {
        out.status = Membership::indeterminate;
    }
    return out;
}

std::optional<PolytopeCertificate> stabilizer_polytope_membership(const Operator& rho, const Tolerances& tol) {
    return polytope_membership(rho, tol).certificate;
}

QuasiDistribution wigner_function(const Operator& rho) { return represent_state(gross_wigner_frame(rho.dim()), rho); }

ThresholdResult wigner_threshold(const Operator& rho_m, const Tolerances& tol) {
    const Dimension dim = rho_m.dim();
    const double d2 = static_cast<double>(dim.value()) * dim.value();
    const ExactFrame frame = gross_wigner_frame(dim);
    const QuasiDistribution w = represent_state(frame, rho_m);

    double w_min = std::numeric_limits<double>::infinity();
    for (const auto& v : w.values) w_min = std::min(w_min, v.real());

    ThresholdResult result;
    result.kind = ThresholdKind::wigner;
    result.upper_bound = false;
    result.tol = 0.0;
    result.related.emplace_back("w_min", w_min);
    // Entry l at noise p is (1-p) w_l + p/d^2; the most negative entry is
    // the last to cross zero.
    if (w_min >= -tol.classification) {
        result.p = 0.0;
    } else {
        const double m = d2 * std::abs(w_min);
        result.p = m / (1.0 + m);
    }

    // Grid oracle: first p on a 1e-6 grid at which every entry is >= 0.
    constexpr int kSteps = 1'000'000;
    double scanned = 1.0;
    for (int k = 0; k <= kSteps; ++k) {
        const double p = static_cast<double>(k) / kSteps;
        const bool ok = std::all_of(w.values.begin(), w.values.end(), [&](const Complex& v) {
            return (1.0 - p) * v.real() + p / d2 >= -tol.classification;
        });
        if (ok) {
            scanned = p;
            break;
        }
    }
    result.related.emplace_back("grid_scan_p", scanned);
    if (std::abs(scanned - result.p) > 1.0 / kSteps + 1e-12) {
        result.diagnostics.push_back("SCAN_MISMATCH: closed form " + fmt(result.p) + " vs grid " + fmt(scanned));
    }

    for (int k = 0; k <= 100; ++k) {
        const double p = k / 100.0;
        result.scan.emplace_back(p, penalty(represent_state(frame, depolarize(rho_m, p))));
    }

    const QuasiDistribution at = represent_state(frame, depolarize(rho_m, result.p));
    const double witness = penalty(at);
    result.frame_certificate = FrameCertificate{"gross", frame, at, witness};
    return result;
}

ThresholdResult polytope_threshold(const Operator& rho_m, double bisect_tol, const Tolerances& tol) {
    ThresholdResult result;
    result.kind = ThresholdKind::polytope;
    result.tol = bisect_tol;
    int indeterminate = 0;
    std::map<double, MembershipResult> seen;
    const auto bisection = bisect_threshold(
        [&](double p) {
            MembershipResult m = polytope_membership(depolarize(rho_m, p), tol);
            result.scan.emplace_back(p, m.phase_one_objective);
            if (m.status == Membership::indeterminate) ++indeterminate;
            const bool ok = m.status == Membership::feasible;
            seen.emplace(p, std::move(m));
            return ok;
        },
        bisect_tol);
    result.p = bisection.p;
    result.polytope_certificate = seen.at(result.p).certificate;
    if (indeterminate > 0) {
        result.diagnostics.push_back("LP_INDETERMINATE: " + std::to_string(indeterminate) +
                                     " membership decisions fell between the feasibility and infeasibility "
                                     "tolerances and were treated as infeasible");
    }

    const double p_w = wigner_threshold(rho_m, tol).p;
    result.related.emplace_back("p_wigner", p_w);
    if (p_w > result.p + 2.0 * bisect_tol) {
        result.diagnostics.push_back("CONTAINMENT_VIOLATED: p_W " + fmt(p_w) + " exceeds p_stab " + fmt(result.p));
    }
    const bool coincide = std::abs(result.p - p_w) <= 2.0 * bisect_tol;
    result.diagnostics.push_back(std::string("WIGNER_POLYTOPE_COINCIDENCE ") + (coincide ? "CONFIRMED" : "REFUTED") +
                                 ": p_stab " + fmt(result.p) + ", p_W " + fmt(p_w));
    return result;
}

MubStabilizerVerdict mub_stabilizer_verdict(Dimension dim, const Tolerances& tol) {
    const ExactFrame frame = canonical_mub_frame(dim);
    const StabilizerStateSet stab = stabilizer_states(dim);
    const auto states = stab.states();
    const auto d = static_cast<std::size_t>(dim.value());
    MubStabilizerVerdict verdict;
    for (std::size_t k = 0; k < states.size(); ++k) {
        const double w = penalty(represent_state(frame, states[k]));
        verdict.penalties.push_back(w);
        // Groups 0 (computational) and 1 (X eigenbasis = Fourier) define the frame.
        if (k < 2 * d) {
            verdict.defining_bases_max = std::max(verdict.defining_bases_max, w);
        } else if (w > tol.classification) {
            ++verdict.nonclassical_others;
        }
    }
    verdict.confirmed = verdict.defining_bases_max <= tol.classification && verdict.nonclassical_others == 0;
    return verdict;
}

namespace {

void add_mub_verdict(ThresholdResult& result, Dimension dim, const Tolerances& tol) {
    const MubStabilizerVerdict v = mub_stabilizer_verdict(dim, tol);
    const auto others = static_cast<int>(v.penalties.size()) - 2 * dim.value();
    result.diagnostics.push_back(std::string("MUB_STABILIZER_CLAIM ") + (v.confirmed ? "CONFIRMED" : "REFUTED") +
                                 ": " + std::to_string(v.nonclassical_others) + " of " + std::to_string(others) +
                                 " stabiliser states outside the defining bases are non-classical in the "
                                 "computational/Fourier frame");
}

}  // namespace

ThresholdResult kd_threshold(const Operator& rho_m, const KdThresholdOptions& options) {
    options.optimizer.validate();
    const ObjectiveContext ctx{rho_m, options.scope, options.tol};
    ThresholdResult result;
    result.kind = ThresholdKind::kd;
    result.upper_bound = true;
    result.tol = options.bisect_tol;
    result.seed = options.optimizer.seed;

    std::map<double, FrameSearchPoint> best_at;
    const auto bisection = bisect_threshold(
        [&](double p) {
            SearchResult search = minimize_omega(p, ctx, options.optimizer);
            result.scan.emplace_back(p, search.best.objective);
            const bool ok = search.best.objective <= options.tol.classification;
            best_at.emplace(p, std::move(search.best));
            return ok;
        },
        options.bisect_tol);
    result.p = bisection.p;

    const FrameSearchPoint& point = best_at.at(result.p);
    const ExactFrame frame = frame_from_params(point.params, rho_m.dim(), options.tol);
    const OperationalSet set = build_operational_set(rho_m, result.p);
    const double witness = omega(frame, set, options.scope);
    result.frame_certificate =
        FrameCertificate{"kd", frame, represent_state(frame, depolarize(rho_m, result.p)), witness};
    result.related.emplace_back("restart", point.restart);

    const double p_w = wigner_threshold(rho_m, options.tol).p;
    result.related.emplace_back("p_wigner", p_w);
    const double slack = std::max(1e-4, 2.0 * options.bisect_tol);
    if (result.p <= p_w + slack) {
        result.diagnostics.push_back("KD_ORDERING_HOLDS: p_KD " + fmt(result.p) + " <= p_W " + fmt(p_w));
    } else {
        result.diagnostics.push_back("POTENTIAL_GAP: p_KD " + fmt(result.p) + " exceeds p_W " + fmt(p_w));
    }
    add_mub_verdict(result, rho_m.dim(), options.tol);
    return result;
}

ThresholdResult crit_threshold(const Operator& rho_m, const std::vector<FrameFamily>& families,
                               const KdThresholdOptions& options) {
    if (families.empty()) throw InvalidInput("crit_threshold needs at least one frame family");
    std::optional<ThresholdResult> best;
    std::vector<std::string> notes;
    std::vector<std::pair<std::string, double>> related;
    for (const FrameFamily family : families) {
        ThresholdResult r;
        if (family == FrameFamily::gross) {
            r = wigner_threshold(rho_m, options.tol);
            related.emplace_back("p_gross", r.p);
        } else {
            try {
                r = kd_threshold(rho_m, options);
            } catch (const NoThreshold&) {
                notes.push_back("KD_FAMILY_NO_THRESHOLD: no searched KD frame is classical at p = 1");
                continue;
            }
            related.emplace_back("p_kd", r.p);
        }
        notes.insert(notes.end(), r.diagnostics.begin(), r.diagnostics.end());
        if (!best || r.p < best->p) best = std::move(r);
    }
    if (!best) throw NoThreshold("no frame family reaches a classical representation");
    ThresholdResult out = std::move(*best);
    out.kind = ThresholdKind::crit;
    out.upper_bound = true;
    out.seed = options.optimizer.seed;
    out.tol = options.bisect_tol;
    out.related = std::move(related);
    out.diagnostics = std::move(notes);
    return out;
}

}  // namespace qcx
