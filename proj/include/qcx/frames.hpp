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

#ifndef QCX_FRAMES_HPP
#define QCX_FRAMES_HPP

#include <string>
#include <utility>
#include <vector>

#include "qcx/qudit.hpp"

namespace qcx {

/// Where a frame came from.
struct FrameDescriptor {
    enum class Kind { gross, kd, parametrized };
    Kind kind = Kind::kd;
    /// Free-form note, e.g. "computational/fourier".
    std::string detail;
    /// Generator coefficients for parametrized frames (U block then V block).
    std::vector<double> params;
};

std::string_view to_string(FrameDescriptor::Kind kind);
FrameDescriptor::Kind frame_kind_from_string(std::string_view name);

/// An exact (non-overcomplete) frame on the d^2-dimensional operator space.
/// Analysis operators F give state representations Tr(F rho); synthesis
/// operators D give effect representations Tr(E D). Conventions:
/// sum F = 1 and Tr D = 1.
struct ExactFrame {
    Dimension dim;
    /// labels[k] is the pair naming sample point k: (i, j) for KD frames,
    /// (p, q) for the phase-space frame.
    std::vector<std::pair<int, int>> labels;
    std::vector<Matrix> analysis;
    std::vector<Matrix> synthesis;
    FrameDescriptor descriptor;

    std::size_t size() const noexcept { return analysis.size(); }
};

/// Columns must be orthonormal to the validation tolerance.
bool is_orthonormal_basis(const Matrix& basis, const Tolerances& tol = kDefaultTolerances);

/// KD frame of two orthonormal bases (given as matrix columns):
///   F_(i,j) = |b_j><b_j|a_i><a_i|,  D_(i,j) = |a_i><b_j| / <b_j|a_i>.
/// Throws DegenerateFrame if some |<b_j|a_i>| is at or below the overlap floor.
ExactFrame kd_frame(const Matrix& basis_a, const Matrix& basis_b, const Tolerances& tol = kDefaultTolerances);

/// Computational basis against the Fourier basis.
ExactFrame canonical_mub_frame(Dimension dim);

/// Phase-point frame: A_(p,q) = W A_0 W^dagger with A_0 the parity
/// operator, F = A/d and D = A.
ExactFrame gross_wigner_frame(Dimension dim);

/// KD frame of the columns of U against the columns of V.
ExactFrame frame_from_unitaries(const Operator& u, const Operator& v, const Tolerances& tol = kDefaultTolerances);

struct FrameCheck {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct FrameValidationReport {
    std::vector<FrameCheck> checks;
    bool pass = false;

    const FrameCheck& check(std::string_view name) const;
};

/// Evaluates cardinality, biorthogonality, sum F = 1, Tr D = 1 and
/// reconstruction on the d^2 matrix units. Never throws for bad frames;
/// failures show up in the report.
FrameValidationReport validate_frame(const ExactFrame& frame, const Tolerances& tol = kDefaultTolerances);

}  // namespace qcx

#endif
