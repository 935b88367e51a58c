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

#ifndef QCX_TOLERANCES_HPP
#define QCX_TOLERANCES_HPP

namespace qcx {

/// Every numerical tolerance used by the library lives here.
struct Tolerances {
    /// Residual allowed on freshly constructed objects (unitarity, trace).
    double construction = 1e-12;
    /// Residual allowed when validating frames, states and POVMs.
    double validation = 1e-10;
    /// Eigenvalue slack when deciding that an operator is positive.
    double positivity = 1e-9;
    /// A penalty at or below this value counts as "real and non-negative".
    double classification = 1e-12;
    /// Smallest |<b_j|a_i>| accepted when building a KD frame.
    double overlap_floor = 1e-8;
    /// Polytope certificates must reconstruct the state to this residual.
    double lp_feasible = 1e-8;
    /// Phase-one objective above this value proves infeasibility.
    double lp_infeasible = 1e-7;
};

inline constexpr Tolerances kDefaultTolerances{};

}  // namespace qcx

#endif
