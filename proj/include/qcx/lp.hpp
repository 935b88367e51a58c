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

#ifndef QCX_LP_HPP
#define QCX_LP_HPP

#include <Eigen/Dense>

namespace qcx {

struct PhaseOneResult {
    /// A point with x >= 0 minimising the artificial residual of A x = b.
    Eigen::VectorXd x;
    /// Sum of artificial variables at the optimum; zero iff A x = b, x >= 0 is feasible.
    double objective = 0.0;
    int pivots = 0;
};

/// Dense tableau phase-one simplex for {A x = b, x >= 0}. Pivoting follows
/// Bland's rule (lowest eligible index enters, lowest basic index leaves
/// on ratio ties), so the result is deterministic and never cycles.
/// Redundant equality rows are allowed.
PhaseOneResult phase_one(const Eigen::MatrixXd& a, const Eigen::VectorXd& b);

}  // namespace qcx

#endif
