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

#include "qcx/lp.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "qcx/error.hpp"

namespace qcx {

namespace {

constexpr double kPivotEps = 1e-12;
constexpr double kCostEps = 1e-13;

}  // namespace

PhaseOneResult phase_one(const Eigen::MatrixXd& a, const Eigen::VectorXd& b) {
    const auto m = a.rows();
    const auto n = a.cols();
    if (b.size() != m) throw InvalidInput("phase_one: right-hand side has the wrong length");

    // Columns: n structural, m artificial, then the right-hand side.
    const auto rhs = n + m;
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m + 1, n + m + 1);
    for (Eigen::Index r = 0; r < m; ++r) {
        const double sign = b(r) < 0.0 ? -1.0 : 1.0;
        t.row(r).head(n) = sign * a.row(r);
        t(r, n + r) = 1.0;
        t(r, rhs) = sign * b(r);
    }
    // Reduced costs for minimising the artificial sum with artificials basic.
    for (Eigen::Index r = 0; r < m; ++r) {
        t.row(m).head(n) -= t.row(r).head(n);
        t(m, rhs) -= t(r, rhs);
    }
    std::vector<Eigen::Index> basis(m);
    for (Eigen::Index r = 0; r < m; ++r) basis[r] = n + r;

    PhaseOneResult result;
    const int max_pivots = 50 * static_cast<int>(n + m) + 1000;
    while (result.pivots < max_pivots) {
        Eigen::Index enter = -1;
        for (Eigen::Index c = 0; c < n + m; ++c) {
            if (t(m, c) < -kCostEps) {
                enter = c;
                break;
            }
        }
        if (enter < 0) break;

        Eigen::Index leave = -1;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (Eigen::Index r = 0; r < m; ++r) {
            if (t(r, enter) <= kPivotEps) continue;
            const double ratio = t(r, rhs) / t(r, enter);
            if (ratio < best_ratio - 1e-15 ||
                (std::abs(ratio - best_ratio) <= 1e-15 && leave >= 0 && basis[r] < basis[leave])) {
                best_ratio = ratio;
                leave = r;
            }
        }
        if (leave < 0) break;  // unbounded direction; cannot happen for phase one

        t.row(leave) /= t(leave, enter);
        for (Eigen::Index r = 0; r <= m; ++r) {
            if (r == leave) continue;
            const double factor = t(r, enter);
            if (factor != 0.0) t.row(r) -= factor * t.row(leave);
        }
        basis[leave] = enter;
        ++result.pivots;
    }

    result.x = Eigen::VectorXd::Zero(n);
    double artificial = 0.0;
    for (Eigen::Index r = 0; r < m; ++r) {
        const double value = std::max(0.0, t(r, rhs));
        if (basis[r] < n) {
            result.x(basis[r]) = value;
        } else {
            artificial += value;
        }
    }
    result.objective = artificial;
    return result;
}

}  // namespace qcx
