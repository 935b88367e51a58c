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

#include "qcx/frames.hpp"

#include <algorithm>
#include <cmath>

#include "qcx/error.hpp"

namespace qcx {

std::string_view to_string(FrameDescriptor::Kind kind) {
    switch (kind) {
        case FrameDescriptor::Kind::gross: return "gross";
        case FrameDescriptor::Kind::kd: return "kd";
        case FrameDescriptor::Kind::parametrized: return "parametrized";
    }
    return "kd";
}

FrameDescriptor::Kind frame_kind_from_string(std::string_view name) {
    if (name == "gross") return FrameDescriptor::Kind::gross;
    if (name == "kd") return FrameDescriptor::Kind::kd;
    if (name == "parametrized") return FrameDescriptor::Kind::parametrized;
    throw InvalidInput("unknown frame kind '" + std::string(name) + "'");
}

bool is_orthonormal_basis(const Matrix& basis, const Tolerances& tol) {
    if (basis.rows() != basis.cols()) return false;
    const auto n = basis.cols();
    return max_abs(basis.adjoint() * basis - Matrix::Identity(n, n)) < tol.validation;
}

ExactFrame kd_frame(const Matrix& basis_a, const Matrix& basis_b, const Tolerances& tol) {
    if (basis_a.rows() != basis_b.rows() || basis_a.cols() != basis_b.cols()) {
        throw DimensionMismatch("KD frame bases have different dimensions");
    }
    if (!is_orthonormal_basis(basis_a, tol) || !is_orthonormal_basis(basis_b, tol)) {
        throw InvalidInput("KD frame bases must be orthonormal");
    }
    const Dimension dim(static_cast<int>(basis_a.rows()));
    const int d = dim.value();
    // overlap(j, i) = <b_j|a_i>
    const Matrix overlap = basis_b.adjoint() * basis_a;
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            const double mag = std::abs(overlap(j, i));
            if (!(mag > tol.overlap_floor)) throw DegenerateFrame(i, j, mag);
        }
    }

    ExactFrame frame{dim, {}, {}, {}, {FrameDescriptor::Kind::kd, {}, {}}};
    frame.labels.reserve(d * d);
    frame.analysis.reserve(d * d);
    frame.synthesis.reserve(d * d);
    for (int i = 0; i < d; ++i) {
        const Vector a = basis_a.col(i);
        for (int j = 0; j < d; ++j) {
            const Vector b = basis_b.col(j);
            const Complex ov = overlap(j, i);
            frame.labels.emplace_back(i, j);
            frame.analysis.push_back(ov * (b * a.adjoint()));
            frame.synthesis.push_back((a * b.adjoint()) / ov);
        }
    }
    return frame;
}

ExactFrame canonical_mub_frame(Dimension dim) {
    const int d = dim.value();
    ExactFrame frame = kd_frame(Matrix::Identity(d, d), fourier_gate(dim).matrix());
    frame.descriptor.detail = "computational/fourier";
    return frame;
}

ExactFrame gross_wigner_frame(Dimension dim) {
    const int d = dim.value();
    // A_0 = (1/d) sum_w omega^{-pq/2} Z^p X^q. The symmetric phase makes A_0
    // the parity operator |x> -> |-x>; without it the sum is not Hermitian.
    Matrix a0 = Matrix::Zero(d, d);
    for (int p = 0; p < d; ++p) {
        for (int q = 0; q < d; ++q) {
            const Complex phase = dim.omega_pow(-static_cast<long long>(dim.half()) * p * q);
            a0 += phase * weyl_operator(dim, WeylIndex(dim, p, q)).matrix();
        }
    }
    a0 /= static_cast<double>(d);

    ExactFrame frame{dim, {}, {}, {}, {FrameDescriptor::Kind::gross, "phase-point", {}}};
    for (int p = 0; p < d; ++p) {
        for (int q = 0; q < d; ++q) {
            const Matrix w = weyl_operator(dim, WeylIndex(dim, p, q)).matrix();
            Matrix a = w * a0 * w.adjoint();
            a = 0.5 * (a + a.adjoint()).eval();
            frame.labels.emplace_back(p, q);
            frame.analysis.push_back(a / static_cast<double>(d));
            frame.synthesis.push_back(std::move(a));
        }
    }
    return frame;
}

ExactFrame frame_from_unitaries(const Operator& u, const Operator& v, const Tolerances& tol) {
    if (u.dim() != v.dim()) throw DimensionMismatch("frame unitaries have different dimensions");
    if (u.role() != Role::unitary || v.role() != Role::unitary) {
        throw InvalidInput("frame_from_unitaries expects unitary operators");
    }
    ExactFrame frame = kd_frame(u.matrix(), v.matrix(), tol);
    frame.descriptor.kind = FrameDescriptor::Kind::parametrized;
    return frame;
}

const FrameCheck& FrameValidationReport::check(std::string_view name) const {
    auto it = std::find_if(checks.begin(), checks.end(), [&](const FrameCheck& c) { return c.name == name; });
    if (it == checks.end()) throw InvalidInput("no frame check named '" + std::string(name) + "'");
    return *it;
}

FrameValidationReport validate_frame(const ExactFrame& frame, const Tolerances& tol) {
    const int d = frame.dim.value();
    const auto n = static_cast<std::size_t>(d * d);
    FrameValidationReport report;
    auto add = [&](std::string name, double residual) {
        report.checks.push_back({std::move(name), residual, tol.validation, residual < tol.validation});
    };

    const bool shapes_ok = frame.analysis.size() == n && frame.synthesis.size() == n &&
                           std::all_of(frame.analysis.begin(), frame.analysis.end(),
                                       [&](const Matrix& m) { return m.rows() == d && m.cols() == d; }) &&
                           std::all_of(frame.synthesis.begin(), frame.synthesis.end(),
                                       [&](const Matrix& m) { return m.rows() == d && m.cols() == d; });
    add("cardinality", shapes_ok ? 0.0 : 1.0);
    if (!shapes_ok) {
        for (const char* name : {"biorthogonality", "normalization", "unit_trace", "reconstruction"}) {
            report.checks.push_back({name, INFINITY, tol.validation, false});
        }
        report.pass = false;
        return report;
    }

    double bi = 0.0;
    for (std::size_t l = 0; l < n; ++l) {
        for (std::size_t m = 0; m < n; ++m) {
            const Complex t = (frame.synthesis[l] * frame.analysis[m]).trace();
            bi = std::max(bi, std::abs(t - (l == m ? 1.0 : 0.0)));
        }
    }
    add("biorthogonality", bi);

    Matrix sum_f = Matrix::Zero(d, d);
    for (const auto& f : frame.analysis) sum_f += f;
    add("normalization", max_abs(sum_f - Matrix::Identity(d, d)));

    double tr = 0.0;
    for (const auto& g : frame.synthesis) tr = std::max(tr, std::abs(g.trace() - 1.0));
    add("unit_trace", tr);

    double rec = 0.0;
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) {
            Matrix unit = Matrix::Zero(d, d);
            unit(r, c) = 1.0;
            Matrix back = Matrix::Zero(d, d);
            for (std::size_t l = 0; l < n; ++l) back += (frame.analysis[l] * unit).trace() * frame.synthesis[l];
            rec = std::max(rec, max_abs(back - unit));
        }
    }
    add("reconstruction", rec);

    report.pass = std::all_of(report.checks.begin(), report.checks.end(), [](const FrameCheck& c) { return c.pass; });
    return report;
}

}  // namespace qcx
