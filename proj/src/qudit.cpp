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

#include "qcx/qudit.hpp"

#include <cmath>
#include <numbers>

#include "qcx/error.hpp"
#include "qcx/random.hpp"

namespace qcx {

DegenerateFrame::DegenerateFrame(int i, int j, double overlap)
    : Error("degenerate frame: |<b_" + std::to_string(j) + "|a_" + std::to_string(i) +
            ">| = " + std::to_string(overlap) + " is below the overlap floor"),
      i(i),
      j(j),
      overlap(overlap) {}

Dimension::Dimension(int d) : d_(d) {
    if (d != 3 && d != 5 && d != 7) {
        throw UnsupportedDimension("dimension must be an odd prime in {3, 5, 7}, got " + std::to_string(d));
    }
}

Complex Dimension::omega() const { return omega_pow(1); }

Complex Dimension::omega_pow(long long k) const {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(mod(k)) / d_;
    return std::polar(1.0, angle);
}

int Dimension::mod(long long k) const noexcept {
    const long long r = k % d_;
    return static_cast<int>(r < 0 ? r + d_ : r);
}

std::string_view to_string(Role role) {
    switch (role) {
        case Role::state: return "state";
        case Role::unitary: return "unitary";
        case Role::effect: return "effect";
        case Role::generic: return "generic";
    }
    return "generic";
}

Role role_from_string(std::string_view name) {
    if (name == "state") return Role::state;
    if (name == "unitary") return Role::unitary;
    if (name == "effect") return Role::effect;
    if (name == "generic") return Role::generic;
    throw InvalidInput("unknown operator role '" + std::string(name) + "'");
}

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double min_eigenvalue(const Matrix& m) {
    const Matrix h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

namespace {

double max_eigenvalue(const Matrix& m) {
    const Matrix h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().maxCoeff();
}

}  // namespace

std::optional<std::string> check_role(const Matrix& m, Role role, const Tolerances& tol) {
    if (m.rows() != m.cols()) return "matrix is not square";
    const auto n = m.rows();
    switch (role) {
        case Role::generic:
            return std::nullopt;
        case Role::unitary: {
            const double r = max_abs(m.adjoint() * m - Matrix::Identity(n, n));
            if (r >= tol.construction) return "not unitary (residual " + std::to_string(r) + ")";
            return std::nullopt;
        }
        case Role::state: {
            if (max_abs(m - m.adjoint()) >= tol.construction) return "state is not Hermitian";
            if (std::abs(m.trace() - 1.0) >= tol.construction) return "state trace is not 1";
            if (min_eigenvalue(m) < -tol.validation) return "state is not positive semidefinite";
            return std::nullopt;
        }
        case Role::effect: {
            if (max_abs(m - m.adjoint()) >= tol.construction) return "effect is not Hermitian";
            if (min_eigenvalue(m) < -tol.validation || max_eigenvalue(m) > 1.0 + tol.validation) {
                return "effect eigenvalues leave [0, 1]";
            }
            return std::nullopt;
        }
    }
    return std::nullopt;
}

Operator::Operator(Dimension dim, Matrix m, Role role, const Tolerances& tol)
    : dim_(dim), m_(std::move(m)), role_(role) {
    if (m_.rows() != dim.value() || m_.cols() != dim.value()) {
        throw DimensionMismatch("operator must be " + std::to_string(dim.value()) + "x" +
                                std::to_string(dim.value()));
    }
    if (auto why = check_role(m_, role_, tol)) throw InvalidInput(*why);
}

Matrix shift_matrix(Dimension dim) {
    const int d = dim.value();
    Matrix x = Matrix::Zero(d, d);
    for (int k = 0; k < d; ++k) x(dim.mod(k + 1), k) = 1.0;
    return x;
}

Matrix clock_matrix(Dimension dim) {
    const int d = dim.value();
    Matrix z = Matrix::Zero(d, d);
    for (int k = 0; k < d; ++k) z(k, k) = dim.omega_pow(k);
    return z;
}

Operator weyl_operator(Dimension dim, WeylIndex idx) {
    // Z^p X^q |x> = omega^{p(x+q)} |x+q>
    const int d = dim.value();
    Matrix w = Matrix::Zero(d, d);
    for (int x = 0; x < d; ++x) {
        const int y = dim.mod(x + idx.q);
        w(y, x) = dim.omega_pow(static_cast<long long>(idx.p) * y);
    }
    return Operator(dim, std::move(w), Role::unitary);
}

Operator fourier_gate(Dimension dim) {
    const int d = dim.value();
    Matrix f(d, d);
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    for (int y = 0; y < d; ++y) {
        for (int x = 0; x < d; ++x) f(y, x) = norm * dim.omega_pow(static_cast<long long>(x) * y);
    }
    return Operator(dim, std::move(f), Role::unitary);
}

Operator phase_gate(Dimension dim) {
    const int d = dim.value();
    Matrix s = Matrix::Zero(d, d);
    for (int x = 0; x < d; ++x) s(x, x) = dim.omega_pow(static_cast<long long>(dim.half()) * x * x);
    return Operator(dim, std::move(s), Role::unitary);
}

std::vector<Operator> clifford_generators(Dimension dim) {
    return {fourier_gate(dim), phase_gate(dim), Operator(dim, shift_matrix(dim), Role::unitary),
            Operator(dim, clock_matrix(dim), Role::unitary)};
}

Vector StabilizerStateSet::ket(std::size_t k) const {
    const auto d = static_cast<std::size_t>(dim.value());
    return bases.at(k / d).col(static_cast<Eigen::Index>(k % d));
}

std::vector<Operator> StabilizerStateSet::states() const {
    std::vector<Operator> out;
    out.reserve(size());
    for (std::size_t k = 0; k < size(); ++k) out.emplace_back(dim, projector(ket(k)), Role::state);
    return out;
}

StabilizerStateSet stabilizer_states(Dimension dim) {
    const int d = dim.value();
    StabilizerStateSet set{dim, {}};
    set.bases.push_back(Matrix::Identity(d, d));
    // X Z^a has eigenvalues omega^k with eigenvectors
    //   c_x = omega^{-k x + a x(x-1)/2} / sqrt(d),
    // which is periodic in x because d is odd.
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    for (int a = 0; a < d; ++a) {
        Matrix basis(d, d);
        for (int k = 0; k < d; ++k) {
            for (int x = 0; x < d; ++x) {
                const long long phase = -static_cast<long long>(k) * x + static_cast<long long>(a) * x * (x - 1) / 2;
                basis(x, k) = norm * dim.omega_pow(phase);
            }
        }
        set.bases.push_back(std::move(basis));
    }
    return set;
}

MagicKind magic_kind_from_string(std::string_view name) {
    if (name == "strange") return MagicKind::strange;
    if (name == "norrell") return MagicKind::norrell;
    if (name == "custom") return MagicKind::custom;
    throw InvalidInput("unknown magic state '" + std::string(name) + "'");
}

std::string_view to_string(MagicKind kind) {
    switch (kind) {
        case MagicKind::strange: return "strange";
        case MagicKind::norrell: return "norrell";
        case MagicKind::custom: return "custom";
    }
    return "custom";
}

Matrix projector(const Vector& ket) { return ket * ket.adjoint(); }

Operator maximally_mixed(Dimension dim) {
    const int d = dim.value();
    return Operator(dim, Matrix::Identity(d, d) / static_cast<double>(d), Role::state);
}

Operator magic_state(MagicKind kind, Dimension dim, const std::optional<Vector>& custom) {
    if ((kind == MagicKind::custom) != custom.has_value()) {
        throw InvalidInput("a custom vector must be given exactly when the magic state kind is custom");
    }
    Vector v;
    switch (kind) {
        case MagicKind::strange:
            if (dim.value() != 3) throw UnsupportedDimension("the strange state is defined for d = 3 only");
            v = Vector::Zero(3);
            v(1) = 1.0;
            v(2) = -1.0;
            break;
        case MagicKind::norrell:
            if (dim.value() != 3) throw UnsupportedDimension("the Norrell state is defined for d = 3 only");
            v = Vector::Zero(3);
            v(0) = -1.0;
            v(1) = 2.0;
            v(2) = -1.0;
            break;
        case MagicKind::custom:
            v = *custom;
            if (v.size() != dim.value()) throw DimensionMismatch("custom vector length must equal d");
            if (v.norm() == 0.0 || !std::isfinite(v.norm())) throw InvalidInput("custom vector must be nonzero");
            break;
    }
    v.normalize();
    Matrix rho = projector(v);
    // Exact Hermitian symmetrisation removes rounding in the outer product.
    rho = 0.5 * (rho + rho.adjoint()).eval();
    return Operator(dim, std::move(rho), Role::state);
}

Operator depolarize(const Operator& rho, double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidParameter("noise p must lie in [0, 1], got " + std::to_string(p));
    const int d = rho.dim().value();
    Matrix out = (1.0 - p) * rho.matrix() + (p / d) * Matrix::Identity(d, d);
    return Operator(rho.dim(), std::move(out), Role::state);
}

namespace {

Matrix ginibre(int d, Sampler& rng) {
    Matrix g(d, d);
    for (int c = 0; c < d; ++c) {
        for (int r = 0; r < d; ++r) {
            const double re = rng.normal();
            const double im = rng.normal();
            g(r, c) = Complex(re, im);
        }
    }
    return g;
}

}  // namespace

Operator random_state(Dimension dim, std::uint64_t seed) {
    Sampler rng(mix_seed(seed, 0x5747));
    const Matrix g = ginibre(dim.value(), rng);
    Matrix rho = g * g.adjoint();
    rho = 0.5 * (rho + rho.adjoint()).eval();
    rho /= rho.trace().real();
    return Operator(dim, std::move(rho), Role::state);
}

Operator random_unitary(Dimension dim, std::uint64_t seed) {
    Sampler rng(mix_seed(seed, 0x4e17));
    const int d = dim.value();
    const Matrix g = ginibre(d, rng);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ() * Matrix::Identity(d, d);
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int k = 0; k < d; ++k) {
        const double mag = std::abs(r(k, k));
        if (mag > 0.0) q.col(k) *= r(k, k) / mag;
    }
    return Operator(dim, std::move(q), Role::unitary);
}

}  // namespace qcx
