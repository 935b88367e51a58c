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

#ifndef QCX_QUDIT_HPP
#define QCX_QUDIT_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "qcx/tolerances.hpp"

namespace qcx {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Odd prime Hilbert-space dimension. Only 3, 5 and 7 are supported.
class Dimension {
public:
    explicit Dimension(int d);

    int value() const noexcept { return d_; }
    /// exp(2 pi i / d)
    Complex omega() const;
    /// omega^k with k taken mod d.
    Complex omega_pow(long long k) const;
    /// Multiplicative inverse of 2 modulo d.
    int half() const noexcept { return (d_ + 1) / 2; }
    int mod(long long k) const noexcept;

    friend bool operator==(Dimension, Dimension) = default;

private:
    int d_;
};

enum class Role { state, unitary, effect, generic };

std::string_view to_string(Role role);
Role role_from_string(std::string_view name);

/// Returns a description of the first violated role invariant, or nothing.
std::optional<std::string> check_role(const Matrix& m, Role role, const Tolerances& tol = kDefaultTolerances);

/// A d x d complex matrix tagged with the role it plays. The role
/// invariants are checked on construction and the value is immutable.
class Operator {
public:
    Operator(Dimension dim, Matrix m, Role role = Role::generic, const Tolerances& tol = kDefaultTolerances);

    Dimension dim() const noexcept { return dim_; }
    const Matrix& matrix() const noexcept { return m_; }
    Role role() const noexcept { return role_; }

    Complex operator()(int r, int c) const { return m_(r, c); }

private:
    Dimension dim_;
    Matrix m_;
    Role role_;
};

struct WeylIndex {
    WeylIndex(Dimension dim, long long p, long long q) : p(dim.mod(p)), q(dim.mod(q)) {}
    int p;
    int q;
    friend bool operator==(const WeylIndex&, const WeylIndex&) = default;
};

/// Cyclic shift X|x> = |x+1>.
Matrix shift_matrix(Dimension dim);
/// Clock Z|x> = omega^x |x>.
Matrix clock_matrix(Dimension dim);

/// W_{p,q} = Z^p X^q.
Operator weyl_operator(Dimension dim, WeylIndex idx);

/// Discrete Fourier gate F|x> = d^{-1/2} sum_y omega^{xy} |y>.
Operator fourier_gate(Dimension dim);
/// Quadratic phase gate S|x> = omega^{x^2/2} |x>, with 1/2 taken mod d.
Operator phase_gate(Dimension dim);
/// Fourier, phase, X and Z, in that order.
std::vector<Operator> clifford_generators(Dimension dim);

/// The d(d+1) pure stabiliser states of a single qudit, as d+1 mutually
/// unbiased bases. Basis 0 is the computational basis; basis 1+a holds the
/// eigenvectors of X Z^a, ordered by eigenvalue omega^k, k = 0..d-1. The
/// first component of every ket is real and positive.
struct StabilizerStateSet {
    Dimension dim;
    /// Columns of bases[g] are the kets of group g.
    std::vector<Matrix> bases;

    std::size_t size() const noexcept { return bases.size() * static_cast<std::size_t>(dim.value()); }
    Vector ket(std::size_t k) const;
    std::vector<Operator> states() const;
};

StabilizerStateSet stabilizer_states(Dimension dim);

enum class MagicKind { strange, norrell, custom };

MagicKind magic_kind_from_string(std::string_view name);
std::string_view to_string(MagicKind kind);

/// Strange (|1>-|2>)/sqrt2 and Norrell (-|0>+2|1>-|2>)/sqrt6 exist for d = 3 only.
Operator magic_state(MagicKind kind, Dimension dim, const std::optional<Vector>& custom = std::nullopt);

Matrix projector(const Vector& ket);
Operator maximally_mixed(Dimension dim);

/// (1-p) rho + p 1/d
Operator depolarize(const Operator& rho, double p);

/// Gram-normalised Ginibre state.
Operator random_state(Dimension dim, std::uint64_t seed);
/// Haar unitary from a phase-corrected QR of a Ginibre matrix.
Operator random_unitary(Dimension dim, std::uint64_t seed);

/// Smallest eigenvalue of the Hermitian part of m.
double min_eigenvalue(const Matrix& m);
double max_abs(const Matrix& m);

}  // namespace qcx

#endif
