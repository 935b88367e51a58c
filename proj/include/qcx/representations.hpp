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

#ifndef QCX_REPRESENTATIONS_HPP
#define QCX_REPRESENTATIONS_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qcx/frames.hpp"
#include "qcx/qudit.hpp"

namespace qcx {

enum class Subject { state, effect, channel };

std::string_view to_string(Subject subject);

/// Complex quasiprobabilities over a labelled sample space. Channel
/// representations are stored row-major with `cols` columns: entry
/// (out, in) is Gamma(out | in).
struct QuasiDistribution {
    std::vector<std::vector<int>> labels;
    std::vector<Complex> values;
    Subject subject = Subject::state;
    std::size_t cols = 1;

    Complex sum() const;
    Complex at(std::size_t row, std::size_t col) const { return values.at(row * cols + col); }
};

/// A completely positive trace-preserving map given by Kraus operators.
/// The depolarising channel keeps its closed form for fast application.
class Channel {
public:
    /// Throws InvalidInput unless sum K^dagger K = 1 within the validation tolerance.
    Channel(Dimension dim, std::vector<Matrix> kraus, std::string name = "kraus",
            const Tolerances& tol = kDefaultTolerances);

    static Channel identity(Dimension dim);
    static Channel unitary(const Operator& u, std::string name = "unitary");
    /// (1-p) X + p Tr(X) 1/d, with Kraus form sqrt(1-p+p/d^2) 1, sqrt(p/d^2) W_w.
    static Channel depolarizing(Dimension dim, double p);

    Dimension dim() const noexcept { return dim_; }
    const std::vector<Matrix>& kraus() const noexcept { return kraus_; }
    const std::string& name() const noexcept { return name_; }

    Matrix apply(const Matrix& x) const;

    /// this after first
    friend Channel compose(const Channel& second, const Channel& first);

private:
    Channel(Dimension dim, std::vector<Matrix> kraus, std::string name, std::optional<double> depolarizing);

    Dimension dim_;
    std::vector<Matrix> kraus_;
    std::string name_;
    std::optional<double> depolarizing_;
};

Channel compose(const Channel& second, const Channel& first);

/// mu(l) = Tr(F_l rho)
QuasiDistribution represent_state(const ExactFrame& frame, const Operator& rho);
/// xi(l) = Tr(E D_l)
QuasiDistribution represent_effect(const ExactFrame& frame, const Operator& effect);
/// Gamma(l' | l) = Tr[F'_l' E(D_l)]; columns sum to one.
QuasiDistribution represent_channel(const ExactFrame& frame_in, const ExactFrame& frame_out, const Channel& channel);

/// rho_ij = <b_j|a_i><a_i|rho|b_j>
QuasiDistribution kd_matrix(const Operator& rho, const Matrix& basis_a, const Matrix& basis_b,
                            const Tolerances& tol = kDefaultTolerances);

/// Sequential KD distribution over d^k outcomes; outcome tuples are
/// enumerated with the first measurement most significant.
QuasiDistribution kd_sequential(const Operator& rho, std::span<const Matrix> bases,
                                const Tolerances& tol = kDefaultTolerances);

using Povm = std::vector<Matrix>;

/// Tr(M_{i_k} ... M_{i_1} rho)
QuasiDistribution kd_povm(const Operator& rho, std::span<const Povm> povms, const Tolerances& tol = kDefaultTolerances);

/// 1 - sum |values|; zero for classical distributions, negative otherwise.
double kd_negativity(const QuasiDistribution& dist);
/// sum |values| - 1
double negativity_magnitude(const QuasiDistribution& dist);

/// Total imaginarity plus total negativity.
double penalty(std::span<const Complex> values);
inline double penalty(const QuasiDistribution& dist) { return penalty(dist.values); }

/// True when every entry has |Im| below and Re above -classification.
bool is_classical(std::span<const Complex> values, const Tolerances& tol = kDefaultTolerances);

enum class OmegaScope { state, subtheory };

OmegaScope scope_from_string(std::string_view name);
std::string_view to_string(OmegaScope scope);

/// Tomographic collection over which the witness is maximised.
struct OperationalSet {
    Dimension dim;
    std::vector<Operator> states;
    std::vector<Channel> channels;
    std::vector<Operator> effects;
    /// Index into `states` of the depolarised magic state, if present.
    std::optional<std::size_t> magic;
};

/// Pure stabiliser states plus depolarize(rho_m, p); identity, depolarising
/// at p and the Clifford generators; all MUB projectors plus the unit effect.
OperationalSet build_operational_set(const Operator& rho_m, double p);
/// The same set without the magic state.
OperationalSet stabilizer_operational_set(Dimension dim, double p);

/// Max penalty over the members selected by `scope`. The state scope only
/// looks at the magic state (and is zero when the set has none).
double omega(const ExactFrame& frame, const OperationalSet& set, OmegaScope scope);

}  // namespace qcx

#endif
