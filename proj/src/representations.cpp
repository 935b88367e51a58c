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

#include "qcx/representations.hpp"

#include <algorithm>
#include <cmath>

#include "qcx/error.hpp"

namespace qcx {

std::string_view to_string(Subject subject) {
    switch (subject) {
        case Subject::state: return "state";
        case Subject::effect: return "effect";
        case Subject::channel: return "channel";
    }
    return "state";
}

Complex QuasiDistribution::sum() const {
    Complex s = 0.0;
    for (const auto& v : values) s += v;
    return s;
}

Channel::Channel(Dimension dim, std::vector<Matrix> kraus, std::string name, const Tolerances& tol)
    : Channel(dim, std::move(kraus), std::move(name), std::nullopt) {
    if (kraus_.empty()) throw InvalidInput("channel needs at least one Kraus operator");
    const int d = dim.value();
    Matrix total = Matrix::Zero(d, d);
    for (const auto& k : kraus_) {
        if (k.rows() != d || k.cols() != d) throw DimensionMismatch("Kraus operator has the wrong shape");
        total += k.adjoint() * k;
    }
    if (max_abs(total - Matrix::Identity(d, d)) > tol.validation) {
        throw InvalidInput("Kraus operators are not trace preserving");
    }
}

Channel::Channel(Dimension dim, std::vector<Matrix> kraus, std::string name, std::optional<double> depolarizing)
    : dim_(dim), kraus_(std::move(kraus)), name_(std::move(name)), depolarizing_(depolarizing) {}

Channel Channel::identity(Dimension dim) {
    return Channel(dim, {Matrix::Identity(dim.value(), dim.value())}, "identity", std::nullopt);
}

Channel Channel::unitary(const Operator& u, std::string name) {
    if (u.role() != Role::unitary) throw InvalidInput("unitary channel needs a unitary operator");
    return Channel(u.dim(), {u.matrix()}, std::move(name), std::nullopt);
}

Channel Channel::depolarizing(Dimension dim, double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidParameter("noise p must lie in [0, 1]");
    const int d = dim.value();
    const double d2 = static_cast<double>(d) * d;
    std::vector<Matrix> kraus;
    kraus.reserve(d * d);
    kraus.push_back(std::sqrt(1.0 - p + p / d2) * Matrix::Identity(d, d));
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            if (a == 0 && b == 0) continue;
            kraus.push_back(std::sqrt(p / d2) * weyl_operator(dim, WeylIndex(dim, a, b)).matrix());
        }
    }
    return Channel(dim, std::move(kraus), "depolarizing", p);
}

Matrix Channel::apply(const Matrix& x) const {
    const int d = dim_.value();
    if (depolarizing_) {
        const double p = *depolarizing_;
        return (1.0 - p) * x + (p / d) * x.trace() * Matrix::Identity(d, d);
    }
    Matrix out = Matrix::Zero(d, d);
    for (const auto& k : kraus_) out += k * x * k.adjoint();
    return out;
}

Channel compose(const Channel& second, const Channel& first) {
    if (second.dim() != first.dim()) throw DimensionMismatch("cannot compose channels of different dimension");
    std::vector<Matrix> kraus;
    kraus.reserve(second.kraus().size() * first.kraus().size());
    for (const auto& k2 : second.kraus()) {
        for (const auto& k1 : first.kraus()) kraus.push_back(k2 * k1);
    }
    return Channel(first.dim(), std::move(kraus), second.name() + "*" + first.name(), std::nullopt);
}

namespace {

void require_same_dim(const ExactFrame& frame, Dimension dim) {
    if (frame.dim != dim) throw DimensionMismatch("frame and operator dimensions differ");
}

std::vector<std::vector<int>> frame_labels(const ExactFrame& frame) {
    std::vector<std::vector<int>> out;
    out.reserve(frame.labels.size());
    for (const auto& [a, b] : frame.labels) out.push_back({a, b});
    return out;
}

// Tr(A B) without forming the product.
Complex trace_product(const Matrix& a, const Matrix& b) { return (a.transpose().cwiseProduct(b)).sum(); }

}  // namespace

QuasiDistribution represent_state(const ExactFrame& frame, const Operator& rho) {
    require_same_dim(frame, rho.dim());
    QuasiDistribution out{frame_labels(frame), {}, Subject::state, 1};
    out.values.reserve(frame.size());
    for (const auto& f : frame.analysis) out.values.push_back(trace_product(f, rho.matrix()));
    return out;
}

QuasiDistribution represent_effect(const ExactFrame& frame, const Operator& effect) {
    require_same_dim(frame, effect.dim());
    QuasiDistribution out{frame_labels(frame), {}, Subject::effect, 1};
    out.values.reserve(frame.size());
    for (const auto& g : frame.synthesis) out.values.push_back(trace_product(effect.matrix(), g));
    return out;
}

QuasiDistribution represent_channel(const ExactFrame& frame_in, const ExactFrame& frame_out, const Channel& channel) {
    if (frame_in.dim != frame_out.dim) throw DimensionMismatch("channel frames have different dimensions");
    require_same_dim(frame_in, channel.dim());
    const std::size_t n_in = frame_in.size();
    const std::size_t n_out = frame_out.size();
    QuasiDistribution out{{}, std::vector<Complex>(n_out * n_in), Subject::channel, n_in};
    out.labels.reserve(n_out * n_in);
    for (std::size_t o = 0; o < n_out; ++o) {
        for (std::size_t i = 0; i < n_in; ++i) {
            const auto& lo = frame_out.labels[o];
            const auto& li = frame_in.labels[i];
            out.labels.push_back({lo.first, lo.second, li.first, li.second});
        }
    }
    for (std::size_t i = 0; i < n_in; ++i) {
        const Matrix image = channel.apply(frame_in.synthesis[i]);
        for (std::size_t o = 0; o < n_out; ++o) out.values[o * n_in + i] = trace_product(frame_out.analysis[o], image);
    }
    return out;
}

QuasiDistribution kd_matrix(const Operator& rho, const Matrix& basis_a, const Matrix& basis_b, const Tolerances& tol) {
    const int d = rho.dim().value();
    if (basis_a.rows() != d || basis_b.rows() != d) throw DimensionMismatch("basis dimension differs from state");
    if (!is_orthonormal_basis(basis_a, tol) || !is_orthonormal_basis(basis_b, tol)) {
        throw InvalidInput("kd_matrix needs orthonormal bases");
    }
    const Matrix overlap = basis_b.adjoint() * basis_a;               // <b_j|a_i> at (j, i)
    const Matrix sandwich = basis_a.adjoint() * rho.matrix() * basis_b;  // <a_i|rho|b_j> at (i, j)
    QuasiDistribution out{{}, {}, Subject::state, 1};
    out.values.reserve(d * d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            out.labels.push_back({i, j});
            out.values.push_back(overlap(j, i) * sandwich(i, j));
        }
    }
    return out;
}

QuasiDistribution kd_sequential(const Operator& rho, std::span<const Matrix> bases, const Tolerances& tol) {
    if (bases.empty()) throw InvalidInput("kd_sequential needs at least one basis");
    const int d = rho.dim().value();
    for (const auto& b : bases) {
        if (b.rows() != d) throw DimensionMismatch("basis dimension differs from state");
        if (!is_orthonormal_basis(b, tol)) throw InvalidInput("kd_sequential needs orthonormal bases");
    }
    const std::size_t k = bases.size();
    // links[l](x, y) = <a^{(l+1)}_x | a^{(l)}_y>
    std::vector<Matrix> links;
    for (std::size_t l = 0; l + 1 < k; ++l) links.push_back(bases[l + 1].adjoint() * bases[l]);
    const Matrix sandwich = bases.front().adjoint() * rho.matrix() * bases.back();

    std::size_t total = 1;
    for (std::size_t l = 0; l < k; ++l) total *= static_cast<std::size_t>(d);
    QuasiDistribution out{{}, {}, Subject::state, 1};
    out.values.reserve(total);
    out.labels.reserve(total);
    std::vector<int> idx(k, 0);
    for (std::size_t n = 0; n < total; ++n) {
        std::size_t rem = n;
        for (std::size_t l = k; l-- > 0;) {
            idx[l] = static_cast<int>(rem % d);
            rem /= d;
        }
        Complex v = sandwich(idx.front(), idx.back());
        for (std::size_t l = 0; l + 1 < k; ++l) v *= links[l](idx[l + 1], idx[l]);
        out.labels.push_back(idx);
        out.values.push_back(v);
    }
    return out;
}

QuasiDistribution kd_povm(const Operator& rho, std::span<const Povm> povms, const Tolerances& tol) {
    if (povms.empty()) throw InvalidInput("kd_povm needs at least one POVM");
    const int d = rho.dim().value();
    for (const auto& povm : povms) {
        if (povm.empty()) throw InvalidInput("invalid POVM: no elements");
        Matrix total = Matrix::Zero(d, d);
        for (const auto& m : povm) {
            if (m.rows() != d || m.cols() != d) throw DimensionMismatch("POVM element has the wrong shape");
            if (max_abs(m - m.adjoint()) > tol.validation || min_eigenvalue(m) < -tol.validation) {
                throw InvalidInput("invalid POVM: element is not positive semidefinite");
            }
            total += m;
        }
        if (max_abs(total - Matrix::Identity(d, d)) > tol.validation) {
            throw InvalidInput("invalid POVM: elements do not sum to the identity");
        }
    }

    QuasiDistribution out{{}, {}, Subject::state, 1};
    // Depth-first accumulation of M_{i_l} ... M_{i_1} rho.
    std::vector<int> idx;
    auto recurse = [&](auto&& self, const Matrix& acc, std::size_t level) -> void {
        if (level == povms.size()) {
            out.labels.push_back(idx);
            out.values.push_back(acc.trace());
            return;
        }
        const auto& povm = povms[level];
        for (std::size_t e = 0; e < povm.size(); ++e) {
            idx.push_back(static_cast<int>(e));
            self(self, (povm[e] * acc).eval(), level + 1);
            idx.pop_back();
        }
    };
    recurse(recurse, rho.matrix(), 0);
    return out;
}

double kd_negativity(const QuasiDistribution& dist) { return -negativity_magnitude(dist); }

double negativity_magnitude(const QuasiDistribution& dist) {
    double total = 0.0;
    for (const auto& v : dist.values) total += std::abs(v);
    return total - 1.0;
}

double penalty(std::span<const Complex> values) {
    double total = 0.0;
    for (const auto& v : values) total += std::abs(v.imag()) + std::abs(std::min(0.0, v.real()));
    return total;
}

bool is_classical(std::span<const Complex> values, const Tolerances& tol) {
    return std::all_of(values.begin(), values.end(), [&](const Complex& v) {
        return std::abs(v.imag()) < tol.classification && v.real() > -tol.classification;
    });
}

OmegaScope scope_from_string(std::string_view name) {
    if (name == "state") return OmegaScope::state;
    if (name == "subtheory") return OmegaScope::subtheory;
    throw InvalidInput("scope must be 'state' or 'subtheory', got '" + std::string(name) + "'");
}

std::string_view to_string(OmegaScope scope) { return scope == OmegaScope::state ? "state" : "subtheory"; }

OperationalSet stabilizer_operational_set(Dimension dim, double p) {
    OperationalSet set{dim, {}, {}, {}, std::nullopt};
    const StabilizerStateSet stab = stabilizer_states(dim);
    set.states = stab.states();
    set.channels.push_back(Channel::identity(dim));
    set.channels.push_back(Channel::depolarizing(dim, p));
    const char* names[] = {"fourier", "phase", "shift", "clock"};
    const auto gens = clifford_generators(dim);
    for (std::size_t g = 0; g < gens.size(); ++g) set.channels.push_back(Channel::unitary(gens[g], names[g]));
    for (std::size_t k = 0; k < stab.size(); ++k) set.effects.emplace_back(dim, projector(stab.ket(k)), Role::effect);
    set.effects.emplace_back(dim, Matrix::Identity(dim.value(), dim.value()), Role::effect);
    return set;
}

OperationalSet build_operational_set(const Operator& rho_m, double p) {
    OperationalSet set = stabilizer_operational_set(rho_m.dim(), p);
    set.states.push_back(depolarize(rho_m, p));
    set.magic = set.states.size() - 1;
    return set;
}

double omega(const ExactFrame& frame, const OperationalSet& set, OmegaScope scope) {
    if (frame.dim != set.dim) throw DimensionMismatch("frame and operational set dimensions differ");
    if (scope == OmegaScope::state) {
        if (!set.magic) return 0.0;
        return penalty(represent_state(frame, set.states[*set.magic]));
    }
    double worst = 0.0;
    for (const auto& s : set.states) worst = std::max(worst, penalty(represent_state(frame, s)));
    for (const auto& e : set.effects) worst = std::max(worst, penalty(represent_effect(frame, e)));
    for (const auto& c : set.channels) worst = std::max(worst, penalty(represent_channel(frame, frame, c)));
    return worst;
}

}  // namespace qcx
