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
#include <array>

#include "gtest/gtest.h"

#include "oracles.hpp"
#include "qcx/error.hpp"

using namespace qcx;

namespace {

const Dimension kD3(3);

Matrix comp() { return Matrix::Identity(3, 3); }

Matrix rep_matrix(const QuasiDistribution& q) {
    const auto n = static_cast<Eigen::Index>(q.cols);
    Matrix m(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index c = 0; c < n; ++c) m(r, c) = q.at(r, c);
    }
    return m;
}

std::vector<ExactFrame> frames_d3() {
    std::vector<ExactFrame> out{gross_wigner_frame(kD3), canonical_mub_frame(kD3)};
    out.push_back(frame_from_unitaries(random_unitary(kD3, 100), random_unitary(kD3, 101)));
    return out;
}

}  // namespace

TEST(represent_state, maximally_mixed_uniform_in_both_builtins) {
    for (const auto& f : {gross_wigner_frame(kD3), canonical_mub_frame(kD3)}) {
        const auto rep = represent_state(f, maximally_mixed(kD3));
        ASSERT_EQ(rep.values.size(), 9u);
        for (const auto& v : rep.values) EXPECT_LT(std::abs(v - 1.0 / 9.0), 1e-15);
    }
}

TEST(represent_state, strange_state_negative_in_gross_frame) {
    const Operator s = magic_state(MagicKind::strange, kD3);
    const auto rep = represent_state(gross_wigner_frame(kD3), s);
    const auto oracle = oracle::wigner_values(s.matrix());
    const double oracle_min = *std::min_element(oracle.begin(), oracle.end());
    double got_min = 1.0;
    for (const auto& v : rep.values) got_min = std::min(got_min, v.real());
    EXPECT_LT(got_min, 0.0);
    EXPECT_NEAR(got_min, oracle_min, 1e-12);
    EXPECT_NEAR(oracle_min, -1.0 / 3.0, 1e-12);
}

TEST(represent_state, sums_to_one) {
    for (const auto& f : frames_d3()) {
        for (std::uint64_t s = 0; s < 5; ++s) {
            EXPECT_LT(std::abs(represent_state(f, random_state(kD3, s)).sum() - 1.0), 1e-10);
        }
    }
}

TEST(represent_state, dimension_mismatch) {
    EXPECT_THROW(represent_state(gross_wigner_frame(kD3), maximally_mixed(Dimension(5))), DimensionMismatch);
}

TEST(represent_effect, unit_and_zero_effects) {
    for (const auto& f : frames_d3()) {
        const auto one = represent_effect(f, Operator(kD3, Matrix::Identity(3, 3), Role::effect));
        for (const auto& v : one.values) EXPECT_LT(std::abs(v - 1.0), 1e-10);
        const auto zero = represent_effect(f, Operator(kD3, Matrix::Zero(3, 3), Role::effect));
        for (const auto& v : zero.values) EXPECT_EQ(v, Complex(0.0));
    }
}

TEST(represent_effect, gross_projector_is_d_times_state_values) {
    Vector e0 = Vector::Zero(3);
    e0(0) = 1.0;
    const auto g = gross_wigner_frame(kD3);
    const auto eff = represent_effect(g, Operator(kD3, projector(e0), Role::effect));
    const auto oracle = oracle::wigner_values(projector(e0));
    for (std::size_t k = 0; k < 9; ++k) EXPECT_NEAR(std::abs(eff.values[k] - 3.0 * oracle[k]), 0.0, 1e-12);
}

TEST(represent_effect, empirical_adequacy) {
    for (const auto& f : frames_d3()) {
        for (std::uint64_t s = 0; s < 100; ++s) {
            const Operator rho = random_state(kD3, 2 * s);
            const Operator e(kD3, random_state(kD3, 2 * s + 1).matrix(), Role::effect);
            const auto mu = represent_state(f, rho);
            const auto xi = represent_effect(f, e);
            Complex total = 0.0;
            for (std::size_t k = 0; k < 9; ++k) total += mu.values[k] * xi.values[k];
            EXPECT_LT(std::abs(total - (e.matrix() * rho.matrix()).trace()), 1e-10);
        }
    }
}

TEST(represent_channel, identity_is_identity_matrix) {
    for (const auto& f : frames_d3()) {
        const Matrix m = rep_matrix(represent_channel(f, f, Channel::identity(kD3)));
        EXPECT_LT(max_abs(m - Matrix::Identity(9, 9)), 1e-10);
    }
}

TEST(represent_channel, depolarizing_in_gross_frame) {
    const auto g = gross_wigner_frame(kD3);
    for (double p : {0.0, 0.25, 0.7, 1.0}) {
        // Oracle: apply the depolarising map by hand to each phase-point operator.
        Matrix expected(9, 9);
        for (int out = 0; out < 9; ++out) {
            const Matrix f_out = oracle::phase_point(3, out / 3, out % 3) / 3.0;
            for (int in = 0; in < 9; ++in) {
                const Matrix a = oracle::phase_point(3, in / 3, in % 3);
                const Matrix image = (1 - p) * a + p * a.trace() * Matrix::Identity(3, 3) / 3.0;
                expected(out, in) = (f_out * image).trace();
            }
        }
        const Matrix closed = (1 - p) * Matrix::Identity(9, 9) + (p / 9.0) * Matrix::Ones(9, 9);
        EXPECT_LT(max_abs(expected - closed), 1e-12);
        const Matrix got = rep_matrix(represent_channel(g, g, Channel::depolarizing(kD3, p)));
        EXPECT_LT(max_abs(got - expected), 1e-12) << "p=" << p;
    }
}

TEST(represent_channel, depolarizing_kraus_form_agrees_with_closed_form) {
    const Channel dep = Channel::depolarizing(kD3, 0.4);
    const Channel kraus(kD3, dep.kraus(), "kraus");
    const Matrix x = random_state(kD3, 5).matrix();
    EXPECT_LT(max_abs(dep.apply(x) - kraus.apply(x)), 1e-12);
}

TEST(represent_channel, columns_sum_to_one) {
    for (const auto& f : frames_d3()) {
        const auto rep = represent_channel(f, f, Channel::unitary(phase_gate(kD3), "phase"));
        for (std::size_t c = 0; c < 9; ++c) {
            Complex col = 0.0;
            for (std::size_t r = 0; r < 9; ++r) col += rep.at(r, c);
            EXPECT_LT(std::abs(col - 1.0), 1e-10);
        }
    }
}

TEST(represent_channel, composition_is_matrix_product) {
    const Channel a = Channel::unitary(fourier_gate(kD3), "fourier");
    const Channel b = Channel::depolarizing(kD3, 0.3);
    const Channel c = Channel::unitary(random_unitary(kD3, 9), "random");
    for (const auto& f : frames_d3()) {
        const Matrix ra = rep_matrix(represent_channel(f, f, a));
        const Matrix rb = rep_matrix(represent_channel(f, f, b));
        const Matrix rc = rep_matrix(represent_channel(f, f, c));
        EXPECT_LT(max_abs(rep_matrix(represent_channel(f, f, compose(b, a))) - rb * ra), 1e-10);
        EXPECT_LT(max_abs(rep_matrix(represent_channel(f, f, compose(c, b))) - rc * rb), 1e-10);
    }
}

TEST(channel, rejects_non_trace_preserving_kraus) {
    EXPECT_THROW(Channel(kD3, {0.9 * Matrix::Identity(3, 3)}), InvalidInput);
    EXPECT_THROW(Channel(kD3, {}), InvalidInput);
    EXPECT_THROW(Channel::depolarizing(kD3, 1.5), InvalidParameter);
}

TEST(kd_matrix, eigenstate_of_first_basis) {
    const Matrix b = oracle::dft(3);
    Vector e0 = Vector::Zero(3);
    e0(0) = 1.0;
    const auto q = kd_matrix(Operator(kD3, projector(e0), Role::state), comp(), b);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const double expected = i == 0 ? std::norm(b(0, j)) : 0.0;
            EXPECT_NEAR(std::abs(q.values[3 * i + j] - expected), 0.0, 1e-15);
        }
    }
}

TEST(kd_matrix, marginals_for_seed_11) {
    const Operator rho = random_state(kD3, 11);
    const Matrix a = random_unitary(kD3, 12).matrix();
    const Matrix b = oracle::dft(3);
    const auto q = kd_matrix(rho, a, b);
    for (int i = 0; i < 3; ++i) {
        Complex row = 0.0;
        Complex col = 0.0;
        for (int j = 0; j < 3; ++j) {
            row += q.values[3 * i + j];
            col += q.values[3 * j + i];
        }
        const Complex born_a = a.col(i).dot(rho.matrix() * a.col(i));
        const Complex born_b = b.col(i).dot(rho.matrix() * b.col(i));
        EXPECT_LT(std::abs(row - born_a), 1e-12);
        EXPECT_LT(std::abs(col - born_b), 1e-12);
    }
    EXPECT_LT(std::abs(q.sum() - 1.0), 1e-12);
}

TEST(kd_matrix, agrees_with_kd_frame_representation) {
    const Matrix a = random_unitary(kD3, 21).matrix();
    const Matrix b = random_unitary(kD3, 22).matrix();
    const ExactFrame f = kd_frame(a, b);
    for (std::uint64_t s = 0; s < 10; ++s) {
        const Operator rho = random_state(kD3, s);
        const auto q = kd_matrix(rho, a, b);
        const auto r = represent_state(f, rho);
        for (std::size_t k = 0; k < 9; ++k) EXPECT_LT(std::abs(q.values[k] - r.values[k]), 1e-12);
    }
}

TEST(kd_matrix, rejects_non_orthonormal) {
    Matrix bad = comp();
    bad(1, 1) = 3.0;
    EXPECT_THROW(kd_matrix(maximally_mixed(kD3), bad, oracle::dft(3)), InvalidInput);
}

TEST(kd_sequential, single_basis_is_born_rule) {
    const Operator rho = random_state(kD3, 4);
    const Matrix b = oracle::dft(3);
    const std::array<Matrix, 1> bases{b};
    const auto q = kd_sequential(rho, bases);
    ASSERT_EQ(q.values.size(), 3u);
    for (int i = 0; i < 3; ++i) EXPECT_LT(std::abs(q.values[i] - b.col(i).dot(rho.matrix() * b.col(i))), 1e-12);
}

TEST(kd_sequential, two_bases_match_kd_matrix) {
    const Operator rho = random_state(kD3, 8);
    const std::array<Matrix, 2> bases{comp(), oracle::dft(3)};
    const auto seq = kd_sequential(rho, bases);
    const auto mat = kd_matrix(rho, bases[0], bases[1]);
    for (std::size_t k = 0; k < 9; ++k) EXPECT_LT(std::abs(seq.values[k] - mat.values[k]), 1e-12);
}

TEST(kd_sequential, three_bases_match_projector_povms) {
    const Operator rho = magic_state(MagicKind::strange, kD3);
    const std::array<Matrix, 3> bases{comp(), oracle::dft(3), comp()};
    const auto seq = kd_sequential(rho, bases);
    std::vector<Povm> povms;
    for (const auto& b : bases) {
        Povm p;
        for (int i = 0; i < 3; ++i) p.push_back(b.col(i) * b.col(i).adjoint());
        povms.push_back(p);
    }
    const auto pv = kd_povm(rho, povms);
    ASSERT_EQ(seq.values.size(), 27u);
    ASSERT_EQ(pv.values.size(), 27u);
    for (std::size_t k = 0; k < 27; ++k) {
        EXPECT_EQ(seq.labels[k], pv.labels[k]);
        EXPECT_LT(std::abs(seq.values[k] - pv.values[k]), 1e-12);
    }
    EXPECT_LT(std::abs(seq.sum() - 1.0), 1e-12);
}

TEST(kd_sequential, empty_list_is_rejected) {
    EXPECT_THROW(kd_sequential(maximally_mixed(kD3), std::span<const Matrix>{}), InvalidInput);
}

TEST(kd_povm, trivial_povm_gives_one) {
    const std::vector<Povm> povms(3, Povm{Matrix::Identity(3, 3)});
    const auto q = kd_povm(random_state(kD3, 1), povms);
    ASSERT_EQ(q.values.size(), 1u);
    EXPECT_LT(std::abs(q.values[0] - 1.0), 1e-12);
}

TEST(kd_povm, invalid_povms_are_rejected) {
    const std::vector<Povm> not_complete{Povm{0.5 * Matrix::Identity(3, 3)}};
    EXPECT_THROW(kd_povm(maximally_mixed(kD3), not_complete), InvalidInput);
    Matrix neg = Matrix::Identity(3, 3);
    neg(0, 0) = -0.5;
    Matrix rest = Matrix::Zero(3, 3);
    rest(0, 0) = 1.5;
    const std::vector<Povm> not_positive{Povm{neg, rest}};
    EXPECT_THROW(kd_povm(maximally_mixed(kD3), not_positive), InvalidInput);
}

TEST(negativity, signed_and_magnitude) {
    QuasiDistribution uniform{{}, std::vector<Complex>(9, 1.0 / 9.0)};
    EXPECT_NEAR(kd_negativity(uniform), 0.0, 1e-15);
    QuasiDistribution q{{}, {1.1, -0.1, 0.0}};
    EXPECT_NEAR(kd_negativity(q), -0.2, 1e-15);
    EXPECT_NEAR(negativity_magnitude(q), 0.2, 1e-15);
    const auto g = represent_state(gross_wigner_frame(kD3), magic_state(MagicKind::strange, kD3));
    EXPECT_LT(kd_negativity(g), 0.0);
}

TEST(penalty, examples) {
    EXPECT_EQ(penalty(std::vector<Complex>{0.5, 0.5, 0.0, 0.0}), 0.0);
    EXPECT_NEAR(penalty(std::vector<Complex>{-0.2, 0.7, 0.5}), 0.2, 1e-15);
    EXPECT_NEAR(penalty(std::vector<Complex>{{0.1, 0.3}, -0.05, 0.0, 0.0}), 0.35, 1e-15);
}

TEST(penalty, classification_both_directions) {
    EXPECT_TRUE(is_classical(std::vector<Complex>{0.5, {0.5, 5e-13}, -5e-13}));
    EXPECT_FALSE(is_classical(std::vector<Complex>{0.5, {0.5, 2e-12}}));
    EXPECT_FALSE(is_classical(std::vector<Complex>{0.5, -2e-12}));
    EXPECT_TRUE(is_classical(std::vector<Complex>{1.0, 0.0}));
}

TEST(omega, gross_on_stabilizer_members_is_zero) {
    const auto g = gross_wigner_frame(kD3);
    for (double p : {0.0, 0.3, 1.0}) {
        EXPECT_LT(omega(g, stabilizer_operational_set(kD3, p), OmegaScope::subtheory), 1e-12);
    }
}

TEST(omega, gross_full_set_is_magic_state_penalty) {
    const auto g = gross_wigner_frame(kD3);
    const Operator s = magic_state(MagicKind::strange, kD3);
    const auto oracle = oracle::wigner_values(s.matrix());
    double neg = 0.0;
    for (double w : oracle) neg += std::max(0.0, -w);
    const double got = omega(g, build_operational_set(s, 0.0), OmegaScope::subtheory);
    EXPECT_NEAR(got, neg, 1e-12);
    EXPECT_NEAR(omega(g, build_operational_set(s, 0.0), OmegaScope::state), neg, 1e-12);
}

TEST(omega, kd_frames_at_full_noise_state_scope) {
    const Operator s = magic_state(MagicKind::strange, kD3);
    for (const auto& f : frames_d3()) EXPECT_LT(omega(f, build_operational_set(s, 1.0), OmegaScope::state), 1e-15);
}

TEST(operational_set, membership) {
    const auto set = build_operational_set(magic_state(MagicKind::norrell, kD3), 0.2);
    EXPECT_EQ(set.states.size(), 13u);
    EXPECT_EQ(set.effects.size(), 13u);
    EXPECT_EQ(set.channels.size(), 6u);
    ASSERT_TRUE(set.magic.has_value());
    EXPECT_EQ(*set.magic, 12u);
}

TEST(monotone_decay, state_scope_penalty_on_grid) {
    const Operator s = magic_state(MagicKind::strange, kD3);
    for (const auto& f : {gross_wigner_frame(kD3), canonical_mub_frame(kD3)}) {
        double prev = penalty(represent_state(f, s));
        for (int k = 1; k <= 100; ++k) {
            const double cur = penalty(represent_state(f, depolarize(s, k / 100.0)));
            EXPECT_LE(cur, prev + 1e-12) << "k=" << k;
            prev = cur;
        }
        EXPECT_LT(prev, 1e-15);
    }
}
