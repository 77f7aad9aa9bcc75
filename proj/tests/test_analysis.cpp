// Copyright 2026 The lopsim Authors
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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include <unsupported/Eigen/KroneckerProduct>

#include "lopsim/analysis.h"
#include "lopsim/errors.h"
#include "lopsim/random.h"

using namespace lopsim;
using P = Polarization;

namespace {

TwoQubitState state(Complex hh, Complex hv, Complex vh, Complex vv) {
    TwoQubitState s;
    s[kHH] = hh;
    s[kHV] = hv;
    s[kVH] = vh;
    s[kVV] = vv;
    return s;
}

/// 2|ad - bc| for a pure two-qubit state.
double pure_concurrence(const TwoQubitState &s) { return 2.0 * std::abs(s[kHH] * s[kVV] - s[kHV] * s[kVH]); }

}  // namespace

TEST(analysis, bell_and_product_concurrence) {
    const double r = 1.0 / std::numbers::sqrt2;
    EXPECT_NEAR(concurrence(state(r, 0, 0, r)), 1.0, 1e-12);
    EXPECT_NEAR(concurrence(state(1, 0, 0, 0)), 0.0, 1e-12);
    EXPECT_NEAR(concurrence(state(0.5, 0.5, 0.5, 0.5)), 0.0, 1e-12);
}

TEST(analysis, concurrence_matches_closed_form) {
    Rng rng(17);
    for (int i = 0; i < 50; ++i) {
        TwoQubitState s;
        for (auto &a : s.amp) a = {rng.normal(), rng.normal()};
        s = s.normalized();
        EXPECT_NEAR(concurrence(s), pure_concurrence(s), 1e-10);
        // the mixed-state route takes square roots of eigenvalues that are zero up to rounding
        EXPECT_NEAR(concurrence(DensityMatrix::from_pure(to_vector(s))), pure_concurrence(s), 1e-7);
    }
}

TEST(analysis, werner_state_concurrence) {
    // p |Phi+><Phi+| + (1-p) I/4 has concurrence max(0, (3p - 1)/2).
    const double r = 1.0 / std::numbers::sqrt2;
    ComplexVector bell(4);
    bell << r, 0, 0, r;
    for (double p : {0.2, 0.5, 0.9}) {
        ComplexMatrix rho = p * bell * bell.adjoint() + (1 - p) / 4.0 * ComplexMatrix::Identity(4, 4);
        EXPECT_NEAR(concurrence(DensityMatrix(rho)), std::max(0.0, (3 * p - 1) / 2), 1e-10);
    }
}

TEST(analysis, concurrence_rejects_unnormalized) {
    EXPECT_THROW(concurrence(state(1, 0, 0, 1)), NormalizationError);
}

TEST(analysis, density_matrix_validation) {
    EXPECT_THROW(DensityMatrix(ComplexMatrix::Identity(2, 2)), NormalizationError);
    ComplexMatrix neg(2, 2);
    neg << 1.5, 0, 0, -0.5;
    EXPECT_THROW(DensityMatrix{neg}, NormalizationError);
    ComplexMatrix nonherm(2, 2);
    nonherm << 0.5, 0.3, 0.1, 0.5;
    EXPECT_THROW(DensityMatrix{nonherm}, NormalizationError);
}

TEST(analysis, partial_trace_of_bell_state_is_mixed) {
    const double r = 1.0 / std::numbers::sqrt2;
    const auto rho = DensityMatrix::from_pure(to_vector(state(r, 0, 0, r)));
    const auto a = partial_trace(rho, 0, 2);
    EXPECT_NEAR(a.purity(), 0.5, 1e-12);
    EXPECT_NEAR(std::abs(a.matrix()(0, 1)), 0.0, 1e-15);
}

TEST(analysis, partial_trace_of_product_state) {
    const auto rho = DensityMatrix::from_pure(to_vector(state(0.48, 0.64, 0.36, 0.48)));  // (0.8,0.6)x(0.6,0.8)
    const auto b = partial_trace(rho, 1, 2);
    EXPECT_NEAR(b.matrix()(0, 0).real(), 0.36, 1e-12);
    EXPECT_NEAR(partial_trace(rho, 0, 2).matrix()(0, 0).real(), 0.64, 1e-12);
    EXPECT_NEAR(b.purity(), 1.0, 1e-12);
}

TEST(analysis, schmidt_coefficients) {
    const auto s = schmidt_coefficients(state(0.8, 0, 0, -0.6));
    EXPECT_NEAR(s[0], 0.8, 1e-12);
    EXPECT_NEAR(s[1], 0.6, 1e-12);
}

TEST(analysis, fidelity_is_phase_insensitive) {
    const auto x = state(0.6, 0, 0, 0.8);
    TwoQubitState y = x;
    for (auto &a : y.amp) a *= std::polar(1.0, 0.7);
    EXPECT_NEAR(fidelity(x, y), 1.0, 1e-14);
    EXPECT_NEAR(fidelity(x, state(0.8, 0, 0, -0.6)), 0.0, 1e-14);
    EXPECT_THROW(fidelity(x, state(1, 0, 0, 1)), NormalizationError);
}

TEST(analysis, sigma_z) {
    const auto s = apply_sigma_z(state(0.5, 0.5, 0.5, 0.5), 0);
    EXPECT_EQ(s[kVH].real(), -0.5);
    EXPECT_EQ(s[kHV].real(), 0.5);
    const auto t = apply_sigma_z(state(0.5, 0.5, 0.5, 0.5), 1);
    EXPECT_EQ(t[kHV].real(), -0.5);
    EXPECT_EQ(t[kVV].real(), -0.5);
    EXPECT_EQ(t[kVH].real(), 0.5);
}

TEST(analysis, reduce_pure_encoded_state) {
    auto reg = make_registry(ModeRegistry::from_paths({"x", "y", "z"}));
    auto s = create_photon(vacuum(reg), {{{"x", P::H}, 0.6}, {{"x", P::V}, 0.8}});
    s = create_photon(s, {{{"y", P::V}, 1.0}});
    s = create_photon(s, {{{"z", P::H}, 1.0}});
    const auto two = reduce_to_two_qubits(s, {{"x", P::H}, {"x", P::V}}, {{"y", P::H}, {"y", P::V}});
    ASSERT_TRUE(two.has_value());
    EXPECT_NEAR(fidelity(*two, state(0, 0.6, 0, 0.8)), 1.0, 1e-12);
}

TEST(analysis, reduce_traces_out_entangled_environment) {
    auto reg = make_registry(ModeRegistry::from_paths({"x", "e"}));
    const double r = 1.0 / std::numbers::sqrt2;
    FockState s(reg, 2);
    s.add(s.occupation({{{"x", P::H}, 1}, {{"e", P::H}, 1}}), r);
    s.add(s.occupation({{{"x", P::V}, 1}, {{"e", P::V}, 1}}), r);
    const auto red = reduce_to_qubits(s, {{{"x", P::H}, {"x", P::V}}});
    EXPECT_FALSE(red.pure.has_value());
    EXPECT_NEAR(red.rho.purity(), 0.5, 1e-12);
    EXPECT_NEAR(red.encoded_weight, 1.0, 1e-12);
}

TEST(analysis, reduce_reports_partial_encoding) {
    auto reg = make_registry(ModeRegistry::from_paths({"x", "w"}));
    auto s = create_photon(vacuum(reg), {{{"x", P::H}, 0.6}, {{"w", P::H}, 0.8}});
    const auto red = reduce_to_qubits(s, {{{"x", P::H}, {"x", P::V}}});
    EXPECT_NEAR(red.encoded_weight, 0.36, 1e-12);
    const auto off = create_photon(vacuum(reg), {{{"w", P::V}, 1.0}});
    EXPECT_THROW(reduce_to_qubits(off, {{{"x", P::H}, {"x", P::V}}}), EncodingError);
}

TEST(analysis, concurrence_invariant_under_local_unitaries) {
    Rng rng(73);
    for (int i = 0; i < 20; ++i) {
        TwoQubitState s;
        for (auto &a : s.amp) a = {rng.normal(), rng.normal()};
        s = s.normalized();
        const ComplexMatrix local = Eigen::kroneckerProduct(rng.haar_unitary(2), rng.haar_unitary(2)).eval();
        const auto t = two_qubit_from_vector(local * to_vector(s));
        EXPECT_NEAR(concurrence(t), concurrence(s), 1e-10);
    }
}

TEST(analysis, fidelity_symmetric) {
    Rng rng(79);
    TwoQubitState x, y;
    for (auto &a : x.amp) a = {rng.normal(), rng.normal()};
    for (auto &a : y.amp) a = {rng.normal(), rng.normal()};
    x = x.normalized();
    y = y.normalized();
    EXPECT_NEAR(fidelity(x, y), fidelity(y, x), 1e-15);
    EXPECT_NEAR(fidelity(x, x), 1.0, 1e-14);
}

TEST(analysis, reduce_then_reembed_round_trip) {
    auto reg = make_registry(ModeRegistry::from_paths({"x", "y"}));
    Rng rng(83);
    FockState s(reg, 2);
    const ModeId q0[2] = {{"x", P::H}, {"x", P::V}};
    const ModeId q1[2] = {{"y", P::H}, {"y", P::V}};
    TwoQubitState want;
    for (auto &a : want.amp) a = {rng.normal(), rng.normal()};
    want = want.normalized();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) s.add(s.occupation({{q0[i], 1}, {q1[j], 1}}), want[static_cast<std::size_t>(2 * i + j)]);
    const auto got = reduce_to_two_qubits(s, {q0[0], q0[1]}, {q1[0], q1[1]});
    ASSERT_TRUE(got.has_value());
    FockState back(reg, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) back.add(back.occupation({{q0[i], 1}, {q1[j], 1}}), (*got)[static_cast<std::size_t>(2 * i + j)]);
    for (const auto &[occ, a] : s.terms()) EXPECT_NEAR(std::abs(a - back.amplitude(occ)), 0.0, 1e-12);
}
