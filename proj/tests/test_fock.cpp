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

#include "lopsim/errors.h"
#include "lopsim/fock_state.h"
#include "lopsim/random.h"

using namespace lopsim;
using P = Polarization;

namespace {

RegistryPtr two_paths() { return make_registry(ModeRegistry::from_paths({"x", "y"})); }

}  // namespace

TEST(fock_state, vacuum_has_unit_norm) {
    const auto v = vacuum(two_paths());
    EXPECT_EQ(v.photon_count(), 0);
    EXPECT_EQ(v.terms().size(), 1u);
    EXPECT_DOUBLE_EQ(v.norm(), 1.0);
    EXPECT_TRUE(v.normalized());
}

TEST(fock_state, vacuum_rejects_empty_registry) {
    EXPECT_THROW(vacuum(make_registry(ModeRegistry{})), ConfigError);
}

TEST(fock_state, registry_order_is_path_major) {
    const auto reg = two_paths();
    EXPECT_EQ(reg->index_of("x", P::H), 0u);
    EXPECT_EQ(reg->index_of("x", P::V), 1u);
    EXPECT_EQ(reg->index_of("y", P::H), 2u);
    EXPECT_EQ(reg->index_of("y", P::V), 3u);
    EXPECT_THROW(reg->index_of("z", P::H), ModeError);
    EXPECT_THROW(ModeRegistry({{"x", P::H}, {"x", P::H}}), ConfigError);
}

TEST(fock_state, create_photon_superposition) {
    const auto reg = two_paths();
    const double r = 1.0 / std::numbers::sqrt2;
    const auto s = create_photon(vacuum(reg), {{{"x", P::H}, r}, {{"y", P::V}, Complex(0, r)}});
    EXPECT_EQ(s.photon_count(), 1);
    EXPECT_NEAR(std::abs(s.amplitude({1, 0, 0, 0}) - r), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(s.amplitude({0, 0, 0, 1}) - Complex(0, r)), 0.0, 1e-15);
    EXPECT_NEAR(s.norm(), 1.0, 1e-15);
}

TEST(fock_state, create_photon_bosonic_factor) {
    const auto reg = two_paths();
    auto s = create_photon(vacuum(reg), {{{"x", P::H}, 1.0}});
    s = create_photon(s, {{{"x", P::H}, 1.0}});
    EXPECT_NEAR(s.amplitude({2, 0, 0, 0}).real(), std::numbers::sqrt2, 1e-15);
}

TEST(fock_state, create_photon_errors) {
    const auto reg = two_paths();
    EXPECT_THROW(create_photon(vacuum(reg), {{{"z", P::H}, 1.0}}), ModeError);
    EXPECT_THROW(create_photon(vacuum(reg), {{{"x", P::H}, 0.5}}), NormalizationError);
    EXPECT_NO_THROW(create_photon(vacuum(reg), {{{"x", P::H}, 0.5}}, true));
}

TEST(fock_state, inner_product) {
    const auto reg = two_paths();
    const double r = 1.0 / std::numbers::sqrt2;
    const auto a = create_photon(vacuum(reg), {{{"x", P::H}, r}, {{"x", P::V}, r}});
    const auto b = create_photon(vacuum(reg), {{{"x", P::H}, r}, {{"x", P::V}, -r}});
    EXPECT_NEAR(std::abs(inner_product(a, a) - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(inner_product(a, b)), 0.0, 1e-15);
    const auto two = create_photon(a, {{{"y", P::H}, 1.0}});
    EXPECT_THROW(inner_product(a, two), ConfigError);
    const auto other = create_photon(vacuum(make_registry(ModeRegistry::from_paths({"q"}))), {{{"q", P::H}, 1.0}});
    EXPECT_THROW(inner_product(a, other), ModeError);
}

TEST(fock_state, add_validates_occupation) {
    FockState s(two_paths(), 1);
    EXPECT_THROW(s.add({1, 0, 0}, 1.0), ConfigError);
    EXPECT_THROW(s.add({1, 1, 0, 0}, 1.0), ConfigError);
    s.add({1, 0, 0, 0}, 0.5);
    s.add({1, 0, 0, 0}, 0.5);
    EXPECT_DOUBLE_EQ(s.amplitude({1, 0, 0, 0}).real(), 1.0);
}

TEST(fock_state, normalized_copy_and_zero_state) {
    FockState s(two_paths(), 1);
    EXPECT_THROW(s.normalized_copy(), NormalizationError);
    s.add({0, 1, 0, 0}, 3.0);
    s.add({0, 0, 1, 0}, 4.0);
    const auto n = s.normalized_copy();
    EXPECT_TRUE(n.normalized());
    EXPECT_NEAR(n.amplitude({0, 0, 1, 0}).real(), 0.8, 1e-15);
}

TEST(fock_state, prune_drops_small_terms) {
    FockState s(two_paths(), 1);
    s.add({1, 0, 0, 0}, 1.0);
    s.add({0, 1, 0, 0}, 1e-16);
    s.prune();
    EXPECT_EQ(s.terms().size(), 1u);
}

TEST(fock_state, projection_probability_and_state) {
    const auto reg = two_paths();
    const auto s = create_photon(vacuum(reg), {{{"x", P::H}, 0.6}, {{"y", P::V}, 0.8}});
    PostSelectionPattern pat;
    pat.require({"y", P::V}, 1);
    const auto pr = project(s, pat);
    EXPECT_NEAR(pr.probability, 0.64, 1e-15);
    EXPECT_NEAR(pr.state.amplitude({0, 0, 0, 1}).real(), 1.0, 1e-15);
    PostSelectionPattern none;
    none.require({"y", P::H}, 1);
    const auto z = project(s, none);
    EXPECT_EQ(z.probability, 0.0);
    EXPECT_TRUE(z.state.is_zero());
}

TEST(fock_state, group_constraints) {
    const auto reg = two_paths();
    auto s = create_photon(vacuum(reg), {{{"x", P::H}, 0.6}, {{"x", P::V}, 0.8}});
    s = create_photon(s, {{{"x", P::H}, 0.6}, {{"y", P::V}, 0.8}});
    PostSelectionPattern pat;
    pat.require_paths(*reg, {"y"}, 1);
    // Terms: |xH xH> 0.36 sqrt2, |xH yV> 0.48, |xH xV> 0.48, |xV yV> 0.64.
    const double total = 2 * 0.36 * 0.36 + 0.48 * 0.48 + 0.48 * 0.48 + 0.64 * 0.64;
    EXPECT_NEAR(s.norm_squared(), total, 1e-14);
    EXPECT_NEAR(project(s, pat).probability, (0.48 * 0.48 + 0.64 * 0.64) / total, 1e-14);
    EXPECT_TRUE(matches(*reg, {1, 0, 0, 1}, pat));
    EXPECT_FALSE(matches(*reg, {2, 0, 0, 0}, pat));
}

TEST(fock_state, projection_rejects_unknown_mode) {
    const auto s = create_photon(vacuum(two_paths()), {{{"x", P::H}, 1.0}});
    PostSelectionPattern pat;
    pat.require({"z", P::H}, 1);
    EXPECT_THROW(project(s, pat), ModeError);
}

TEST(fock_state, random_unitaries_preserve_norm_and_photon_number) {
    Rng rng(41);
    const auto reg = make_registry(ModeRegistry::from_paths({"x", "y", "z"}));
    for (int trial = 0; trial < 20; ++trial) {
        FockState s = vacuum(reg);
        for (int k = 0; k <= trial % 3; ++k) s = create_photon(s, random_photon(rng, *reg));
        const auto out = apply_mode_unitary(s, ModeUnitary(reg->modes(), rng.haar_unitary(6)));
        EXPECT_NEAR(out.norm(), s.norm(), 1e-12);
        for (const auto &[occ, a] : out.terms()) EXPECT_EQ(total_photons(occ), s.photon_count());
    }
}

TEST(fock_state, exhaustive_patterns_sum_to_one) {
    Rng rng(43);
    const auto reg = make_registry(ModeRegistry::from_paths({"x", "y"}));
    FockState s = vacuum(reg);
    for (int k = 0; k < 2; ++k) s = create_photon(s, random_photon(rng, *reg));
    s = apply_mode_unitary(s, ModeUnitary(reg->modes(), rng.haar_unitary(4))).normalized_copy();
    // every split of the two photons between {x H} and the rest
    double total = 0.0;
    for (int n = 0; n <= 2; ++n) {
        PostSelectionPattern pat;
        pat.require({"x", P::H}, n);
        total += project(s, pat).probability;
    }
    EXPECT_NEAR(total, 1.0, 1e-10);
}
