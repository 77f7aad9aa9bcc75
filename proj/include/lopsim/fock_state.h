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

#ifndef LOPSIM_FOCK_STATE_H
#define LOPSIM_FOCK_STATE_H

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "lopsim/mode.h"
#include "lopsim/mode_unitary.h"

namespace lopsim {

/// Photon count per registered mode. std::vector comparison gives the
/// lexicographic basis order over the registry.
using Occupation = std::vector<std::uint8_t>;

inline constexpr double kPruneThreshold = 1e-14;
inline constexpr double kNormTolerance = 1e-12;

int total_photons(const Occupation &occ);

/// Sparse superposition over occupation vectors of a fixed photon number.
class FockState {
   public:
    using Terms = std::map<Occupation, Complex>;

    /// The zero vector with `photon_count` photons (no terms).
    FockState(RegistryPtr registry, int photon_count);

    const ModeRegistry &registry() const noexcept { return *registry_; }
    const RegistryPtr &registry_ptr() const noexcept { return registry_; }
    int photon_count() const noexcept { return photon_count_; }
    const Terms &terms() const noexcept { return terms_; }
    bool normalized() const noexcept { return normalized_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Complex amplitude(const Occupation &occ) const;
    /// Accumulates `amp` onto the occupation. Throws ConfigError if the
    /// occupation has the wrong size or photon number.
    void add(const Occupation &occ, Complex amp);

    double norm_squared() const;
    double norm() const;

    /// Drops amplitudes with magnitude below `threshold`.
    void prune(double threshold = kPruneThreshold);

    /// Unit-norm copy with the normalized flag set. Throws NormalizationError
    /// on the zero state.
    FockState normalized_copy() const;
    FockState scaled(Complex factor) const;

    /// Recomputes the flag: set iff the norm is 1 within kNormTolerance.
    void refresh_normalized_flag();

    /// Occupation with the listed photon counts and zero elsewhere.
    Occupation occupation(const std::vector<std::pair<ModeId, int>> &counts) const;

   private:
    RegistryPtr registry_;
    int photon_count_;
    Terms terms_;
    bool normalized_ = false;
};

/// Exact occupancy constraints defining a heralding event. Mode constraints
/// fix single modes; group constraints fix the total count over a set of
/// modes (e.g. "one photon somewhere in Alice's paths").
struct PostSelectionPattern {
    struct ModeCount {
        ModeId mode;
        int count;
    };
    struct GroupCount {
        std::vector<ModeId> modes;
        int count;
    };
    std::vector<ModeCount> modes;
    std::vector<GroupCount> groups;

    PostSelectionPattern &require(ModeId mode, int count);
    PostSelectionPattern &require_total(std::vector<ModeId> group, int count);
    /// Requires `count` photons in total over every registered sub-mode of the paths.
    PostSelectionPattern &require_paths(const ModeRegistry &registry, const std::vector<std::string> &paths, int count);

    bool empty() const { return modes.empty() && groups.empty(); }
};

struct Projection {
    FockState state;
    double probability;
};

/// Zero-photon state. Throws ConfigError on an empty registry.
FockState vacuum(RegistryPtr registry);

/// Adds one photon in the single-photon superposition sum_k amp_k a^dagger_k.
/// Throws ModeError for unregistered modes and NormalizationError when the
/// coefficients are not unit-norm (unless `allow_unnormalized`).
FockState create_photon(const FockState &state, const std::vector<std::pair<ModeId, Complex>> &amplitudes,
                        bool allow_unnormalized = false);

/// <left|right>. Throws ModeError on registry mismatch, ConfigError on photon
/// number mismatch.
Complex inner_product(const FockState &left, const FockState &right);

/// Linear-optical evolution: each creation operator on an acted mode maps
/// through the unitary's columns. Untouched modes pass through.
FockState apply_mode_unitary(const FockState &state, const ModeUnitary &unitary);

/// Conditions on the pattern. Returns the renormalized conditional state and
/// the probability of the event relative to the input norm; zero probability
/// yields the zero state.
Projection project(const FockState &state, const PostSelectionPattern &pattern);

/// True when the occupation satisfies every constraint of the pattern.
bool matches(const ModeRegistry &registry, const Occupation &occ, const PostSelectionPattern &pattern);

}  // namespace lopsim

#endif
