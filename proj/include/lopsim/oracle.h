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

#ifndef LOPSIM_ORACLE_H
#define LOPSIM_ORACLE_H

#include <cstddef>

#include "lopsim/fock_state.h"
#include "lopsim/mode_unitary.h"

// Boson scattering through matrix permanents. This is an evaluation path that
// shares nothing with apply_mode_unitary beyond the state container, so the
// two can check each other.

namespace lopsim::oracle {

inline constexpr int kMaxPermanentSize = 12;
inline constexpr int kMaxPhotons = 4;
inline constexpr std::size_t kMaxBasisSize = 2'000'000;

/// Ryser's formula in Gray-code order. Throws ConfigError for non-square or
/// oversized input.
Complex permanent(const ComplexMatrix &m);

/// <out| U |in> = per(U[out, in]) / sqrt(prod in_i! prod out_j!), rows and
/// columns repeated by occupancy. `u` spans the whole registry.
Complex scattering_amplitude(const ComplexMatrix &u, const Occupation &in, const Occupation &out);

/// Number of occupations of `photons` bosons over `modes` modes.
std::size_t basis_size(std::size_t modes, int photons);

/// Every occupation of `photons` photons over `modes` modes, lexicographic.
std::vector<Occupation> enumerate_basis(std::size_t modes, int photons);

/// Evolves by summing scattering amplitudes over the full output basis.
/// `u` must be expressed over the state's registry (see ModeUnitary::embedded).
FockState evolve_via_permanents(const ModeUnitary &u, const FockState &input);

}  // namespace lopsim::oracle

#endif
