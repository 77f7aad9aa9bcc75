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

#ifndef LOPSIM_RANDOM_H
#define LOPSIM_RANDOM_H

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lopsim/protocol.h"

namespace lopsim {

/// Seeded draws that are reproducible across standard libraries: only the
/// raw mt19937_64 stream is used, never a std:: distribution.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniformly random pure qubit (Haar measure), returned as (alpha, beta).
    std::pair<Complex, Complex> qubit(bool real_only = false);

    protocol::ProtocolParams params(bool real_only = false);

    /// Standard normal via Box-Muller.
    double normal();

    /// Haar-random n x n unitary (QR of a complex Ginibre matrix with the
    /// phases of R's diagonal divided out).
    ComplexMatrix haar_unitary(int n);

    std::mt19937_64 &engine() { return engine_; }

   private:
    std::mt19937_64 engine_;
};

/// Random single-photon superposition over every mode of the registry.
std::vector<std::pair<ModeId, Complex>> random_photon(Rng &rng, const ModeRegistry &registry);

/// A short random sequence of mode unitaries over a small registry: in-place
/// beam splitters, rotators, mirrors and Haar-random blocks on 2-4 modes.
/// `paths` must hold at least two paths with H and V modes.
std::vector<ModeUnitary> random_element_sequence(Rng &rng, const std::vector<std::string> &paths, int length);

}  // namespace lopsim

#endif
