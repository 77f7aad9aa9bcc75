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

#ifndef LOPSIM_PROTOCOL_H
#define LOPSIM_PROTOCOL_H

#include <array>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lopsim/analysis.h"
#include "lopsim/circuit.h"
#include "lopsim/fock_state.h"

// The three-interferometer experiment. Photon 1 enters Alice's interferometer
// on path psi0, photon 2 the shared one on A0, photon 3 Bob's on phi0.
//
// Mode map (every path carries an H and a V mode):
//   Alice:  psi0 -PBS1-> psi1 (H), psi2 (V); psi1 -M1; psi2 meets A2 on BS1;
//           psi1, psi2 -BS3-> psi3, psi4
//   shared: A0 -PBS2-> A1 (H), A2 (V); A2 meets psi2 on BS1, A1 meets phi1
//           on BS2; PR1 flips A2; A1, A2 -BS4-> D3, D4
//   Bob:    phi0 -PBS3-> phi1 (H), phi2 (V); phi1 meets A1 on BS2; phi2 -M2;
//           phi1, phi2 -BS5-> phi3, phi4; for state transfer PR2/PR3
//           (Hadamard) on phi3/phi4, then PBS4: phi3 -> D5 (H), D6 (V) and
//           PBS5: phi4 -> D7 (H), D8 (V)
//
// On BS1 and BS2 a photon that stays inside its own interferometer is the
// reflected one. D3 is the BS4 port that projects onto (i A1 + A2)/sqrt(2).

namespace lopsim::protocol {

inline constexpr std::string_view kStagePbs = "PBS1+PBS2+PBS3";
inline constexpr std::string_view kStageCentral = "M1+BS1+BS2+M2";
inline constexpr std::string_view kStagePr1 = "PR1";
inline constexpr std::string_view kStageBs4 = "BS4";
inline constexpr std::string_view kStageBs3 = "BS3";
inline constexpr std::string_view kStageBs5 = "BS5";
inline constexpr std::string_view kStageRotators = "PR2+PR3";
inline constexpr std::string_view kStageAnalyzers = "PBS4+PBS5";

/// The success probability quoted for the state-transfer protocol.
inline constexpr double kQuotedTransferSuccess = 1.0 / 8.0;

enum class Scope { Swap, Transfer };
enum class Region { Alice, Shared, Bob };
enum class HeraldCase { D3, D4 };
enum class AlicePath { Psi3, Psi4 };
enum class BobPath { Phi3, Phi4 };
enum class Detector { D5, D6, D7, D8 };
enum class Correction { Identity, SigmaZ };

std::string_view to_string(HeraldCase h);
std::string_view to_string(AlicePath p);
std::string_view to_string(BobPath p);
std::string_view to_string(Detector d);
std::string_view to_string(Correction c);
std::string_view to_string(Region r);

struct ProtocolParams {
    Complex a{1.0 / std::numbers::sqrt2, 0.0};
    Complex b{1.0 / std::numbers::sqrt2, 0.0};
    Complex c{1.0 / std::numbers::sqrt2, 0.0};
    Complex d{1.0 / std::numbers::sqrt2, 0.0};
    Complex chi2_h{1.0 / std::numbers::sqrt2, 0.0};
    Complex chi2_v{1.0 / std::numbers::sqrt2, 0.0};

    /// Throws NormalizationError when any of the three polarization qubits
    /// deviates from unit norm by more than `tolerance`.
    void validate(double tolerance = kNormTolerance) const;
};

Region region_of(std::string_view path);
std::vector<std::string> region_paths(Scope scope, Region region);

Circuit build_protocol_circuit(Scope scope);

/// Three-photon product input on psi0, A0, phi0.
FockState prepare_input(const ProtocolParams &params, const RegistryPtr &registry);

/// One photon in every region. Adds the herald detector constraint when given.
PostSelectionPattern coincidence_pattern(const ModeRegistry &registry, Scope scope,
                                         std::optional<HeraldCase> herald = std::nullopt);

struct HeraldedState {
    FockState state;  ///< normalized state right after BS4, conditioned on the herald
    double probability;
};

/// Evolves through BS4 and conditions on the herald plus one photon in each
/// of Alice's and Bob's regions.
HeraldedState herald_state(const ProtocolParams &params, HeraldCase herald);

struct HeraldBreakdown {
    double d3;         ///< D3 fired with one photon in each of Alice's and Bob's regions
    double d4;         ///< same with D4
    double discarded;  ///< every other detection event
};

/// Splits the full output distribution into the two herald events and the rest.
HeraldBreakdown herald_breakdown(const ProtocolParams &params);

struct PathPattern {
    AlicePath alice;
    BobPath bob;
    auto operator<=>(const PathPattern &) const = default;
};

inline constexpr std::array<PathPattern, 4> kPathPatterns{{
    {AlicePath::Psi3, BobPath::Phi3},
    {AlicePath::Psi3, BobPath::Phi4},
    {AlicePath::Psi4, BobPath::Phi3},
    {AlicePath::Psi4, BobPath::Phi4},
}};

struct SwapOutcome {
    PathPattern pattern;
    TwoQubitState state;  ///< photon 1 polarization first; normalized
    double probability;   ///< conditional on the herald
    bool correction_needed;
};

struct SwapResult {
    HeraldCase herald;
    double herald_probability;  ///< herald and one photon per region
    std::vector<SwapOutcome> outcomes;
};

SwapResult run_swapping(const ProtocolParams &params, HeraldCase herald);

/// Sigma-z feed-forward on the mixed path patterns: on photon 1 for
/// (psi4, phi3), on photon 3 for (psi3, phi4). Other patterns pass through.
TwoQubitState apply_swap_correction(const SwapOutcome &outcome);

/// Which qubit apply_swap_correction rotates, or nullopt.
std::optional<int> swap_correction_qubit(const PathPattern &pattern);

Correction transfer_correction(Detector detector, AlicePath alice_path);

struct TransferBranch {
    Detector detector;
    AlicePath alice_path;
    QubitState alice_state_before;  ///< normalized; zero if probability is 0
    Correction correction;
    QubitState alice_state_after;
    double fidelity_to_target;
    double probability;  ///< absolute probability of the branch
};

struct TransferResult {
    std::vector<TransferBranch> branches;
    double total_success_probability;
    bool equal_alice_amplitudes;  ///< false when |a| != |b| (warned, not fatal)
    FockState accepted_state;     ///< unnormalized accepted component after the analyzers
};

TransferResult run_state_transfer(const ProtocolParams &params);

/// Alice's conditional state for one detector, over both paths, as a
/// normalized 4-vector over {psi3 H, psi3 V, psi4 H, psi4 V}.
ComplexVector alice_conditional_state(const TransferResult &result, Detector detector);

}  // namespace lopsim::protocol

#endif
