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

#include "lopsim/protocol.h"

#include <cmath>

#include "lopsim/errors.h"

namespace lopsim::protocol {

namespace {

using P = Polarization;

const std::vector<std::string> kAlicePaths{"psi0", "psi1", "psi2", "psi3", "psi4"};
const std::vector<std::string> kSharedPaths{"A0", "A1", "A2", "D3", "D4"};
const std::vector<std::string> kBobSwapPaths{"phi0", "phi1", "phi2", "phi3", "phi4"};
const std::vector<std::string> kBobDetectorPaths{"D5", "D6", "D7", "D8"};

std::string path_name(AlicePath p) { return std::string(to_string(p)); }
std::string path_name(BobPath p) { return std::string(to_string(p)); }
std::string path_name(Detector d) { return std::string(to_string(d)); }

std::vector<std::string> all_paths(Scope scope) {
    std::vector<std::string> paths = kAlicePaths;
    paths.insert(paths.end(), kSharedPaths.begin(), kSharedPaths.end());
    paths.insert(paths.end(), kBobSwapPaths.begin(), kBobSwapPaths.end());
    if (scope == Scope::Transfer) paths.insert(paths.end(), kBobDetectorPaths.begin(), kBobDetectorPaths.end());
    return paths;
}

// Transfer and swap circuits are immutable; build each once.
const Circuit &cached_circuit(Scope scope) {
    static const Circuit swap = build_protocol_circuit(Scope::Swap);
    static const Circuit transfer = build_protocol_circuit(Scope::Transfer);
    return scope == Scope::Swap ? swap : transfer;
}

QubitModes polarization_qubit(const std::string &path) { return {{path, P::H}, {path, P::V}}; }

void check_qubit(Complex h, Complex v, double tolerance, const char *name) {
    const double n = std::norm(h) + std::norm(v);
    if (std::abs(n - 1.0) > tolerance) {
        throw NormalizationError(std::string(name) + " amplitudes have norm^2 " + std::to_string(n));
    }
}

}  // namespace

std::string_view to_string(HeraldCase h) { return h == HeraldCase::D3 ? "D3" : "D4"; }
std::string_view to_string(AlicePath p) { return p == AlicePath::Psi3 ? "psi3" : "psi4"; }
std::string_view to_string(BobPath p) { return p == BobPath::Phi3 ? "phi3" : "phi4"; }

std::string_view to_string(Detector d) {
    switch (d) {
        case Detector::D5:
            return "D5";
        case Detector::D6:
            return "D6";
        case Detector::D7:
            return "D7";
        case Detector::D8:
            return "D8";
    }
    return "?";
}

std::string_view to_string(Correction c) { return c == Correction::Identity ? "identity" : "sigma_z"; }

std::string_view to_string(Region r) {
    switch (r) {
        case Region::Alice:
            return "alice";
        case Region::Shared:
            return "shared";
        case Region::Bob:
            return "bob";
    }
    return "?";
}

void ProtocolParams::validate(double tolerance) const {
    check_qubit(a, b, tolerance, "photon 1 (a, b)");
    check_qubit(c, d, tolerance, "photon 3 (c, d)");
    check_qubit(chi2_h, chi2_v, tolerance, "photon 2 (chi2)");
}

Region region_of(std::string_view path) {
    if (path.starts_with("psi")) return Region::Alice;
    if (path.starts_with("phi")) return Region::Bob;
    if (path.starts_with("A") || path == "D3" || path == "D4") return Region::Shared;
    if (path == "D5" || path == "D6" || path == "D7" || path == "D8") return Region::Bob;
    throw ConfigError("path '" + std::string(path) + "' belongs to no region");
}

std::vector<std::string> region_paths(Scope scope, Region region) {
    std::vector<std::string> out;
    for (const auto &p : all_paths(scope)) {
        if (region_of(p) == region) out.push_back(p);
    }
    return out;
}

Circuit build_protocol_circuit(Scope scope) {
    auto registry = make_registry(ModeRegistry::from_paths(all_paths(scope)));
    Circuit c(registry, {"psi0", "A0", "phi0"});
    c.add_stage(std::string(kStagePbs), {
                                            Element::make_pbs("PBS1", "psi0", "psi1", "psi2"),
                                            Element::make_pbs("PBS2", "A0", "A1", "A2"),
                                            Element::make_pbs("PBS3", "phi0", "phi1", "phi2"),
                                        });
    // On BS1/BS2 the output that stays inside the photon's own interferometer
    // is the reflected port.
    c.add_stage(std::string(kStageCentral), {
                                                Element::make_mirror("M1", "psi1"),
                                                Element::make_beam_splitter("BS1", "psi2", "A2", "A2", "psi2"),
                                                Element::make_beam_splitter("BS2", "A1", "phi1", "phi1", "A1"),
                                                Element::make_mirror("M2", "phi2"),
                                            });
    c.add_stage(std::string(kStagePr1), {Element::make_rotator("PR1", RotatorKind::Flip, "A2")});
    c.add_stage(std::string(kStageBs4), {Element::make_beam_splitter("BS4", "A1", "A2", "D3", "D4")});
    c.add_stage(std::string(kStageBs3), {Element::make_beam_splitter("BS3", "psi1", "psi2", "psi3", "psi4")});
    c.add_stage(std::string(kStageBs5), {Element::make_beam_splitter("BS5", "phi1", "phi2", "phi3", "phi4")});
    if (scope == Scope::Transfer) {
        c.add_stage(std::string(kStageRotators), {
                                                     Element::make_rotator("PR2", RotatorKind::Hadamard, "phi3"),
                                                     Element::make_rotator("PR3", RotatorKind::Hadamard, "phi4"),
                                                 });
        c.add_stage(std::string(kStageAnalyzers), {
                                                      Element::make_pbs("PBS4", "phi3", "D5", "D6"),
                                                      Element::make_pbs("PBS5", "phi4", "D7", "D8"),
                                                  });
    }
    return c;
}

FockState prepare_input(const ProtocolParams &params, const RegistryPtr &registry) {
    params.validate();
    FockState s = vacuum(registry);
    s = create_photon(s, {{{"psi0", P::H}, params.a}, {{"psi0", P::V}, params.b}});
    s = create_photon(s, {{{"A0", P::H}, params.chi2_h}, {{"A0", P::V}, params.chi2_v}});
    s = create_photon(s, {{{"phi0", P::H}, params.c}, {{"phi0", P::V}, params.d}});
    return s;
}

PostSelectionPattern coincidence_pattern(const ModeRegistry &registry, Scope scope, std::optional<HeraldCase> herald) {
    PostSelectionPattern pattern;
    for (auto r : {Region::Alice, Region::Shared, Region::Bob}) {
        pattern.require_paths(registry, region_paths(scope, r), 1);
    }
    if (herald) pattern.require_paths(registry, {std::string(to_string(*herald))}, 1);
    return pattern;
}

HeraldedState herald_state(const ProtocolParams &params, HeraldCase herald) {
    const auto &circuit = cached_circuit(Scope::Swap);
    const auto evolved = circuit.evolve(prepare_input(params, circuit.registry_ptr()), kStageBs4);
    auto [state, p] = project(evolved, coincidence_pattern(circuit.registry(), Scope::Swap, herald));
    return {std::move(state), p};
}

HeraldBreakdown herald_breakdown(const ProtocolParams &params) {
    const auto &circuit = cached_circuit(Scope::Swap);
    const auto &reg = circuit.registry();
    const auto evolved = circuit.evolve(prepare_input(params, circuit.registry_ptr()));
    const auto d3 = coincidence_pattern(reg, Scope::Swap, HeraldCase::D3);
    const auto d4 = coincidence_pattern(reg, Scope::Swap, HeraldCase::D4);
    HeraldBreakdown out{0.0, 0.0, 0.0};
    for (const auto &[occ, amp] : evolved.terms()) {
        const double w = std::norm(amp);
        if (matches(reg, occ, d3)) {
            out.d3 += w;
        } else if (matches(reg, occ, d4)) {
            out.d4 += w;
        } else {
            out.discarded += w;
        }
    }
    return out;
}

SwapResult run_swapping(const ProtocolParams &params, HeraldCase herald) {
    const auto &circuit = cached_circuit(Scope::Swap);
    const auto &reg = circuit.registry();
    const auto evolved = circuit.evolve(prepare_input(params, circuit.registry_ptr()));
    const auto heralded = project(evolved, coincidence_pattern(reg, Scope::Swap, herald));

    SwapResult result{herald, heralded.probability, {}};
    for (const auto &pattern : kPathPatterns) {
        SwapOutcome outcome{pattern, TwoQubitState{}, 0.0, swap_correction_qubit(pattern).has_value()};
        if (heralded.probability > 0.0) {
            PostSelectionPattern paths;
            paths.require_paths(reg, {path_name(pattern.alice)}, 1);
            paths.require_paths(reg, {path_name(pattern.bob)}, 1);
            auto [cond, p] = project(heralded.state, paths);
            outcome.probability = p;
            if (p > 0.0) {
                auto two = reduce_to_two_qubits(cond, polarization_qubit(path_name(pattern.alice)),
                                                polarization_qubit(path_name(pattern.bob)));
                if (!two) throw EncodingError("swap outcome is not a pure polarization state");
                outcome.state = *two;
            }
        }
        result.outcomes.push_back(outcome);
    }
    return result;
}

std::optional<int> swap_correction_qubit(const PathPattern &pattern) {
    if (pattern.alice == AlicePath::Psi4 && pattern.bob == BobPath::Phi3) return 0;
    if (pattern.alice == AlicePath::Psi3 && pattern.bob == BobPath::Phi4) return 1;
    return std::nullopt;
}

TwoQubitState apply_swap_correction(const SwapOutcome &outcome) {
    if (auto q = swap_correction_qubit(outcome.pattern)) return apply_sigma_z(outcome.state, *q);
    return outcome.state;
}

Correction transfer_correction(Detector detector, AlicePath alice_path) {
    const bool sigma_on_psi3 = detector == Detector::D5 || detector == Detector::D8;
    const bool on_psi3 = alice_path == AlicePath::Psi3;
    return sigma_on_psi3 == on_psi3 ? Correction::SigmaZ : Correction::Identity;
}

TransferResult run_state_transfer(const ProtocolParams &params) {
    const auto &circuit = cached_circuit(Scope::Transfer);
    const auto &reg = circuit.registry();
    const auto evolved = circuit.evolve(prepare_input(params, circuit.registry_ptr()));
    const auto accepted = project(evolved, coincidence_pattern(reg, Scope::Transfer, HeraldCase::D3));

    TransferResult result{{}, accepted.probability, std::abs(params.a - params.b) <= 1e-9,
                          accepted.probability > 0.0 ? accepted.state.scaled(std::sqrt(accepted.probability))
                                                     : accepted.state};
    const QubitState target = QubitState{{params.c, params.d}}.normalized();
    for (auto det : {Detector::D5, Detector::D6, Detector::D7, Detector::D8}) {
        for (auto path : {AlicePath::Psi3, AlicePath::Psi4}) {
            TransferBranch b{det, path, QubitState{}, transfer_correction(det, path), QubitState{}, 0.0, 0.0};
            if (accepted.probability > 0.0) {
                PostSelectionPattern branch;
                branch.require_paths(reg, {path_name(det)}, 1);
                branch.require_paths(reg, {path_name(path)}, 1);
                auto [cond, p] = project(accepted.state, branch);
                b.probability = p * accepted.probability;
                if (p > 0.0) {
                    auto reduced = reduce_to_qubits(cond, {polarization_qubit(path_name(path))});
                    if (!reduced.pure) throw EncodingError("Alice's conditional state is not pure");
                    b.alice_state_before = QubitState{{(*reduced.pure)(0), (*reduced.pure)(1)}};
                    b.alice_state_after = b.correction == Correction::SigmaZ ? apply_sigma_z(b.alice_state_before)
                                                                             : b.alice_state_before;
                    b.fidelity_to_target = fidelity(b.alice_state_after, target);
                }
            }
            result.branches.push_back(b);
        }
    }
    return result;
}

ComplexVector alice_conditional_state(const TransferResult &result, Detector detector) {
    const auto &reg = result.accepted_state.registry();
    PostSelectionPattern pattern;
    pattern.require_paths(reg, {path_name(detector)}, 1);
    auto [cond, p] = project(result.accepted_state, pattern);
    ComplexVector v = ComplexVector::Zero(4);
    if (p == 0.0) return v;
    const std::array<std::size_t, 4> idx{reg.index_of("psi3", P::H), reg.index_of("psi3", P::V),
                                         reg.index_of("psi4", P::H), reg.index_of("psi4", P::V)};
    for (const auto &[occ, amp] : cond.terms()) {
        for (std::size_t k = 0; k < idx.size(); ++k) {
            if (occ[idx[k]] == 1) v(static_cast<Eigen::Index>(k)) += amp;
        }
    }
    return v.normalized();
}

}  // namespace lopsim::protocol
