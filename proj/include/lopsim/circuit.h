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

#ifndef LOPSIM_CIRCUIT_H
#define LOPSIM_CIRCUIT_H

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lopsim/elements.h"
#include "lopsim/fock_state.h"

namespace lopsim {

enum class ElementKind { BeamSplitter, PolarizingBeamSplitter, PolarizationRotator, Mirror };

std::string_view to_string(ElementKind k);
ElementKind element_kind_from_string(std::string_view s);

/// One optical element together with its wiring. The unitary is derived from
/// kind, paths and parameters, so an Element is fully described by its JSON.
struct Element {
    std::string name;
    ElementKind kind;
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;
    std::optional<RotatorKind> rotator;
    std::vector<Polarization> pols{kBothPolarizations.begin(), kBothPolarizations.end()};
    ModeUnitary unitary;

    static Element make_beam_splitter(std::string name, std::string in1, std::string in2, std::string out1,
                                      std::string out2,
                                      std::span<const Polarization> pols = kBothPolarizations);
    static Element make_pbs(std::string name, std::string in, std::string out_h, std::string out_v);
    static Element make_pbs(std::string name, std::string in1, std::string in2, std::string out1,
                            std::string out2);
    static Element make_rotator(std::string name, RotatorKind kind, std::string path);
    static Element make_mirror(std::string name, std::string path,
                               std::span<const Polarization> pols = kBothPolarizations);

    /// Paths the element touches (inputs and outputs).
    std::set<std::string> paths() const;
    bool in_place() const;
};

struct Stage {
    std::string label;
    std::vector<Element> elements;
};

/// Ordered element stages over a mode registry.
///
/// Paths are live from the moment they are fed (circuit inputs, or outputs of
/// a relabeling element) until a relabeling element consumes them. Every
/// element must read only live paths and may only write paths that were never
/// used before; add_stage enforces this.
class Circuit {
   public:
    Circuit(RegistryPtr registry, std::vector<std::string> input_paths);

    void add_stage(std::string label, std::vector<Element> elements);

    const ModeRegistry &registry() const noexcept { return *registry_; }
    const RegistryPtr &registry_ptr() const noexcept { return registry_; }
    const std::vector<Stage> &stages() const noexcept { return stages_; }
    const std::vector<std::string> &input_paths() const noexcept { return input_paths_; }
    std::vector<std::string> stage_labels() const;
    bool has_stage(std::string_view label) const;
    std::size_t element_count() const;

    /// Applies stages in order, up to and including `upto_stage` when given.
    /// Throws ConfigError for an unknown label.
    FockState evolve(const FockState &input, std::optional<std::string_view> upto_stage = std::nullopt) const;

    /// Product of every stage, embedded in the full registry.
    ModeUnitary global_unitary(std::optional<std::string_view> upto_stage = std::nullopt) const;

    nlohmann::json to_json() const;
    static Circuit from_json(const nlohmann::json &doc);

   private:
    std::size_t stage_end(std::optional<std::string_view> upto_stage) const;

    RegistryPtr registry_;
    std::vector<std::string> input_paths_;
    std::vector<Stage> stages_;
    std::set<std::string> live_;
    std::set<std::string> used_;
};

inline constexpr std::string_view kCircuitSchema = "lopsim.circuit/1";

}  // namespace lopsim

#endif
