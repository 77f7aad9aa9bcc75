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

#include "lopsim/circuit.h"

#include <algorithm>

#include "lopsim/errors.h"

namespace lopsim {

using nlohmann::json;

std::string_view to_string(ElementKind k) {
    switch (k) {
        case ElementKind::BeamSplitter:
            return "beam_splitter";
        case ElementKind::PolarizingBeamSplitter:
            return "polarizing_beam_splitter";
        case ElementKind::PolarizationRotator:
            return "polarization_rotator";
        case ElementKind::Mirror:
            return "mirror";
    }
    return "unknown";
}

ElementKind element_kind_from_string(std::string_view s) {
    for (auto k : {ElementKind::BeamSplitter, ElementKind::PolarizingBeamSplitter, ElementKind::PolarizationRotator,
                   ElementKind::Mirror}) {
        if (to_string(k) == s) return k;
    }
    throw ConfigError("unknown element kind '" + std::string(s) + "'");
}

Element Element::make_beam_splitter(std::string name, std::string in1, std::string in2, std::string out1,
                                    std::string out2, std::span<const Polarization> pols) {
    auto u = beam_splitter(in1, in2, out1, out2, pols);
    return Element{std::move(name),
                   ElementKind::BeamSplitter,
                   {std::move(in1), std::move(in2)},
                   {std::move(out1), std::move(out2)},
                   std::nullopt,
                   {pols.begin(), pols.end()},
                   std::move(u)};
}

Element Element::make_pbs(std::string name, std::string in, std::string out_h, std::string out_v) {
    auto u = polarizing_beam_splitter(in, out_h, out_v);
    return Element{std::move(name), ElementKind::PolarizingBeamSplitter, {std::move(in)},
                   {std::move(out_h), std::move(out_v)}, std::nullopt,
                   {kBothPolarizations.begin(), kBothPolarizations.end()}, std::move(u)};
}

Element Element::make_pbs(std::string name, std::string in1, std::string in2, std::string out1, std::string out2) {
    auto u = polarizing_beam_splitter(in1, in2, out1, out2);
    return Element{std::move(name), ElementKind::PolarizingBeamSplitter, {std::move(in1), std::move(in2)},
                   {std::move(out1), std::move(out2)}, std::nullopt,
                   {kBothPolarizations.begin(), kBothPolarizations.end()}, std::move(u)};
}

Element Element::make_rotator(std::string name, RotatorKind kind, std::string path) {
    auto u = polarization_rotator(kind, path);
    return Element{std::move(name), ElementKind::PolarizationRotator, {path}, {path}, kind,
                   {kBothPolarizations.begin(), kBothPolarizations.end()}, std::move(u)};
}

Element Element::make_mirror(std::string name, std::string path, std::span<const Polarization> pols) {
    auto u = mirror(path, pols);
    return Element{std::move(name), ElementKind::Mirror, {path}, {path}, std::nullopt, {pols.begin(), pols.end()},
                   std::move(u)};
}

std::set<std::string> Element::paths() const {
    std::set<std::string> out(inputs.begin(), inputs.end());
    out.insert(outputs.begin(), outputs.end());
    return out;
}

bool Element::in_place() const {
    return std::set<std::string>(inputs.begin(), inputs.end()) == std::set<std::string>(outputs.begin(), outputs.end());
}

Circuit::Circuit(RegistryPtr registry, std::vector<std::string> input_paths)
    : registry_(std::move(registry)), input_paths_(std::move(input_paths)) {
    if (!registry_ || registry_->empty()) throw ConfigError("circuit: empty registry");
    for (const auto &p : input_paths_) {
        if (registry_->path_indices(p).empty()) throw ModeError("circuit input path '" + p + "' is not registered");
        live_.insert(p);
        used_.insert(p);
    }
}

void Circuit::add_stage(std::string label, std::vector<Element> elements) {
    if (has_stage(label)) throw ConfigError("duplicate stage label '" + label + "'");
    auto live = live_;
    auto used = used_;
    for (const auto &e : elements) {
        for (const auto &m : e.unitary.modes()) registry_->index_of(m);
        for (const auto &in : e.inputs) {
            if (!live.contains(in)) {
                throw ConfigError("element " + e.name + " reads path '" + in + "' before it is fed or after it is consumed");
            }
        }
        if (e.in_place()) continue;
        for (const auto &out : e.outputs) {
            if (used.contains(out)) throw ConfigError("element " + e.name + " writes already used path '" + out + "'");
        }
        for (const auto &in : e.inputs) live.erase(in);
        for (const auto &out : e.outputs) {
            live.insert(out);
            used.insert(out);
        }
    }
    live_ = std::move(live);
    used_ = std::move(used);
    stages_.push_back(Stage{std::move(label), std::move(elements)});
}

std::vector<std::string> Circuit::stage_labels() const {
    std::vector<std::string> out;
    for (const auto &s : stages_) out.push_back(s.label);
    return out;
}

bool Circuit::has_stage(std::string_view label) const {
    return std::any_of(stages_.begin(), stages_.end(), [&](const Stage &s) { return s.label == label; });
}

std::size_t Circuit::element_count() const {
    std::size_t n = 0;
    for (const auto &s : stages_) n += s.elements.size();
    return n;
}

std::size_t Circuit::stage_end(std::optional<std::string_view> upto_stage) const {
    if (!upto_stage) return stages_.size();
    for (std::size_t i = 0; i < stages_.size(); ++i) {
        if (stages_[i].label == *upto_stage) return i + 1;
    }
    throw ConfigError("unknown stage label '" + std::string(*upto_stage) + "'");
}

FockState Circuit::evolve(const FockState &input, std::optional<std::string_view> upto_stage) const {
    if (!(input.registry() == *registry_)) throw ModeError("evolve: input state is on a different registry");
    const auto end = stage_end(upto_stage);
    FockState state = input;
    for (std::size_t i = 0; i < end; ++i) {
        for (const auto &e : stages_[i].elements) state = apply_mode_unitary(state, e.unitary);
    }
    return state;
}

ModeUnitary Circuit::global_unitary(std::optional<std::string_view> upto_stage) const {
    const auto end = stage_end(upto_stage);
    const auto n = static_cast<Eigen::Index>(registry_->size());
    ComplexMatrix total = ComplexMatrix::Identity(n, n);
    for (std::size_t i = 0; i < end; ++i) {
        for (const auto &e : stages_[i].elements) total = e.unitary.embedded(*registry_).matrix() * total;
    }
    return ModeUnitary(registry_->modes(), std::move(total));
}

json Circuit::to_json() const {
    json modes = json::array();
    for (const auto &m : registry_->modes()) modes.push_back({{"path", m.path}, {"pol", to_string(m.pol)}});
    json stages = json::array();
    for (const auto &s : stages_) {
        json elements = json::array();
        for (const auto &e : s.elements) {
            json pols = json::array();
            for (auto p : e.pols) pols.push_back(to_string(p));
            json el = {{"name", e.name},       {"kind", to_string(e.kind)}, {"inputs", e.inputs},
                       {"outputs", e.outputs}, {"pols", pols}};
            if (e.rotator) el["rotator"] = to_string(*e.rotator);
            elements.push_back(std::move(el));
        }
        stages.push_back({{"label", s.label}, {"elements", std::move(elements)}});
    }
    return {{"schema", kCircuitSchema}, {"modes", modes}, {"inputs", input_paths_}, {"stages", stages}};
}

Circuit Circuit::from_json(const json &doc) {
    try {
        if (doc.at("schema").get<std::string>() != kCircuitSchema) throw ConfigError("unsupported circuit schema");
        std::vector<ModeId> modes;
        for (const auto &m : doc.at("modes")) {
            modes.push_back({m.at("path").get<std::string>(), polarization_from_string(m.at("pol").get<std::string>())});
        }
        Circuit c(make_registry(ModeRegistry(std::move(modes))), doc.at("inputs").get<std::vector<std::string>>());
        for (const auto &s : doc.at("stages")) {
            std::vector<Element> elements;
            for (const auto &e : s.at("elements")) {
                const auto name = e.at("name").get<std::string>();
                const auto kind = element_kind_from_string(e.at("kind").get<std::string>());
                const auto in = e.at("inputs").get<std::vector<std::string>>();
                const auto out = e.at("outputs").get<std::vector<std::string>>();
                std::vector<Polarization> pols;
                for (const auto &p : e.at("pols")) pols.push_back(polarization_from_string(p.get<std::string>()));
                switch (kind) {
                    case ElementKind::BeamSplitter:
                        if (in.size() != 2 || out.size() != 2) throw ConfigError(name + ": beam splitter needs 2 in, 2 out");
                        elements.push_back(Element::make_beam_splitter(name, in[0], in[1], out[0], out[1], pols));
                        break;
                    case ElementKind::PolarizingBeamSplitter:
                        if (in.size() == 1 && out.size() == 2) {
                            elements.push_back(Element::make_pbs(name, in[0], out[0], out[1]));
                        } else if (in.size() == 2 && out.size() == 2) {
                            elements.push_back(Element::make_pbs(name, in[0], in[1], out[0], out[1]));
                        } else {
                            throw ConfigError(name + ": polarizing beam splitter wiring");
                        }
                        break;
                    case ElementKind::PolarizationRotator:
                        if (in.size() != 1) throw ConfigError(name + ": rotator acts on one path");
                        elements.push_back(
                            Element::make_rotator(name, rotator_from_string(e.at("rotator").get<std::string>()), in[0]));
                        break;
                    case ElementKind::Mirror:
                        if (in.size() != 1) throw ConfigError(name + ": mirror acts on one path");
                        elements.push_back(Element::make_mirror(name, in[0], pols));
                        break;
                }
            }
            c.add_stage(s.at("label").get<std::string>(), std::move(elements));
        }
        return c;
    } catch (const json::exception &e) {
        throw ConfigError(std::string("malformed circuit document: ") + e.what());
    }
}

}  // namespace lopsim
