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

#include "lopsim/mode.h"

#include "lopsim/errors.h"

namespace lopsim {

std::string_view to_string(Polarization p) {
    switch (p) {
        case Polarization::H:
            return "H";
        case Polarization::V:
            return "V";
        case Polarization::None:
            return "none";
    }
    return "none";
}

Polarization polarization_from_string(std::string_view s) {
    if (s == "H") return Polarization::H;
    if (s == "V") return Polarization::V;
    if (s == "none") return Polarization::None;
    throw ConfigError("unknown polarization '" + std::string(s) + "'");
}

std::string ModeId::str() const {
    if (pol == Polarization::None) return path;
    return path + "." + std::string(to_string(pol));
}

ModeRegistry::ModeRegistry(std::vector<ModeId> modes) : modes_(std::move(modes)) {
    for (std::size_t i = 0; i < modes_.size(); ++i) {
        if (!index_.emplace(modes_[i], i).second) {
            throw ConfigError("duplicate mode " + modes_[i].str() + " in registry");
        }
    }
}

ModeRegistry ModeRegistry::from_paths(const std::vector<std::string> &paths, std::span<const Polarization> pols) {
    std::vector<ModeId> modes;
    modes.reserve(paths.size() * pols.size());
    for (const auto &p : paths) {
        for (auto pol : pols) {
            modes.push_back({p, pol});
        }
    }
    return ModeRegistry(std::move(modes));
}

std::optional<std::size_t> ModeRegistry::find(const ModeId &m) const {
    auto it = index_.find(m);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t ModeRegistry::index_of(const ModeId &m) const {
    auto i = find(m);
    if (!i) throw ModeError("mode " + m.str() + " is not registered");
    return *i;
}

std::size_t ModeRegistry::index_of(std::string_view path, Polarization pol) const {
    return index_of(ModeId{std::string(path), pol});
}

std::vector<std::size_t> ModeRegistry::path_indices(std::string_view path) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < modes_.size(); ++i) {
        if (modes_[i].path == path) out.push_back(i);
    }
    return out;
}

}  // namespace lopsim
