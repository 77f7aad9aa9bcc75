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

#ifndef LOPSIM_MODE_H
#define LOPSIM_MODE_H

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lopsim {

/// Polarization tag of a mode. `None` is for abstract single-mode ports that
/// carry no polarization degree of freedom.
enum class Polarization { H, V, None };

inline constexpr std::array<Polarization, 2> kBothPolarizations{Polarization::H, Polarization::V};
inline constexpr std::array<Polarization, 1> kNoPolarization{Polarization::None};

std::string_view to_string(Polarization p);
Polarization polarization_from_string(std::string_view s);

/// A bosonic mode: spatial path label times polarization.
struct ModeId {
    std::string path;
    Polarization pol = Polarization::None;

    auto operator<=>(const ModeId &) const = default;
    std::string str() const;
};

/// Ordered, duplicate-free list of modes. Occupation vectors index against
/// this order.
class ModeRegistry {
   public:
    ModeRegistry() = default;
    explicit ModeRegistry(std::vector<ModeId> modes);

    /// Registers an H and a V mode for every path, in the given path order.
    static ModeRegistry from_paths(const std::vector<std::string> &paths,
                                   std::span<const Polarization> pols = kBothPolarizations);

    std::size_t size() const noexcept { return modes_.size(); }
    bool empty() const noexcept { return modes_.empty(); }
    const ModeId &at(std::size_t i) const { return modes_.at(i); }
    const std::vector<ModeId> &modes() const noexcept { return modes_; }

    std::optional<std::size_t> find(const ModeId &m) const;
    /// Throws ModeError when the mode is not registered.
    std::size_t index_of(const ModeId &m) const;
    std::size_t index_of(std::string_view path, Polarization pol) const;
    bool contains(const ModeId &m) const { return find(m).has_value(); }

    /// Indices of every registered mode on `path`, in registry order.
    std::vector<std::size_t> path_indices(std::string_view path) const;

    bool operator==(const ModeRegistry &other) const { return modes_ == other.modes_; }

   private:
    std::vector<ModeId> modes_;
    std::map<ModeId, std::size_t> index_;
};

using RegistryPtr = std::shared_ptr<const ModeRegistry>;

inline RegistryPtr make_registry(ModeRegistry r) { return std::make_shared<const ModeRegistry>(std::move(r)); }

}  // namespace lopsim

#endif
