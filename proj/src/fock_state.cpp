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

#include "lopsim/fock_state.h"

#include <cmath>
#include <numeric>

#include "lopsim/errors.h"

namespace lopsim {

namespace {

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

void require_same_registry(const FockState &a, const FockState &b) {
    if (a.registry_ptr() != b.registry_ptr() && !(a.registry() == b.registry())) {
        throw ModeError("states live on different mode registries");
    }
}

}  // namespace

int total_photons(const Occupation &occ) { return std::accumulate(occ.begin(), occ.end(), 0); }

FockState::FockState(RegistryPtr registry, int photon_count)
    : registry_(std::move(registry)), photon_count_(photon_count) {
    if (!registry_) throw ConfigError("fock state: null registry");
    if (photon_count_ < 0) throw ConfigError("fock state: negative photon count");
}

Complex FockState::amplitude(const Occupation &occ) const {
    auto it = terms_.find(occ);
    return it == terms_.end() ? Complex{} : it->second;
}

void FockState::add(const Occupation &occ, Complex amp) {
    if (occ.size() != registry_->size()) throw ConfigError("occupation size does not match registry");
    if (total_photons(occ) != photon_count_) {
        throw ConfigError("occupation holds " + std::to_string(total_photons(occ)) + " photons, state has " +
                          std::to_string(photon_count_));
    }
    terms_[occ] += amp;
    normalized_ = false;
}

double FockState::norm_squared() const {
    double s = 0.0;
    for (const auto &[occ, amp] : terms_) s += std::norm(amp);
    return s;
}

double FockState::norm() const { return std::sqrt(norm_squared()); }

void FockState::prune(double threshold) {
    std::erase_if(terms_, [threshold](const auto &kv) { return std::abs(kv.second) < threshold; });
}

FockState FockState::normalized_copy() const {
    const double n = norm();
    if (n == 0.0) throw NormalizationError("cannot normalize the zero state");
    FockState out = scaled(1.0 / n);
    out.normalized_ = true;
    return out;
}

FockState FockState::scaled(Complex factor) const {
    FockState out(registry_, photon_count_);
    for (const auto &[occ, amp] : terms_) out.terms_.emplace(occ, amp * factor);
    out.prune();
    out.refresh_normalized_flag();
    return out;
}

void FockState::refresh_normalized_flag() { normalized_ = std::abs(norm_squared() - 1.0) <= kNormTolerance; }

Occupation FockState::occupation(const std::vector<std::pair<ModeId, int>> &counts) const {
    Occupation occ(registry_->size(), 0);
    for (const auto &[mode, n] : counts) occ[registry_->index_of(mode)] += static_cast<std::uint8_t>(n);
    return occ;
}

PostSelectionPattern &PostSelectionPattern::require(ModeId mode, int count) {
    modes.push_back({std::move(mode), count});
    return *this;
}

PostSelectionPattern &PostSelectionPattern::require_total(std::vector<ModeId> group, int count) {
    groups.push_back({std::move(group), count});
    return *this;
}

PostSelectionPattern &PostSelectionPattern::require_paths(const ModeRegistry &registry,
                                                          const std::vector<std::string> &paths, int count) {
    std::vector<ModeId> group;
    for (const auto &p : paths) {
        auto idx = registry.path_indices(p);
        if (idx.empty()) throw ModeError("path '" + p + "' is not registered");
        for (auto i : idx) group.push_back(registry.at(i));
    }
    return require_total(std::move(group), count);
}

FockState vacuum(RegistryPtr registry) {
    if (!registry || registry->empty()) throw ConfigError("vacuum: empty mode registry");
    FockState out(registry, 0);
    out.add(Occupation(registry->size(), 0), 1.0);
    out.refresh_normalized_flag();
    return out;
}

FockState create_photon(const FockState &state, const std::vector<std::pair<ModeId, Complex>> &amplitudes,
                        bool allow_unnormalized) {
    const auto &reg = state.registry();
    std::vector<std::pair<std::size_t, Complex>> targets;
    double weight = 0.0;
    for (const auto &[mode, amp] : amplitudes) {
        targets.emplace_back(reg.index_of(mode), amp);
        weight += std::norm(amp);
    }
    if (!allow_unnormalized && std::abs(weight - 1.0) > kNormTolerance) {
        throw NormalizationError("create_photon: single-photon amplitudes have norm^2 " + std::to_string(weight));
    }
    FockState out(state.registry_ptr(), state.photon_count() + 1);
    for (const auto &[occ, amp] : state.terms()) {
        for (const auto &[idx, coeff] : targets) {
            Occupation next = occ;
            // a^dagger |n> = sqrt(n + 1) |n + 1>
            const double boson = std::sqrt(static_cast<double>(next[idx]) + 1.0);
            next[idx] += 1;
            out.add(next, amp * coeff * boson);
        }
    }
    out.prune();
    out.refresh_normalized_flag();
    return out;
}

Complex inner_product(const FockState &left, const FockState &right) {
    require_same_registry(left, right);
    if (left.photon_count() != right.photon_count()) {
        throw ConfigError("inner_product: photon numbers differ");
    }
    Complex s{};
    const auto &small = left.terms().size() <= right.terms().size() ? left : right;
    const auto &large = &small == &left ? right : left;
    for (const auto &[occ, amp] : small.terms()) {
        auto it = large.terms().find(occ);
        if (it == large.terms().end()) continue;
        s += &small == &left ? std::conj(amp) * it->second : std::conj(it->second) * amp;
    }
    return s;
}

FockState apply_mode_unitary(const FockState &state, const ModeUnitary &unitary) {
    const auto &reg = state.registry();
    const auto &mat = unitary.matrix();
    const std::size_t k = unitary.dimension();
    std::vector<std::size_t> global(k);
    for (std::size_t l = 0; l < k; ++l) global[l] = reg.index_of(unitary.modes()[l]);

    FockState out(state.registry_ptr(), state.photon_count());
    std::vector<std::size_t> photons;   // local mode of each acted photon
    std::vector<int> counts(k, 0);      // local output occupation
    for (const auto &[occ, amp] : state.terms()) {
        photons.clear();
        double in_fact = 1.0;
        Occupation base = occ;
        for (std::size_t l = 0; l < k; ++l) {
            const int n = occ[global[l]];
            in_fact *= factorial(n);
            for (int p = 0; p < n; ++p) photons.push_back(l);
            base[global[l]] = 0;
        }
        const Complex prefactor = amp / std::sqrt(in_fact);

        // Expand prod_p (sum_r U(r, l_p) a^dagger_r) over all target choices.
        auto expand = [&](auto &&self, std::size_t p, Complex coeff) -> void {
            if (p == photons.size()) {
                Occupation o = base;
                double out_fact = 1.0;
                for (std::size_t r = 0; r < k; ++r) {
                    o[global[r]] = static_cast<std::uint8_t>(counts[r]);
                    out_fact *= factorial(counts[r]);
                }
                out.add(o, prefactor * coeff * std::sqrt(out_fact));
                return;
            }
            const auto col = static_cast<Eigen::Index>(photons[p]);
            for (std::size_t r = 0; r < k; ++r) {
                const Complex u = mat(static_cast<Eigen::Index>(r), col);
                if (u == Complex{}) continue;
                ++counts[r];
                self(self, p + 1, coeff * u);
                --counts[r];
            }
        };
        expand(expand, 0, Complex{1.0, 0.0});
    }
    out.prune();
    out.refresh_normalized_flag();
    return out;
}

bool matches(const ModeRegistry &registry, const Occupation &occ, const PostSelectionPattern &pattern) {
    for (const auto &c : pattern.modes) {
        if (occ[registry.index_of(c.mode)] != c.count) return false;
    }
    for (const auto &g : pattern.groups) {
        int total = 0;
        for (const auto &m : g.modes) total += occ[registry.index_of(m)];
        if (total != g.count) return false;
    }
    return true;
}

Projection project(const FockState &state, const PostSelectionPattern &pattern) {
    const auto &reg = state.registry();
    // validate constrained modes up front so an empty state still reports them
    for (const auto &c : pattern.modes) reg.index_of(c.mode);
    for (const auto &g : pattern.groups) {
        for (const auto &m : g.modes) reg.index_of(m);
    }
    const double total = state.norm_squared();
    FockState kept(state.registry_ptr(), state.photon_count());
    for (const auto &[occ, amp] : state.terms()) {
        if (matches(reg, occ, pattern)) kept.add(occ, amp);
    }
    const double mass = kept.norm_squared();
    if (mass == 0.0 || total == 0.0) return {FockState(state.registry_ptr(), state.photon_count()), 0.0};
    return {kept.normalized_copy(), mass / total};
}

}  // namespace lopsim
