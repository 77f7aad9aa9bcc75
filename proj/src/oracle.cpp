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

#include "lopsim/oracle.h"

#include <bit>
#include <cmath>
#include <cstdint>

#include "lopsim/errors.h"

namespace lopsim::oracle {

namespace {

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

std::vector<Eigen::Index> expand_occupation(const Occupation &occ) {
    std::vector<Eigen::Index> idx;
    for (std::size_t m = 0; m < occ.size(); ++m) {
        for (int k = 0; k < occ[m]; ++k) idx.push_back(static_cast<Eigen::Index>(m));
    }
    return idx;
}

double occupation_factorials(const Occupation &occ) {
    double f = 1.0;
    for (auto n : occ) f *= factorial(n);
    return f;
}

void enumerate(std::size_t mode, std::size_t modes, int remaining, Occupation &cur, std::vector<Occupation> &out) {
    if (mode + 1 == modes) {
        cur[mode] = static_cast<std::uint8_t>(remaining);
        out.push_back(cur);
        return;
    }
    for (int k = 0; k <= remaining; ++k) {
        cur[mode] = static_cast<std::uint8_t>(k);
        enumerate(mode + 1, modes, remaining - k, cur, out);
    }
    cur[mode] = 0;
}

}  // namespace

Complex permanent(const ComplexMatrix &m) {
    if (m.rows() != m.cols()) throw ConfigError("permanent: matrix is not square");
    const auto n = static_cast<int>(m.rows());
    if (n > kMaxPermanentSize) throw ConfigError("permanent: size exceeds " + std::to_string(kMaxPermanentSize));
    if (n == 0) return 1.0;

    // Ryser: per(A) = (-1)^n sum_S (-1)^|S| prod_i sum_{j in S} a_ij, with
    // subsets visited in Gray-code order so each step adds or removes one column.
    std::vector<Complex> row_sums(static_cast<std::size_t>(n), Complex{});
    Complex total{};
    std::uint32_t gray = 0;
    const std::uint32_t subsets = 1u << n;
    for (std::uint32_t k = 1; k < subsets; ++k) {
        const int j = std::countr_zero(k);
        gray ^= 1u << j;
        const double dir = (gray >> j) & 1u ? 1.0 : -1.0;
        Complex prod{1.0, 0.0};
        for (int i = 0; i < n; ++i) {
            row_sums[static_cast<std::size_t>(i)] += dir * m(i, j);
            prod *= row_sums[static_cast<std::size_t>(i)];
        }
        total += std::popcount(gray) % 2 ? -prod : prod;
    }
    return n % 2 ? -total : total;
}

Complex scattering_amplitude(const ComplexMatrix &u, const Occupation &in, const Occupation &out) {
    if (in.size() != out.size() || static_cast<Eigen::Index>(in.size()) != u.rows()) {
        throw ConfigError("scattering_amplitude: occupation size does not match the unitary");
    }
    if (total_photons(in) != total_photons(out)) throw ConfigError("scattering_amplitude: photon numbers differ");
    const auto cols = expand_occupation(in);
    const auto rows = expand_occupation(out);
    const auto n = static_cast<Eigen::Index>(cols.size());
    ComplexMatrix sub(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index c = 0; c < n; ++c) sub(r, c) = u(rows[static_cast<std::size_t>(r)], cols[static_cast<std::size_t>(c)]);
    }
    return permanent(sub) / std::sqrt(occupation_factorials(in) * occupation_factorials(out));
}

std::size_t basis_size(std::size_t modes, int photons) {
    if (modes == 0) return photons == 0 ? 1 : 0;
    // C(modes + photons - 1, photons)
    double c = 1.0;
    for (int k = 1; k <= photons; ++k) c = c * static_cast<double>(modes - 1 + static_cast<std::size_t>(k)) / k;
    return static_cast<std::size_t>(std::llround(c));
}

std::vector<Occupation> enumerate_basis(std::size_t modes, int photons) {
    std::vector<Occupation> out;
    if (modes == 0) return out;
    out.reserve(basis_size(modes, photons));
    Occupation cur(modes, 0);
    enumerate(0, modes, photons, cur, out);
    return out;
}

FockState evolve_via_permanents(const ModeUnitary &u, const FockState &input) {
    if (u.modes() != input.registry().modes()) {
        throw ModeError("evolve_via_permanents: unitary must span the state's registry in registry order");
    }
    if (input.photon_count() > kMaxPhotons) throw ConfigError("evolve_via_permanents: too many photons");
    const auto modes = input.registry().size();
    if (basis_size(modes, input.photon_count()) > kMaxBasisSize) {
        throw ConfigError("evolve_via_permanents: output basis too large");
    }
    FockState out(input.registry_ptr(), input.photon_count());
    for (const auto &occ : enumerate_basis(modes, input.photon_count())) {
        Complex amp{};
        for (const auto &[in_occ, in_amp] : input.terms()) amp += in_amp * scattering_amplitude(u.matrix(), in_occ, occ);
        if (std::abs(amp) >= kPruneThreshold) out.add(occ, amp);
    }
    out.refresh_normalized_flag();
    return out;
}

}  // namespace lopsim::oracle
