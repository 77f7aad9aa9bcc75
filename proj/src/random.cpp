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

#include "lopsim/random.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/QR>

#include "lopsim/elements.h"

namespace lopsim {

std::pair<Complex, Complex> Rng::qubit(bool real_only) {
    if (real_only) {
        const double theta = uniform(0.0, 2.0 * std::numbers::pi);
        return {Complex{std::cos(theta), 0.0}, Complex{std::sin(theta), 0.0}};
    }
    // |alpha|^2 uniform on [0, 1] is the Haar marginal for one qubit.
    const double p = uniform();
    const double phase_a = uniform(0.0, 2.0 * std::numbers::pi);
    const double phase_b = uniform(0.0, 2.0 * std::numbers::pi);
    return {std::polar(std::sqrt(p), phase_a), std::polar(std::sqrt(1.0 - p), phase_b)};
}

protocol::ProtocolParams Rng::params(bool real_only) {
    protocol::ProtocolParams p;
    std::tie(p.a, p.b) = qubit(real_only);
    std::tie(p.c, p.d) = qubit(real_only);
    return p;
}

double Rng::normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

ComplexMatrix Rng::haar_unitary(int n) {
    ComplexMatrix g(n, n);
    for (int c = 0; c < n; ++c) {
        for (int r = 0; r < n; ++r) g(r, c) = Complex{normal(), normal()} / std::numbers::sqrt2;
    }
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int k = 0; k < n; ++k) {
        const Complex d = r(k, k);
        if (std::abs(d) > 0.0) q.col(k) *= d / std::abs(d);
    }
    return q;
}

std::vector<std::pair<ModeId, Complex>> random_photon(Rng &rng, const ModeRegistry &registry) {
    std::vector<std::pair<ModeId, Complex>> out;
    double norm = 0.0;
    for (const auto &m : registry.modes()) {
        const Complex z{rng.normal(), rng.normal()};
        norm += std::norm(z);
        out.emplace_back(m, z);
    }
    for (auto &[m, z] : out) z /= std::sqrt(norm);
    return out;
}

std::vector<ModeUnitary> random_element_sequence(Rng &rng, const std::vector<std::string> &paths, int length) {
    auto pick = [&](std::size_t n) {
        return std::min(n - 1, static_cast<std::size_t>(rng.uniform() * static_cast<double>(n)));
    };
    std::vector<ModeUnitary> out;
    for (int k = 0; k < length; ++k) {
        const auto p = pick(paths.size());
        switch (pick(4)) {
            case 0: {
                auto q = pick(paths.size() - 1);
                if (q >= p) ++q;
                out.push_back(beam_splitter(paths[p], paths[q], paths[p], paths[q]));
                break;
            }
            case 1:
                out.push_back(polarization_rotator(rng.uniform() < 0.5 ? RotatorKind::Flip : RotatorKind::Hadamard,
                                                   paths[p]));
                break;
            case 2:
                out.push_back(mirror(paths[p]));
                break;
            default: {
                std::vector<ModeId> all;
                for (const auto &path : paths) {
                    all.push_back({path, Polarization::H});
                    all.push_back({path, Polarization::V});
                }
                const int size = 2 + static_cast<int>(pick(3));
                std::vector<ModeId> chosen;
                while (static_cast<int>(chosen.size()) < size) {
                    const auto &m = all[pick(all.size())];
                    if (std::find(chosen.begin(), chosen.end(), m) == chosen.end()) chosen.push_back(m);
                }
                out.emplace_back(std::move(chosen), rng.haar_unitary(size));
                break;
            }
        }
    }
    return out;
}

}  // namespace lopsim
