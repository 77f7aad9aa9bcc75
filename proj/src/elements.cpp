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

#include "lopsim/elements.h"

#include <map>
#include <numbers>
#include <set>

#include "lopsim/errors.h"

namespace lopsim {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

void require_distinct(std::initializer_list<const std::string *> labels, const char *what) {
    std::set<std::string> seen;
    for (const auto *l : labels) {
        if (!seen.insert(*l).second) throw ConfigError(std::string(what) + ": repeated path '" + *l + "'");
    }
}

/// Matrix assembly keyed by mode; columns are images of inputs.
class MatrixBuilder {
   public:
    Eigen::Index mode(const ModeId &m) {
        auto [it, inserted] = index_.emplace(m, static_cast<Eigen::Index>(modes_.size()));
        if (inserted) modes_.push_back(m);
        return it->second;
    }
    void set(const ModeId &from, const ModeId &to, Complex value) { entries_.push_back({mode(to), mode(from), value}); }

    ModeUnitary build() && {
        const auto n = static_cast<Eigen::Index>(modes_.size());
        ComplexMatrix m = ComplexMatrix::Zero(n, n);
        for (const auto &[r, c, v] : entries_) m(r, c) += v;
        return ModeUnitary(std::move(modes_), std::move(m));
    }

   private:
    struct Entry {
        Eigen::Index row, col;
        Complex value;
    };
    std::vector<ModeId> modes_;
    std::map<ModeId, Eigen::Index> index_;
    std::vector<Entry> entries_;
};

}  // namespace

std::string_view to_string(RotatorKind k) { return k == RotatorKind::Flip ? "flip" : "hadamard"; }

RotatorKind rotator_from_string(std::string_view s) {
    if (s == "flip") return RotatorKind::Flip;
    if (s == "hadamard") return RotatorKind::Hadamard;
    throw ConfigError("unknown rotator kind '" + std::string(s) + "'");
}

ModeUnitary beam_splitter(const std::string &in1, const std::string &in2, const std::string &out1,
                          const std::string &out2, std::span<const Polarization> pols) {
    require_distinct({&in1, &in2}, "beam_splitter inputs");
    require_distinct({&out1, &out2}, "beam_splitter outputs");
    const std::set<std::string> ins{in1, in2}, outs{out1, out2};
    const bool in_place = ins == outs;
    if (!in_place) require_distinct({&in1, &in2, &out1, &out2}, "beam_splitter");

    MatrixBuilder b;
    for (auto pol : pols) {
        const ModeId i1{in1, pol}, i2{in2, pol}, o1{out1, pol}, o2{out2, pol};
        // register in a fixed order so the matrix layout is predictable
        b.mode(i1);
        b.mode(i2);
        b.mode(o1);
        b.mode(o2);
        b.set(i1, o1, kInvSqrt2);
        b.set(i1, o2, kI * kInvSqrt2);
        b.set(i2, o1, kI * kInvSqrt2);
        b.set(i2, o2, kInvSqrt2);
        if (!in_place) {
            // (empty) output modes map back onto the inputs via the adjoint
            b.set(o1, i1, kInvSqrt2);
            b.set(o1, i2, -kI * kInvSqrt2);
            b.set(o2, i1, -kI * kInvSqrt2);
            b.set(o2, i2, kInvSqrt2);
        }
    }
    return std::move(b).build();
}

ModeUnitary polarizing_beam_splitter(const std::string &in, const std::string &out_h, const std::string &out_v) {
    require_distinct({&in, &out_h, &out_v}, "polarizing_beam_splitter");
    using P = Polarization;
    MatrixBuilder b;
    const ModeId ih{in, P::H}, iv{in, P::V}, oh{out_h, P::H}, ov{out_v, P::V};
    b.set(ih, oh, 1.0);
    b.set(iv, ov, kI);
    b.set(oh, ih, 1.0);
    b.set(ov, iv, -kI);
    return std::move(b).build();
}

ModeUnitary polarizing_beam_splitter(const std::string &in1, const std::string &in2, const std::string &out1,
                                     const std::string &out2) {
    require_distinct({&in1, &in2, &out1, &out2}, "polarizing_beam_splitter");
    using P = Polarization;
    MatrixBuilder b;
    const ModeId i1h{in1, P::H}, i1v{in1, P::V}, i2h{in2, P::H}, i2v{in2, P::V};
    const ModeId o1h{out1, P::H}, o1v{out1, P::V}, o2h{out2, P::H}, o2v{out2, P::V};
    for (const auto *m : {&i1h, &i1v, &i2h, &i2v, &o1h, &o1v, &o2h, &o2v}) b.mode(*m);
    b.set(i1h, o1h, 1.0);
    b.set(i1v, o2v, kI);
    b.set(i2h, o2h, 1.0);
    b.set(i2v, o1v, kI);
    b.set(o1h, i1h, 1.0);
    b.set(o2v, i1v, -kI);
    b.set(o2h, i2h, 1.0);
    b.set(o1v, i2v, -kI);
    return std::move(b).build();
}

ModeUnitary polarization_rotator(RotatorKind kind, const std::string &path) {
    std::vector<ModeId> modes{{path, Polarization::H}, {path, Polarization::V}};
    ComplexMatrix m(2, 2);
    if (kind == RotatorKind::Flip) {
        m << 0.0, 1.0, 1.0, 0.0;
    } else {
        m << kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2;
    }
    return ModeUnitary(std::move(modes), std::move(m));
}

ModeUnitary mirror(const std::string &path, std::span<const Polarization> pols) {
    std::vector<ModeId> modes;
    for (auto pol : pols) modes.push_back({path, pol});
    const auto n = static_cast<Eigen::Index>(modes.size());
    ComplexMatrix m = kI * ComplexMatrix::Identity(n, n);
    return ModeUnitary(std::move(modes), std::move(m));
}

ModeUnitary sigma_z(const std::string &path) {
    std::vector<ModeId> modes{{path, Polarization::H}, {path, Polarization::V}};
    ComplexMatrix m = ComplexMatrix::Identity(2, 2);
    m(1, 1) = -1.0;
    return ModeUnitary(std::move(modes), std::move(m));
}

}  // namespace lopsim
