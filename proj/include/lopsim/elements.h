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

#ifndef LOPSIM_ELEMENTS_H
#define LOPSIM_ELEMENTS_H

#include <span>
#include <string>

#include "lopsim/mode_unitary.h"

// Phase conventions: a 50:50 beam splitter transmits with amplitude 1/sqrt(2)
// and reflects with i/sqrt(2); a polarizing beam splitter transmits H with 1
// and reflects V with i; a mirror reflection multiplies by i.

namespace lopsim {

enum class RotatorKind { Flip, Hadamard };

std::string_view to_string(RotatorKind k);
RotatorKind rotator_from_string(std::string_view s);

/// Symmetric 50:50 beam splitter:
///   in1 -> (out1 + i out2) / sqrt(2)
///   in2 -> (i out1 + out2) / sqrt(2)
/// applied identically on each polarization in `pols`.
///
/// The outputs may be the inputs themselves (in either order), in which case
/// the splitter acts in place on the two paths. Otherwise all four paths must
/// be distinct; the returned unitary then also maps the (empty) output modes
/// back onto the inputs so that it is unitary on all of them.
ModeUnitary beam_splitter(const std::string &in1, const std::string &in2, const std::string &out1,
                          const std::string &out2, std::span<const Polarization> pols = kBothPolarizations);

/// Single-input PBS: (in,H) -> (out_h,H) and (in,V) -> i (out_v,V).
ModeUnitary polarizing_beam_splitter(const std::string &in, const std::string &out_h, const std::string &out_v);

/// Two-input PBS on four distinct paths. Each input routes H to its
/// transmitted port and V, with phase i, to the other one:
///   (in1,H) -> (out1,H)    (in1,V) -> i (out2,V)
///   (in2,H) -> (out2,H)    (in2,V) -> i (out1,V)
ModeUnitary polarizing_beam_splitter(const std::string &in1, const std::string &in2, const std::string &out1,
                                     const std::string &out2);

/// Flip swaps H and V; Hadamard maps H -> (H+V)/sqrt(2), V -> (H-V)/sqrt(2).
ModeUnitary polarization_rotator(RotatorKind kind, const std::string &path);

/// Phase i on every listed polarization of the path.
ModeUnitary mirror(const std::string &path, std::span<const Polarization> pols = kBothPolarizations);

/// Pauli Z on a path's polarization: V picks up a sign.
ModeUnitary sigma_z(const std::string &path);

}  // namespace lopsim

#endif
