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

#ifndef LOPSIM_MODE_UNITARY_H
#define LOPSIM_MODE_UNITARY_H

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "lopsim/mode.h"

namespace lopsim {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr double kUnitarityTolerance = 1e-10;

/// A unitary acting on a listed subset of modes.
///
/// Column j is the image of mode j: a creation operator on modes()[j] maps to
/// sum_k matrix(k, j) a^dagger on modes()[k]. Applying U and then V is the
/// single unitary V * U.
class ModeUnitary {
   public:
    /// Throws ConfigError on duplicate modes or a shape mismatch, and
    /// UnitarityError when matrix^dagger matrix deviates from identity by more
    /// than `tolerance` in any entry.
    ModeUnitary(std::vector<ModeId> modes, ComplexMatrix matrix, double tolerance = kUnitarityTolerance);

    const std::vector<ModeId> &modes() const noexcept { return modes_; }
    const ComplexMatrix &matrix() const noexcept { return matrix_; }
    std::size_t dimension() const noexcept { return modes_.size(); }

    /// Largest entry of |U^dagger U - I|.
    double unitarity_defect() const;

    /// Same action expressed over every mode of `registry`, in registry order.
    ModeUnitary embedded(const ModeRegistry &registry) const;

   private:
    std::vector<ModeId> modes_;
    ComplexMatrix matrix_;
};

double unitarity_defect(const ComplexMatrix &m);

}  // namespace lopsim

#endif
