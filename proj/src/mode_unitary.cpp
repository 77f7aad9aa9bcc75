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

#include "lopsim/mode_unitary.h"

#include <limits>
#include <set>

#include "lopsim/errors.h"

namespace lopsim {

double unitarity_defect(const ComplexMatrix &m) {
    if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
    ComplexMatrix d = m.adjoint() * m - ComplexMatrix::Identity(m.rows(), m.cols());
    return d.cwiseAbs().maxCoeff();
}

ModeUnitary::ModeUnitary(std::vector<ModeId> modes, ComplexMatrix matrix, double tolerance)
    : modes_(std::move(modes)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols() || static_cast<std::size_t>(matrix_.rows()) != modes_.size()) {
        throw ConfigError("mode unitary: matrix shape does not match " + std::to_string(modes_.size()) + " modes");
    }
    std::set<ModeId> seen;
    for (const auto &m : modes_) {
        if (!seen.insert(m).second) throw ConfigError("mode unitary: duplicate mode " + m.str());
    }
    if (!matrix_.allFinite()) throw UnitarityError("mode unitary: non-finite entry");
    if (!modes_.empty() && lopsim::unitarity_defect(matrix_) > tolerance) {
        throw UnitarityError("mode unitary: matrix is not unitary (defect " +
                             std::to_string(lopsim::unitarity_defect(matrix_)) + ")");
    }
}

double ModeUnitary::unitarity_defect() const {
    if (modes_.empty()) return 0.0;
    return lopsim::unitarity_defect(matrix_);
}

ModeUnitary ModeUnitary::embedded(const ModeRegistry &registry) const {
    const auto n = static_cast<Eigen::Index>(registry.size());
    ComplexMatrix full = ComplexMatrix::Identity(n, n);
    std::vector<Eigen::Index> idx;
    idx.reserve(modes_.size());
    for (const auto &m : modes_) idx.push_back(static_cast<Eigen::Index>(registry.index_of(m)));
    for (std::size_t c = 0; c < idx.size(); ++c) {
        for (std::size_t r = 0; r < idx.size(); ++r) {
            full(idx[r], idx[c]) = matrix_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
        }
    }
    return ModeUnitary(registry.modes(), std::move(full));
}

}  // namespace lopsim
