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

#include "lopsim/analysis.h"

#include <algorithm>
#include <cmath>
#include <map>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "lopsim/errors.h"

namespace lopsim {

namespace {

void require_normalized(double norm_squared, const char *what) {
    if (std::abs(norm_squared - 1.0) > kStateTolerance) {
        throw NormalizationError(std::string(what) + ": state is not normalized (norm^2 = " +
                                 std::to_string(norm_squared) + ")");
    }
}

}  // namespace

double QubitState::norm_squared() const { return std::norm(amp[0]) + std::norm(amp[1]); }

QubitState QubitState::normalized() const {
    const double n = std::sqrt(norm_squared());
    if (n == 0.0) throw NormalizationError("cannot normalize a zero qubit");
    return QubitState{{amp[0] / n, amp[1] / n}};
}

double TwoQubitState::norm_squared() const {
    double s = 0.0;
    for (const auto &a : amp) s += std::norm(a);
    return s;
}

TwoQubitState TwoQubitState::normalized() const {
    const double n = std::sqrt(norm_squared());
    if (n == 0.0) throw NormalizationError("cannot normalize a zero two-qubit state");
    TwoQubitState out;
    for (std::size_t i = 0; i < 4; ++i) out.amp[i] = amp[i] / n;
    return out;
}

DensityMatrix::DensityMatrix(ComplexMatrix rho) : rho_(std::move(rho)) {
    if (rho_.rows() != rho_.cols() || rho_.rows() == 0) throw ConfigError("density matrix must be square");
    if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > 1e-12) throw NormalizationError("density matrix is not Hermitian");
    if (std::abs(rho_.trace() - Complex{1.0, 0.0}) > 1e-10) throw NormalizationError("density matrix trace is not 1");
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho_, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10) throw NormalizationError("density matrix is not positive");
}

DensityMatrix DensityMatrix::from_pure(const ComplexVector &psi) {
    require_normalized(psi.squaredNorm(), "DensityMatrix::from_pure");
    ComplexMatrix rho = psi * psi.adjoint();
    return DensityMatrix(0.5 * (rho + rho.adjoint()));
}

double DensityMatrix::purity() const { return (rho_ * rho_).trace().real(); }

ReducedQubits reduce_to_qubits(const FockState &state, const std::vector<QubitModes> &qubits) {
    const auto &reg = state.registry();
    std::vector<std::pair<std::size_t, std::size_t>> idx;
    for (const auto &q : qubits) idx.emplace_back(reg.index_of(q.zero), reg.index_of(q.one));
    const auto dim = static_cast<Eigen::Index>(1) << qubits.size();

    std::map<Occupation, ComplexVector> env;
    double encoded = 0.0;
    const double total = state.norm_squared();
    for (const auto &[occ, amp] : state.terms()) {
        Eigen::Index basis = 0;
        bool ok = true;
        Occupation rest = occ;
        for (const auto &[z, o] : idx) {
            if (occ[z] + occ[o] != 1) {
                ok = false;
                break;
            }
            basis = (basis << 1) | occ[o];
            rest[z] = 0;
            rest[o] = 0;
        }
        if (!ok) continue;
        auto [it, inserted] = env.try_emplace(rest, ComplexVector::Zero(dim));
        it->second(basis) += amp;
        encoded += std::norm(amp);
    }
    if (encoded == 0.0) throw EncodingError("reduce_to_qubits: no term carries one photon per qubit");

    ComplexMatrix rho = ComplexMatrix::Zero(dim, dim);
    for (const auto &[k, v] : env) rho += v * v.adjoint();
    rho /= encoded;
    rho = 0.5 * (rho + rho.adjoint());
    ReducedQubits out{DensityMatrix(std::move(rho)), std::nullopt, encoded / total};
    if (env.size() == 1) out.pure = env.begin()->second / std::sqrt(encoded);
    return out;
}

std::optional<TwoQubitState> reduce_to_two_qubits(const FockState &state, const QubitModes &first,
                                                  const QubitModes &second) {
    auto r = reduce_to_qubits(state, {first, second});
    if (!r.pure) return std::nullopt;
    return two_qubit_from_vector(*r.pure);
}

DensityMatrix partial_trace(const DensityMatrix &rho, std::size_t keep, std::size_t num_qubits) {
    if (rho.dimension() != (std::size_t{1} << num_qubits) || keep >= num_qubits) {
        throw ConfigError("partial_trace: dimension does not match qubit count");
    }
    const std::size_t shift = num_qubits - 1 - keep;
    ComplexMatrix out = ComplexMatrix::Zero(2, 2);
    const auto dim = static_cast<std::size_t>(rho.dimension());
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            // other qubits must agree
            if ((i & ~(std::size_t{1} << shift)) != (j & ~(std::size_t{1} << shift))) continue;
            out(static_cast<Eigen::Index>((i >> shift) & 1u), static_cast<Eigen::Index>((j >> shift) & 1u)) +=
                rho.matrix()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        }
    }
    return DensityMatrix(0.5 * (out + out.adjoint()));
}

double concurrence(const TwoQubitState &psi) {
    require_normalized(psi.norm_squared(), "concurrence");
    return std::min(1.0, 2.0 * std::abs(psi[kHH] * psi[kVV] - psi[kHV] * psi[kVH]));
}

double concurrence(const DensityMatrix &rho) {
    if (rho.dimension() != 4) throw ConfigError("concurrence: expected a two-qubit density matrix");
    ComplexMatrix yy = ComplexMatrix::Zero(4, 4);
    // sigma_y (x) sigma_y is real antidiagonal (-1, 1, 1, -1)
    yy(0, 3) = -1.0;
    yy(1, 2) = 1.0;
    yy(2, 1) = 1.0;
    yy(3, 0) = -1.0;
    const ComplexMatrix tilde = yy * rho.matrix().conjugate() * yy;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> sq(rho.matrix());
    // rank-deficient states carry eigenvalues of order -1e-17
    const Eigen::VectorXd ev = sq.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    const ComplexMatrix root = sq.eigenvectors() * ev.cast<Complex>().asDiagonal() * sq.eigenvectors().adjoint();
    ComplexMatrix r = root * tilde * root;
    r = 0.5 * (r + r.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(r, Eigen::EigenvaluesOnly);
    std::array<double, 4> l{};
    for (int i = 0; i < 4; ++i) l[static_cast<std::size_t>(i)] = std::sqrt(std::max(0.0, es.eigenvalues()(i)));
    std::sort(l.begin(), l.end(), std::greater<>());
    return std::clamp(l[0] - l[1] - l[2] - l[3], 0.0, 1.0);
}

std::array<double, 2> schmidt_coefficients(const TwoQubitState &psi) {
    Eigen::Matrix2cd m;
    m << psi[kHH], psi[kHV], psi[kVH], psi[kVV];
    Eigen::JacobiSVD<Eigen::Matrix2cd> svd(m);
    return {svd.singularValues()(0), svd.singularValues()(1)};
}

double fidelity(const QubitState &x, const QubitState &y) {
    require_normalized(x.norm_squared(), "fidelity");
    require_normalized(y.norm_squared(), "fidelity");
    return std::min(1.0, std::norm(std::conj(x.amp[0]) * y.amp[0] + std::conj(x.amp[1]) * y.amp[1]));
}

double fidelity(const TwoQubitState &x, const TwoQubitState &y) { return fidelity(to_vector(x), to_vector(y)); }

double fidelity(const ComplexVector &x, const ComplexVector &y) {
    if (x.size() != y.size()) throw ConfigError("fidelity: dimension mismatch");
    require_normalized(x.squaredNorm(), "fidelity");
    require_normalized(y.squaredNorm(), "fidelity");
    return std::min(1.0, std::norm(x.dot(y)));
}

double fidelity(const FockState &x, const FockState &y) {
    require_normalized(x.norm_squared(), "fidelity");
    require_normalized(y.norm_squared(), "fidelity");
    return std::min(1.0, std::norm(inner_product(x, y)));
}

double fidelity(const DensityMatrix &rho, const ComplexVector &psi) {
    if (static_cast<std::size_t>(psi.size()) != rho.dimension()) throw ConfigError("fidelity: dimension mismatch");
    require_normalized(psi.squaredNorm(), "fidelity");
    return std::clamp(psi.dot(rho.matrix() * psi).real(), 0.0, 1.0);
}

TwoQubitState apply_sigma_z(const TwoQubitState &psi, int qubit) {
    TwoQubitState out = psi;
    if (qubit == 0) {
        out[kVH] = -out[kVH];
        out[kVV] = -out[kVV];
    } else {
        out[kHV] = -out[kHV];
        out[kVV] = -out[kVV];
    }
    return out;
}

QubitState apply_sigma_z(const QubitState &psi) { return QubitState{{psi.amp[0], -psi.amp[1]}}; }

ComplexVector to_vector(const TwoQubitState &psi) {
    ComplexVector v(4);
    for (Eigen::Index i = 0; i < 4; ++i) v(i) = psi.amp[static_cast<std::size_t>(i)];
    return v;
}

TwoQubitState two_qubit_from_vector(const ComplexVector &v) {
    if (v.size() != 4) throw ConfigError("expected a 4-component vector");
    TwoQubitState out;
    for (Eigen::Index i = 0; i < 4; ++i) out.amp[static_cast<std::size_t>(i)] = v(i);
    return out;
}

}  // namespace lopsim
