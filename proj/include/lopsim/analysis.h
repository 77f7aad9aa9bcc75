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

#ifndef LOPSIM_ANALYSIS_H
#define LOPSIM_ANALYSIS_H

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "lopsim/fock_state.h"

namespace lopsim {

inline constexpr double kStateTolerance = 1e-10;

/// Polarization (or dual-rail) qubit, amplitudes over {H, V}.
struct QubitState {
    std::array<Complex, 2> amp{};

    double norm_squared() const;
    QubitState normalized() const;
};

/// Two-qubit pure state, amplitudes over {HH, HV, VH, VV}; the first letter
/// is the first qubit.
struct TwoQubitState {
    std::array<Complex, 4> amp{};

    Complex &operator[](std::size_t i) { return amp[i]; }
    const Complex &operator[](std::size_t i) const { return amp[i]; }
    double norm_squared() const;
    TwoQubitState normalized() const;
};

inline constexpr std::size_t kHH = 0, kHV = 1, kVH = 2, kVV = 3;

/// Hermitian, unit-trace density matrix.
class DensityMatrix {
   public:
    /// Validates hermiticity (1e-12), trace (1e-10) and positivity (-1e-10).
    explicit DensityMatrix(ComplexMatrix rho);
    static DensityMatrix from_pure(const ComplexVector &psi);

    const ComplexMatrix &matrix() const noexcept { return rho_; }
    std::size_t dimension() const noexcept { return static_cast<std::size_t>(rho_.rows()); }
    double purity() const;

   private:
    ComplexMatrix rho_;
};

/// A logical qubit encoded as one photon in one of two modes (|0> on `zero`).
struct QubitModes {
    ModeId zero;
    ModeId one;
};

/// Reduced state of n encoded qubits. `pure` is set when the environment
/// (all other modes) factors out; `encoded_weight` is the fraction of the
/// norm that lies in the qubit encoding.
struct ReducedQubits {
    DensityMatrix rho;
    std::optional<ComplexVector> pure;
    double encoded_weight;
};

/// Extracts qubit amplitudes from a Fock state. Terms outside the encoding are
/// discarded and reported through encoded_weight; any remaining modes are
/// traced out. Throws EncodingError if no term carries the encoding.
ReducedQubits reduce_to_qubits(const FockState &state, const std::vector<QubitModes> &qubits);

/// Two-qubit convenience wrapper: pure two-qubit state when available.
std::optional<TwoQubitState> reduce_to_two_qubits(const FockState &state, const QubitModes &first,
                                                  const QubitModes &second);

/// Traces out every qubit except `keep` from an n-qubit density matrix.
DensityMatrix partial_trace(const DensityMatrix &rho, std::size_t keep, std::size_t num_qubits);

/// Wootters concurrence. Throws NormalizationError on non-normalized input.
double concurrence(const TwoQubitState &psi);
double concurrence(const DensityMatrix &rho);

/// Singular values of the 2x2 coefficient matrix, descending.
std::array<double, 2> schmidt_coefficients(const TwoQubitState &psi);

/// |<x|y>|^2. Throws NormalizationError for non-normalized input.
double fidelity(const QubitState &x, const QubitState &y);
double fidelity(const TwoQubitState &x, const TwoQubitState &y);
double fidelity(const FockState &x, const FockState &y);
/// <psi|rho|psi>; ConfigError on dimension mismatch.
double fidelity(const DensityMatrix &rho, const ComplexVector &psi);
double fidelity(const ComplexVector &x, const ComplexVector &y);

/// Pauli Z on the first (qubit = 0) or second (qubit = 1) qubit.
TwoQubitState apply_sigma_z(const TwoQubitState &psi, int qubit);
QubitState apply_sigma_z(const QubitState &psi);

ComplexVector to_vector(const TwoQubitState &psi);
TwoQubitState two_qubit_from_vector(const ComplexVector &v);

}  // namespace lopsim

#endif
