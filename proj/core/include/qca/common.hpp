// Copyright 2026 The qca-toolkit Authors
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

#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qca {

using cdouble = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

/// Numerical tolerances used throughout. Residuals (closure, commutation,
/// unitarity, homomorphism) are measured in the spectral norm against kEps.
/// Eigenvalues closer than kSpectralGap are treated as one degenerate level.
/// Rank decisions keep singular values >= kRankTol * (largest).
inline constexpr double kEps = 1e-9;
inline constexpr double kSpectralGap = 1e-6;
inline constexpr double kRankTol = 1e-9;

/// Guardrail for dense global objects (Hilbert-space dimension).
inline constexpr std::int64_t kDefaultDimCap = 4096;

}  // namespace qca
