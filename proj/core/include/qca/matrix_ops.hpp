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

#include <random>
#include <vector>

#include "qca/common.hpp"

namespace qca {

/// Kronecker product with the left factor varying slowest. This single factor
/// ordering convention is used everywhere in the library.
Mat tensor(const Mat& a, const Mat& b);
Mat tensor_list(const std::vector<Mat>& factors);

Mat identity(Eigen::Index n);

/// sigma_0 .. sigma_3 = 1, X, Y, Z.
const Mat& pauli(int k);

/// d x d matrix unit E_ij (1 in row i, column j).
Mat matrix_unit(int d, int i, int j);

double spectral_norm(const Mat& m);
double hermiticity_defect(const Mat& m);
bool is_unitary(const Mat& m, double eps = kEps);

/// Hilbert-Schmidt inner product tr(a^dag b).
cdouble hs_inner(const Mat& a, const Mat& b);

/// Multiplies by a global phase so the entry of largest magnitude becomes
/// real positive (first such entry in row-major order wins ties within 1e-12).
/// Keeps reconstructed unitaries deterministic.
Mat phase_fix(const Mat& m);

/// Difference of a and b modulo a global phase, in the spectral norm.
double phase_invariant_distance(const Mat& a, const Mat& b);

// -- Tensor-leg bookkeeping -------------------------------------------------
//
// An operator on C^{dims[0]} x ... x C^{dims[k-1]} is stored as a dense matrix
// whose row/column index has the leg 0 digit varying slowest.

/// Reorders tensor legs: output leg p is input leg perm[p].
Mat permute_tensor_legs(const Mat& m, const std::vector<Eigen::Index>& dims,
                        const std::vector<int>& perm);

/// Builds op (acting on the listed legs, in that order) tensored with the
/// identity on all remaining legs.
Mat embed_on_legs(const Mat& op, const std::vector<int>& legs,
                  const std::vector<Eigen::Index>& dims);

/// Applies op (acting on the listed legs) to a state vector without forming
/// the embedded matrix.
Vec apply_on_legs(const Mat& op, const std::vector<int>& legs,
                  const std::vector<Eigen::Index>& dims, const Vec& v);

/// Partial trace over the listed legs (unnormalized).
Mat partial_trace(const Mat& m, const std::vector<Eigen::Index>& dims,
                  const std::vector<int>& traced_legs);

// -- Operator-space spans ----------------------------------------------------

/// Orthonormal basis (Hilbert-Schmidt) of the span of the given matrices.
/// Rank is decided by singular values >= kRankTol * largest.
std::vector<Mat> orthonormal_span(const std::vector<Mat>& elements);

/// Orthogonal projection of x onto the span of an orthonormal family.
Mat project_onto_span(const std::vector<Mat>& onb, const Mat& x);

/// Spectral-norm distance of x from the span of an orthonormal family.
double distance_from_span(const std::vector<Mat>& onb, const Mat& x);

// -- Deterministic pseudo-randomness -----------------------------------------

/// All randomized internals draw from an explicitly seeded generator so that
/// results are reproducible byte for byte.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform(double lo = 0.0, double hi = 1.0);
  double gaussian();
  cdouble complex_gaussian();
  int uniform_int(int lo, int hi);  // inclusive bounds
  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

Mat random_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng);
Mat random_hermitian(Eigen::Index n, Rng& rng);
/// Haar-distributed unitary via QR of a Ginibre matrix.
Mat random_unitary(Eigen::Index n, Rng& rng);

}  // namespace qca
