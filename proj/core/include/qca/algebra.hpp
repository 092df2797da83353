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

#include <optional>
#include <vector>

#include "qca/matrix_ops.hpp"

namespace qca {

/// A *-closed operator algebra given by an orthonormal (Hilbert-Schmidt)
/// basis of matrices living on an ambient space of dimension ambient_dim.
struct MatrixAlgebra {
  Eigen::Index ambient_dim = 0;
  std::vector<Mat> basis;

  Eigen::Index dim() const { return static_cast<Eigen::Index>(basis.size()); }
};

/// Largest residual of the adjoint-closure and product-closure tests.
struct ClosureReport {
  double adjoint_residual = 0.0;
  double product_residual = 0.0;
  bool closed(double eps = kEps) const {
    return adjoint_residual <= eps && product_residual <= eps;
  }
};

ClosureReport check_closure(const MatrixAlgebra& alg);

/// One Wedderburn block: an n x n matrix factor occurring with the given
/// multiplicity, selected inside the ambient space by its minimal central
/// projection.
struct AlgebraBlock {
  int n = 0;
  int multiplicity = 0;
  Mat central_projection;
};

/// Block decomposition of a *-closed algebra. Conjugating an algebra element
/// a by basis_change (basis_change^dag * a * basis_change) makes it block
/// diagonal; block mu, of size multiplicity*n, has the form 1_mult (x) M_n.
/// Blocks are sorted by n descending. For algebras whose unit is a proper
/// projection of the ambient space, the trailing kernel_dim rows/columns of
/// the rotated form vanish, and
///   sum_mu multiplicity_mu * n_mu + kernel_dim = ambient_dim.
struct AlgebraBlockStructure {
  std::vector<AlgebraBlock> blocks;
  Mat basis_change;
  Eigen::Index kernel_dim = 0;

  Eigen::Index algebra_dim() const {
    Eigen::Index d = 0;
    for (const auto& b : blocks) d += static_cast<Eigen::Index>(b.n) * b.n;
    return d;
  }
};

/// Splitting of a bipartite operator space: the ambient Hilbert space is
/// dim_left * dim_right with the left factor varying slowest.
enum class Side { kLeft, kRight };

/// Orthonormal basis of the smallest subspace of the chosen tensor factor
/// sufficient to expand every element of span_set as sum_mu a_mu (x) e_mu.
/// The result does not depend on the basis chosen for the other factor.
std::vector<Mat> support_space(const std::vector<Mat>& span_set, Side side,
                               Eigen::Index dim_left, Eigen::Index dim_right);

/// Multi-factor variant: support on factor `which` of a chain of factors.
std::vector<Mat> support_space_multi(const std::vector<Mat>& span_set,
                                     const std::vector<Eigen::Index>& factor_dims,
                                     int which);

/// Smallest adjoint- and multiplication-closed linear subspace containing the
/// inputs, computed by alternating product augmentation and linear closure.
MatrixAlgebra generated_algebra(const std::vector<Mat>& span_set);

MatrixAlgebra algebra_from_span(const std::vector<Mat>& span_set,
                                Eigen::Index ambient_dim);

/// Wedderburn-style block decomposition. If the unit of the algebra is a
/// proper projection, it is adjoined (support projection) and the complement
/// is reported as kernel_dim. Throws std::invalid_argument when the input is
/// not adjoint/product closed, naming the failed closure test and residual.
AlgebraBlockStructure decompose(const MatrixAlgebra& alg);

/// Multiplicity table r of a commuting pair of algebras: block mu of A and
/// block nu of B meet in r(mu,nu) joint copies, so that
///   sum_{mu,nu} r(mu,nu) n(mu) m(nu) = ambient_dim.
/// Throws if the algebras fail to commute elementwise.
struct CommutingFactorization {
  std::vector<int> left_dims;   // n(mu)
  std::vector<int> right_dims;  // m(nu)
  Eigen::MatrixXi table;        // r(mu, nu)
};
CommutingFactorization commuting_factorization(const MatrixAlgebra& a,
                                               const MatrixAlgebra& b);

/// Reconstructs the unitary v with images(a) = v a v^dag from the images of
/// the d^2 matrix units of M_d (images[i*d+j] is the image of E_ij). The
/// global phase is fixed by phase_fix. Throws when the images fail the
/// unital *-homomorphism checks or images(E_00) is not rank one.
Mat unitary_from_automorphism(const std::vector<Mat>& images);

/// Homomorphism residuals for a candidate set of matrix-unit images
/// M_d -> M_n (images may act on a larger space than d).
struct HomomorphismReport {
  double multiplicativity = 0.0;
  double adjoint = 0.0;
  double unitality = 0.0;
  double max() const { return std::max({multiplicativity, adjoint, unitality}); }
};
HomomorphismReport check_homomorphism(const std::vector<Mat>& images);

/// Spectral decomposition h = sum_l a_l p_l of a Hermitian matrix with
/// eigenvalues clustered at gap tolerance `gap`. Projections are mutually
/// orthogonal and sum to the identity. Eigenvalues are returned descending.
std::vector<std::pair<double, Mat>> spectral_projections(
    const Mat& h, double gap = kSpectralGap);

/// Isometry onto the range of a Hermitian projection-like matrix: columns
/// are the eigenvectors with eigenvalue near 1.
Mat range_isometry(const Mat& projection, double tol = 1e-6);

}  // namespace qca
