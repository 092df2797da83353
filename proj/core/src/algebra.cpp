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

#include "qca/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace qca {

namespace {

// Seed for the deterministic generic elements used inside decompositions.
constexpr std::uint64_t kAlgebraSeed = 0x51ab5u;

void require_square_same(const std::vector<Mat>& elems, const char* what) {
  if (elems.empty()) throw std::invalid_argument(std::string(what) + ": empty input");
  const Eigen::Index n = elems[0].rows();
  for (const Mat& m : elems)
    if (m.rows() != n || m.cols() != n)
      throw std::invalid_argument(std::string(what) + ": matrices must be square and equal-sized");
}

}  // namespace

ClosureReport check_closure(const MatrixAlgebra& alg) {
  ClosureReport rep;
  for (const Mat& b : alg.basis)
    rep.adjoint_residual =
        std::max(rep.adjoint_residual, distance_from_span(alg.basis, b.adjoint()));
  for (const Mat& a : alg.basis)
    for (const Mat& b : alg.basis)
      rep.product_residual =
          std::max(rep.product_residual, distance_from_span(alg.basis, a * b));
  return rep;
}

std::vector<Mat> support_space_multi(const std::vector<Mat>& span_set,
                                     const std::vector<Eigen::Index>& factor_dims,
                                     int which) {
  require_square_same(span_set, "support_space");
  Eigen::Index total = 1;
  for (auto d : factor_dims) total *= d;
  if (span_set[0].rows() != total)
    throw std::invalid_argument("support_space: factor dimensions do not match matrices");
  if (which < 0 || which >= static_cast<int>(factor_dims.size()))
    throw std::invalid_argument("support_space: factor index out of range");

  const Eigen::Index df = factor_dims[which];
  const Eigen::Index dr = total / df;

  // Realign each operator M into a (df^2) x (dr^2) matrix R with
  // R[(i_f, j_f), (i_r, j_r)] = M[(i,f interleaved), ...]; the column space of
  // R is then exactly the span of the expansion coefficients on the factor.
  auto strides = [&]() {
    std::vector<Eigen::Index> s(factor_dims.size());
    Eigen::Index acc = 1;
    for (int k = static_cast<int>(factor_dims.size()) - 1; k >= 0; --k) {
      s[k] = acc;
      acc *= factor_dims[k];
    }
    return s;
  }();

  // Enumerate rest-indices: full index = f_digit * stride[which] + rest.
  std::vector<Eigen::Index> rest_offsets;
  rest_offsets.reserve(dr);
  {
    std::vector<Eigen::Index> digits(factor_dims.size(), 0);
    while (true) {
      Eigen::Index off = 0;
      for (std::size_t k = 0; k < factor_dims.size(); ++k)
        if (static_cast<int>(k) != which) off += digits[k] * strides[k];
      rest_offsets.push_back(off);
      int k = static_cast<int>(factor_dims.size()) - 1;
      for (; k >= 0; --k) {
        if (k == which) continue;
        if (++digits[k] < factor_dims[k]) break;
        digits[k] = 0;
      }
      if (k < 0) break;
    }
  }

  Mat stacked(df * df, static_cast<Eigen::Index>(span_set.size()) * dr * dr);
  Eigen::Index col = 0;
  for (const Mat& m : span_set) {
    for (Eigen::Index ir = 0; ir < dr; ++ir)
      for (Eigen::Index jr = 0; jr < dr; ++jr) {
        for (Eigen::Index i = 0; i < df; ++i)
          for (Eigen::Index j = 0; j < df; ++j)
            stacked(i * df + j, col) =
                m(i * strides[which] + rest_offsets[ir], j * strides[which] + rest_offsets[jr]);
        ++col;
      }
  }

  Eigen::BDCSVD<Mat> svd(stacked, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return {};
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv(rank) >= kRankTol * sv(0)) ++rank;

  std::vector<Mat> out;
  out.reserve(rank);
  for (Eigen::Index k = 0; k < rank; ++k) {
    Mat coeff(df, df);
    for (Eigen::Index i = 0; i < df; ++i)
      for (Eigen::Index j = 0; j < df; ++j) coeff(i, j) = svd.matrixU()(i * df + j, k);
    out.push_back(coeff);
  }
  return out;
}

std::vector<Mat> support_space(const std::vector<Mat>& span_set, Side side,
                               Eigen::Index dim_left, Eigen::Index dim_right) {
  return support_space_multi(span_set, {dim_left, dim_right},
                             side == Side::kLeft ? 0 : 1);
}

MatrixAlgebra algebra_from_span(const std::vector<Mat>& span_set,
                                Eigen::Index ambient_dim) {
  MatrixAlgebra alg;
  alg.ambient_dim = ambient_dim;
  alg.basis = orthonormal_span(span_set);
  return alg;
}

MatrixAlgebra generated_algebra(const std::vector<Mat>& span_set) {
  require_square_same(span_set, "generated_algebra");
  const Eigen::Index n = span_set[0].rows();

  std::vector<Mat> gen = span_set;
  for (const Mat& m : span_set) gen.push_back(m.adjoint());
  std::vector<Mat> basis = orthonormal_span(gen);

  while (true) {
    const std::size_t before = basis.size();
    std::vector<Mat> augmented = basis;
    for (const Mat& a : basis)
      for (const Mat& b : basis) augmented.push_back(a * b);
    basis = orthonormal_span(augmented);
    if (basis.size() == before) break;
    if (basis.size() > static_cast<std::size_t>(n) * n)
      throw std::runtime_error("generated_algebra: dimension overflow");
  }

  MatrixAlgebra alg;
  alg.ambient_dim = n;
  alg.basis = std::move(basis);
  return alg;
}

std::vector<std::pair<double, Mat>> spectral_projections(const Mat& h, double gap) {
  const double defect = hermiticity_defect(h);
  if (defect > kEps)
    throw std::invalid_argument("spectral_projections: input not Hermitian, defect " +
                                std::to_string(defect));
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (h + h.adjoint()));
  const auto& vals = es.eigenvalues();   // ascending
  const auto& vecs = es.eigenvectors();

  std::vector<std::pair<double, Mat>> out;
  Eigen::Index k = 0;
  while (k < vals.size()) {
    Eigen::Index j = k + 1;
    while (j < vals.size() && vals(j) - vals(j - 1) <= gap) ++j;
    Mat p = Mat::Zero(h.rows(), h.cols());
    double mean = 0;
    for (Eigen::Index t = k; t < j; ++t) {
      p += vecs.col(t) * vecs.col(t).adjoint();
      mean += vals(t);
    }
    mean /= static_cast<double>(j - k);
    out.emplace_back(mean, p);
    k = j;
  }
  std::reverse(out.begin(), out.end());  // descending eigenvalues
  return out;
}

Mat range_isometry(const Mat& projection, double tol) {
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (projection + projection.adjoint()));
  std::vector<Eigen::Index> keep;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k)
    if (es.eigenvalues()(k) > 1.0 - tol) keep.push_back(k);
  Mat iso(projection.rows(), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t c = 0; c < keep.size(); ++c) iso.col(c) = es.eigenvectors().col(keep[c]);
  return iso;
}

namespace {

// Hermitian orthonormal basis of a *-closed span.
std::vector<Mat> hermitian_basis(const std::vector<Mat>& basis) {
  std::vector<Mat> herm;
  for (const Mat& b : basis) {
    herm.push_back(0.5 * (b + b.adjoint()));
    herm.push_back(cdouble(0, 0.5) * (b - b.adjoint()));
  }
  return orthonormal_span(herm);
}

// Generic Hermitian element with deterministic pseudo-random coefficients.
Mat generic_hermitian(const std::vector<Mat>& herm_basis, Rng& rng) {
  Mat acc = Mat::Zero(herm_basis[0].rows(), herm_basis[0].cols());
  for (const Mat& h : herm_basis) acc += rng.uniform(-1.0, 1.0) * (0.5 * (h + h.adjoint()));
  return 0.5 * (acc + acc.adjoint());
}

Mat generic_element(const std::vector<Mat>& basis, Rng& rng) {
  Mat acc = Mat::Zero(basis[0].rows(), basis[0].cols());
  for (const Mat& b : basis) acc += cdouble(rng.uniform(-1, 1), rng.uniform(-1, 1)) * b;
  return acc;
}

// Unit of the algebra: the support projection of sum b b^dag. For a *-closed
// algebra this acts as a two-sided identity on every element.
Mat support_projection(const std::vector<Mat>& basis) {
  Mat s = Mat::Zero(basis[0].rows(), basis[0].cols());
  for (const Mat& b : basis) s += b * b.adjoint();
  Eigen::SelfAdjointEigenSolver<Mat> es(s);
  const double top = es.eigenvalues().maxCoeff();
  Mat p = Mat::Zero(s.rows(), s.cols());
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k)
    if (es.eigenvalues()(k) > kRankTol * std::max(top, 1.0))
      p += es.eigenvectors().col(k) * es.eigenvectors().col(k).adjoint();
  return p;
}

// Basis of the center: elements commuting with every basis element.
std::vector<Mat> center_basis(const std::vector<Mat>& basis) {
  const Eigen::Index m = static_cast<Eigen::Index>(basis.size());
  const Eigen::Index n = basis[0].rows();
  Mat constraints(n * n * m, m);
  for (Eigen::Index k = 0; k < m; ++k) {
    for (Eigen::Index j = 0; j < m; ++j) {
      Mat comm = basis[k] * basis[j] - basis[j] * basis[k];
      constraints.block(j * n * n, k, n * n, 1) = Eigen::Map<Vec>(comm.data(), n * n);
    }
  }
  Eigen::BDCSVD<Mat> svd(constraints, Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double top = sv.size() ? sv(0) : 0.0;
  std::vector<Mat> out;
  for (Eigen::Index k = 0; k < sv.size(); ++k) {
    if (top > 0 && sv(k) > 1e-7 * std::max(top, 1.0)) continue;
    Mat z = Mat::Zero(n, n);
    for (Eigen::Index j = 0; j < m; ++j) z += svd.matrixV()(j, k) * basis[j];
    out.push_back(z);
  }
  return orthonormal_span(out);
}

struct FactorBasis {
  int n = 0;
  int multiplicity = 0;
  std::vector<Vec> columns;  // multiplicity * n orthonormal vectors, mult-major
};

// Splits a factor (trivial-center) algebra, given by an orthonormal basis on
// its own D-dimensional space, into matrix units, and returns the basis in
// which elements look like 1_mult (x) M_n.
FactorBasis factor_basis(const std::vector<Mat>& compressed, Rng& rng) {
  const Eigen::Index D = compressed[0].rows();
  const Eigen::Index adim = static_cast<Eigen::Index>(compressed.size());
  const int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(adim))));
  if (static_cast<Eigen::Index>(n) * n != adim)
    throw std::runtime_error("decompose: block dimension is not a perfect square");
  if (D % n != 0)
    throw std::runtime_error("decompose: block multiplicity is not integral");
  const int mult = static_cast<int>(D) / n;

  std::vector<Mat> herm = hermitian_basis(compressed);

  // Minimal projections q_i from a generic Hermitian element.
  std::vector<Mat> q;
  for (int attempt = 0; attempt < 32; ++attempt) {
    Mat g = generic_hermitian(herm, rng);
    auto spects = spectral_projections(g, kSpectralGap);
    if (static_cast<int>(spects.size()) != n) continue;
    bool ranks_ok = true;
    for (auto& [val, p] : spects)
      if (std::lround(p.trace().real()) != mult) ranks_ok = false;
    if (!ranks_ok) continue;
    q.clear();
    for (auto& [val, p] : spects) q.push_back(p);
    break;
  }
  if (static_cast<int>(q.size()) != n)
    throw std::runtime_error("decompose: failed to split a factor into minimal projections");

  // Partial isometries e_{1i} = q_1 a q_i polar-decomposed inside the algebra.
  std::vector<Mat> e1i(n);
  e1i[0] = q[0];
  for (int i = 1; i < n; ++i) {
    Mat w;
    bool found = false;
    for (int attempt = 0; attempt < 32 && !found; ++attempt) {
      Mat a = generic_element(compressed, rng);
      w = q[0] * a * q[i];
      Eigen::SelfAdjointEigenSolver<Mat> es(w.adjoint() * w);
      int rank = 0;
      const double top = es.eigenvalues().maxCoeff();
      for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k)
        if (es.eigenvalues()(k) > 1e-10 * std::max(top, 1.0)) ++rank;
      if (rank == mult) {
        // w (w^dag w)^{-1/2} restricted to the support of w^dag w.
        Mat inv_sqrt = Mat::Zero(D, D);
        for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k)
          if (es.eigenvalues()(k) > 1e-10 * std::max(top, 1.0))
            inv_sqrt += (1.0 / std::sqrt(es.eigenvalues()(k))) *
                        es.eigenvectors().col(k) * es.eigenvectors().col(k).adjoint();
        e1i[i] = w * inv_sqrt;
        found = true;
      }
    }
    if (!found)
      throw std::runtime_error("decompose: failed to build matrix units in a factor");
  }

  // Orthonormal frame of range(q_1), then the full basis e_{i1} f_alpha.
  Mat frame = range_isometry(q[0]);
  if (frame.cols() != mult)
    throw std::runtime_error("decompose: unexpected minimal projection rank");

  FactorBasis out;
  out.n = n;
  out.multiplicity = mult;
  for (int alpha = 0; alpha < mult; ++alpha)
    for (int i = 0; i < n; ++i) out.columns.push_back(e1i[i].adjoint() * frame.col(alpha));
  return out;
}

}  // namespace

AlgebraBlockStructure decompose(const MatrixAlgebra& alg) {
  if (alg.basis.empty()) throw std::invalid_argument("decompose: empty algebra");
  require_square_same(alg.basis, "decompose");
  const Eigen::Index D = alg.ambient_dim;
  if (alg.basis[0].rows() != D)
    throw std::invalid_argument("decompose: ambient dimension mismatch");

  ClosureReport closure = check_closure(alg);
  if (closure.adjoint_residual > kEps) {
    std::ostringstream os;
    os << "decompose: algebra not closed under adjoints, residual "
       << closure.adjoint_residual;
    throw std::invalid_argument(os.str());
  }
  if (closure.product_residual > kEps) {
    std::ostringstream os;
    os << "decompose: algebra not closed under products, residual "
       << closure.product_residual;
    throw std::invalid_argument(os.str());
  }

  Rng rng(kAlgebraSeed);

  // Adjoin the unit (support projection) if it is missing from the span.
  std::vector<Mat> basis = alg.basis;
  Mat unit = support_projection(basis);
  if (distance_from_span(basis, unit) > kEps) {
    basis.push_back(unit);
    basis = orthonormal_span(basis);
  }
  const Eigen::Index kernel_dim = D - static_cast<Eigen::Index>(std::lround(unit.trace().real()));

  // Central projections from a generic Hermitian central element.
  std::vector<Mat> center = center_basis(basis);
  const int expected_blocks = static_cast<int>(center.size());
  std::vector<Mat> herm_center = hermitian_basis(center);

  std::vector<Mat> central_projections;
  for (int attempt = 0; attempt < 32; ++attempt) {
    Mat g = generic_hermitian(herm_center, rng);
    // Work inside the unit: add a far-away level on the kernel so clustering
    // never mixes kernel with algebra levels.
    Mat shifted = g + 1e6 * (identity(D) - unit);
    auto spects = spectral_projections(shifted, kSpectralGap);
    std::vector<Mat> candidates;
    for (auto& [val, p] : spects) {
      if (val > 1e5) continue;  // kernel level
      candidates.push_back(p);
    }
    if (static_cast<int>(candidates.size()) != expected_blocks) continue;
    bool ok = true;
    for (const Mat& p : candidates)
      if (distance_from_span(center, p) > 1e-7) ok = false;
    if (!ok) continue;
    central_projections = std::move(candidates);
    break;
  }
  if (central_projections.empty())
    throw std::runtime_error("decompose: failed to separate central projections");

  // Decompose each block on its own compressed space.
  struct BlockData {
    AlgebraBlock block;
    Mat isometry;           // D x (mult*n), columns mult-major
    std::vector<Vec> cols;  // columns in the ambient space
  };
  std::vector<BlockData> data;
  for (const Mat& z : central_projections) {
    Mat iso = range_isometry(z);
    const Eigen::Index bd = iso.cols();
    std::vector<Mat> compressed;
    for (const Mat& b : basis) {
      Mat c = iso.adjoint() * b * iso;
      if (c.norm() > 1e-10) compressed.push_back(c);
    }
    compressed = orthonormal_span(compressed);
    FactorBasis fb = factor_basis(compressed, rng);
    if (static_cast<Eigen::Index>(fb.n) * fb.multiplicity != bd)
      throw std::runtime_error("decompose: block dimension bookkeeping failed");
    BlockData bd_out;
    bd_out.block.n = fb.n;
    bd_out.block.multiplicity = fb.multiplicity;
    bd_out.block.central_projection = z;
    for (const Vec& v : fb.columns) bd_out.cols.push_back(iso * v);
    data.push_back(std::move(bd_out));
  }

  std::stable_sort(data.begin(), data.end(), [](const BlockData& a, const BlockData& b) {
    return a.block.n > b.block.n;
  });

  AlgebraBlockStructure out;
  out.kernel_dim = kernel_dim;
  Mat change(D, D);
  Eigen::Index col = 0;
  for (auto& bd : data) {
    out.blocks.push_back(bd.block);
    for (const Vec& v : bd.cols) change.col(col++) = v;
  }
  if (kernel_dim > 0) {
    Mat kiso = range_isometry(identity(D) - unit);
    for (Eigen::Index k = 0; k < kiso.cols(); ++k) change.col(col++) = kiso.col(k);
  }
  if (col != D) throw std::runtime_error("decompose: basis column count mismatch");
  out.basis_change = change;
  return out;
}

CommutingFactorization commuting_factorization(const MatrixAlgebra& a,
                                               const MatrixAlgebra& b) {
  if (a.ambient_dim != b.ambient_dim)
    throw std::invalid_argument("commuting_factorization: ambient dimension mismatch");
  double comm = 0.0;
  for (const Mat& x : a.basis)
    for (const Mat& y : b.basis)
      comm = std::max(comm, spectral_norm(x * y - y * x));
  if (comm > kEps) {
    std::ostringstream os;
    os << "commuting_factorization: inputs do not commute, residual " << comm;
    throw std::invalid_argument(os.str());
  }

  AlgebraBlockStructure da = decompose(a);
  AlgebraBlockStructure db = decompose(b);

  CommutingFactorization out;
  for (const auto& blk : da.blocks) out.left_dims.push_back(blk.n);
  for (const auto& blk : db.blocks) out.right_dims.push_back(blk.n);
  out.table.resize(static_cast<int>(da.blocks.size()), static_cast<int>(db.blocks.size()));
  Eigen::Index covered = 0;
  for (std::size_t i = 0; i < da.blocks.size(); ++i) {
    for (std::size_t j = 0; j < db.blocks.size(); ++j) {
      Mat prod = da.blocks[i].central_projection * db.blocks[j].central_projection;
      const double tr = prod.trace().real();
      const double denom = static_cast<double>(da.blocks[i].n) * db.blocks[j].n;
      const double r = tr / denom;
      const int ri = static_cast<int>(std::lround(r));
      if (std::abs(r - ri) > 1e-6 || ri < 0)
        throw std::runtime_error("commuting_factorization: non-integer multiplicity");
      out.table(static_cast<int>(i), static_cast<int>(j)) = ri;
      covered += static_cast<Eigen::Index>(ri) * da.blocks[i].n * db.blocks[j].n;
    }
  }
  if (covered + std::max(da.kernel_dim, db.kernel_dim) != a.ambient_dim &&
      covered != a.ambient_dim)
    throw std::runtime_error("commuting_factorization: dimension count failed");
  return out;
}

HomomorphismReport check_homomorphism(const std::vector<Mat>& images) {
  const int d2 = static_cast<int>(images.size());
  const int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(d2))));
  if (d * d != d2) throw std::invalid_argument("check_homomorphism: need d^2 images");
  require_square_same(images, "check_homomorphism");
  const Eigen::Index n = images[0].rows();

  HomomorphismReport rep;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          Mat lhs = images[i * d + j] * images[k * d + l];
          Mat rhs = (j == k) ? images[i * d + l] : Mat(Mat::Zero(n, n));
          rep.multiplicativity = std::max(rep.multiplicativity, spectral_norm(lhs - rhs));
        }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      rep.adjoint = std::max(
          rep.adjoint, spectral_norm(images[i * d + j].adjoint() - images[j * d + i]));
  Mat unit_sum = Mat::Zero(n, n);
  for (int i = 0; i < d; ++i) unit_sum += images[i * d + i];
  rep.unitality = spectral_norm(unit_sum - identity(n));
  return rep;
}

Mat unitary_from_automorphism(const std::vector<Mat>& images) {
  const int d2 = static_cast<int>(images.size());
  const int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(d2))));
  if (d * d != d2)
    throw std::invalid_argument("unitary_from_automorphism: need d^2 images");
  require_square_same(images, "unitary_from_automorphism");
  if (images[0].rows() != d)
    throw std::invalid_argument(
        "unitary_from_automorphism: images must act on the same d-dimensional space");

  HomomorphismReport rep = check_homomorphism(images);
  if (rep.max() > kEps) {
    std::ostringstream os;
    os << "unitary_from_automorphism: homomorphism residual " << rep.max()
       << " exceeds tolerance";
    throw std::invalid_argument(os.str());
  }

  // images(E_00) must be a rank-1 projection; its range seeds the columns.
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (images[0] + images[0].adjoint()));
  int rank = 0;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k)
    if (es.eigenvalues()(k) > 0.5) ++rank;
  if (rank != 1)
    throw std::invalid_argument(
        "unitary_from_automorphism: images(E_00) is not rank one (not an automorphism)");
  Vec psi = es.eigenvectors().col(es.eigenvalues().size() - 1);

  Mat v(d, d);
  for (int k = 0; k < d; ++k) v.col(k) = images[k * d + 0] * psi;
  v = phase_fix(v);

  if (!is_unitary(v, 1e-7))
    throw std::runtime_error("unitary_from_automorphism: reconstructed matrix not unitary");
  double residual = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      residual = std::max(residual,
                          spectral_norm(v * matrix_unit(d, i, j) * v.adjoint() - images[i * d + j]));
  if (residual > 1e-7)
    throw std::runtime_error("unitary_from_automorphism: image reproduction failed");
  return v;
}

}  // namespace qca
