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

#include "qca/matrix_ops.hpp"

#include <algorithm>
#include <numeric>

#include <Eigen/SVD>

namespace qca {

Mat tensor(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Mat tensor_list(const std::vector<Mat>& factors) {
  if (factors.empty()) return Mat::Identity(1, 1);
  Mat out = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) out = tensor(out, factors[k]);
  return out;
}

Mat identity(Eigen::Index n) { return Mat::Identity(n, n); }

const Mat& pauli(int k) {
  static const Mat sigma[4] = {
      (Mat(2, 2) << 1, 0, 0, 1).finished(),
      (Mat(2, 2) << 0, 1, 1, 0).finished(),
      (Mat(2, 2) << 0, cdouble(0, -1), cdouble(0, 1), 0).finished(),
      (Mat(2, 2) << 1, 0, 0, -1).finished()};
  if (k < 0 || k > 3) throw std::invalid_argument("pauli index out of range");
  return sigma[k];
}

Mat matrix_unit(int d, int i, int j) {
  Mat e = Mat::Zero(d, d);
  e(i, j) = 1.0;
  return e;
}

double spectral_norm(const Mat& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Mat> svd(m);
  return svd.singularValues()(0);
}

double hermiticity_defect(const Mat& m) { return spectral_norm(m - m.adjoint()); }

bool is_unitary(const Mat& m, double eps) {
  if (m.rows() != m.cols()) return false;
  return spectral_norm(m.adjoint() * m - identity(m.rows())) <= eps;
}

cdouble hs_inner(const Mat& a, const Mat& b) {
  return (a.adjoint() * b).trace();
}

Mat phase_fix(const Mat& m) {
  double best = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      best = std::max(best, std::abs(m(i, j)));
  if (best == 0.0) return m;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (std::abs(m(i, j)) >= best - 1e-12) {
        cdouble ph = m(i, j) / std::abs(m(i, j));
        return m / ph;
      }
    }
  }
  return m;
}

double phase_invariant_distance(const Mat& a, const Mat& b) {
  cdouble ip = hs_inner(a, b);
  cdouble ph = std::abs(ip) > 0 ? ip / std::abs(ip) : cdouble(1, 0);
  return spectral_norm(a * ph - b);
}

namespace {

std::vector<Eigen::Index> leg_strides(const std::vector<Eigen::Index>& dims) {
  std::vector<Eigen::Index> stride(dims.size());
  Eigen::Index acc = 1;
  for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
    stride[k] = acc;
    acc *= dims[k];
  }
  return stride;
}

Eigen::Index total_dim(const std::vector<Eigen::Index>& dims) {
  Eigen::Index n = 1;
  for (auto d : dims) n *= d;
  return n;
}

}  // namespace

Mat permute_tensor_legs(const Mat& m, const std::vector<Eigen::Index>& dims,
                        const std::vector<int>& perm) {
  const Eigen::Index n = total_dim(dims);
  if (m.rows() != n || m.cols() != n)
    throw std::invalid_argument("permute_tensor_legs: dimension mismatch");
  std::vector<Eigen::Index> out_dims(dims.size());
  for (std::size_t p = 0; p < perm.size(); ++p) out_dims[p] = dims[perm[p]];
  auto in_stride = leg_strides(dims);
  auto out_stride = leg_strides(out_dims);
  // index map: out index -> in index
  std::vector<Eigen::Index> map(n);
  std::vector<Eigen::Index> digit(dims.size(), 0);
  for (Eigen::Index out = 0; out < n; ++out) {
    Eigen::Index rem = out;
    Eigen::Index in = 0;
    for (std::size_t p = 0; p < out_dims.size(); ++p) {
      digit[p] = rem / out_stride[p];
      rem %= out_stride[p];
      in += digit[p] * in_stride[perm[p]];
    }
    map[out] = in;
  }
  Mat out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = m(map[i], map[j]);
  return out;
}

Mat embed_on_legs(const Mat& op, const std::vector<int>& legs,
                  const std::vector<Eigen::Index>& dims) {
  const Eigen::Index n = total_dim(dims);
  std::vector<Eigen::Index> op_dims;
  for (int l : legs) op_dims.push_back(dims[l]);
  const Eigen::Index k = total_dim(op_dims);
  if (op.rows() != k || op.cols() != k)
    throw std::invalid_argument("embed_on_legs: operator size mismatch");

  auto stride = leg_strides(dims);
  // Strides of the op legs inside the big index, and of the identity legs.
  std::vector<Eigen::Index> id_legs;
  for (int l = 0; l < static_cast<int>(dims.size()); ++l)
    if (std::find(legs.begin(), legs.end(), l) == legs.end()) id_legs.push_back(l);

  Eigen::Index id_count = 1;
  for (auto l : id_legs) id_count *= dims[l];

  // big index = op part + id part
  auto op_index = [&](Eigen::Index a) {
    Eigen::Index idx = 0;
    for (int p = static_cast<int>(legs.size()) - 1; p >= 0; --p) {
      idx += (a % op_dims[p]) * stride[legs[p]];
      a /= op_dims[p];
    }
    return idx;
  };
  auto id_index = [&](Eigen::Index a) {
    Eigen::Index idx = 0;
    for (int p = static_cast<int>(id_legs.size()) - 1; p >= 0; --p) {
      idx += (a % dims[id_legs[p]]) * stride[id_legs[p]];
      a /= dims[id_legs[p]];
    }
    return idx;
  };

  Mat out = Mat::Zero(n, n);
  for (Eigen::Index a = 0; a < k; ++a) {
    const Eigen::Index ra = op_index(a);
    for (Eigen::Index b = 0; b < k; ++b) {
      const cdouble val = op(a, b);
      if (val == cdouble(0, 0)) continue;
      const Eigen::Index cb = op_index(b);
      for (Eigen::Index e = 0; e < id_count; ++e) {
        const Eigen::Index ie = id_index(e);
        out(ra + ie, cb + ie) = val;
      }
    }
  }
  return out;
}

Vec apply_on_legs(const Mat& op, const std::vector<int>& legs,
                  const std::vector<Eigen::Index>& dims, const Vec& v) {
  const Eigen::Index n = total_dim(dims);
  if (v.size() != n) throw std::invalid_argument("apply_on_legs: vector size mismatch");
  std::vector<Eigen::Index> op_dims;
  for (int l : legs) op_dims.push_back(dims[l]);
  const Eigen::Index k = total_dim(op_dims);
  if (op.rows() != k || op.cols() != k)
    throw std::invalid_argument("apply_on_legs: operator size mismatch");

  auto stride = leg_strides(dims);
  std::vector<Eigen::Index> id_legs;
  for (int l = 0; l < static_cast<int>(dims.size()); ++l)
    if (std::find(legs.begin(), legs.end(), l) == legs.end()) id_legs.push_back(l);
  Eigen::Index id_count = 1;
  for (auto l : id_legs) id_count *= dims[l];

  auto op_index = [&](Eigen::Index a) {
    Eigen::Index idx = 0;
    for (int p = static_cast<int>(legs.size()) - 1; p >= 0; --p) {
      idx += (a % op_dims[p]) * stride[legs[p]];
      a /= op_dims[p];
    }
    return idx;
  };
  auto id_index = [&](Eigen::Index a) {
    Eigen::Index idx = 0;
    for (int p = static_cast<int>(id_legs.size()) - 1; p >= 0; --p) {
      idx += (a % dims[id_legs[p]]) * stride[id_legs[p]];
      a /= dims[id_legs[p]];
    }
    return idx;
  };

  std::vector<Eigen::Index> op_offsets(k);
  for (Eigen::Index a = 0; a < k; ++a) op_offsets[a] = op_index(a);

  Vec out = Vec::Zero(n);
  Vec slice(k);
  for (Eigen::Index e = 0; e < id_count; ++e) {
    const Eigen::Index ie = id_index(e);
    for (Eigen::Index a = 0; a < k; ++a) slice(a) = v(op_offsets[a] + ie);
    Vec res = op * slice;
    for (Eigen::Index a = 0; a < k; ++a) out(op_offsets[a] + ie) = res(a);
  }
  return out;
}

Mat partial_trace(const Mat& m, const std::vector<Eigen::Index>& dims,
                  const std::vector<int>& traced_legs) {
  const Eigen::Index n = total_dim(dims);
  if (m.rows() != n || m.cols() != n)
    throw std::invalid_argument("partial_trace: dimension mismatch");
  std::vector<int> kept;
  for (int l = 0; l < static_cast<int>(dims.size()); ++l)
    if (std::find(traced_legs.begin(), traced_legs.end(), l) == traced_legs.end())
      kept.push_back(l);

  auto stride = leg_strides(dims);
  std::vector<Eigen::Index> kept_dims;
  for (int l : kept) kept_dims.push_back(dims[l]);
  const Eigen::Index nk = total_dim(kept_dims);
  Eigen::Index nt = 1;
  for (int l : traced_legs) nt *= dims[l];

  auto kept_index = [&](Eigen::Index a) {
    Eigen::Index idx = 0;
    for (int p = static_cast<int>(kept.size()) - 1; p >= 0; --p) {
      idx += (a % dims[kept[p]]) * stride[kept[p]];
      a /= dims[kept[p]];
    }
    return idx;
  };
  auto traced_index = [&](Eigen::Index a) {
    Eigen::Index idx = 0;
    for (int p = static_cast<int>(traced_legs.size()) - 1; p >= 0; --p) {
      idx += (a % dims[traced_legs[p]]) * stride[traced_legs[p]];
      a /= dims[traced_legs[p]];
    }
    return idx;
  };

  Mat out = Mat::Zero(nk, nk);
  for (Eigen::Index i = 0; i < nk; ++i) {
    const Eigen::Index ri = kept_index(i);
    for (Eigen::Index j = 0; j < nk; ++j) {
      const Eigen::Index cj = kept_index(j);
      cdouble acc = 0;
      for (Eigen::Index t = 0; t < nt; ++t) {
        const Eigen::Index it = traced_index(t);
        acc += m(ri + it, cj + it);
      }
      out(i, j) = acc;
    }
  }
  return out;
}

std::vector<Mat> orthonormal_span(const std::vector<Mat>& elements) {
  if (elements.empty()) return {};
  const Eigen::Index r = elements[0].rows();
  const Eigen::Index c = elements[0].cols();
  Mat stacked(r * c, static_cast<Eigen::Index>(elements.size()));
  for (std::size_t k = 0; k < elements.size(); ++k) {
    if (elements[k].rows() != r || elements[k].cols() != c)
      throw std::invalid_argument("orthonormal_span: mixed matrix sizes");
    stacked.col(static_cast<Eigen::Index>(k)) =
        Eigen::Map<const Vec>(elements[k].data(), r * c);
  }
  Eigen::BDCSVD<Mat> svd(stacked, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return {};
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv(rank) >= kRankTol * sv(0)) ++rank;
  std::vector<Mat> out;
  out.reserve(rank);
  for (Eigen::Index k = 0; k < rank; ++k) {
    Vec col = svd.matrixU().col(k);
    out.push_back(Eigen::Map<const Mat>(col.data(), r, c));
  }
  return out;
}

Mat project_onto_span(const std::vector<Mat>& onb, const Mat& x) {
  Mat acc = Mat::Zero(x.rows(), x.cols());
  for (const Mat& b : onb) acc += hs_inner(b, x) * b;
  return acc;
}

double distance_from_span(const std::vector<Mat>& onb, const Mat& x) {
  return spectral_norm(x - project_onto_span(onb, x));
}

double Rng::uniform(double lo, double hi) {
  std::uniform_real_distribution<double> d(lo, hi);
  return d(gen_);
}

double Rng::gaussian() {
  std::normal_distribution<double> d(0.0, 1.0);
  return d(gen_);
}

cdouble Rng::complex_gaussian() { return {gaussian(), gaussian()}; }

int Rng::uniform_int(int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  return d(gen_);
}

Mat random_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  Mat m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = rng.complex_gaussian();
  return m;
}

Mat random_hermitian(Eigen::Index n, Rng& rng) {
  Mat m = random_matrix(n, n, rng);
  return 0.5 * (m + m.adjoint());
}

Mat random_unitary(Eigen::Index n, Rng& rng) {
  Mat g = random_matrix(n, n, rng);
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Normalize the diagonal phases so the distribution is Haar.
  for (Eigen::Index k = 0; k < n; ++k) {
    cdouble d = r(k, k);
    q.col(k) *= (std::abs(d) > 0 ? d / std::abs(d) : cdouble(1, 0));
  }
  return q;
}

}  // namespace qca
