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

#include "qca/local_operator.hpp"

#include <cmath>

namespace qca {

namespace {

Eigen::Index pow_ll(Eigen::Index base, int exp) {
  Eigen::Index r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

LocalOperator make_local_operator(int cell_dim, Region region, Mat matrix) {
  LocalOperator op{cell_dim, std::move(region), std::move(matrix)};
  const Eigen::Index want = pow_ll(cell_dim, op.region.size());
  if (op.matrix.rows() != want || op.matrix.cols() != want)
    throw std::invalid_argument("local operator: matrix size " +
                                std::to_string(op.matrix.rows()) +
                                " does not match cell_dim^|region| = " +
                                std::to_string(want));
  return op;
}

LocalOperator embed(const LocalOperator& op, const Region& target) {
  if (op.region == target) return op;
  std::vector<int> legs;
  for (const Site& s : op.region.sites()) {
    int idx = target.index_of(s);
    if (idx < 0)
      throw std::invalid_argument("embed: target region does not contain " + to_string(s));
    legs.push_back(idx);
  }
  std::vector<Eigen::Index> dims(target.size(), op.cell_dim);
  return make_local_operator(op.cell_dim, target, embed_on_legs(op.matrix, legs, dims));
}

double triviality_defect(const LocalOperator& op, const Site& site) {
  const int idx = op.region.index_of(site);
  if (idx < 0) return 0.0;
  std::vector<Eigen::Index> dims(op.region.size(), op.cell_dim);
  Mat reduced = partial_trace(op.matrix, dims, {idx}) / static_cast<double>(op.cell_dim);
  std::vector<int> other_legs;
  std::vector<Eigen::Index> sub_dims;
  for (int k = 0; k < op.region.size(); ++k)
    if (k != idx) {
      other_legs.push_back(k);
      sub_dims.push_back(op.cell_dim);
    }
  Mat rebuilt = embed_on_legs(reduced, other_legs, dims);
  return spectral_norm(op.matrix - rebuilt);
}

LocalOperator trim(const LocalOperator& op, double eps) {
  LocalOperator cur = op;
  bool removed = true;
  while (removed && cur.region.size() > 1) {
    removed = false;
    for (const Site& s : cur.region.sites()) {
      if (triviality_defect(cur, s) <= eps) {
        const int idx = cur.region.index_of(s);
        std::vector<Eigen::Index> dims(cur.region.size(), cur.cell_dim);
        Mat reduced = partial_trace(cur.matrix, dims, {idx}) / static_cast<double>(cur.cell_dim);
        std::vector<Site> keep;
        for (const Site& t : cur.region.sites())
          if (!(t == s)) keep.push_back(t);
        cur = make_local_operator(cur.cell_dim, Region(std::move(keep)), std::move(reduced));
        removed = true;
        break;
      }
    }
  }
  return cur;
}

LocalOperator translate(const LocalOperator& op, const Site& t) {
  return LocalOperator{op.cell_dim, region_translate(op.region, t), op.matrix};
}

LocalOperator local_product(const LocalOperator& a, const LocalOperator& b) {
  if (a.cell_dim != b.cell_dim)
    throw std::invalid_argument("local_product: cell dimension mismatch");
  Region u = region_union(a.region, b.region);
  LocalOperator ea = embed(a, u);
  LocalOperator eb = embed(b, u);
  ea.matrix = ea.matrix * eb.matrix;
  return ea;
}

LocalOperator local_sum(const LocalOperator& a, const LocalOperator& b) {
  if (a.cell_dim != b.cell_dim)
    throw std::invalid_argument("local_sum: cell dimension mismatch");
  Region u = region_union(a.region, b.region);
  LocalOperator ea = embed(a, u);
  LocalOperator eb = embed(b, u);
  ea.matrix += eb.matrix;
  return ea;
}

LocalOperator local_scale(const LocalOperator& a, cdouble factor) {
  LocalOperator r = a;
  r.matrix *= factor;
  return r;
}

double local_distance(const LocalOperator& a, const LocalOperator& b) {
  if (a.cell_dim != b.cell_dim)
    throw std::invalid_argument("local_distance: cell dimension mismatch");
  Region u = region_union(a.region, b.region);
  return spectral_norm(embed(a, u).matrix - embed(b, u).matrix);
}

}  // namespace qca
