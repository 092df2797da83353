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

#include "qca/lattice.hpp"
#include "qca/matrix_ops.hpp"

namespace qca {

/// An operator on a finite set of cells. The matrix acts on the tensor
/// product of the region's cells in lexicographic site order (first site
/// varies slowest); its dimension is cell_dim^|region|.
struct LocalOperator {
  int cell_dim = 0;
  Region region;
  Mat matrix;

  Eigen::Index dim() const { return matrix.rows(); }
};

LocalOperator make_local_operator(int cell_dim, Region region, Mat matrix);

/// Same operator on a larger region: tensors the identity onto the added
/// sites and reorders legs into lexicographic order. target must contain
/// op.region.
LocalOperator embed(const LocalOperator& op, const Region& target);

/// Drops every site on which the operator acts as the identity factor
/// (partial-trace test at tolerance eps). The identity operator trims to a
/// single-site region holding a scalar identity.
LocalOperator trim(const LocalOperator& op, double eps = kEps);

/// Spectral-norm deviation of op from (identity on site) x (rest); used by
/// locality checks.
double triviality_defect(const LocalOperator& op, const Site& site);

LocalOperator translate(const LocalOperator& op, const Site& t);

/// a * b as an operator on the union region.
LocalOperator local_product(const LocalOperator& a, const LocalOperator& b);

/// a + b on the union region.
LocalOperator local_sum(const LocalOperator& a, const LocalOperator& b);

LocalOperator local_scale(const LocalOperator& a, cdouble factor);

/// Spectral-norm distance between two local operators, compared on the union
/// of their regions.
double local_distance(const LocalOperator& a, const LocalOperator& b);

}  // namespace qca
