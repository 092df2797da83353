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

#include <cstdint>
#include <vector>

#include "qca/common.hpp"

namespace qca {

/// A lattice site: an integer vector of fixed spatial dimension s >= 1.
struct Site {
  std::vector<std::int64_t> x;

  Site() = default;
  explicit Site(std::vector<std::int64_t> coords) : x(std::move(coords)) {}
  static Site of(std::initializer_list<std::int64_t> coords) {
    return Site(std::vector<std::int64_t>(coords));
  }

  int dim() const { return static_cast<int>(x.size()); }
  bool operator==(const Site& o) const { return x == o.x; }
  bool operator<(const Site& o) const { return x < o.x; }  // lexicographic
  Site operator+(const Site& o) const;
  Site operator-(const Site& o) const;
  Site operator-() const;
};

std::string to_string(const Site& s);

/// A finite set of sites, kept sorted lexicographically and duplicate-free.
class Region {
 public:
  Region() = default;
  explicit Region(std::vector<Site> sites);
  static Region of_1d(std::initializer_list<std::int64_t> offsets);
  static Region single(Site s) { return Region({std::move(s)}); }

  const std::vector<Site>& sites() const { return sites_; }
  int size() const { return static_cast<int>(sites_.size()); }
  bool empty() const { return sites_.empty(); }
  int dim() const { return sites_.empty() ? 0 : sites_[0].dim(); }
  bool contains(const Site& s) const;
  /// Index of s within the sorted site list, or -1.
  int index_of(const Site& s) const;

  bool operator==(const Region& o) const { return sites_ == o.sites_; }

 private:
  std::vector<Site> sites_;
};

std::string to_string(const Region& r);

enum class RegionOp { kSum, kDifference };

/// Minkowski sum {x+y} or difference {x-y}, deduplicated and sorted.
Region region_arith(const Region& a, const Region& b, RegionOp op);
Region region_union(const Region& a, const Region& b);
Region region_negate(const Region& a);
Region region_translate(const Region& a, const Site& t);

/// Neighborhood scheme: the finite offset set bounding one-step spreading.
struct NeighborhoodScheme {
  Region region;
  NeighborhoodScheme() = default;
  explicit NeighborhoodScheme(Region r) : region(std::move(r)) {
    if (region.empty())
      throw std::invalid_argument("neighborhood scheme must be non-empty");
  }
};

/// Rectangular wrapping subgroup: periods L_i >= 1 for each axis.
struct TorusSpec {
  std::vector<std::int64_t> periods;

  TorusSpec() = default;
  explicit TorusSpec(std::vector<std::int64_t> p);
  static TorusSpec ring(std::int64_t length) { return TorusSpec({length}); }

  int dim() const { return static_cast<int>(periods.size()); }
  std::int64_t site_count() const;
  /// Canonical torus sites in lexicographic order.
  std::vector<Site> all_sites() const;
  /// Index of a canonical site within all_sites() (row-major).
  std::int64_t index_of(const Site& s) const;
};

/// Canonical representative with 0 <= coord_i < L_i.
Site wrap(const Site& s, const TorusSpec& torus);
Region wrap(const Region& r, const TorusSpec& torus);

/// True iff (N+N-N-N) meets the wrapping subgroup only at 0, i.e. the
/// commutation geometry on the torus matches the infinite lattice.
bool is_regular(const NeighborhoodScheme& n, const TorusSpec& torus);

/// Smallest uniform torus (all periods equal) regular for the scheme, with
/// every period >= min_period; even periods only if require_even.
TorusSpec smallest_regular_torus(const NeighborhoodScheme& n, int s,
                                 std::int64_t min_period = 1,
                                 bool require_even = false);

}  // namespace qca
