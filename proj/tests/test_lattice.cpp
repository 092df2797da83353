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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qca/lattice.hpp"

using namespace qca;

TEST_CASE("minkowski sum of symmetric 1d windows") {
  Region n = Region::of_1d({-1, 0, 1});
  Region sum = region_arith(n, n, RegionOp::kSum);
  CHECK(sum == Region::of_1d({-2, -1, 0, 1, 2}));
}

TEST_CASE("difference with the origin is the identity") {
  Region lambda = Region::of_1d({-3, 2, 5});
  CHECK(region_arith(lambda, Region::of_1d({0}), RegionOp::kDifference) == lambda);
}

TEST_CASE("four-fold difference set by brute force") {
  Region n = Region::of_1d({-1, 0, 1});
  Region nn = region_arith(n, n, RegionOp::kSum);
  Region probe = region_arith(region_arith(nn, n, RegionOp::kDifference), n,
                              RegionOp::kDifference);
  // brute force enumeration of a+b-c-d
  std::vector<std::int64_t> vals;
  for (std::int64_t a = -1; a <= 1; ++a)
    for (std::int64_t b = -1; b <= 1; ++b)
      for (std::int64_t c = -1; c <= 1; ++c)
        for (std::int64_t d = -1; d <= 1; ++d) vals.push_back(a + b - c - d);
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  REQUIRE(probe.size() == static_cast<int>(vals.size()));
  for (std::size_t i = 0; i < vals.size(); ++i)
    CHECK(probe.sites()[i] == Site({vals[i]}));
}

TEST_CASE("regularity of the nearest-neighbor window on rings") {
  NeighborhoodScheme n{Region::of_1d({-1, 0, 1})};
  CHECK(is_regular(n, TorusSpec::ring(5)));
  CHECK_FALSE(is_regular(n, TorusSpec::ring(4)));
  NeighborhoodScheme trivial{Region::of_1d({0})};
  CHECK(is_regular(trivial, TorusSpec::ring(1)));
  CHECK(is_regular(trivial, TorusSpec::ring(2)));
}

TEST_CASE("2d nearest-neighbor window is not regular on a 5x4 torus") {
  std::vector<Site> sites;
  for (std::int64_t a = -1; a <= 1; ++a)
    for (std::int64_t b = -1; b <= 1; ++b) sites.push_back(Site({a, b}));
  NeighborhoodScheme n{Region(sites)};
  CHECK_FALSE(is_regular(n, TorusSpec({5, 4})));
  CHECK(is_regular(n, TorusSpec({5, 5})));
}

TEST_CASE("regularity is monotone in the periods") {
  NeighborhoodScheme n{Region::of_1d({-1, 0, 1})};
  for (std::int64_t l = 5; l < 20; ++l) CHECK(is_regular(n, TorusSpec::ring(l)));
}

TEST_CASE("wrap produces canonical representatives") {
  CHECK(wrap(Site({7}), TorusSpec::ring(5)) == Site({2}));
  CHECK(wrap(Site({-1, -1}), TorusSpec({4, 4})) == Site({3, 3}));
}

TEST_CASE("wrap is idempotent and a quotient map on random sites") {
  std::mt19937_64 gen(42);
  std::uniform_int_distribution<std::int64_t> dist(-50, 50);
  TorusSpec t({6, 7});
  for (int k = 0; k < 1000; ++k) {
    Site x({dist(gen), dist(gen)});
    Site y({dist(gen), dist(gen)});
    CHECK(wrap(wrap(x, t), t) == wrap(x, t));
    CHECK(wrap(x + y, t) == wrap(wrap(x, t) + wrap(y, t), t));
  }
}

TEST_CASE("region sum is commutative and associative on random triples") {
  std::mt19937_64 gen(43);
  std::uniform_int_distribution<std::int64_t> dist(-4, 4);
  for (int trial = 0; trial < 20; ++trial) {
    auto rand_region = [&] {
      std::vector<Site> sites;
      const int m = 1 + static_cast<int>(gen() % 4);
      for (int i = 0; i < m; ++i) sites.push_back(Site({dist(gen), dist(gen)}));
      return Region(sites);
    };
    Region a = rand_region(), b = rand_region(), c = rand_region();
    CHECK(region_arith(a, b, RegionOp::kSum) == region_arith(b, a, RegionOp::kSum));
    CHECK(region_arith(region_arith(a, b, RegionOp::kSum), c, RegionOp::kSum) ==
          region_arith(a, region_arith(b, c, RegionOp::kSum), RegionOp::kSum));
  }
}

TEST_CASE("smallest_regular_torus respects parity and bound") {
  NeighborhoodScheme n{Region::of_1d({-1, 0, 1})};
  CHECK(smallest_regular_torus(n, 1).periods[0] == 5);
  CHECK(smallest_regular_torus(n, 1, 1, true).periods[0] == 6);
  CHECK(smallest_regular_torus(n, 1, 7).periods[0] == 7);
}
