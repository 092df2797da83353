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

#include "qca/algebra.hpp"
#include "test_helpers.hpp"

using namespace qca;
using qca::testing::span_distance;
using qca::testing::support_space_bruteforce;

namespace {

// Plants the layout {(n_k, mult_k)} inside a Haar-rotated ambient space and
// returns an (unorthonormalized) spanning set.
struct Planted {
  std::vector<std::pair<int, int>> layout;
  Mat rotation;
  std::vector<Mat> span;
  Eigen::Index ambient = 0;
};

Planted plant_algebra(const std::vector<std::pair<int, int>>& layout, Rng& rng,
                      Eigen::Index extra_kernel = 0) {
  Planted p;
  p.layout = layout;
  for (auto [n, m] : layout) p.ambient += static_cast<Eigen::Index>(n) * m;
  p.ambient += extra_kernel;
  p.rotation = random_unitary(p.ambient, rng);
  Eigen::Index offset = 0;
  for (auto [n, m] : layout) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Mat big = Mat::Zero(p.ambient, p.ambient);
        big.block(offset, offset, n * m, n * m) =
            tensor(identity(m), matrix_unit(n, i, j));
        p.span.push_back(p.rotation * big * p.rotation.adjoint());
      }
    offset += static_cast<Eigen::Index>(n) * m;
  }
  return p;
}

void check_block_form(const MatrixAlgebra& alg, const AlgebraBlockStructure& st) {
  // Rotating any algebra element must yield the block-diagonal 1_m (x) M_n
  // pattern, with zeros on the kernel tail.
  Eigen::Index d = alg.ambient_dim;
  for (const Mat& b : alg.basis) {
    Mat r = st.basis_change.adjoint() * b * st.basis_change;
    Eigen::Index off = 0;
    for (const auto& blk : st.blocks) {
      const Eigen::Index bd = static_cast<Eigen::Index>(blk.n) * blk.multiplicity;
      // inside the block: equal n x n tiles down the multiplicity diagonal
      Mat tile = r.block(off, off, blk.n, blk.n);
      for (int a = 0; a < blk.multiplicity; ++a)
        for (int c = 0; c < blk.multiplicity; ++c) {
          Mat sub = r.block(off + a * blk.n, off + c * blk.n, blk.n, blk.n);
          if (a == c)
            CHECK(spectral_norm(sub - tile) < 1e-8);
          else
            CHECK(spectral_norm(sub) < 1e-8);
        }
      // off-diagonal between blocks vanishes
      r.block(off, off, bd, bd).setZero();
      off += bd;
    }
    CHECK(spectral_norm(r) < 1e-8);
  }
}

}  // namespace

TEST_CASE("support_space on product-form input") {
  std::vector<Mat> span;
  for (int k = 0; k < 4; ++k) span.push_back(tensor(pauli(k), identity(2)));
  auto left = support_space(span, Side::kLeft, 2, 2);
  auto right = support_space(span, Side::kRight, 2, 2);
  CHECK(left.size() == 4);
  CHECK(right.size() == 1);
  CHECK(spectral_norm(project_onto_span(right, identity(2)) - identity(2)) <
        1e-9);  // right support is exactly span{1}
}

TEST_CASE("support_space of a controlled gate is the control's diagonal") {
  Mat cnot = Mat::Zero(4, 4);
  cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1;
  auto left = support_space({cnot}, Side::kLeft, 2, 2);
  CHECK(left.size() == 2);
  auto oracle = support_space_bruteforce({cnot}, Side::kLeft, 2, 2);
  CHECK(span_distance(left, oracle) < 1e-9);
  CHECK(distance_from_span(left, matrix_unit(2, 0, 0)) < 1e-9);
  CHECK(distance_from_span(left, matrix_unit(2, 1, 1)) < 1e-9);
  CHECK(distance_from_span(left, pauli(1)) > 0.5);
}

TEST_CASE("support_space of swap is everything, via the expansion oracle") {
  Mat swap = Mat::Zero(4, 4);
  swap(0, 0) = swap(3, 3) = swap(1, 2) = swap(2, 1) = 1;
  for (Side side : {Side::kLeft, Side::kRight}) {
    auto got = support_space({swap}, side, 2, 2);
    auto oracle = support_space_bruteforce({swap}, side, 2, 2);
    CHECK(got.size() == 4);
    CHECK(span_distance(got, oracle) < 1e-9);
  }
}

TEST_CASE("support_space is independent of a basis change on the other factor") {
  Rng rng(101);
  std::vector<Mat> span;
  for (int t = 0; t < 3; ++t) span.push_back(random_matrix(6, 6, rng));
  Mat w = random_unitary(3, rng);
  std::vector<Mat> rotated;
  for (const Mat& m : span)
    rotated.push_back(tensor(identity(2), w) * m * tensor(identity(2), w).adjoint());
  auto a = support_space(span, Side::kLeft, 2, 3);
  auto b = support_space(rotated, Side::kLeft, 2, 3);
  CHECK(span_distance(a, b) < 1e-9);
}

TEST_CASE("expansion containment: elements lie in left (x) right support") {
  Rng rng(103);
  std::vector<Mat> span;
  for (int t = 0; t < 2; ++t) span.push_back(random_matrix(8, 8, rng));
  auto left = support_space(span, Side::kLeft, 2, 4);
  auto right = support_space(span, Side::kRight, 2, 4);
  std::vector<Mat> product_basis;
  for (const Mat& l : left)
    for (const Mat& r : right) product_basis.push_back(tensor(l, r));
  for (const Mat& m : span) CHECK(distance_from_span(product_basis, m) < 1e-9);
}

TEST_CASE("generated_algebra of the identity is one dimensional") {
  auto alg = generated_algebra({identity(3)});
  CHECK(alg.dim() == 1);
}

TEST_CASE("generated_algebra of two anticommuting involutions is everything") {
  auto alg = generated_algebra({pauli(1), pauli(3)});
  CHECK(alg.dim() == 4);
  CHECK(check_closure(alg).closed());
}

TEST_CASE("generated_algebra of a nondegenerate diagonal matches spectral projections") {
  Mat h = Mat::Zero(3, 3);
  h(0, 0) = 1;
  h(1, 1) = 2;
  h(2, 2) = 3;
  auto alg = generated_algebra({h});
  CHECK(alg.dim() == 3);
  for (auto& [val, p] : spectral_projections(h))
    CHECK(distance_from_span(alg.basis, p) < 1e-9);
}

TEST_CASE("spectral_projections of sigma_z and identity") {
  auto sz = spectral_projections(pauli(3));
  REQUIRE(sz.size() == 2);
  CHECK(sz[0].first == doctest::Approx(1.0));
  CHECK(spectral_norm(sz[0].second - matrix_unit(2, 0, 0)) < 1e-12);
  CHECK(sz[1].first == doctest::Approx(-1.0));
  CHECK(spectral_norm(sz[1].second - matrix_unit(2, 1, 1)) < 1e-12);

  auto id3 = spectral_projections(identity(3));
  REQUIRE(id3.size() == 1);
  CHECK(spectral_norm(id3[0].second - identity(3)) < 1e-12);
}

TEST_CASE("spectral_projections recovers a planted degenerate spectrum") {
  Rng rng(107);
  Mat w = random_unitary(3, rng);
  Mat h = Mat::Zero(3, 3);
  h(2, 2) = 5.0;
  h = w * h * w.adjoint();
  auto sp = spectral_projections(h);
  REQUIRE(sp.size() == 2);
  CHECK(sp[0].first == doctest::Approx(5.0));
  CHECK(std::lround(sp[0].second.trace().real()) == 1);
  CHECK(sp[1].first == doctest::Approx(0.0));
  CHECK(std::lround(sp[1].second.trace().real()) == 2);
  Mat rebuilt = Mat::Zero(3, 3);
  for (auto& [val, p] : sp) rebuilt += val * p;
  CHECK(spectral_norm(rebuilt - h) < 1e-9);
}

TEST_CASE("decompose of the full matrix algebra") {
  std::vector<Mat> units;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) units.push_back(matrix_unit(4, i, j));
  auto st = decompose(algebra_from_span(units, 4));
  REQUIRE(st.blocks.size() == 1);
  CHECK(st.blocks[0].n == 4);
  CHECK(st.blocks[0].multiplicity == 1);
  CHECK(st.kernel_dim == 0);
}

TEST_CASE("decompose of the diagonal algebra") {
  std::vector<Mat> diag;
  for (int i = 0; i < 3; ++i) diag.push_back(matrix_unit(3, i, i));
  auto st = decompose(algebra_from_span(diag, 3));
  REQUIRE(st.blocks.size() == 3);
  for (const auto& b : st.blocks) {
    CHECK(b.n == 1);
    CHECK(b.multiplicity == 1);
  }
}

TEST_CASE("decompose recovers a rotated multiplicity-two block") {
  Rng rng(109);
  Mat w = random_unitary(4, rng);
  std::vector<Mat> span;
  for (int k = 1; k < 4; ++k)
    span.push_back(w * tensor(pauli(k), identity(2)) * w.adjoint());
  auto alg = generated_algebra(span);
  CHECK(alg.dim() == 4);
  auto st = decompose(alg);
  REQUIRE(st.blocks.size() == 1);
  CHECK(st.blocks[0].n == 2);
  CHECK(st.blocks[0].multiplicity == 2);
  check_block_form(alg, st);
}

TEST_CASE("decompose recovers planted layouts exactly") {
  Rng rng(113);
  std::vector<std::vector<std::pair<int, int>>> layouts = {
      {{2, 1}, {1, 2}},
      {{3, 1}, {2, 2}},
      {{2, 2}},
      {{1, 1}, {1, 1}, {1, 1}},
      {{4, 1}},
      {{2, 3}, {1, 1}},
  };
  for (const auto& layout : layouts) {
    Planted p = plant_algebra(layout, rng);
    auto alg = algebra_from_span(p.span, p.ambient);
    auto st = decompose(alg);
    std::vector<std::pair<int, int>> got, want = layout;
    for (const auto& b : st.blocks) got.emplace_back(b.n, b.multiplicity);
    auto key = [](const std::pair<int, int>& a, const std::pair<int, int>& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    };
    std::sort(got.begin(), got.end(), key);
    std::sort(want.begin(), want.end(), key);
    CHECK(got == want);
    CHECK(st.kernel_dim == 0);
    check_block_form(alg, st);
    CHECK(is_unitary(st.basis_change, 1e-8));
    // central projections are orthogonal and sum to the unit
    Mat sum = Mat::Zero(p.ambient, p.ambient);
    for (const auto& b : st.blocks) sum += b.central_projection;
    CHECK(spectral_norm(sum - identity(p.ambient)) < 1e-8);
  }
}

TEST_CASE("decompose block data is invariant under a random rotation") {
  Rng rng(127);
  Planted p = plant_algebra({{2, 2}, {1, 1}}, rng);
  auto st1 = decompose(algebra_from_span(p.span, p.ambient));
  Mat w = random_unitary(p.ambient, rng);
  std::vector<Mat> rotated;
  for (const Mat& m : p.span) rotated.push_back(w * m * w.adjoint());
  auto st2 = decompose(algebra_from_span(rotated, p.ambient));
  REQUIRE(st1.blocks.size() == st2.blocks.size());
  for (std::size_t k = 0; k < st1.blocks.size(); ++k) {
    CHECK(st1.blocks[k].n == st2.blocks[k].n);
    CHECK(st1.blocks[k].multiplicity == st2.blocks[k].multiplicity);
  }
}

TEST_CASE("decompose adjoins the support projection for non-unital spans") {
  // span{ |2><2| } inside M_3: one 1x1 block plus a 2-dimensional kernel
  auto alg = algebra_from_span({matrix_unit(3, 2, 2)}, 3);
  auto st = decompose(alg);
  REQUIRE(st.blocks.size() == 1);
  CHECK(st.blocks[0].n == 1);
  CHECK(st.blocks[0].multiplicity == 1);
  CHECK(st.kernel_dim == 2);
}

TEST_CASE("decompose rejects spans that are not closed") {
  Rng rng(131);
  // A generic non-closed span: a single random non-normal matrix.
  auto alg = algebra_from_span({random_matrix(3, 3, rng)}, 3);
  CHECK_THROWS_WITH_AS(decompose(alg), doctest::Contains("not closed"),
                       std::invalid_argument);
}

TEST_CASE("commuting_factorization of the two tensor factors") {
  std::vector<Mat> a, b;
  for (int k = 0; k < 4; ++k) {
    a.push_back(tensor(pauli(k), identity(2)));
    b.push_back(tensor(identity(2), pauli(k)));
  }
  auto fact = commuting_factorization(algebra_from_span(a, 4),
                                      algebra_from_span(b, 4));
  REQUIRE(fact.left_dims == std::vector<int>{2});
  REQUIRE(fact.right_dims == std::vector<int>{2});
  CHECK(fact.table(0, 0) == 1);
}

TEST_CASE("commuting_factorization of two diagonal algebras is all ones") {
  std::vector<Mat> a, b;
  for (int i = 0; i < 2; ++i) {
    a.push_back(tensor(matrix_unit(2, i, i), identity(2)));
    b.push_back(tensor(identity(2), matrix_unit(2, i, i)));
  }
  auto fact = commuting_factorization(algebra_from_span(a, 4),
                                      algebra_from_span(b, 4));
  REQUIRE(fact.table.rows() == 2);
  REQUIRE(fact.table.cols() == 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(fact.table(i, j) == 1);
}

TEST_CASE("commuting_factorization recovers a hidden multiplicity table") {
  Rng rng(137);
  // H = (C^2 (x) C^2 (x) C^2) + (C^2 (x) C^1 (x) C^1): blocks n=(2), m=(2,1),
  // r = [[2, 1]] after sorting; ambient 10.
  const Eigen::Index ambient = 10;
  Mat w = random_unitary(ambient, rng);
  std::vector<Mat> a, b;
  for (int k = 0; k < 4; ++k) {
    Mat big = Mat::Zero(ambient, ambient);
    big.block(0, 0, 8, 8) = tensor(pauli(k), tensor(identity(2), identity(2)));
    big.block(8, 8, 2, 2) = pauli(k);
    a.push_back(w * big * w.adjoint());
    Mat bigb = Mat::Zero(ambient, ambient);
    bigb.block(0, 0, 8, 8) = tensor(identity(2), tensor(pauli(k), identity(2)));
    b.push_back(w * bigb * w.adjoint());
  }
  {
    // B is the direct sum (1 (x) M_2 (x) 1) + C 1_2: adjoin the second
    // summand's unit so the span is an algebra.
    Mat tail = Mat::Zero(ambient, ambient);
    tail.block(8, 8, 2, 2) = identity(2);
    b.push_back(w * tail * w.adjoint());
  }
  auto fact = commuting_factorization(algebra_from_span(a, ambient),
                                      algebra_from_span(b, ambient));
  REQUIRE(fact.left_dims == std::vector<int>{2});
  REQUIRE(fact.right_dims == std::vector<int>{2, 1});
  CHECK(fact.table(0, 0) == 2);
  CHECK(fact.table(0, 1) == 1);
  // dimension count: 2*2*2 + 1*2*1 = 10
  Eigen::Index covered = 0;
  for (int i = 0; i < fact.table.rows(); ++i)
    for (int j = 0; j < fact.table.cols(); ++j)
      covered += fact.table(i, j) * fact.left_dims[i] * fact.right_dims[j];
  CHECK(covered == ambient);
}

TEST_CASE("commuting_factorization rejects non-commuting inputs") {
  auto a = algebra_from_span({pauli(1)}, 2);
  auto b = algebra_from_span({pauli(3)}, 2);
  CHECK_THROWS_AS(commuting_factorization(a, b), std::invalid_argument);
}

TEST_CASE("unitary_from_automorphism on the identity and a pauli conjugation") {
  std::vector<Mat> ident, flip;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      ident.push_back(matrix_unit(2, i, j));
      flip.push_back(pauli(1) * matrix_unit(2, i, j) * pauli(1));
    }
  CHECK(phase_invariant_distance(unitary_from_automorphism(ident), identity(2)) < 1e-9);
  CHECK(phase_invariant_distance(unitary_from_automorphism(flip), pauli(1)) < 1e-9);
}

TEST_CASE("unitary_from_automorphism recovers planted conjugations to phase") {
  Rng rng(139);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 8;
    Mat w = random_unitary(d, rng);
    std::vector<Mat> images;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) images.push_back(w * matrix_unit(d, i, j) * w.adjoint());
    Mat v = unitary_from_automorphism(images);
    CHECK(phase_invariant_distance(v, w) < 1e-9);
    CHECK(is_unitary(v, 1e-9));
  }
}

TEST_CASE("unitary_from_automorphism rejects non-automorphisms") {
  // images(E_00) of rank 2: embed M_2 -> M_4 twice... on equal dims use the
  // transpose map, which is a *-antihomomorphism and fails multiplicativity.
  std::vector<Mat> images;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) images.push_back(matrix_unit(2, i, j).transpose());
  CHECK_THROWS_AS(unitary_from_automorphism(images), std::invalid_argument);
}

TEST_CASE("unital homomorphisms into M_n require d | n") {
  // Prop-style dimension count: represent M_2 with multiplicity 3 in M_6.
  Rng rng(149);
  Mat w = random_unitary(6, rng);
  std::vector<Mat> images;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      images.push_back(w * tensor(identity(3), matrix_unit(2, i, j)) * w.adjoint());
  auto rep = check_homomorphism(images);
  CHECK(rep.max() < 1e-10);
  // the image algebra's block has n = 2 dividing 6
  auto st = decompose(generated_algebra(images));
  REQUIRE(st.blocks.size() == 1);
  CHECK(st.blocks[0].n == 2);
  CHECK(6 % st.blocks[0].n == 0);
  CHECK(st.blocks[0].multiplicity == 3);
}

TEST_CASE("lemma-8 style commutation of support algebras on the shared factor") {
  Rng rng(151);
  for (int trial = 0; trial < 20; ++trial) {
    // B2 = C^2 (x) C^2 rotated; A1 sees only the left half, A2 only the right.
    Mat w = random_unitary(4, rng);
    auto lift_left = [&](const Mat& m) -> Mat {
      return w * tensor(m, identity(2)) * w.adjoint();
    };
    auto lift_right = [&](const Mat& m) -> Mat {
      return w * tensor(identity(2), m) * w.adjoint();
    };
    std::vector<Mat> a1, a2;
    for (int t = 0; t < 2; ++t) {
      a1.push_back(tensor(random_matrix(2, 2, rng), lift_left(random_matrix(2, 2, rng))));
      a2.push_back(tensor(lift_right(random_matrix(2, 2, rng)), random_matrix(3, 3, rng)));
    }
    // commutation on B1 (x) B2 (x) B3 holds by construction
    auto s1 = support_space(a1, Side::kRight, 2, 4);
    auto s2 = support_space(a2, Side::kLeft, 4, 3);
    auto alg1 = generated_algebra(s1);
    auto alg2 = generated_algebra(s2);
    double worst = 0;
    for (const Mat& x : alg1.basis)
      for (const Mat& y : alg2.basis)
        worst = std::max(worst, spectral_norm(x * y - y * x));
    CHECK(worst < 1e-9);
  }
}
