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

#include "qca/rules.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qca {

namespace {

Eigen::Index pow_ll(Eigen::Index base, int exp) {
  Eigen::Index r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

Site origin(int s) { return Site(std::vector<std::int64_t>(s, 0)); }

// Translate-and-wrap a local operator onto canonical torus coordinates,
// reordering tensor legs to keep the lexicographic-site convention.
LocalOperator wrap_to_torus(const LocalOperator& op, const TorusSpec& torus) {
  const auto& unwrapped = op.region.sites();
  std::vector<Site> wrapped;
  wrapped.reserve(unwrapped.size());
  for (const Site& s : unwrapped) wrapped.push_back(wrap(s, torus));
  Region target(wrapped);
  if (target.size() != op.region.size())
    throw std::invalid_argument("region self-overlaps under wrapping (torus too small)");
  std::vector<int> perm(wrapped.size());
  for (std::size_t k = 0; k < wrapped.size(); ++k) {
    int pos = target.index_of(wrapped[k]);
    perm[pos] = static_cast<int>(k);
  }
  std::vector<Eigen::Index> dims(op.region.size(), op.cell_dim);
  return make_local_operator(op.cell_dim, target,
                             permute_tensor_legs(op.matrix, dims, perm));
}

}  // namespace

Region LocalRule::effective_scheme() const {
  Region acc;
  for (const LocalOperator& img : images) acc = region_union(acc, img.region);
  return acc;
}

LocalRule make_rule(int cell_dim, int s, Region scheme,
                    std::vector<LocalOperator> images) {
  if (cell_dim < 2) throw std::invalid_argument("make_rule: cell_dim must be >= 2");
  if (images.size() != static_cast<std::size_t>(cell_dim) * cell_dim)
    throw std::invalid_argument("make_rule: need d^2 matrix-unit images");
  for (const LocalOperator& img : images) {
    if (img.cell_dim != cell_dim)
      throw std::invalid_argument("make_rule: image cell dimension mismatch");
    for (const Site& site : img.region.sites())
      if (!scheme.contains(site))
        throw std::invalid_argument("make_rule: image support " + to_string(site) +
                                    " outside the scheme " + to_string(scheme));
  }
  return LocalRule{cell_dim, s, std::move(scheme), std::move(images)};
}

LocalOperator rule_apply_single(const LocalRule& rule, const Mat& a) {
  const int d = rule.cell_dim;
  if (a.rows() != d || a.cols() != d)
    throw std::invalid_argument("rule_apply_single: operator must be one cell");
  Region support = rule.effective_scheme();
  Mat acc = Mat::Zero(pow_ll(d, support.size()), pow_ll(d, support.size()));
  LocalOperator out = make_local_operator(d, support, std::move(acc));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (a(i, j) == cdouble(0, 0)) continue;
      out.matrix += a(i, j) * embed(rule.image(i, j), support).matrix;
    }
  return out;
}

std::optional<Site> ValidationReport::offending_offset() const {
  for (const auto& o : offsets)
    if (o.commutator_norm > eps) return o.offset;
  return std::nullopt;
}

ValidationReport validate_rule(const LocalRule& rule, double eps) {
  const int d = rule.cell_dim;
  ValidationReport rep;
  rep.eps = eps;

  Region n_eff = rule.effective_scheme();
  std::vector<Mat> embedded(d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      embedded[i * d + j] = embed(rule.image(i, j), n_eff).matrix;

  const Eigen::Index nd = embedded[0].rows();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          Mat lhs = embedded[i * d + j] * embedded[k * d + l];
          if (j == k) lhs -= embedded[i * d + l];
          rep.multiplicativity_residual =
              std::max(rep.multiplicativity_residual, spectral_norm(lhs));
        }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      rep.adjoint_residual = std::max(
          rep.adjoint_residual,
          spectral_norm(embedded[i * d + j].adjoint() - embedded[j * d + i]));
  Mat unit_sum = Mat::Zero(nd, nd);
  for (int i = 0; i < d; ++i) unit_sum += embedded[i * d + i];
  rep.unit_residual = spectral_norm(unit_sum - identity(nd));

  // Overlap offsets x in (N - N), x != 0, cover every translate that can
  // intersect the image algebra.
  Region offsets = region_arith(n_eff, n_eff, RegionOp::kDifference);
  for (const Site& x : offsets.sites()) {
    bool zero = true;
    for (auto c : x.x) zero = zero && c == 0;
    if (zero) continue;
    Region common = region_union(n_eff, region_translate(n_eff, x));
    double worst = 0.0;
    std::vector<Mat> here(d * d), there(d * d);
    for (int ij = 0; ij < d * d; ++ij) {
      here[ij] = embed(rule.images[ij], common).matrix;
      there[ij] = embed(translate(rule.images[ij], x), common).matrix;
    }
    for (int ij = 0; ij < d * d; ++ij)
      for (int kl = 0; kl < d * d; ++kl) {
        Mat comm = here[ij] * there[kl] - there[kl] * here[ij];
        const double fro = comm.norm();
        // Frobenius bounds the spectral norm from above; only fall back to
        // the exact spectral value when the cheap bound is not conclusive.
        worst = std::max(worst, fro > 0.1 * eps ? spectral_norm(comm) : fro);
      }
    rep.offsets.push_back({x, worst});
  }
  return rep;
}

LocalOperator apply_on_window(const LocalRule& rule, const LocalOperator& obs,
                              const Region& window) {
  const int d = rule.cell_dim;
  if (obs.cell_dim != d)
    throw std::invalid_argument("apply_on_window: cell dimension mismatch");

  const int m = obs.region.size();
  std::vector<std::vector<Mat>> site_images(m, std::vector<Mat>(d * d));
  for (int k = 0; k < m; ++k) {
    const Site& x = obs.region.sites()[k];
    for (int ij = 0; ij < d * d; ++ij) {
      LocalOperator moved = translate(rule.images[ij], x);
      for (const Site& s : moved.region.sites())
        if (!window.contains(s))
          throw std::invalid_argument("apply_on_window: window misses site " +
                                      to_string(s));
      site_images[k][ij] = embed(moved, window).matrix;
    }
  }

  const Eigen::Index nw = pow_ll(d, window.size());
  Mat acc = Mat::Zero(nw, nw);

  // Expand obs over products of matrix units; the matrix entries are exactly
  // the expansion coefficients.
  const Eigen::Index nobs = obs.matrix.rows();
  std::vector<int> idig(m), jdig(m);
  for (Eigen::Index bi = 0; bi < nobs; ++bi) {
    {
      Eigen::Index rem = bi;
      for (int k = m - 1; k >= 0; --k) {
        idig[k] = static_cast<int>(rem % d);
        rem /= d;
      }
    }
    for (Eigen::Index bj = 0; bj < nobs; ++bj) {
      const cdouble coeff = obs.matrix(bi, bj);
      if (coeff == cdouble(0, 0)) continue;
      Eigen::Index rem = bj;
      for (int k = m - 1; k >= 0; --k) {
        jdig[k] = static_cast<int>(rem % d);
        rem /= d;
      }
      Mat term = site_images[0][idig[0] * d + jdig[0]];
      for (int k = 1; k < m; ++k) term = term * site_images[k][idig[k] * d + jdig[k]];
      acc += coeff * term;
    }
  }
  return make_local_operator(d, window, std::move(acc));
}

LocalOperator apply_local(const LocalRule& rule, const LocalOperator& obs) {
  Region window = region_arith(obs.region, rule.effective_scheme(), RegionOp::kSum);
  window = region_union(window, obs.region);
  return trim(apply_on_window(rule, obs, window));
}

LocalOperator global_apply(const LocalRule& rule, const LocalOperator& obs,
                           const TorusSpec& torus) {
  const int d = rule.cell_dim;
  if (obs.cell_dim != d)
    throw std::invalid_argument("global_apply: cell dimension mismatch");
  if (!is_regular(NeighborhoodScheme(rule.effective_scheme()), torus))
    throw std::invalid_argument("global_apply: torus is not regular for the scheme");

  LocalOperator canonical = wrap_to_torus(obs, torus);
  const int m = canonical.region.size();

  Region out_region = canonical.region;
  for (const Site& x : canonical.region.sites())
    out_region = region_union(
        out_region, wrap(region_translate(rule.effective_scheme(), x), torus));

  std::vector<std::vector<Mat>> site_images(m, std::vector<Mat>(d * d));
  for (int k = 0; k < m; ++k) {
    const Site& x = canonical.region.sites()[k];
    for (int ij = 0; ij < d * d; ++ij) {
      LocalOperator moved = wrap_to_torus(translate(rule.images[ij], x), torus);
      site_images[k][ij] = embed(moved, out_region).matrix;
    }
  }

  const Eigen::Index nw = pow_ll(d, out_region.size());
  Mat acc = Mat::Zero(nw, nw);
  const Eigen::Index nobs = canonical.matrix.rows();
  std::vector<int> idig(m), jdig(m);
  for (Eigen::Index bi = 0; bi < nobs; ++bi) {
    {
      Eigen::Index rem = bi;
      for (int k = m - 1; k >= 0; --k) {
        idig[k] = static_cast<int>(rem % d);
        rem /= d;
      }
    }
    for (Eigen::Index bj = 0; bj < nobs; ++bj) {
      const cdouble coeff = canonical.matrix(bi, bj);
      if (coeff == cdouble(0, 0)) continue;
      Eigen::Index rem = bj;
      for (int k = m - 1; k >= 0; --k) {
        jdig[k] = static_cast<int>(rem % d);
        rem /= d;
      }
      Mat term = site_images[0][idig[0] * d + jdig[0]];
      for (int k = 1; k < m; ++k) term = term * site_images[k][idig[k] * d + jdig[k]];
      acc += coeff * term;
    }
  }
  return trim(make_local_operator(d, out_region, std::move(acc)));
}

Mat global_unitary(const LocalRule& rule, const TorusSpec& torus,
                   std::int64_t dim_cap) {
  const int d = rule.cell_dim;
  if (!is_regular(NeighborhoodScheme(rule.effective_scheme()), torus))
    throw std::invalid_argument("global_unitary: torus is not regular for the scheme");
  const std::int64_t cells = torus.site_count();
  std::int64_t n = 1;
  for (std::int64_t c = 0; c < cells; ++c) {
    n *= d;
    if (n > dim_cap)
      throw std::invalid_argument("global_unitary: dimension exceeds cap " +
                                  std::to_string(dim_cap));
  }

  const auto sites = torus.all_sites();
  const int v = static_cast<int>(sites.size());
  std::vector<Eigen::Index> dims(v, d);

  // Per site, the wrapped images of the matrix-unit column E_{k,0}, kept as
  // (legs, matrix) pairs for direct application to state vectors.
  struct Applicator {
    std::vector<int> legs;
    Mat mat;
  };
  std::vector<std::vector<Applicator>> col_images(v, std::vector<Applicator>(d));
  for (int xi = 0; xi < v; ++xi) {
    for (int k = 0; k < d; ++k) {
      LocalOperator moved =
          wrap_to_torus(translate(rule.image(k, 0), sites[xi]), torus);
      Applicator app;
      for (const Site& s : moved.region.sites())
        app.legs.push_back(static_cast<int>(torus.index_of(s)));
      app.mat = moved.matrix;
      col_images[xi][k] = std::move(app);
    }
  }

  // Seed vector in the range of the image of |0..0><0..0|.
  Rng rng(0x9caULL);
  Vec psi;
  for (int attempt = 0; attempt < 16 && psi.size() == 0; ++attempt) {
    Vec vseed(n);
    for (Eigen::Index i = 0; i < n; ++i) vseed(i) = rng.complex_gaussian();
    for (int xi = 0; xi < v; ++xi)
      vseed = apply_on_legs(col_images[xi][0].mat, col_images[xi][0].legs, dims, vseed);
    if (vseed.norm() > 1e-8) psi = vseed / vseed.norm();
  }
  if (psi.size() == 0)
    throw std::runtime_error("global_unitary: could not seed the reconstruction");

  // Column K of g^dag is the image of the global matrix unit E_{K,0} applied
  // to the seed.
  Mat vmat(n, n);
  std::vector<int> digits(v, 0);
  for (Eigen::Index col_idx = 0; col_idx < n; ++col_idx) {
    Eigen::Index rem = col_idx;
    for (int k = v - 1; k >= 0; --k) {
      digits[k] = static_cast<int>(rem % d);
      rem /= d;
    }
    Vec col = psi;
    for (int xi = 0; xi < v; ++xi)
      col = apply_on_legs(col_images[xi][digits[xi]].mat,
                          col_images[xi][digits[xi]].legs, dims, col);
    vmat.col(col_idx) = col;
  }

  Mat g = phase_fix(vmat.adjoint());

  for (int t = 0; t < 4; ++t) {
    Vec w(n);
    for (Eigen::Index i = 0; i < n; ++i) w(i) = rng.complex_gaussian();
    if (std::abs((g * w).norm() - w.norm()) > 1e-6 * w.norm())
      throw std::runtime_error("global_unitary: reconstruction is not unitary");
  }
  return g;
}

LocalRule compose(const LocalRule& outer, const LocalRule& inner) {
  if (outer.cell_dim != inner.cell_dim)
    throw std::invalid_argument("compose: cell dimension mismatch");
  if (outer.s != inner.s)
    throw std::invalid_argument("compose: lattice dimension mismatch");
  const int d = outer.cell_dim;
  std::vector<LocalOperator> images;
  Region scheme;
  for (int ij = 0; ij < d * d; ++ij) {
    LocalOperator img = apply_local(outer, inner.images[ij]);
    scheme = region_union(scheme, img.region);
    images.push_back(std::move(img));
  }
  return make_rule(d, outer.s, std::move(scheme), std::move(images));
}

LocalRule conjugate_cellwise(const LocalRule& rule, const Mat& c) {
  const int d = rule.cell_dim;
  if (c.rows() != d || c.cols() != d)
    throw std::invalid_argument("conjugate_cellwise: unitary must be one cell");
  if (!is_unitary(c))
    throw std::invalid_argument("conjugate_cellwise: matrix is not unitary");
  std::vector<LocalOperator> images;
  Region scheme;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Mat x = c.adjoint() * matrix_unit(d, i, j) * c;
      LocalOperator acc = rule_apply_single(rule, x);
      std::vector<Mat> cs(acc.region.size(), c);
      Mat big = tensor_list(cs);
      acc.matrix = big * acc.matrix * big.adjoint();
      LocalOperator img = trim(acc);
      scheme = region_union(scheme, img.region);
      images.push_back(std::move(img));
    }
  return make_rule(d, rule.s, std::move(scheme), std::move(images));
}

LocalRule identity_rule(int d) {
  std::vector<LocalOperator> images;
  Region at0 = Region::of_1d({0});
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      images.push_back(make_local_operator(d, at0, matrix_unit(d, i, j)));
  return make_rule(d, 1, at0, std::move(images));
}

LocalRule cellwise_rule(const Mat& w) {
  const int d = static_cast<int>(w.rows());
  if (!is_unitary(w)) throw std::invalid_argument("cellwise_rule: not unitary");
  std::vector<LocalOperator> images;
  Region at0 = Region::of_1d({0});
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      images.push_back(
          make_local_operator(d, at0, w.adjoint() * matrix_unit(d, i, j) * w));
  return make_rule(d, 1, at0, std::move(images));
}

LocalRule shift_rule(int d, int step) {
  std::vector<LocalOperator> images;
  Region at = Region::of_1d({step});
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      images.push_back(make_local_operator(d, at, matrix_unit(d, i, j)));
  return make_rule(d, 1, at, std::move(images));
}

void validate_abelian_spec(const AbelianRuleSpec& spec) {
  const Eigen::Index d = spec.phase_table.rows();
  if (spec.phase_table.cols() != d)
    throw std::invalid_argument("abelian spec: phase table must be square");
  for (Eigen::Index a = 0; a < d; ++a)
    for (Eigen::Index b = 0; b < d; ++b)
      if (std::abs(std::abs(spec.phase_table(a, b)) - 1.0) > kEps)
        throw std::invalid_argument(
            "abelian spec: phase table entries must be unit modulus");
  for (Eigen::Index k = 0; k < d; ++k)
    if (std::abs(spec.phase_table(0, k) - cdouble(1, 0)) > kEps ||
        std::abs(spec.phase_table(k, 0) - cdouble(1, 0)) > kEps)
      throw std::invalid_argument(
          "abelian spec: first row and column of the phase table must be 1");
  if (spec.cellwise.rows() != d || !is_unitary(spec.cellwise))
    throw std::invalid_argument("abelian spec: cellwise matrix must be a d x d unitary");
}

LocalRule from_abelian_spec(const AbelianRuleSpec& spec) {
  validate_abelian_spec(spec);
  const int d = static_cast<int>(spec.phase_table.rows());

  Mat u_gate = Mat::Zero(d * d, d * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      u_gate(a * d + b, a * d + b) = spec.phase_table(a, b);

  Mat x = tensor(u_gate, identity(d)) * tensor(identity(d), u_gate);
  const Mat& v = spec.cellwise;

  Region nn = Region::of_1d({-1, 0, 1});
  std::vector<LocalOperator> images;
  Region scheme;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Mat center = v.adjoint() * matrix_unit(d, i, j) * v;
      Mat mid = tensor(identity(d), tensor(center, identity(d)));
      LocalOperator img = trim(make_local_operator(d, nn, x.adjoint() * mid * x));
      scheme = region_union(scheme, img.region);
      images.push_back(std::move(img));
    }
  LocalRule rule = make_rule(d, 1, std::move(scheme), std::move(images));
  if (!validate_rule(rule).valid())
    throw std::runtime_error("from_abelian_spec: constructed rule failed validation");
  return rule;
}

LocalRule phase_gate_rule(double phi) {
  AbelianRuleSpec spec;
  spec.phase_table = Mat::Ones(2, 2);
  spec.phase_table(1, 1) = std::exp(cdouble(0, phi));
  spec.cellwise = identity(2);
  return from_abelian_spec(spec);
}

CommutingUnitaryFamily make_commuting_family(const LocalOperator& u0) {
  if (!is_unitary(u0.matrix))
    throw std::invalid_argument("commuting family: u0 is not unitary");
  CommutingUnitaryFamily fam;
  fam.u0 = u0;
  Region overlaps = region_arith(u0.region, u0.region, RegionOp::kDifference);
  for (const Site& x : overlaps.sites()) {
    bool zero = true;
    for (auto c : x.x) zero = zero && c == 0;
    if (zero) continue;
    LocalOperator ux = translate(u0, x);
    Region common = region_union(u0.region, ux.region);
    Mat a = embed(u0, common).matrix;
    Mat b = embed(ux, common).matrix;
    Mat w = a * b * a.adjoint() * b.adjoint();
    cdouble zeta = w.trace() / static_cast<double>(w.rows());
    if (std::abs(std::abs(zeta) - 1.0) > kEps ||
        spectral_norm(w - zeta * identity(w.rows())) > kEps) {
      std::ostringstream os;
      os << "commuting family: translate " << to_string(x)
         << " fails phase commutation, residual "
         << spectral_norm(w - zeta * identity(w.rows()));
      throw std::invalid_argument(os.str());
    }
    fam.phases.emplace_back(x, zeta);
  }
  return fam;
}

LocalRule from_commuting_unitary(const CommutingUnitaryFamily& fam) {
  const LocalOperator& u0 = fam.u0;
  const int d = u0.cell_dim;
  Region scheme = region_arith(u0.region, u0.region, RegionOp::kDifference);

  // Product of every translate whose support covers the origin; conjugation
  // by translates further out acts trivially on one cell.
  Region minus = region_negate(u0.region);
  Mat p;
  bool first = true;
  for (const Site& x : minus.sites()) {
    Mat factor = embed(translate(u0, x), scheme).matrix;
    p = first ? factor : Mat(p * factor);
    first = false;
  }

  std::vector<LocalOperator> images;
  Region used;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Mat e = embed(make_local_operator(d, Region::single(origin(u0.region.dim())),
                                        matrix_unit(d, i, j)),
                    scheme)
                  .matrix;
      LocalOperator img = trim(make_local_operator(d, scheme, p.adjoint() * e * p));
      used = region_union(used, img.region);
      images.push_back(std::move(img));
    }
  LocalRule rule = make_rule(d, u0.region.dim(), std::move(used), std::move(images));
  if (!validate_rule(rule).valid())
    throw std::runtime_error(
        "from_commuting_unitary: constructed rule failed validation");
  return rule;
}

FromMargolusResult from_margolus(const Mat& u, const Mat& v,
                                 const std::map<int, int>& quadrant_dims,
                                 int cell_dim, int s) {
  FromMargolusResult out;
  if (s != 1)
    throw std::invalid_argument(
        "from_margolus: only s = 1 fits the dense dimension cap (the window is "
        "4^s cells)");
  const int d = cell_dim;
  auto it_m = quadrant_dims.find(-1);
  auto it_p = quadrant_dims.find(+1);
  if (it_m == quadrant_dims.end() || it_p == quadrant_dims.end())
    throw std::invalid_argument("from_margolus: need quadrant dims for -1 and +1");
  const int nm = it_m->second;
  const int np = it_p->second;
  if (nm * np != d * d)
    throw std::invalid_argument(
        "from_margolus: quadrant dimensions must multiply to d^2");
  if (u.rows() != d * d || u.cols() != d * d || !is_unitary(u))
    throw std::invalid_argument("from_margolus: u must be a d^2 x d^2 unitary");
  if (v.rows() != d * d || v.cols() != d * d || !is_unitary(v))
    throw std::invalid_argument("from_margolus: v must be a d^2 x d^2 unitary");

  // One window of the two-layer automaton: cells {-1,0,1,2}. The two stray
  // legs carry the intermediate systems shared with the neighboring blocks;
  // the wiring is leg-aligned, so no permutation appears between the layers.
  Mat k = tensor(v, v) * tensor_list({identity(np), u, identity(nm)});

  Region window = Region::of_1d({-1, 0, 1, 2});
  auto image_of = [&](const Mat& a) {
    Mat mid = tensor_list({identity(np), a, identity(nm)});
    return make_local_operator(d, window, k * mid * k.adjoint());
  };

  std::vector<LocalOperator> img0(d * d), img1(d * d);
  double deviation = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Mat e = matrix_unit(d, i, j);
      img0[i * d + j] = trim(image_of(tensor(e, identity(d))));
      img1[i * d + j] = trim(image_of(tensor(identity(d), e)));
      deviation = std::max(deviation,
                           local_distance(img0[i * d + j],
                                          translate(img1[i * d + j], Site({-1}))));
    }
  out.translation_deviation = deviation;
  if (deviation > kEps) {
    std::ostringstream os;
    os << "two-layer automaton is only even-translation invariant; one-site "
          "translate deviates by "
       << deviation;
    out.message = os.str();
    return out;
  }

  Region scheme;
  for (const auto& img : img0) scheme = region_union(scheme, img.region);
  for (const Site& site : scheme.sites())
    if (site.x[0] < -1 || site.x[0] > 1)
      throw std::runtime_error("from_margolus: image support escapes the neighborhood");
  LocalRule rule = make_rule(d, 1, scheme, std::move(img0));
  if (!validate_rule(rule).valid())
    throw std::runtime_error(
        "from_margolus: translation-invariant result failed validation");
  out.rule = std::move(rule);
  out.message = "ok";
  return out;
}

}  // namespace qca
