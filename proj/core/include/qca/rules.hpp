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

#include <map>
#include <optional>
#include <vector>

#include "qca/local_operator.hpp"

namespace qca {

/// The local transition rule of a cellular automaton: the images of the d^2
/// one-cell matrix units E_ij as operators on the neighborhood scheme.
/// images[i*d + j] is the image of E_ij; each image's region is contained in
/// the scheme (images are kept trimmed to their minimal support).
struct LocalRule {
  int cell_dim = 0;
  int s = 1;
  Region scheme;
  std::vector<LocalOperator> images;

  const LocalOperator& image(int i, int j) const {
    return images[static_cast<std::size_t>(i) * cell_dim + j];
  }
  /// Union of the trimmed image supports (may be smaller than scheme).
  Region effective_scheme() const;
};

LocalRule make_rule(int cell_dim, int s, Region scheme,
                    std::vector<LocalOperator> images);

/// Linear extension of the rule to an arbitrary one-cell operator.
LocalOperator rule_apply_single(const LocalRule& rule, const Mat& a);

/// Per-offset commutation data plus homomorphism residuals. A rule is a valid
/// automaton iff the images form a unital *-homomorphism and the image
/// algebra commutes with each of its overlapping translates.
struct ValidationReport {
  double multiplicativity_residual = 0.0;
  double adjoint_residual = 0.0;
  double unit_residual = 0.0;
  struct OffsetCheck {
    Site offset;
    double commutator_norm = 0.0;
  };
  std::vector<OffsetCheck> offsets;
  double eps = kEps;

  bool homomorphism_ok() const {
    return multiplicativity_residual <= eps && adjoint_residual <= eps &&
           unit_residual <= eps;
  }
  bool commutation_ok() const {
    for (const auto& o : offsets)
      if (o.commutator_norm > eps) return false;
    return true;
  }
  bool valid() const { return homomorphism_ok() && commutation_ok(); }
  /// First offset whose commutator exceeds eps, if any.
  std::optional<Site> offending_offset() const;
};

ValidationReport validate_rule(const LocalRule& rule, double eps = kEps);

/// Heisenberg image of a local observable on the infinite lattice, computed
/// inside a finite window (no wrapping). The window must contain
/// obs.region + scheme. Result is returned untrimmed on the window.
LocalOperator apply_on_window(const LocalRule& rule, const LocalOperator& obs,
                              const Region& window);

/// Same, on the minimal window, trimmed.
LocalOperator apply_local(const LocalRule& rule, const LocalOperator& obs);

/// Heisenberg image on a wrapped torus. Requires a regular torus; the
/// observable's region is wrapped to canonical coordinates first.
LocalOperator global_apply(const LocalRule& rule, const LocalOperator& obs,
                           const TorusSpec& torus);

/// Dense one-step unitary g on a regular torus, with
/// global_apply(rule, a) = g^dag a g, global phase fixed by phase_fix.
Mat global_unitary(const LocalRule& rule, const TorusSpec& torus,
                   std::int64_t dim_cap = kDefaultDimCap);

/// Composition first `inner`, then `outer` as Heisenberg maps:
/// result(a) = outer(inner(a)). The composite automaton performs one step of
/// `inner` after one step of `outer` in the Schroedinger picture.
LocalRule compose(const LocalRule& outer, const LocalRule& inner);

/// Conjugates the automaton by the cellwise unitary c: the global unitary of
/// the result is (x)c * g * (x)c^dag.
LocalRule conjugate_cellwise(const LocalRule& rule, const Mat& c);

// -- Elementary rules ---------------------------------------------------------

LocalRule identity_rule(int d);
/// global_apply(a at x) = w^dag a w at x.
LocalRule cellwise_rule(const Mat& w);
/// step=+1 is the right shift: global_apply(a at x) = a at x+1 (observables
/// move right; cell contents move left). Fixed convention, used everywhere.
LocalRule shift_rule(int d, int step);
/// Nearest-neighbor qubit phase-gate automaton with angle phi: the product of
/// two-cell gates diag(1,1,1,e^{i phi}) over all adjacent pairs.
LocalRule phase_gate_rule(double phi);

// -- Construction from commuting unitaries -----------------------------------

/// A unitary u0 on a finite region commuting with all its translates up to
/// the recorded phases: U_x U_y = zeta_{y-x} U_y U_x.
struct CommutingUnitaryFamily {
  LocalOperator u0;
  std::vector<std::pair<Site, cdouble>> phases;  // per overlap offset
};

/// Verifies the phase-commutation relations (throws naming the offending
/// offset) and records the phases.
CommutingUnitaryFamily make_commuting_family(const LocalOperator& u0);

/// The automaton obtained by conjugating with the product of all translates
/// of u0; neighborhood scheme is the difference set of u0's region.
LocalRule from_commuting_unitary(const CommutingUnitaryFamily& fam);

// -- Construction from an abelian-neighborhood specification ------------------

/// Cell-basis phase table u (u(0,b) = u(a,0) = 1, all entries unit modulus)
/// plus a cellwise unitary. Generates the general nearest-neighbor automaton
/// whose side support algebras are diagonal.
struct AbelianRuleSpec {
  Mat phase_table;  // d x d, unit-modulus entries, first row/column ones
  Mat cellwise;     // d x d unitary
};

void validate_abelian_spec(const AbelianRuleSpec& spec);
LocalRule from_abelian_spec(const AbelianRuleSpec& spec);

// -- Construction from a block-partitioned unitary pair ----------------------

/// Checked constructor: builds the two-layer block automaton from u and v and
/// accepts it only if the result commutes with single-site translations.
/// u : C^{d^2} -> C^{n(-1)} (x) C^{n(+1)}   (first layer, one supercell)
/// v : C^{n(+1)} (x) C^{n(-1)} -> C^{d^2}   (second layer, one shifted cube)
struct FromMargolusResult {
  std::optional<LocalRule> rule;
  double translation_deviation = 0.0;
  std::string message;
};

FromMargolusResult from_margolus(const Mat& u, const Mat& v,
                                 const std::map<int, int>& quadrant_dims,
                                 int cell_dim, int s);

}  // namespace qca
