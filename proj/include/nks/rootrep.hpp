// SPDX-License-Identifier: Apache-2.0
//
// Root data, Casimir and Laplace eigenvalues, Weyl dimensions and weight
// multiplicities for the four compact group families used by the spectrum
// computations: SU(2), SU(2)^3, SO(5) and SU(3).
//
// Weights live in an ambient coordinate space:
//   SU2       1 coordinate, Sym^k E has weights k, k-2, ..., -k
//   SU2Cubed  3 coordinates, one per factor
//   SO5       (l1, l2) in the eps_1, eps_2 basis
//   SU3       (l1, l2, l3) modulo (1,1,1), stored with coordinate sum zero
#pragma once

#include "nks/rational.hpp"

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nks {

enum class Group { SU2, SU2Cubed, SO5, SU3 };

std::string group_name(Group g);
/// Inverse of group_name; throws std::invalid_argument.
Group parse_group(std::string_view name);

/// Number of integer labels of an irreducible representation of `g`.
int label_arity(Group g);

using WeightVec = std::vector<Rational>;

struct RootSystem {
  Group group;
  int ambient_dim;
  std::vector<WeightVec> positive_roots;
  WeightVec rho;
  /// c with <.,.>_B = c * Euclidean on the torus dual (negative).
  Rational killing_scale;
  /// True for SU3: weights are taken modulo (1,1,1).
  bool sum_zero_quotient;
};

const RootSystem& root_system(Group g);

/// Re-derives the Killing scale from the roots alone: on the torus the
/// Killing form is -sum_{alpha} alpha (x) alpha, which is isotropic for every
/// supported family; the scale on the dual is the inverse of that factor.
/// Throws std::logic_error if the root sum is not a multiple of the identity
/// on the weight space.
Rational derive_killing_scale(const RootSystem& rs);

struct IrrepLabel {
  Group group;
  std::vector<int> labels;

  friend auto operator<=>(const IrrepLabel&, const IrrepLabel&) = default;
  friend bool operator==(const IrrepLabel&, const IrrepLabel&) = default;
};

/// Throws std::invalid_argument for negative labels, wrong arity, or SO5
/// labels with a < b.
void validate(const IrrepLabel& irrep);

IrrepLabel trivial_irrep(Group g);

/// Adjoint representation (SU2, SO5, SU3 only).
IrrepLabel adjoint_irrep(Group g);

std::string to_string(const IrrepLabel& irrep);

WeightVec canonicalize(Group g, WeightVec w);
Rational euclidean_dot(const WeightVec& a, const WeightVec& b);
WeightVec add(const WeightVec& a, const WeightVec& b);
WeightVec subtract(const WeightVec& a, const WeightVec& b);
WeightVec scale(const WeightVec& a, const Rational& s);
std::string to_string(const WeightVec& w);

WeightVec highest_weight(const IrrepLabel& irrep);

/// (||rho||^2 - ||rho+gamma||^2) / k for the norm induced by -B; <= 0.
Rational casimir_eigenvalue(const IrrepLabel& irrep, const Rational& metric_scale = Rational(1));

/// Homogeneous Laplace eigenvalue for the metric induced by -B/12.
Rational laplace_eigenvalue(const IrrepLabel& irrep);

/// Weyl dimension formula.
long dimension(const IrrepLabel& irrep);

struct WeightTable {
  IrrepLabel irrep;
  std::map<WeightVec, long> entries;

  long total() const;
  long multiplicity(const WeightVec& w) const;
};

WeightTable weight_multiplicities(const IrrepLabel& irrep);

/// Clebsch-Gordan series of Sym^a E (x) Sym^b E: labels a+b, a+b-2, ..., |a-b|,
/// each with multiplicity one. Sorted by decreasing label.
std::vector<std::pair<int, long>> tensor_decompose_su2(int a, int b);

}  // namespace nks
