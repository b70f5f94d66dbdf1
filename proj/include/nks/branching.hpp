// SPDX-License-Identifier: Apache-2.0
//
// Isotropy representations of the three homogeneous 6-spaces G/K and the
// multiplicities dim Hom_K(V, E) entering the Frobenius-reciprocity
// decomposition of L^2 sections.
//
//   S3xS3  G = SU2^3, K = SU2 (diagonal)  K-irreps Sym^j E
//   CP3    G = SO5,   K = U2              K-irreps E(a,b) = Sym^a E (x) C_b
//   Flag   G = SU3,   K = T^2             K-irreps = weights
#pragma once

#include "nks/rootrep.hpp"

#include <map>
#include <string>
#include <string_view>
#include <variant>

namespace nks {

enum class Space { S3xS3, CP3, Flag };
enum class Bundle { Functions, Lambda11_0 };

std::string space_name(Space s);
std::string bundle_name(Bundle b);
/// Inverses of space_name / bundle_name; throw std::invalid_argument.
Space parse_space(std::string_view name);
Bundle parse_bundle(std::string_view name);

struct HomogeneousSpace {
  Space id;
  Group group;
  std::string isotropy;
  int isometry_dim;
};

const HomogeneousSpace& homogeneous_space(Space s);

/// Irreducible U2 representation Sym^a E (x) C_b; requires a >= 0 and a = b mod 2.
struct U2Label {
  int a;
  int b;

  friend auto operator<=>(const U2Label&, const U2Label&) = default;
  friend bool operator==(const U2Label&, const U2Label&) = default;
};

void validate(const U2Label& l);
std::string to_string(const U2Label& l);

using Su2Module = std::map<int, long>;          // Sym^j -> multiplicity
using U2Module = std::map<U2Label, long>;       // E(a,b) -> multiplicity
using TorusModule = std::map<WeightVec, long>;  // weight -> multiplicity

using KModule = std::variant<Su2Module, U2Module, TorusModule>;

long module_dimension(const KModule& m);
std::string to_string(const KModule& m);

struct IsotropyModule {
  Space space;
  Bundle bundle;
  KModule content;

  long dimension() const { return module_dimension(content); }
};

/// The holomorphic tangent representation p^{1,0}.
KModule holomorphic_tangent(Space s);

/// Complex conjugate representation (p^{0,1} from p^{1,0}).
KModule conjugate(const KModule& m);

/// Direct sum in the representation ring of K.
KModule direct_sum(const KModule& x, const KModule& y);

/// Tensor product in the representation ring of K.
KModule tensor(const KModule& x, const KModule& y);

/// Hard-coded isotropy modules: the trivial module for functions, and the
/// known decomposition of the primitive (1,1)-forms.
IsotropyModule isotropy_module(Space s, Bundle b);

/// Recomputes Lambda^{1,1}_0 as p^{1,0} (x) p^{0,1} with one trivial summand removed.
IsotropyModule derive_lambda11_0(Space s);

/// Restriction of an SU2^3 irrep to the diagonal SU2 by two successive
/// Clebsch-Gordan products.
Su2Module restrict_to_diagonal_su2(const IrrepLabel& irrep);

/// Restriction of an SO5 irrep to U2 using (m, q) = (l1 - l2, l1 + l2) on
/// torus weights followed by SU2 highest-weight peeling at fixed charge q.
U2Module restrict_so5_to_u2(const IrrepLabel& irrep);

/// Restriction of a G-irrep of the space's group to K.
KModule restrict_to_isotropy(Space s, const IrrepLabel& irrep);

/// Multiplicity of the irreducible summands of E inside V, i.e. dim Hom_K(V, E).
long hom_dimension(Space s, const IrrepLabel& irrep, Bundle b);

/// Casimir of a K-irrep with respect to -B_G restricted to k.
Rational k_casimir(Space s, const KModule& single_irrep);

}  // namespace nks
