// SPDX-License-Identifier: Apache-2.0
//
// Spectrum of the homogeneous Laplacian on functions and on primitive
// (1,1)-forms, eigenvalue-12 multiplicities, and the resulting upper bound on
// infinitesimal nearly Kaehler deformations.
#pragma once

#include "nks/branching.hpp"

#include <vector>

namespace nks {

struct SpectrumEntry {
  IrrepLabel irrep;
  Rational eigenvalue;
  long hom_dim;
  long irrep_dim;
  long contribution;  // hom_dim * irrep_dim

  friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

/// Worker count for enumeration: NK_SPECTRA_THREADS if set (must be a positive
/// integer, std::invalid_argument otherwise), else the hardware concurrency.
unsigned default_thread_count();

/// All irreps with eigenvalue <= cutoff and nonzero Hom into the bundle fibre,
/// sorted by (eigenvalue, label). `threads == 0` picks default_thread_count().
/// Throws std::invalid_argument for a negative cutoff.
std::vector<SpectrumEntry> enumerate_spectrum(Space s, Bundle b, const Rational& cutoff, unsigned threads = 0);

long eigenspace_multiplicity(Space s, Bundle b, const Rational& eigenvalue, unsigned threads = 0);

struct ModuliReport {
  Space space;
  long dim_omega11_12;
  long dim_isometry;
  long dim_omega0_12;
  long nk_upper_bound_raw;  // may be negative
  long nk_upper_bound;      // clamped at zero
  long einstein_mult_2;
  long einstein_mult_6;

  friend bool operator==(const ModuliReport&, const ModuliReport&) = default;
};

ModuliReport moduli_upper_bound(Space s, unsigned threads = 0);

struct EinsteinCheck {
  Space space;
  long mult_2;
  long mult_6;

  bool passed() const { return mult_2 == 0 && mult_6 == 0; }
};

EinsteinCheck einstein_deformation_check(Space s, unsigned threads = 0);

struct ScalNormalization {
  Space space;
  /// K-summands of the complexified isotropy representation with their Casimir.
  std::vector<std::pair<std::string, Rational>> summands;
  Rational isotropy_casimir;  // w.r.t. -B
  Rational scal_h;            // 3/2 - 3 Cas, metric -B
  Rational q_rbar;            // q(Rbar) on TM, metric -B/12

  bool passed() const {
    return isotropy_casimir == Rational(-1, 3) && scal_h == Rational(5, 2) && q_rbar == Rational(4);
  }
};

ScalNormalization scal_normalization_check(Space s);

}  // namespace nks
