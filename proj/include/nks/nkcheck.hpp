// SPDX-License-Identifier: Apache-2.0
//
// Verification suites on the flag manifold SU3/T2 and on the flat SU(3)
// model. Every check compares two exact forms; the residual is the printed
// difference and a check passes iff it is "0".
#pragma once

#include "nks/dga.hpp"

#include <string>
#include <vector>

namespace nks {

struct Check {
  std::string name;
  bool passed;
  std::string residual;

  friend bool operator==(const Check&, const Check&) = default;
};

struct VerificationReport {
  std::string suite;
  std::vector<Check> checks;

  bool passed() const;
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Algebraic SU(3)-structure identities for X over the basis e1..e6.
VerificationReport verify_pointwise_identities();

/// Maurer-Cartan equations, Killing-symbol differentials, the nearly Kaehler
/// system and d^2 = 0 on all generators.
VerificationReport verify_structure_equations();

/// Identities for the Killing 1-form xi, J xi and phi_K = (d xi)^{(1,1)}_0.
VerificationReport verify_killing_suite();

/// Identities built from the eigenfunction f = v1 (eigenvalue 12).
VerificationReport verify_eigenfunction_suite();

/// phi_v is a co-closed primitive (1,1) eigenform for 12, and xi -> phi_v is
/// injective on su(3) (rank 8, matching the spectral upper bound).
VerificationReport verify_moduli_generators(unsigned threads = 0);

/// Replays the direct-sum argument: the codifferential of phi_K + eta.
VerificationReport verify_injectivity_argument();

/// Structure, Killing, eigenfunction, moduli-generator and injectivity suites.
std::vector<VerificationReport> verify_flag(unsigned threads = 0);

/// Rank of a rational matrix (rows of equal length), by exact elimination.
std::size_t exact_rank(std::vector<std::vector<Rational>> rows);

/// Primitive (1,1) forms spanning Lambda^{1,1}_0 (dimension 8), in a fixed order.
std::vector<dga::Form> primitive11_basis();

}  // namespace nks
