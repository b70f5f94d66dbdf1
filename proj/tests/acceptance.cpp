// SPDX-License-Identifier: Apache-2.0
// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any failure.
#include "nks/dga.hpp"
#include "nks/nkcheck.hpp"
#include "nks/spectrum.hpp"

#include <algorithm>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <set>
#include <string>

using namespace nks;

namespace {

constexpr Space kSpaces[] = {Space::S3xS3, Space::CP3, Space::Flag};

bool suite_has(const VerificationReport& r, std::initializer_list<const char*> names) {
  if (!r.passed()) return false;
  for (const char* n : names) {
    bool found = false;
    for (const Check& c : r.checks) found = found || (c.name == n && c.passed);
    if (!found) return false;
  }
  return true;
}

bool c1() {
  if (eigenspace_multiplicity(Space::S3xS3, Bundle::Lambda11_0, Rational(12)) != 9) return false;
  std::set<std::vector<int>> labels;
  for (const auto& e : enumerate_spectrum(Space::S3xS3, Bundle::Lambda11_0, Rational(12)))
    if (e.eigenvalue == 12) labels.insert(e.irrep.labels);
  return labels == std::set<std::vector<int>>{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}};
}

bool c2() {
  return eigenspace_multiplicity(Space::CP3, Bundle::Lambda11_0, Rational(12)) == 20 &&
         eigenspace_multiplicity(Space::CP3, Bundle::Functions, Rational(12)) == 10;
}

bool c3() {
  return eigenspace_multiplicity(Space::Flag, Bundle::Lambda11_0, Rational(12)) == 32 &&
         eigenspace_multiplicity(Space::Flag, Bundle::Functions, Rational(12)) == 16;
}

bool c4() {
  return moduli_upper_bound(Space::S3xS3).nk_upper_bound == 0 && moduli_upper_bound(Space::CP3).nk_upper_bound == 0 &&
         moduli_upper_bound(Space::Flag).nk_upper_bound == 8;
}

bool c5() {
  for (Space s : kSpaces) {
    const EinsteinCheck c = einstein_deformation_check(s);
    if (c.mult_2 != 0 || c.mult_6 != 0) return false;
  }
  // On the flag manifold V(1,0) and V(0,1) have no invariant maps into either bundle.
  for (const std::vector<int>& l : {std::vector<int>{1, 0}, std::vector<int>{0, 1}})
    for (Bundle b : {Bundle::Functions, Bundle::Lambda11_0})
      if (hom_dimension(Space::Flag, {Group::SU3, l}, b) != 0) return false;
  return true;
}

bool c6() {
  const U2Module expected{{{0, -2}, 1}, {{0, 0}, 1}, {{0, 2}, 1}, {{1, -1}, 1}, {{1, 1}, 1}, {{2, 0}, 1}};
  return restrict_so5_to_u2({Group::SO5, {1, 1}}) == expected;
}

bool c7() {
  using namespace nks::dga;
  const ModelConstants& m = model();
  if (!verify_structure_equations().passed()) return false;
  if (d(m.omega) != m.psi_plus * Coefficient(3)) return false;
  if (d(m.psi_minus) != wedge(m.omega, m.omega) * Coefficient(-2)) return false;
  for (int k = 0; k < kGenerators; ++k)
    if (!d(d(Form::generator(k))).is_zero()) return false;
  for (int i = 1; i <= 6; ++i)
    if (!d(d(Form::scalar(Coefficient::x(i)))).is_zero()) return false;
  for (int j = 1; j <= 2; ++j)
    if (!d(d(Form::scalar(Coefficient::v(j)))).is_zero()) return false;
  return d(Form::e(1)).to_string() == "2*h1^e2 - 2*h2^e2 + e35 + e46" &&
         d(Form::scalar(Coefficient::v(1))).to_string() == "-x2*e1 + x1*e2 - x4*e3 + x3*e4";
}

bool c8() {
  return suite_has(verify_moduli_generators(),
                   {"phi_v_type11", "phi_v_primitive", "codiff_phi_v", "laplace_phi_v", "generator_rank"}) &&
         moduli_upper_bound(Space::Flag).nk_upper_bound == 8;
}

bool c9() {
  return suite_has(verify_killing_suite(),
                   {"laplace_xi", "laplace_jxi", "codiff_jxi", "codiff_phi_k", "laplace_phi_k"});
}

bool c10() {
  for (Space s : kSpaces) {
    const ScalNormalization n = scal_normalization_check(s);
    if (n.isotropy_casimir != Rational(-1, 3) || n.scal_h != Rational(5, 2) || n.q_rbar != 4) return false;
  }
  return true;
}

bool c11() {
  using namespace nks::dga;
  for (Group g : {Group::SU2, Group::SU2Cubed, Group::SO5, Group::SU3}) {
    const int arity = label_arity(g);
    std::vector<int> labels(arity, 0);
    bool ok = true;
    const std::function<void(int)> walk = [&](int i) {
      if (i == arity) {
        if (g == Group::SO5 && labels[1] > labels[0]) return;
        const IrrepLabel irrep{g, labels};
        if (laplace_eigenvalue(irrep) <= 60) ok = ok && weight_multiplicities(irrep).total() == dimension(irrep);
        return;
      }
      for (int k = 0; k <= 10; ++k) {
        labels[i] = k;
        walk(i + 1);
      }
      labels[i] = 0;
    };
    walk(0);
    if (!ok) return false;
    if (g != Group::SU2Cubed && casimir_eigenvalue(adjoint_irrep(g)) != -1) return false;
  }

  std::mt19937 gen(7u);
  const auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); };
  const auto random_form = [&](int degree, bool horizontal, bool symbolic) {
    Form f(degree);
    for (int t = 0; t < 3; ++t) {
      std::vector<int> pool;
      for (int i = horizontal ? 3 : 0; i < kGenerators; ++i) pool.push_back(i);
      std::shuffle(pool.begin(), pool.end(), gen);
      Mask mask = 0;
      for (int i = 0; i < degree; ++i) mask |= static_cast<Mask>(1u << pool[i]);
      Coefficient c(pick(-3, 3));
      if (symbolic)
        for (int i = 1; i <= 6; ++i) c += Coefficient::x(i) * Rational(pick(-2, 2));
      f += Form::monomial(mask, c);
    }
    return f;
  };
  for (int n = 0; n < 300; ++n) {
    const int p = pick(0, 4), q = pick(0, 4);
    const Form a = random_form(p, false, true), b = random_form(q, false, false);
    const Coefficient s(p % 2 == 0 ? 1 : -1);
    if (d(wedge(a, b)) != wedge(d(a), b) + s * wedge(a, d(b))) return false;
  }
  for (int p = 0; p <= 6; ++p)
    for (int n = 0; n < 50; ++n) {
      const Form a = random_form(p, true, true);
      const Coefficient s(p % 2 == 0 ? 1 : -1);  // (-1)^{p(6-p)} = (-1)^p
      if (hodge_star(hodge_star(a)) != s * a) return false;
    }
  return true;
}

struct Criterion {
  int id;
  const char* what;
  bool (*run)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "S3xS3 primitive (1,1) multiplicity at 12 is 9 from (2,0,0),(0,2,0),(0,0,2)", c1},
      {2, "CP3 multiplicities at 12: 20 on primitive (1,1) forms, 10 on functions", c2},
      {3, "flag multiplicities at 12: 32 on primitive (1,1) forms, 16 on functions", c3},
      {4, "deformation bounds 0, 0, 8", c4},
      {5, "no eigenvalues 2 or 6 on primitive (1,1) forms", c5},
      {6, "SO5 adjoint restricted to U2 has the six expected summands", c6},
      {7, "structure equations, d omega = 3 psi+, d psi- = -2 omega^2, d^2 = 0", c7},
      {8, "moduli generators: primitive, co-closed, eigenvalue 12, rank 8", c8},
      {9, "Killing-field identities on the flag model", c9},
      {10, "isotropy Casimir -1/3, scal 5/2, q(Rbar) = 4", c10},
      {11, "weight totals, adjoint Casimir, Leibniz and star-squared properties", c11},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    bool ok = false;
    std::string note;
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      note = std::string(" (") + e.what() + ")";
    }
    failures += ok ? 0 : 1;
    std::printf("criterion %2d: %s  %s%s\n", c.id, ok ? "PASS" : "FAIL", c.what, note.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
  return failures == 0 ? 0 : 1;
}
