// SPDX-License-Identifier: Apache-2.0
#include "nks/nkcheck.hpp"

#include "nks/spectrum.hpp"

#include <algorithm>

namespace nks {

using dga::Coefficient;
using dga::Form;

namespace {

Check compare(std::string name, const Form& lhs, const Form& rhs) {
  const Form diff = lhs - rhs;
  return {std::move(name), diff.is_zero(), diff.to_string()};
}

Check compare(std::string name, const Coefficient& lhs, const Coefficient& rhs) {
  const Coefficient diff = lhs - rhs;
  return {std::move(name), diff.is_zero(), diff.to_string()};
}

// Collects residuals of many sub-identities into one check.
class Aggregate {
 public:
  explicit Aggregate(std::string name) : name_(std::move(name)) {}

  void add(const std::string& label, const Form& lhs, const Form& rhs) {
    const Form diff = lhs - rhs;
    if (diff.is_zero()) return;
    if (!residual_.empty()) residual_ += "; ";
    residual_ += label + ": " + diff.to_string();
  }

  Check result() const { return {name_, residual_.empty(), residual_.empty() ? "0" : residual_}; }

 private:
  std::string name_;
  std::string residual_;
};

Form scaled(const Form& f, const Rational& r) { return f * Coefficient(r); }

std::vector<Rational> flatten(const Form& f) {
  std::vector<Rational> out((std::size_t{1} << dga::kGenerators) * dga::kSymbols);
  for (const auto& [m, c] : f.terms())
    for (int s = 0; s < dga::kSymbols; ++s) out[m * dga::kSymbols + s] = c.slot(s);
  return out;
}

// A_X(Z) = -(Z _| (JX _| Psi+)), identifying vectors and 1-forms.
Form a_tensor(const Form& x, const Form& z) {
  return -dga::contract(z, dga::contract(dga::apply_j(x), dga::model().psi_plus));
}

dga::Matrix3 matrix_sum(const dga::Matrix3& a, const dga::Matrix3& b, const Rational& sb) {
  dga::Matrix3 out = a;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      out[i][j].re += sb * b[i][j].re;
      out[i][j].im += sb * b[i][j].im;
    }
  return out;
}

}  // namespace

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::size_t exact_rank(std::vector<std::vector<Rational>> rows) {
  std::size_t rank = 0;
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const Rational factor = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= factor * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::vector<Form> primitive11_basis() {
  std::vector<Form> basis;
  std::vector<std::vector<Rational>> rows;
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j) {
      const Form p = dga::type_decompose(Form::basis({i, j})).primitive11;
      rows.push_back(flatten(p));
      if (exact_rank(rows) == basis.size() + 1) {
        basis.push_back(p);
      } else {
        rows.pop_back();
      }
    }
  return basis;
}

VerificationReport verify_pointwise_identities() {
  const auto& nk = dga::model();
  VerificationReport r{"identities", {}};

  Aggregate a_norm("A_norm"), a_square("A_square_sum"), a_contract("A_contraction_sum"),
      psi_minus("psi_minus_contraction"), psi_wedge("psi_plus_wedge"), omega_wedge("omega_wedge"),
      star_psi("star_x_wedge_psi_plus"), star_omega2("star_jx_wedge_omega2");
  const Form omega2 = dga::wedge(nk.omega, nk.omega);
  for (int k = 1; k <= 6; ++k) {
    const std::string label = "X=e" + std::to_string(k);
    const Form x = Form::e(k);
    const Form jx = dga::apply_j(x);
    const Form ax = dga::contract(jx, nk.psi_plus);  // A_X as a 2-form, up to sign

    a_norm.add(label, Form::scalar(dga::inner(ax, ax)), Form::scalar(dga::inner(x, x) * Rational(2)));

    Form square(1), contraction(3);
    for (int i = 1; i <= 6; ++i) {
      square += a_tensor(Form::e(i), a_tensor(Form::e(i), x));
      contraction += dga::wedge(a_tensor(x, Form::e(i)), dga::contract(Form::e(i), nk.psi_plus));
    }
    a_square.add(label, square, scaled(x, -4));
    a_contract.add(label, contraction, scaled(dga::wedge(x, nk.omega), -2));

    psi_minus.add(label, dga::contract(x, nk.psi_minus), -dga::contract(jx, nk.psi_plus));
    psi_wedge.add(label, dga::wedge(dga::contract(x, nk.psi_plus), nk.psi_plus), dga::wedge(x, omega2));
    omega_wedge.add(label, dga::wedge(dga::contract(jx, nk.psi_plus), nk.omega), dga::wedge(x, nk.psi_plus));
    star_psi.add(label, dga::hodge_star(dga::wedge(x, nk.psi_plus)), dga::contract(jx, nk.psi_plus));
    star_omega2.add(label, dga::hodge_star(dga::wedge(jx, omega2)), scaled(x, -2));
  }
  for (const auto* agg : {&a_norm, &a_square, &a_contract, &psi_minus, &psi_wedge, &omega_wedge, &star_psi,
                          &star_omega2})
    r.checks.push_back(agg->result());

  Aggregate star_phi("star_phi_wedge_omega");
  const auto basis = primitive11_basis();
  for (std::size_t i = 0; i < basis.size(); ++i)
    star_phi.add("phi" + std::to_string(i + 1), dga::hodge_star(dga::wedge(basis[i], nk.omega)), -basis[i]);
  r.checks.push_back(star_phi.result());
  r.checks.push_back({"primitive11_dimension", basis.size() == 8,
                      basis.size() == 8 ? "0" : "dimension " + std::to_string(basis.size())});

  Aggregate star_sq("star_squared");
  for (unsigned m = 0; m < (1u << 9); ++m) {
    if (m & dga::kVerticalMask) continue;
    const Form f = Form::monomial(static_cast<dga::Mask>(m));
    const int sign = f.degree() % 2 ? -1 : 1;
    star_sq.add(f.to_string(), dga::hodge_star(dga::hodge_star(f)), scaled(f, sign));
  }
  r.checks.push_back(star_sq.result());

  r.checks.push_back(compare("omega_wedge_psi_plus", dga::wedge(nk.omega, nk.psi_plus), Form(5)));
  r.checks.push_back(compare("omega_cubed", dga::wedge(nk.omega, omega2), scaled(nk.volume, 6)));
  r.checks.push_back(compare("psi_plus_wedge_psi_minus", dga::wedge(nk.psi_plus, nk.psi_minus),
                             scaled(dga::wedge(nk.omega, omega2), Rational(2, 3))));
  r.checks.push_back(compare("psi_minus_is_star_psi_plus", dga::hodge_star(nk.psi_plus), nk.psi_minus));
  return r;
}

VerificationReport verify_structure_equations() {
  using dga::wedge;
  const auto& nk = dga::model();
  const auto& kd = dga::killing_data();
  const auto& g = dga::u3();
  VerificationReport r{"structure", {}};

  Aggregate jacobi("jacobi");
  for (int i = 0; i < dga::kGenerators; ++i)
    for (int j = 0; j < dga::kGenerators; ++j) {
      for (int k = 0; k < dga::kGenerators; ++k) {
        dga::AlgebraVector sum{};
        const auto term = [&](int a, int b, int c) {
          dga::AlgebraVector bc = g.bracket(b, c), ea{};
          ea[a] = 1;
          const auto v = g.bracket(ea, bc);
          for (int n = 0; n < dga::kGenerators; ++n) sum[n] += v[n];
        };
        term(i, j, k);
        term(j, k, i);
        term(k, i, j);
        if (sum != dga::AlgebraVector{}) jacobi.add("b" + std::to_string(i) + std::to_string(j) + std::to_string(k),
                                                    Form::scalar(1), Form::scalar(0));
      }
      for (int n = 0; n < dga::kGenerators; ++n)
        if (g.bracket(i, j)[n] != -g.bracket(j, i)[n])
          jacobi.add("antisymmetry", Form::scalar(1), Form::scalar(0));
    }
  r.checks.push_back(jacobi.result());

  const auto e = [](int i) { return Form::e(i); };
  const auto h = [](int j) { return Form::h(j); };
  const Form h12 = h(1) - h(2), h31 = h(3) - h(1), h23 = h(2) - h(3);
  const std::array<Form, 6> expected_de = {
      scaled(wedge(e(2), h12), -2) + Form::basis({3, 5}) + Form::basis({4, 6}),
      scaled(wedge(e(1), h12), 2) + Form::basis({4, 5}) - Form::basis({3, 6}),
      scaled(wedge(e(4), h31), 2) - Form::basis({1, 5}) + Form::basis({2, 6}),
      scaled(wedge(e(3), h31), -2) - Form::basis({2, 5}) - Form::basis({1, 6}),
      scaled(wedge(e(6), h23), -2) + Form::basis({1, 3}) + Form::basis({2, 4}),
      scaled(wedge(e(5), h23), 2) + Form::basis({1, 4}) - Form::basis({2, 3}),
  };
  for (int i = 1; i <= 6; ++i)
    r.checks.push_back(compare("d_e" + std::to_string(i), dga::d(e(i)), expected_de[i - 1]));

  r.checks.push_back(compare("d_e12", dga::d(Form::basis({1, 2})), nk.psi_plus));
  r.checks.push_back(compare("d_e34", dga::d(Form::basis({3, 4})), -nk.psi_plus));
  r.checks.push_back(compare("d_e56", dga::d(Form::basis({5, 6})), nk.psi_plus));

  const auto& a = kd.a;
  const std::array<Form, 3> expected_dv = {a[1] - a[2], a[2] - a[0], a[0] - a[1]};
  for (int j = 1; j <= 3; ++j)
    r.checks.push_back(
        compare("d_v" + std::to_string(j), dga::d(Form::scalar(Coefficient::v(j))), expected_dv[j - 1]));

  const auto& psi = nk.psi_plus;
  const auto v = [](int j) { return Coefficient::v(j); };
  const std::array<Form, 3> expected_dja = {
      dga::contract(-a[0] + a[1] + a[2], psi) + (v(2) - v(3)) * Rational(4) * Form::basis({5, 6}),
      dga::contract(a[0] - a[1] + a[2], psi) + (v(1) - v(3)) * Rational(4) * Form::basis({3, 4}),
      dga::contract(a[0] + a[1] - a[2], psi) + (v(1) - v(2)) * Rational(4) * Form::basis({1, 2}),
  };
  for (int i = 0; i < 3; ++i)
    r.checks.push_back(compare("d_Ja" + std::to_string(i + 1), dga::d(kd.j_a[i]), expected_dja[i]));

  r.checks.push_back(compare("d_omega", dga::d(nk.omega), scaled(psi, 3)));
  r.checks.push_back(compare("d_psi_minus", dga::d(nk.psi_minus), scaled(wedge(nk.omega, nk.omega), -2)));

  Aggregate dd("d_squared");
  for (int k = 0; k < dga::kGenerators; ++k) {
    const Form gk = Form::generator(k);
    dd.add("d^2 " + gk.to_string(), dga::d(dga::d(gk)), Form(3));
  }
  for (int i = 1; i <= 6; ++i) dd.add("d^2 x" + std::to_string(i), dga::d(dga::d(Form::scalar(Coefficient::x(i)))), Form(2));
  for (int j = 1; j <= 3; ++j) dd.add("d^2 v" + std::to_string(j), dga::d(dga::d(Form::scalar(v(j)))), Form(2));
  r.checks.push_back(dd.result());

  // The centre of u(3) brackets trivially, so summing the coefficient
  // differential over nine or over the eight su(3) directions agrees.
  dga::AlgebraVector centre{};
  for (int j = 1; j <= 3; ++j) centre[dga::h_index(j)] = 1;
  Aggregate inert("centre_inert");
  for (int k = 0; k < dga::kGenerators; ++k) {
    dga::AlgebraVector bk{};
    bk[k] = 1;
    if (g.bracket(centre, bk) != dga::AlgebraVector{}) inert.add("b" + std::to_string(k), Form::scalar(1), Form::scalar(0));
  }
  r.checks.push_back(inert.result());

  r.checks.push_back({"model_forms_basic",
                      dga::basic_check(nk.omega) && dga::basic_check(psi) && dga::basic_check(nk.psi_minus) &&
                          dga::basic_check(kd.xi) && dga::basic_check(kd.phi_v),
                      "0"});
  if (!r.checks.back().passed) r.checks.back().residual = "not basic";
  return r;
}

VerificationReport verify_killing_suite() {
  const auto& nk = dga::model();
  const auto& kd = dga::killing_data();
  const Form& xi = kd.xi;
  const Form& jxi = kd.j_xi;
  const Form jxi_psi = dga::contract(jxi, nk.psi_plus);
  VerificationReport r{"killing", {}};

  r.checks.push_back(compare("d_jxi", dga::d(jxi), scaled(dga::contract(xi, nk.psi_plus), -3)));
  r.checks.push_back(compare("codiff_jxi", dga::codifferential(jxi), Form(0)));
  r.checks.push_back(compare("laplace_xi", dga::laplacian(xi), scaled(xi, 10)));
  r.checks.push_back(compare("laplace_jxi", dga::laplacian(jxi), scaled(jxi, 18)));

  const Form dxi = dga::d(xi);
  const auto parts = dga::type_decompose(dxi);
  r.checks.push_back(compare("dxi_20_part", parts.part20, -jxi_psi));
  r.checks.push_back(compare("dxi_primitive", dga::inner(dxi, nk.omega), Coefficient()));
  r.checks.push_back(compare("dxi_split", dxi, kd.phi_k - jxi_psi));

  const Form delta_phi = dga::codifferential(kd.phi_k);
  r.checks.push_back(compare("codiff_phi_k", delta_phi, scaled(xi, 8)));
  const Form lap_phi = dga::laplacian(kd.phi_k);
  r.checks.push_back(compare("laplace_phi_k", lap_phi, scaled(kd.phi_k, 12) + scaled(jxi_psi, 8)));
  // Hermitian Laplacian from the difference formula on primitive (1,1)-forms.
  const Form hermitian = lap_phi - dga::contract(dga::apply_j(delta_phi), nk.psi_plus);
  r.checks.push_back(compare("hermitian_laplace_phi_k", hermitian, scaled(kd.phi_k, 12)));
  return r;
}

namespace {

struct EigenfunctionData {
  Form f, df, jdf, djdf, eta_formula, eta_projection;
};

EigenfunctionData eigenfunction_data() {
  const auto& nk = dga::model();
  EigenfunctionData e;
  e.f = Form::scalar(Coefficient::v(1));
  e.df = dga::d(e.f);
  e.jdf = dga::apply_j(e.df);
  e.djdf = dga::d(e.jdf);
  // lambda = 12, so lambda/3 = 4.
  e.eta_formula = e.djdf + scaled(dga::contract(e.df, nk.psi_plus), 2) + Coefficient::v(1) * Rational(4) * nk.omega;
  e.eta_projection = dga::type_decompose(e.djdf).primitive11;
  return e;
}

}  // namespace

VerificationReport verify_eigenfunction_suite() {
  const auto& kd = dga::killing_data();
  const EigenfunctionData e = eigenfunction_data();
  VerificationReport r{"eigenfunction", {}};

  r.checks.push_back(compare("laplace_f", dga::laplacian(e.f), scaled(e.f, 12)));
  r.checks.push_back(compare("eta_formula_vs_projection", e.eta_formula, e.eta_projection));
  r.checks.push_back(compare("codiff_jdf", dga::codifferential(e.jdf), Form(0)));
  r.checks.push_back(compare("laplace_jdf", dga::laplacian(e.jdf), scaled(e.jdf, 16)));
  r.checks.push_back(compare("codiff_eta", dga::codifferential(e.eta_projection), scaled(e.jdf, 4)));

  const auto magic = [](const Form& theta) {
    const Form lhs = dga::alpha(dga::d(theta));
    const Form rhs = scaled(dga::apply_j(theta), 4) + dga::apply_j(dga::alpha(dga::d(dga::apply_j(theta))));
    return std::pair{lhs, rhs};
  };
  const auto [mdf_l, mdf_r] = magic(e.df);
  r.checks.push_back(compare("magic_df", mdf_l, mdf_r));
  const auto [mxi_l, mxi_r] = magic(kd.xi);
  r.checks.push_back(compare("magic_xi", mxi_l, mxi_r));
  r.checks.push_back(compare("alpha_dxi", dga::alpha(dga::d(kd.xi)), scaled(kd.j_xi, -2)));
  return r;
}

VerificationReport verify_moduli_generators(unsigned threads) {
  const auto& nk = dga::model();
  const auto& kd = dga::killing_data();
  const Form& phi = kd.phi_v;
  VerificationReport r{"moduli_generators", {}};

  r.checks.push_back(compare("phi_v_type11", dga::apply_j(phi), phi));
  r.checks.push_back(compare("phi_v_primitive", dga::inner(phi, nk.omega), Coefficient()));
  r.checks.push_back({"phi_v_basic", dga::basic_check(phi), dga::basic_check(phi) ? "0" : "not basic"});
  r.checks.push_back(compare("dphi_v_wedge_omega", dga::wedge(dga::d(phi), nk.omega), Form(5)));
  r.checks.push_back(compare("codiff_phi_v", dga::codifferential(phi), Form(1)));
  r.checks.push_back(compare("laplace_phi_v", dga::laplacian(phi), scaled(phi, 12)));

  // xi -> phi_v is linear; it is injective iff the 1-jets at the identity of
  // the images of an su(3) basis are independent.
  const auto& g = dga::u3();
  std::vector<dga::Matrix3> su3;
  for (int i = 1; i <= 6; ++i) su3.push_back(g.matrix(dga::e_index(i)));
  su3.push_back(matrix_sum(g.matrix(dga::h_index(1)), g.matrix(dga::h_index(2)), -1));
  su3.push_back(matrix_sum(g.matrix(dga::h_index(2)), g.matrix(dga::h_index(3)), -1));
  const Form dphi = dga::d(phi);
  std::vector<std::vector<Rational>> rows;
  for (const auto& xi : su3) {
    const dga::SymbolValues at_identity = dga::killing_symbol_values(xi);
    std::vector<Rational> row = flatten(phi.evaluate(at_identity));
    const std::vector<Rational> jet = flatten(dphi.evaluate(at_identity));
    row.insert(row.end(), jet.begin(), jet.end());
    rows.push_back(std::move(row));
  }
  const long rank = static_cast<long>(exact_rank(rows));
  const long bound = moduli_upper_bound(Space::Flag, threads).nk_upper_bound;
  r.checks.push_back({"generator_rank", rank == 8 && rank == bound,
                      "rank " + std::to_string(rank) + ", upper bound " + std::to_string(bound)});
  if (r.checks.back().passed) r.checks.back().residual = "0";
  return r;
}

VerificationReport verify_injectivity_argument() {
  const auto& kd = dga::killing_data();
  const EigenfunctionData e = eigenfunction_data();
  VerificationReport r{"injectivity", {}};

  const Form delta = dga::codifferential(kd.phi_k + e.eta_projection);
  r.checks.push_back(compare("codiff_sum", delta, scaled(kd.xi, 8) + scaled(e.jdf, 4)));
  r.checks.push_back(compare("codiff_jxi", dga::codifferential(kd.j_xi), Form(0)));
  // If 8 xi + 4 J df = 0, applying d^* J leaves -4 d^*df = -48 f.
  r.checks.push_back(compare("f_component", dga::codifferential(dga::apply_j(delta)), scaled(e.f, -48)));
  return r;
}

std::vector<VerificationReport> verify_flag(unsigned threads) {
  return {verify_structure_equations(), verify_killing_suite(), verify_eigenfunction_suite(),
          verify_moduli_generators(threads), verify_injectivity_argument()};
}

}  // namespace nks
