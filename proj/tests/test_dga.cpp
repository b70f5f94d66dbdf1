// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nks/dga.hpp"

using namespace nks;
using namespace nks::dga;

namespace {

Form E(std::initializer_list<int> idx) { return Form::basis(idx); }
Coefficient X(int i) { return Coefficient::x(i); }
Coefficient V(int j) { return Coefficient::v(j); }

Complex cmul(const Complex& a, const Complex& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }

Matrix3 commutator(const Matrix3& a, const Matrix3& b) {
  Matrix3 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        const Complex p = cmul(a[i][k], b[k][j]), q = cmul(b[i][k], a[k][j]);
        out[i][j].re += p.re - q.re;
        out[i][j].im += p.im - q.im;
      }
  return out;
}

// Metric -tr(XY)/2, computed directly from matrices.
Rational trace_metric(const Matrix3& a, const Matrix3& b) {
  Rational t = 0;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) t += cmul(a[i][k], b[k][i]).re;
  return -t / 2;
}

AlgebraVector unit(int i) {
  AlgebraVector v{};
  v[i] = 1;
  return v;
}

}  // namespace

TEST_CASE("coefficients") {
  CHECK((X(3) - X(4)).to_string() == "x3 - x4");
  CHECK((V(1) * Rational(2)).to_string() == "2*v1");
  CHECK((-V(1) - V(2)).to_string() == "v3");
  CHECK(Coefficient(0).is_zero());
  CHECK(Coefficient(Rational(3, 2)).is_constant());
  CHECK((X(1) * Coefficient(3)) == X(1) * Rational(3));
  CHECK_THROWS_AS(X(1) * X(2), NonlinearCoefficient);
  SymbolValues vals{};
  vals[0] = 1;
  vals[1] = 5;
  vals[7] = Rational(1, 2);
  CHECK((X(1) * Rational(2) + V(1) + Coefficient(1)).evaluate(vals) == Rational(23, 2));
}

TEST_CASE("forms and wedge products") {
  CHECK(Form(2).to_string() == "0");
  CHECK(wedge(Form::e(1), Form::e(2)) == E({1, 2}));
  CHECK(wedge(Form::e(2), Form::e(1)) == -E({1, 2}));
  CHECK(wedge(Form::e(1), Form::e(1)).is_zero());
  CHECK(wedge({Form::e(3), Form::e(1), Form::e(2)}) == E({1, 2, 3}));
  CHECK(wedge(Form::h(1), Form::e(2)).to_string() == "h1^e2");
  CHECK(E({1, 3, 6}).to_string() == "e136");
  CHECK((X(2) * Form::e(1)).to_string() == "x2*e1");
  CHECK(wedge_sign(0b01, 0b10) == 1);
  CHECK(wedge_sign(0b10, 0b01) == -1);
  CHECK(wedge_sign(0b11, 0b01) == 0);
  CHECK(E({1, 2}).is_horizontal());
  CHECK_FALSE(Form::h(1).is_horizontal());
  CHECK_THROWS_AS(Form::e(1) + E({1, 2}), std::invalid_argument);
}

TEST_CASE("Lie algebra") {
  const LieAlgebraU3& g = u3();
  const auto h = [](int j) { return h_index(j); };
  const auto e = [](int i) { return e_index(i); };
  CHECK(g.bracket(h(1), e(1)) == unit(e(2)));
  AlgebraVector neg_e1 = unit(e(1));
  neg_e1[e(1)] = -1;
  CHECK(g.bracket(e(3), e(5)) == neg_e1);
  AlgebraVector h12{};
  h12[h(1)] = 2;
  h12[h(2)] = -2;
  CHECK(g.bracket(e(1), e(2)) == h12);

  for (int i = 0; i < kGenerators; ++i) {
    CHECK(g.decompose(g.matrix(i)) == unit(i));
    CHECK(g.metric(i) == trace_metric(g.matrix(i), g.matrix(i)));
    for (int j = 0; j < kGenerators; ++j) {
      if (i != j) CHECK(trace_metric(g.matrix(i), g.matrix(j)) == 0);
      CHECK(g.bracket(i, j) == g.decompose(commutator(g.matrix(i), g.matrix(j))));
      AlgebraVector ji = g.bracket(j, i);
      for (auto& r : ji) r = -r;
      CHECK(g.bracket(i, j) == ji);
    }
  }
}

TEST_CASE("structure equations") {
  CHECK(d(Form::e(1)).to_string() == "2*h1^e2 - 2*h2^e2 + e35 + e46");
  CHECK(d(Form::e(2)).to_string() == "-2*h1^e1 + 2*h2^e1 - e36 + e45");
  CHECK(d(Form::e(3)).to_string() == "2*h1^e4 - 2*h3^e4 - e15 + e26");
  CHECK(d(Form::e(4)).to_string() == "-2*h1^e3 + 2*h3^e3 - e16 - e25");
  CHECK(d(Form::e(5)).to_string() == "2*h2^e6 - 2*h3^e6 + e13 + e24");
  CHECK(d(Form::e(6)).to_string() == "-2*h2^e5 + 2*h3^e5 + e14 - e23");
  CHECK(d(Form::h(1)).to_string() == "-e12 - e34");
  CHECK(d(Form::h(2)).to_string() == "e12 - e56");
  CHECK(d(Form::h(3)).to_string() == "e34 + e56");
  CHECK(d(Form::scalar(V(1))).to_string() == "-x2*e1 + x1*e2 - x4*e3 + x3*e4");
  CHECK(d(Form::scalar(V(2))).to_string() == "x2*e1 - x1*e2 - x6*e5 + x5*e6");
  CHECK(d(Form::scalar(-V(1) - V(2))) == -(d(Form::scalar(V(1))) + d(Form::scalar(V(2)))));
}

TEST_CASE("Maurer-Cartan from matrix commutators") {
  // d g_k(b_i, b_j) = -g_k([b_i, b_j]) for the metric dual g_k of b_k.
  const LieAlgebraU3& g = u3();
  for (int k = 0; k < kGenerators; ++k) {
    const Form dk = d(Form::generator(k));
    for (int i = 0; i < kGenerators; ++i)
      for (int j = i + 1; j < kGenerators; ++j) {
        const AlgebraVector br = g.decompose(commutator(g.matrix(i), g.matrix(j)));
        const Rational value = -g.metric(k) * br[k];
        const Mask m = static_cast<Mask>((1u << i) | (1u << j));
        CHECK(dk.coefficient(m) * (g.metric(i) * g.metric(j)) == Coefficient(value));
      }
  }
}

TEST_CASE("model forms") {
  const ModelConstants& m = model();
  CHECK(m.omega.to_string() == "e12 - e34 + e56");
  CHECK(m.psi_plus.to_string() == "e136 - e145 + e235 + e246");
  CHECK(m.psi_minus.to_string() == "-e135 - e146 + e236 - e245");
  CHECK(m.volume == -E({1, 2, 3, 4, 5, 6}));
  CHECK(d(m.omega) == m.psi_plus * Coefficient(3));
  CHECK(d(m.psi_minus) == wedge(m.omega, m.omega) * Coefficient(-2));
  CHECK(d(m.psi_plus).is_zero());
  CHECK(hodge_star(m.psi_plus) == m.psi_minus);
  CHECK(hodge_star(m.omega) == wedge(m.omega, m.omega) * Coefficient(Rational(1, 2)));
  CHECK(wedge({m.omega, m.omega, m.omega}) == m.volume * Coefficient(6));
}

TEST_CASE("Hodge star and codifferential") {
  CHECK(hodge_star(Form::e(1)).to_string() == "-e23456");
  CHECK(hodge_star(E({1, 2})).to_string() == "-e3456");
  CHECK(hodge_star(Form::scalar(Coefficient(1))) == model().volume);
  CHECK_THROWS_AS(hodge_star(Form::h(1)), VerticalComponent);
  CHECK_THROWS_AS(codifferential(Form::scalar(Coefficient(1))), std::invalid_argument);
  CHECK(codifferential(E({1, 2})).is_zero());
  for (int i = 1; i <= 6; ++i) CHECK(apply_j(apply_j(Form::e(i))) == -Form::e(i));
}

TEST_CASE("J on the coframe") {
  CHECK(apply_j(Form::e(1)) == Form::e(2));
  CHECK(apply_j(Form::e(2)) == -Form::e(1));
  CHECK(apply_j(Form::e(3)) == -Form::e(4));
  CHECK(apply_j(Form::e(4)) == Form::e(3));
  CHECK(apply_j(Form::e(5)) == Form::e(6));
  CHECK(apply_j(Form::e(6)) == -Form::e(5));
  CHECK(apply_j(model().omega) == model().omega);
  CHECK(apply_j(model().psi_plus) == -model().psi_minus);
  CHECK(apply_j(model().psi_minus) == model().psi_plus);
}

TEST_CASE("interior products") {
  CHECK(interior(e_index(1), E({1, 2})) == Form::e(2));
  CHECK(interior(e_index(2), E({1, 2})) == -Form::e(1));
  CHECK(interior(e_index(3), E({1, 2})).is_zero());
  // Contraction uses the metric: h_j has norm 1/2.
  CHECK(interior(h_index(1), Form::h(1)) == Form::scalar(Coefficient(Rational(1, 2))));
  CHECK(contract(Form::e(1), model().omega) == Form::e(2));
  CHECK(inner(model().omega, model().omega) == Coefficient(3));
  CHECK(inner(model().psi_plus, model().psi_plus) == Coefficient(4));
}

TEST_CASE("type decomposition") {
  const ModelConstants& m = model();
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j) {
      const Form a = E({i, j});
      const TypeDecomposition t = type_decompose(a);
      CHECK(t.primitive11 + t.part20 + t.trace == a);
      CHECK(apply_j(t.primitive11) == t.primitive11);
      CHECK(apply_j(t.part20) == -t.part20);
      CHECK(wedge({t.primitive11, m.omega, m.omega}).is_zero());
      CHECK(type_decompose(t.primitive11).primitive11 == t.primitive11);
      CHECK(type_decompose(t.part20).part20 == t.part20);
      CHECK(contract(t.y, m.psi_plus) == t.part20);
    }
  CHECK(type_decompose(m.omega).trace == m.omega);
  CHECK(alpha(E({1, 3})).to_string() == "e6");
}

TEST_CASE("basic forms") {
  CHECK(basic_check(model().omega));
  CHECK(basic_check(model().psi_plus));
  CHECK_FALSE(basic_check(Form::e(1)));
  CHECK_FALSE(basic_check(Form::h(1)));
  CHECK(basic_check(killing_data().phi_v));
}

TEST_CASE("Killing data") {
  const KillingData& k = killing_data();
  CHECK(k.xi.to_string() == "x1*e1 + x2*e2 + x3*e3 + x4*e4 + x5*e5 + x6*e6");
  CHECK(k.j_xi == apply_j(k.xi));
  CHECK(k.phi_v.to_string() == "v3*e12 - v2*e34 + v1*e56");
  CHECK(k.phi_k.to_string() == "(4*v1 - 4*v2)*e12 + (8*v1 + 4*v2)*e34 + (4*v1 + 8*v2)*e56");
  CHECK(k.a[2].to_string() == "x2*e1 - x1*e2");
  for (int i = 0; i < 3; ++i) CHECK(k.j_a[i] == apply_j(k.a[i]));
  CHECK(k.a[0] + k.a[1] + k.a[2] == contract(k.xi, model().omega) * Coefficient(-1));
  CHECK(inner(k.phi_k, model().omega).is_zero());
}

TEST_CASE("Killing symbol values") {
  const LieAlgebraU3& g = u3();
  const SymbolValues e1 = killing_symbol_values(g.matrix(e_index(1)));
  CHECK(e1[0] == 1);
  CHECK(e1[1] == 1);
  for (int s = 2; s < kSymbols; ++s) CHECK(e1[s] == 0);

  Matrix3 h{};
  h[0][0].im = 1;
  h[1][1].im = -1;
  const SymbolValues hv = killing_symbol_values(h);
  CHECK(hv[7] == Rational(1, 2));
  CHECK(hv[8] == Rational(-1, 2));
  CHECK(killing_data().xi.evaluate(hv).is_zero());

  CHECK_THROWS_AS(killing_symbol_values(g.matrix(h_index(1))), std::invalid_argument);
  Matrix3 sym{};
  sym[0][1].re = 1;
  sym[1][0].re = 1;
  CHECK_THROWS_AS(killing_symbol_values(sym), std::invalid_argument);
}
