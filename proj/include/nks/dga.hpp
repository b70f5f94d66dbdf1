// SPDX-License-Identifier: Apache-2.0
//
// Exact exterior calculus for left-invariant forms on U(3) whose coefficients
// are affine functions of the Killing-field components
//
//   x_i = g(X, e_i)   (i = 1..6),    v_j = g(X, h_j)   (j = 1..3),
//
// where X is the right-invariant field generated by a fixed xi in su(3) and g
// is the bi-invariant metric -tr(XY)/2, which restricts to -B/12 on su(3) and
// makes {e_i, sqrt(2) h_j} orthonormal. Because xi is traceless,
// v_1 + v_2 + v_3 = 0; v_3 is eliminated in storage.
//
// Generators of the exterior algebra are the metric duals of the Lie algebra
// basis, in the order h1, h2, h3, e1, ..., e6. With this choice the printed
// structure equations read like
//
//   d e1 = 2*h1^e2 - 2*h2^e2 + e35 + e46.
//
// Horizontal forms (no h factor) are forms on the flag manifold U3/T3; on them
// the Hodge star uses the orthonormal coframe e1..e6 with volume -e123456.
#pragma once

#include "nks/rational.hpp"

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>

namespace nks::dga {

inline constexpr int kGenerators = 9;
inline constexpr int kSymbols = 9;  // 1, x1..x6, v1, v2

/// Generator index of e_i (i = 1..6) and h_j (j = 1..3).
constexpr int e_index(int i) { return 2 + i; }
constexpr int h_index(int j) { return j - 1; }

using Mask = std::uint16_t;
inline constexpr Mask kVerticalMask = 0b000000111;

class NonlinearCoefficient : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class VerticalComponent : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Values of (1, x1..x6, v1, v2) at a point.
using SymbolValues = std::array<Rational, kSymbols>;

/// Element of span{1, x1..x6, v1, v2}.
class Coefficient {
 public:
  Coefficient() = default;
  Coefficient(const Rational& c) { slots_[0] = c; }  // NOLINT(implicit)
  Coefficient(int c) { slots_[0] = c; }              // NOLINT(implicit)

  static Coefficient x(int i);
  /// v_j for j = 1, 2, 3 (v_3 expands to -v_1 - v_2).
  static Coefficient v(int j);

  const Rational& slot(int s) const { return slots_.at(s); }
  bool is_zero() const;
  bool is_constant() const;
  Rational constant_term() const { return slots_[0]; }

  Rational evaluate(const SymbolValues& values) const;

  Coefficient& operator+=(const Coefficient& o);
  Coefficient& operator-=(const Coefficient& o);
  Coefficient& operator*=(const Rational& r);
  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator-(Coefficient a) { return a *= Rational(-1); }
  friend Coefficient operator*(Coefficient a, const Rational& r) { return a *= r; }
  friend Coefficient operator*(const Rational& r, Coefficient a) { return a *= r; }
  /// Throws NonlinearCoefficient unless one factor is constant.
  friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
  friend bool operator==(const Coefficient&, const Coefficient&) = default;

  /// E.g. "x3 - x4", "2*v1 + v2", "v3" (v3 is reintroduced when v1, v2 share a coefficient).
  std::string to_string() const;

 private:
  std::array<Rational, kSymbols> slots_{};
};

/// Homogeneous element of (coefficients) (x) Lambda(u3*).
class Form {
 public:
  explicit Form(int degree = 0) : degree_(degree) {}

  static Form scalar(const Coefficient& c);
  /// Metric-dual coframe 1-form of generator `index`.
  static Form generator(int index);
  static Form e(int i) { return generator(e_index(i)); }
  static Form h(int j) { return generator(h_index(j)); }
  /// e_{i1 i2 ...} for horizontal indices (1..6), in the given order.
  static Form basis(std::initializer_list<int> e_indices);
  static Form monomial(Mask mask, const Coefficient& c = Coefficient(1));

  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_horizontal() const;
  const std::map<Mask, Coefficient>& terms() const { return terms_; }
  Coefficient coefficient(Mask m) const;

  /// Substitutes symbol values, giving a form with constant coefficients.
  Form evaluate(const SymbolValues& values) const;

  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  Form& operator*=(const Coefficient& c);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator-(Form a) { return a *= Coefficient(-1); }
  friend Form operator*(const Coefficient& c, Form a) { return a *= c; }
  friend Form operator*(Form a, const Coefficient& c) { return a *= c; }
  friend bool operator==(const Form&, const Form&) = default;

  /// Stable textual form, see docs/form_notation.md.
  std::string to_string() const;

 private:
  void add_term(Mask m, const Coefficient& c);

  int degree_;
  std::map<Mask, Coefficient> terms_;
};

/// Sign of g_A ^ g_B relative to g_{A u B}; zero when A and B overlap.
int wedge_sign(Mask a, Mask b);

Form wedge(const Form& a, const Form& b);
Form wedge(std::initializer_list<Form> factors);

// ---------------------------------------------------------------------------
// Lie algebra u(3)

struct Complex {
  Rational re;
  Rational im;
  friend bool operator==(const Complex&, const Complex&) = default;
};
using Matrix3 = std::array<std::array<Complex, 3>, 3>;
using AlgebraVector = std::array<Rational, kGenerators>;

class LieAlgebraU3 {
 public:
  LieAlgebraU3();

  const Matrix3& matrix(int index) const { return basis_.at(index); }
  /// Coordinates of [b_i, b_j] in the basis.
  const AlgebraVector& bracket(int i, int j) const { return brackets_[i][j]; }
  AlgebraVector bracket(const AlgebraVector& x, const AlgebraVector& y) const;
  /// g(b_i, b_i): 1/2 for h_j, 1 for e_i.
  const Rational& metric(int index) const { return metric_.at(index); }
  /// Coordinates of a skew-Hermitian matrix; throws std::invalid_argument otherwise.
  AlgebraVector decompose(const Matrix3& m) const;

 private:
  std::array<Matrix3, kGenerators> basis_;
  std::array<std::array<AlgebraVector, kGenerators>, kGenerators> brackets_;
  std::array<Rational, kGenerators> metric_;
};

const LieAlgebraU3& u3();

/// Coefficient function c_Z = g(X, Z) for Z in u3 (expressed in the symbols).
Coefficient coefficient_of(const AlgebraVector& z);

// ---------------------------------------------------------------------------
// Calculus

/// Exterior derivative: Maurer-Cartan on generators, and
/// d c_Z = sum_j c_{[b_j, Z]} b_j^* on coefficient symbols.
Form d(const Form& a);

/// Contraction with the basis vector b_index.
Form interior(int index, const Form& a);

/// Y _| a for the vector metric-dual to the 1-form Y.
Form contract(const Form& y, const Form& a);

/// Throws VerticalComponent for non-horizontal input.
Form hodge_star(const Form& a);

/// -*d* (the codifferential on the 6-dimensional quotient). Degree >= 1.
Form codifferential(const Form& a);

/// d delta + delta d.
Form laplacian(const Form& a);

/// Induced action of the almost complex structure J (horizontal forms only).
Form apply_j(const Form& a);

/// Pointwise inner product <a, b> (product of coefficients must stay linear).
Coefficient inner(const Form& a, const Form& b);

/// Metric adjoint of X -> X _| Psi+, returned as a 1-form.
Form alpha(const Form& two_form);

struct TypeDecomposition {
  Form primitive11;  // (1,1)_0 part
  Form part20;       // (2,0)+(0,2) part, equal to y _| Psi+
  Form trace;        // <a, omega> omega / 3
  Form y;            // alpha(a) / 2
};

/// Throws std::invalid_argument unless `a` is a 2-form; VerticalComponent if not horizontal.
TypeDecomposition type_decompose(const Form& a);

/// Horizontal and annihilated by every torus Lie derivative L_{h_j} = i_{h_j} d.
bool basic_check(const Form& a);

// ---------------------------------------------------------------------------
// The nearly Kaehler structure on SU3/T2 and the Killing-field data.

struct ModelConstants {
  Form omega;
  Form psi_plus;
  Form psi_minus;
  Form volume;
};

const ModelConstants& model();

struct KillingData {
  Form xi;                    // sum x_i e_i
  Form j_xi;                  // J xi
  std::array<Form, 3> a;      // a_1, a_2, a_3
  std::array<Form, 3> j_a;    // J a_1, J a_2, J a_3
  Form phi_v;                 // v1 e56 - v2 e34 + v3 e12
  Form phi_k;                 // (d xi)^{(1,1)}_0
};

const KillingData& killing_data();

/// Symbol values at the identity for a concrete xi in su(3). Throws
/// std::invalid_argument if xi is not skew-Hermitian or not traceless.
SymbolValues killing_symbol_values(const Matrix3& xi);

}  // namespace nks::dga
