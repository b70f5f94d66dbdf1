// SPDX-License-Identifier: Apache-2.0
#include "nks/dga.hpp"

#include <bit>
#include <vector>

namespace nks::dga {

namespace {

constexpr Mask kHorizontalMask = 0b111111000;

struct Tables {
  std::array<Form, kGenerators> d_generator;
  std::array<Form, kSymbols> d_symbol;
  std::vector<Form> d_monomial;

  Tables() : d_monomial(1u << kGenerators) {
    const LieAlgebraU3& g = u3();

    for (int k = 0; k < kGenerators; ++k) {
      Form out(2);
      for (int i = 0; i < kGenerators; ++i)
        for (int j = i + 1; j < kGenerators; ++j) {
          const Rational c = g.bracket(i, j)[k];
          if (c == 0) continue;
          const Rational w = -g.metric(k) * c / (g.metric(i) * g.metric(j));
          out += Form::monomial(static_cast<Mask>((1u << i) | (1u << j)), w);
        }
      d_generator[k] = out;
    }

    // Symbol s is c_Z for the basis element Z: x_i <-> e_i, v1 <-> h1, v2 <-> h2.
    d_symbol[0] = Form(1);
    for (int s = 1; s < kSymbols; ++s) {
      const int z = s <= 6 ? e_index(s) : h_index(s - 6);
      Form out(1);
      for (int j = 0; j < kGenerators; ++j) {
        const Coefficient c = coefficient_of(g.bracket(j, z));
        if (c.is_zero()) continue;
        out += Form::monomial(static_cast<Mask>(1u << j), c * (1 / g.metric(j)));
      }
      d_symbol[s] = out;
    }

    for (unsigned m = 0; m < d_monomial.size(); ++m) {
      const int deg = std::popcount(m);
      Form out(deg + 1);
      Mask prefix = 0;
      int pos = 0;
      for (int i = 0; i < kGenerators; ++i) {
        if (!(m & (1u << i))) continue;
        const Mask suffix = static_cast<Mask>(m & ~((1u << (i + 1)) - 1));
        Form term = wedge({Form::monomial(prefix), d_generator[i], Form::monomial(suffix)});
        out += pos % 2 ? -term : term;
        prefix = static_cast<Mask>(prefix | (1u << i));
        ++pos;
      }
      d_monomial[m] = out;
    }
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

void require_horizontal(const Form& a, const char* what) {
  if (!a.is_horizontal()) throw VerticalComponent(std::string(what) + ": form has a vertical component");
}

// J on the horizontal coframe: e1 -> e2, e3 -> -e4, e5 -> e6.
std::pair<int, int> j_image(int index) {
  switch (index - 2) {
    case 1: return {e_index(2), 1};
    case 2: return {e_index(1), -1};
    case 3: return {e_index(4), -1};
    case 4: return {e_index(3), 1};
    case 5: return {e_index(6), 1};
    case 6: return {e_index(5), -1};
  }
  throw VerticalComponent("J is only defined on horizontal generators");
}

}  // namespace

Form d(const Form& a) {
  const Tables& t = tables();
  Form out(a.degree() + 1);
  for (const auto& [m, c] : a.terms()) {
    const Form mono = Form::monomial(m);
    for (int s = 1; s < kSymbols; ++s)
      if (c.slot(s) != 0) out += wedge(t.d_symbol[s], mono) * Coefficient(c.slot(s));
    out += c * t.d_monomial[m];
  }
  return out;
}

Form interior(int index, const Form& a) {
  if (index < 0 || index >= kGenerators) throw std::invalid_argument("generator index out of range");
  if (a.degree() == 0) throw std::invalid_argument("interior product of a 0-form");
  const Mask bit = static_cast<Mask>(1u << index);
  Form out(a.degree() - 1);
  for (const auto& [m, c] : a.terms()) {
    if (!(m & bit)) continue;
    const int pos = std::popcount(static_cast<unsigned>(m & (bit - 1)));
    const Rational w = pos % 2 ? -u3().metric(index) : u3().metric(index);
    out += Form::monomial(static_cast<Mask>(m & ~bit), c * w);
  }
  return out;
}

Form contract(const Form& y, const Form& a) {
  if (y.degree() != 1) throw std::invalid_argument("contract expects a 1-form");
  Form out(a.degree() - 1);
  for (const auto& [m, c] : y.terms()) out += c * interior(std::countr_zero(static_cast<unsigned>(m)), a);
  return out;
}

Form hodge_star(const Form& a) {
  require_horizontal(a, "hodge_star");
  Form out(6 - a.degree());
  for (const auto& [m, c] : a.terms()) {
    const Mask comp = static_cast<Mask>(kHorizontalMask & ~m);
    out += Form::monomial(comp, c * Rational(-wedge_sign(m, comp)));
  }
  return out;
}

Form codifferential(const Form& a) {
  if (a.degree() < 1) throw std::invalid_argument("codifferential of a 0-form");
  if (a.is_zero()) return Form(a.degree() - 1);
  return -hodge_star(d(hodge_star(a)));
}

Form laplacian(const Form& a) {
  Form out(a.degree());
  if (a.degree() >= 1) out += d(codifferential(a));
  const Form da = d(a);
  if (!da.is_zero()) out += codifferential(da);
  return out;
}

Form apply_j(const Form& a) {
  require_horizontal(a, "apply_j");
  Form out(a.degree());
  for (const auto& [m, c] : a.terms()) {
    Form image = Form::scalar(c);
    for (int i = 0; i < kGenerators; ++i) {
      if (!(m & (1u << i))) continue;
      const auto [target, sign] = j_image(i);
      image = wedge(image, Form::generator(target) * Coefficient(sign));
    }
    out += image;
  }
  return out;
}

Coefficient inner(const Form& a, const Form& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("inner product of forms of different degree");
  Coefficient out;
  for (const auto& [m, ca] : a.terms()) {
    auto it = b.terms().find(m);
    if (it == b.terms().end()) continue;
    Rational norm = 1;
    for (int i = 0; i < kGenerators; ++i)
      if (m & (1u << i)) norm *= u3().metric(i);
    out += ca * it->second * norm;
  }
  return out;
}

Form alpha(const Form& two_form) {
  if (two_form.degree() != 2) throw std::invalid_argument("alpha expects a 2-form");
  const Form& psi = model().psi_plus;
  Form out(1);
  for (int k = 1; k <= 6; ++k) out += inner(two_form, interior(e_index(k), psi)) * Form::e(k);
  return out;
}

TypeDecomposition type_decompose(const Form& a) {
  if (a.degree() != 2) throw std::invalid_argument("type_decompose expects a 2-form");
  require_horizontal(a, "type_decompose");
  const ModelConstants& nk = model();
  const Form ja = apply_j(a);
  TypeDecomposition out;
  out.trace = inner(a, nk.omega) * Rational(1, 3) * nk.omega;
  out.primitive11 = (a + ja) * Coefficient(Rational(1, 2)) - out.trace;
  out.part20 = (a - ja) * Coefficient(Rational(1, 2));
  out.y = alpha(a) * Coefficient(Rational(1, 2));
  if (contract(out.y, nk.psi_plus) != out.part20)
    throw std::logic_error("(2,0)+(0,2) part is not y _| Psi+ for " + a.to_string());
  return out;
}

bool basic_check(const Form& a) {
  if (!a.is_horizontal()) return false;
  const Form da = d(a);
  for (int j = 1; j <= 3; ++j)
    if (!interior(h_index(j), da).is_zero()) return false;
  return true;
}

const ModelConstants& model() {
  static const ModelConstants m = [] {
    ModelConstants out;
    out.omega = Form::basis({1, 2}) - Form::basis({3, 4}) + Form::basis({5, 6});
    out.psi_plus =
        Form::basis({1, 3, 6}) + Form::basis({2, 4, 6}) + Form::basis({2, 3, 5}) - Form::basis({1, 4, 5});
    out.psi_minus =
        Form::basis({2, 3, 6}) - Form::basis({1, 4, 6}) - Form::basis({1, 3, 5}) - Form::basis({2, 4, 5});
    out.volume = -Form::basis({1, 2, 3, 4, 5, 6});
    return out;
  }();
  return m;
}

const KillingData& killing_data() {
  static const KillingData k = [] {
    using C = Coefficient;
    KillingData out;
    out.xi = Form(1);
    for (int i = 1; i <= 6; ++i) out.xi += C::x(i) * Form::e(i);
    out.j_xi = apply_j(out.xi);
    out.a[0] = C::x(6) * Form::e(5) - C::x(5) * Form::e(6);
    out.a[1] = C::x(3) * Form::e(4) - C::x(4) * Form::e(3);
    out.a[2] = C::x(2) * Form::e(1) - C::x(1) * Form::e(2);
    for (int i = 0; i < 3; ++i) out.j_a[i] = apply_j(out.a[i]);
    out.phi_v = C::v(1) * Form::basis({5, 6}) - C::v(2) * Form::basis({3, 4}) + C::v(3) * Form::basis({1, 2});
    out.phi_k = type_decompose(d(out.xi)).primitive11;
    return out;
  }();
  return k;
}

SymbolValues killing_symbol_values(const Matrix3& xi) {
  const AlgebraVector z = u3().decompose(xi);
  if (z[h_index(1)] + z[h_index(2)] + z[h_index(3)] != 0) throw std::invalid_argument("xi is not traceless");
  SymbolValues out{};
  out[0] = 1;
  for (int i = 1; i <= 6; ++i) out[i] = z[e_index(i)] * u3().metric(e_index(i));
  out[7] = z[h_index(1)] * u3().metric(h_index(1));
  out[8] = z[h_index(2)] * u3().metric(h_index(2));
  return out;
}

}  // namespace nks::dga
