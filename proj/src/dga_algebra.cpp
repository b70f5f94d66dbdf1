// SPDX-License-Identifier: Apache-2.0
#include "nks/dga.hpp"

#include <algorithm>
#include <bit>
#include <vector>

namespace nks::dga {

namespace {

const char* const kSymbolNames[kSymbols] = {"", "x1", "x2", "x3", "x4", "x5", "x6", "v1", "v2"};
const char* const kGeneratorNames[kGenerators] = {"h1", "h2", "h3", "e1", "e2", "e3", "e4", "e5", "e6"};

std::string scaled_name(const Rational& c, const std::string& name) {
  if (name.empty()) return format(c);
  if (c == 1) return name;
  if (c == -1) return "-" + name;
  return format(c) + "*" + name;
}

// Signed pieces of a coefficient in print order; v3 absorbs equal v1, v2 parts.
std::vector<std::string> coefficient_pieces(const Coefficient& c) {
  std::vector<std::string> out;
  for (int s = 0; s < 7; ++s)
    if (c.slot(s) != 0) out.push_back(scaled_name(c.slot(s), kSymbolNames[s]));
  const Rational& v1 = c.slot(7);
  const Rational& v2 = c.slot(8);
  if (v1 != 0 && v1 == v2) {
    out.push_back(scaled_name(-v1, "v3"));
  } else {
    if (v1 != 0) out.push_back(scaled_name(v1, "v1"));
    if (v2 != 0) out.push_back(scaled_name(v2, "v2"));
  }
  return out;
}

std::string join_signed(const std::vector<std::string>& pieces) {
  std::string out;
  for (const auto& p : pieces) {
    if (out.empty()) {
      out = p;
    } else if (p.front() == '-') {
      out += " - " + p.substr(1);
    } else {
      out += " + " + p;
    }
  }
  return out;
}

std::vector<int> mask_indices(Mask m) {
  std::vector<int> out;
  for (int i = 0; i < kGenerators; ++i)
    if (m & (1u << i)) out.push_back(i);
  return out;
}

std::string monomial_name(Mask m) {
  if (m == 0) return "";
  const auto idx = mask_indices(m);
  if ((m & kVerticalMask) == 0) {
    std::string out = "e";
    for (int i : idx) out += std::to_string(i - 2);
    return out;
  }
  std::string out;
  for (int i : idx) {
    if (!out.empty()) out += "^";
    out += kGeneratorNames[i];
  }
  return out;
}

Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }

Matrix3 multiply(const Matrix3& a, const Matrix3& b) {
  Matrix3 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) out[i][j] = out[i][j] + a[i][k] * b[k][j];
  return out;
}

Matrix3 commutator(const Matrix3& a, const Matrix3& b) {
  const Matrix3 ab = multiply(a, b);
  const Matrix3 ba = multiply(b, a);
  Matrix3 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i][j] = ab[i][j] - ba[i][j];
  return out;
}

// Off-diagonal pair (r, c) carrying e_{2k+1} (real part) and e_{2k+2} (imaginary part).
constexpr std::array<std::array<int, 2>, 3> kPairs = {{{0, 1}, {0, 2}, {1, 2}}};

}  // namespace

// ---------------------------------------------------------------------------
// Coefficient

Coefficient Coefficient::x(int i) {
  if (i < 1 || i > 6) throw std::invalid_argument("x index must be in 1..6");
  Coefficient c;
  c.slots_[i] = 1;
  return c;
}

Coefficient Coefficient::v(int j) {
  Coefficient c;
  switch (j) {
    case 1: c.slots_[7] = 1; break;
    case 2: c.slots_[8] = 1; break;
    case 3: c.slots_[7] = c.slots_[8] = -1; break;
    default: throw std::invalid_argument("v index must be in 1..3");
  }
  return c;
}

bool Coefficient::is_zero() const {
  return std::all_of(slots_.begin(), slots_.end(), [](const Rational& r) { return r == 0; });
}

bool Coefficient::is_constant() const {
  return std::all_of(slots_.begin() + 1, slots_.end(), [](const Rational& r) { return r == 0; });
}

Rational Coefficient::evaluate(const SymbolValues& values) const {
  Rational out = slots_[0] * values[0];
  for (int s = 1; s < kSymbols; ++s) out += slots_[s] * values[s];
  return out;
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
  for (int s = 0; s < kSymbols; ++s) slots_[s] += o.slots_[s];
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) {
  for (int s = 0; s < kSymbols; ++s) slots_[s] -= o.slots_[s];
  return *this;
}

Coefficient& Coefficient::operator*=(const Rational& r) {
  for (auto& s : slots_) s *= r;
  return *this;
}

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
  if (a.is_constant()) return b * a.constant_term();
  if (b.is_constant()) return a * b.constant_term();
  throw NonlinearCoefficient("product of two non-constant coefficients: (" + a.to_string() + ")*(" +
                             b.to_string() + ")");
}

std::string Coefficient::to_string() const {
  const auto pieces = coefficient_pieces(*this);
  return pieces.empty() ? "0" : join_signed(pieces);
}

// ---------------------------------------------------------------------------
// Form

Form Form::scalar(const Coefficient& c) { return monomial(0, c); }

Form Form::generator(int index) {
  if (index < 0 || index >= kGenerators) throw std::invalid_argument("generator index out of range");
  return monomial(static_cast<Mask>(1u << index));
}

Form Form::basis(std::initializer_list<int> e_indices) {
  Form out = scalar(1);
  for (int i : e_indices) {
    if (i < 1 || i > 6) throw std::invalid_argument("e index must be in 1..6");
    out = wedge(out, e(i));
  }
  return out;
}

Form Form::monomial(Mask mask, const Coefficient& c) {
  Form out(std::popcount(static_cast<unsigned>(mask)));
  out.add_term(mask, c);
  return out;
}

bool Form::is_horizontal() const {
  return std::none_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first & kVerticalMask; });
}

Coefficient Form::coefficient(Mask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Coefficient() : it->second;
}

Form Form::evaluate(const SymbolValues& values) const {
  Form out(degree_);
  for (const auto& [m, c] : terms_) out.add_term(m, c.evaluate(values));
  return out;
}

void Form::add_term(Mask m, const Coefficient& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Form& Form::operator+=(const Form& o) {
  if (o.degree_ != degree_)
    throw std::invalid_argument("adding forms of degree " + std::to_string(degree_) + " and " +
                                std::to_string(o.degree_));
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Form& Form::operator-=(const Form& o) { return *this += -o; }

Form& Form::operator*=(const Coefficient& c) {
  std::map<Mask, Coefficient> scaled;
  for (const auto& [m, t] : terms_) {
    Coefficient p = t * c;
    if (!p.is_zero()) scaled.emplace(m, p);
  }
  terms_ = std::move(scaled);
  return *this;
}

std::string Form::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<std::vector<int>, Mask>> order;
  for (const auto& t : terms_) order.emplace_back(mask_indices(t.first), t.first);
  std::sort(order.begin(), order.end());

  std::vector<std::string> pieces;
  for (const auto& [idx, m] : order) {
    const Coefficient& c = terms_.at(m);
    const std::string name = monomial_name(m);
    if (name.empty()) {
      pieces.push_back(c.to_string());
      continue;
    }
    if (c.is_constant()) {
      pieces.push_back(scaled_name(c.constant_term(), name));
      continue;
    }
    const auto cp = coefficient_pieces(c);
    if (cp.size() == 1) {
      pieces.push_back(cp.front() + "*" + name);
    } else {
      pieces.push_back("(" + join_signed(cp) + ")*" + name);
    }
  }
  return join_signed(pieces);
}

int wedge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  int swaps = 0;
  for (int i = 0; i < kGenerators; ++i)
    if (b & (1u << i)) swaps += std::popcount(static_cast<unsigned>(a >> (i + 1)));
  return swaps % 2 ? -1 : 1;
}

Form wedge(const Form& a, const Form& b) {
  Form out(a.degree() + b.degree());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      const int s = wedge_sign(ma, mb);
      if (s == 0) continue;
      out += Form::monomial(static_cast<Mask>(ma | mb), ca * cb * Rational(s));
    }
  return out;
}

Form wedge(std::initializer_list<Form> factors) {
  Form out = Form::scalar(1);
  for (const auto& f : factors) out = wedge(out, f);
  return out;
}

// ---------------------------------------------------------------------------
// u(3)

LieAlgebraU3::LieAlgebraU3() {
  for (auto& m : basis_) m = Matrix3{};
  for (int j = 0; j < 3; ++j) {
    basis_[h_index(j + 1)][j][j] = {0, 1};
    metric_[h_index(j + 1)] = Rational(1, 2);
  }
  for (int k = 0; k < 3; ++k) {
    const auto [r, c] = kPairs[k];
    Matrix3& re = basis_[e_index(2 * k + 1)];
    re[r][c] = {1, 0};
    re[c][r] = {-1, 0};
    Matrix3& im = basis_[e_index(2 * k + 2)];
    im[r][c] = {0, 1};
    im[c][r] = {0, 1};
    metric_[e_index(2 * k + 1)] = metric_[e_index(2 * k + 2)] = 1;
  }
  for (int i = 0; i < kGenerators; ++i)
    for (int j = 0; j < kGenerators; ++j) brackets_[i][j] = decompose(commutator(basis_[i], basis_[j]));
}

AlgebraVector LieAlgebraU3::decompose(const Matrix3& m) const {
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j)
      if (m[j][i].re != -m[i][j].re || m[j][i].im != m[i][j].im)
        throw std::invalid_argument("matrix is not skew-Hermitian");
  AlgebraVector out{};
  for (int j = 0; j < 3; ++j) out[h_index(j + 1)] = m[j][j].im;
  for (int k = 0; k < 3; ++k) {
    const auto [r, c] = kPairs[k];
    out[e_index(2 * k + 1)] = m[r][c].re;
    out[e_index(2 * k + 2)] = m[r][c].im;
  }
  return out;
}

AlgebraVector LieAlgebraU3::bracket(const AlgebraVector& x, const AlgebraVector& y) const {
  AlgebraVector out{};
  for (int i = 0; i < kGenerators; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < kGenerators; ++j) {
      if (y[j] == 0) continue;
      const Rational w = x[i] * y[j];
      for (int k = 0; k < kGenerators; ++k) out[k] += w * brackets_[i][j][k];
    }
  }
  return out;
}

const LieAlgebraU3& u3() {
  static const LieAlgebraU3 algebra;
  return algebra;
}

Coefficient coefficient_of(const AlgebraVector& z) {
  Coefficient out;
  for (int j = 1; j <= 3; ++j) out += Coefficient::v(j) * z[h_index(j)];
  for (int i = 1; i <= 6; ++i) out += Coefficient::x(i) * z[e_index(i)];
  return out;
}

}  // namespace nks::dga
