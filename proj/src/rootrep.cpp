// SPDX-License-Identifier: Apache-2.0
#include "nks/rootrep.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace nks {

namespace {

WeightVec vec(std::initializer_list<int> xs) {
  WeightVec w;
  for (int x : xs) w.emplace_back(x);
  return w;
}

RootSystem make_su2() {
  return {Group::SU2, 1, {vec({2})}, vec({1}), Rational(-1, 8), false};
}

RootSystem make_su2_cubed() {
  return {Group::SU2Cubed, 3,
          {vec({2, 0, 0}), vec({0, 2, 0}), vec({0, 0, 2})},
          vec({1, 1, 1}), Rational(-1, 8), false};
}

RootSystem make_so5() {
  WeightVec rho{Rational(3, 2), Rational(1, 2)};
  return {Group::SO5, 2,
          {vec({1, 0}), vec({0, 1}), vec({1, 1}), vec({1, -1})},
          rho, Rational(-1, 6), false};
}

RootSystem make_su3() {
  return {Group::SU3, 3,
          {vec({1, -1, 0}), vec({1, 0, -1}), vec({0, 1, -1})},
          vec({1, 0, -1}), Rational(-1, 6), true};
}

}  // namespace

std::string group_name(Group g) {
  switch (g) {
    case Group::SU2: return "SU2";
    case Group::SU2Cubed: return "SU2^3";
    case Group::SO5: return "SO5";
    case Group::SU3: return "SU3";
  }
  return "?";
}

Group parse_group(std::string_view name) {
  for (Group g : {Group::SU2, Group::SU2Cubed, Group::SO5, Group::SU3})
    if (group_name(g) == name) return g;
  throw std::invalid_argument("unknown group '" + std::string(name) + "'");
}

int label_arity(Group g) {
  switch (g) {
    case Group::SU2: return 1;
    case Group::SU2Cubed: return 3;
    case Group::SO5: return 2;
    case Group::SU3: return 2;
  }
  return 0;
}

const RootSystem& root_system(Group g) {
  static const RootSystem su2 = make_su2();
  static const RootSystem su2c = make_su2_cubed();
  static const RootSystem so5 = make_so5();
  static const RootSystem su3 = make_su3();
  switch (g) {
    case Group::SU2: return su2;
    case Group::SU2Cubed: return su2c;
    case Group::SO5: return so5;
    case Group::SU3: return su3;
  }
  throw std::invalid_argument("unknown group");
}

Rational derive_killing_scale(const RootSystem& rs) {
  const int n = rs.ambient_dim;
  // Sum over all roots (positive and negative) of alpha alpha^T.
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (const auto& a : rs.positive_roots)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m[i][j] += 2 * a[i] * a[j];

  // Expected shape: c * I, or c * (I - J/n) on the sum-zero quotient.
  const Rational off = rs.sum_zero_quotient ? Rational(-1, n) : Rational(0);
  const Rational diag = 1 + off;
  const Rational c = m[0][0] / diag;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m[i][j] != c * (i == j ? diag : off))
        throw std::logic_error("root sum is not isotropic for " + group_name(rs.group));
  return -1 / c;
}

void validate(const IrrepLabel& irrep) {
  if (static_cast<int>(irrep.labels.size()) != label_arity(irrep.group))
    throw std::invalid_argument("wrong number of labels for " + group_name(irrep.group));
  for (int l : irrep.labels)
    if (l < 0) throw std::invalid_argument("negative label in " + to_string(irrep));
  if (irrep.group == Group::SO5 && irrep.labels[0] < irrep.labels[1])
    throw std::invalid_argument("SO5 label requires a >= b: " + to_string(irrep));
}

IrrepLabel trivial_irrep(Group g) { return {g, std::vector<int>(label_arity(g), 0)}; }

IrrepLabel adjoint_irrep(Group g) {
  switch (g) {
    case Group::SU2: return {g, {2}};
    case Group::SO5: return {g, {1, 1}};
    case Group::SU3: return {g, {1, 1}};
    case Group::SU2Cubed: break;
  }
  throw std::invalid_argument("adjoint of SU2^3 is not irreducible");
}

std::string to_string(const IrrepLabel& irrep) {
  std::ostringstream os;
  if (irrep.group == Group::SU2) {
    os << "Sym^" << (irrep.labels.empty() ? 0 : irrep.labels[0]);
    return os.str();
  }
  os << "V(";
  for (std::size_t i = 0; i < irrep.labels.size(); ++i) os << (i ? "," : "") << irrep.labels[i];
  os << ")";
  return os.str();
}

WeightVec canonicalize(Group g, WeightVec w) {
  if (!root_system(g).sum_zero_quotient) return w;
  Rational mean;
  for (const auto& x : w) mean += x;
  mean /= static_cast<std::int64_t>(w.size());
  for (auto& x : w) x -= mean;
  return w;
}

Rational euclidean_dot(const WeightVec& a, const WeightVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("weight dimension mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

WeightVec add(const WeightVec& a, const WeightVec& b) {
  WeightVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b.at(i);
  return r;
}

WeightVec subtract(const WeightVec& a, const WeightVec& b) {
  WeightVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b.at(i);
  return r;
}

WeightVec scale(const WeightVec& a, const Rational& s) {
  WeightVec r(a);
  for (auto& x : r) x *= s;
  return r;
}

std::string to_string(const WeightVec& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + format(w[i]);
  return s + ")";
}

WeightVec highest_weight(const IrrepLabel& irrep) {
  validate(irrep);
  const auto& l = irrep.labels;
  switch (irrep.group) {
    case Group::SU2: return vec({l[0]});
    case Group::SU2Cubed: return vec({l[0], l[1], l[2]});
    case Group::SO5: return vec({l[0], l[1]});
    case Group::SU3: return canonicalize(Group::SU3, vec({l[0], 0, -l[1]}));
  }
  throw std::invalid_argument("unknown group");
}

Rational casimir_eigenvalue(const IrrepLabel& irrep, const Rational& metric_scale) {
  if (metric_scale <= 0) throw std::invalid_argument("metric scale must be positive");
  const auto& rs = root_system(irrep.group);
  const WeightVec gamma = highest_weight(irrep);
  const WeightVec shifted = add(gamma, scale(rs.rho, 2));
  return rs.killing_scale * euclidean_dot(gamma, shifted) / metric_scale;
}

Rational laplace_eigenvalue(const IrrepLabel& irrep) { return -12 * casimir_eigenvalue(irrep, 1); }

long dimension(const IrrepLabel& irrep) {
  const auto& rs = root_system(irrep.group);
  const WeightVec lr = add(highest_weight(irrep), rs.rho);
  Rational d(1);
  for (const auto& a : rs.positive_roots) d *= euclidean_dot(lr, a) / euclidean_dot(rs.rho, a);
  if (d.denominator() != 1) throw std::logic_error("non-integral Weyl dimension");
  return static_cast<long>(d.numerator());
}

long WeightTable::total() const {
  long t = 0;
  for (const auto& [w, m] : entries) t += m;
  return t;
}

long WeightTable::multiplicity(const WeightVec& w) const {
  auto it = entries.find(w);
  return it == entries.end() ? 0 : it->second;
}

namespace {

void su2_string(int k, std::vector<int>& out) {
  out.clear();
  for (int m = k; m >= -k; m -= 2) out.push_back(m);
}

std::map<WeightVec, long> su3_tensor_weights(int k, int l) {
  std::map<WeightVec, long> out;
  if (k < 0 || l < 0) return out;
  for (int a = 0; a <= k; ++a)
    for (int b = 0; a + b <= k; ++b) {
      const int c = k - a - b;
      for (int a2 = 0; a2 <= l; ++a2)
        for (int b2 = 0; a2 + b2 <= l; ++b2) {
          const int c2 = l - a2 - b2;
          ++out[canonicalize(Group::SU3, vec({a - a2, b - b2, c - c2}))];
        }
    }
  return out;
}

WeightVec so5_dominant(const WeightVec& w) {
  Rational x = boost::abs(w[0]);
  Rational y = boost::abs(w[1]);
  if (x < y) std::swap(x, y);
  return {x, y};
}

std::set<WeightVec> so5_orbit(const WeightVec& w) {
  std::set<WeightVec> orbit;
  for (int swap = 0; swap < 2; ++swap)
    for (int s0 : {1, -1})
      for (int s1 : {1, -1}) {
        WeightVec v = swap ? WeightVec{w[1], w[0]} : w;
        v[0] *= s0;
        v[1] *= s1;
        orbit.insert(v);
      }
  return orbit;
}

// Freudenthal recursion on dominant weights, in order of increasing depth
// below the highest weight; the full table follows by Weyl symmetry.
std::map<WeightVec, long> so5_freudenthal(const IrrepLabel& irrep) {
  const auto& rs = root_system(Group::SO5);
  const int a = irrep.labels[0];
  const int b = irrep.labels[1];
  const WeightVec lambda = vec({a, b});
  const WeightVec lr = add(lambda, rs.rho);
  const Rational top = euclidean_dot(lr, lr);

  // Depth of mu below lambda in simple-root units (eps_1 - eps_2, eps_2).
  auto depth = [&](int m1, int m2) { return 2 * (a - m1) + (b - m2); };
  std::vector<std::pair<int, WeightVec>> dominant;
  for (int m1 = 0; m1 <= a; ++m1)
    for (int m2 = 0; m2 <= m1; ++m2)
      if ((a - m1) + (b - m2) >= 0) dominant.push_back({depth(m1, m2), vec({m1, m2})});
  std::stable_sort(dominant.begin(), dominant.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });

  std::map<WeightVec, long> dom_mult;
  auto lookup = [&](const WeightVec& w) -> long {
    auto it = dom_mult.find(so5_dominant(w));
    return it == dom_mult.end() ? 0 : it->second;
  };

  for (const auto& [d, mu] : dominant) {
    if (d == 0) {
      dom_mult[mu] = 1;
      continue;
    }
    Rational numer;
    for (const auto& alpha : rs.positive_roots) {
      for (int j = 1; j <= 2 * (a + 2); ++j) {
        const WeightVec nu = add(mu, scale(alpha, j));
        const long m = lookup(nu);
        if (m != 0) numer += 2 * m * euclidean_dot(nu, alpha);
      }
    }
    const WeightVec mr = add(mu, rs.rho);
    const Rational denom = top - euclidean_dot(mr, mr);
    if (denom <= 0) throw std::logic_error("Freudenthal denominator vanished");
    const Rational m = numer / denom;
    if (m.denominator() != 1 || m < 0) throw std::logic_error("non-integral multiplicity");
    if (m.numerator() > 0) dom_mult[mu] = static_cast<long>(m.numerator());
  }

  std::map<WeightVec, long> table;
  for (const auto& [mu, m] : dom_mult)
    for (const auto& w : so5_orbit(mu)) table[w] = m;
  return table;
}

}  // namespace

WeightTable weight_multiplicities(const IrrepLabel& irrep) {
  validate(irrep);
  WeightTable t{irrep, {}};
  const auto& l = irrep.labels;
  switch (irrep.group) {
    case Group::SU2: {
      std::vector<int> s;
      su2_string(l[0], s);
      for (int m : s) t.entries[vec({m})] = 1;
      break;
    }
    case Group::SU2Cubed: {
      std::vector<int> s0, s1, s2;
      su2_string(l[0], s0);
      su2_string(l[1], s1);
      su2_string(l[2], s2);
      for (int x : s0)
        for (int y : s1)
          for (int z : s2) t.entries[vec({x, y, z})] = 1;
      break;
    }
    case Group::SO5:
      t.entries = so5_freudenthal(irrep);
      break;
    case Group::SU3: {
      // Kernel of the contraction Sym^k E (x) Sym^l Ebar -> Sym^{k-1} E (x) Sym^{l-1} Ebar
      // is onto, so the weight multiset is the difference of the two.
      auto full = su3_tensor_weights(l[0], l[1]);
      for (const auto& [w, m] : su3_tensor_weights(l[0] - 1, l[1] - 1)) {
        auto it = full.find(w);
        if (it == full.end() || it->second < m) throw std::logic_error("SU3 contraction not surjective");
        it->second -= m;
      }
      for (const auto& [w, m] : full)
        if (m > 0) t.entries[w] = m;
      break;
    }
  }
  return t;
}

std::vector<std::pair<int, long>> tensor_decompose_su2(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("SU2 labels must be nonnegative");
  std::vector<std::pair<int, long>> out;
  for (int j = a + b; j >= std::abs(a - b); j -= 2) out.push_back({j, 1});
  return out;
}

}  // namespace nks
