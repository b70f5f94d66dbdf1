// SPDX-License-Identifier: Apache-2.0
#include "nks/branching.hpp"

#include <sstream>
#include <stdexcept>

namespace nks {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

WeightVec su3_weight(int a, int b, int c) {
  return canonicalize(Group::SU3, {Rational(a), Rational(b), Rational(c)});
}

// Peels SU2 strings off a multiset of integer weights, largest first.
std::map<int, long> peel_su2_strings(std::map<int, long> profile) {
  std::map<int, long> out;
  while (!profile.empty()) {
    auto top = std::prev(profile.end());
    const int j = top->first;
    const long m = top->second;
    if (j < 0) throw std::logic_error("weight profile is not SU2-symmetric");
    out[j] += m;
    for (int w = j; w >= -j; w -= 2) {
      auto it = profile.find(w);
      if (it == profile.end() || it->second < m) throw std::logic_error("weight profile is not a sum of strings");
      it->second -= m;
      if (it->second == 0) profile.erase(it);
    }
  }
  return out;
}

template <class Key>
long count_common(const std::map<Key, long>& v, const std::map<Key, long>& e) {
  long total = 0;
  for (const auto& [k, m] : e) {
    auto it = v.find(k);
    if (it != v.end()) total += it->second * m;
  }
  return total;
}

}  // namespace

std::string space_name(Space s) {
  switch (s) {
    case Space::S3xS3: return "s3xs3";
    case Space::CP3: return "cp3";
    case Space::Flag: return "flag";
  }
  return "?";
}

std::string bundle_name(Bundle b) { return b == Bundle::Functions ? "functions" : "lambda11"; }

Space parse_space(std::string_view name) {
  for (Space s : {Space::S3xS3, Space::CP3, Space::Flag})
    if (space_name(s) == name) return s;
  throw std::invalid_argument("unknown space '" + std::string(name) + "' (expected s3xs3, cp3 or flag)");
}

Bundle parse_bundle(std::string_view name) {
  for (Bundle b : {Bundle::Functions, Bundle::Lambda11_0})
    if (bundle_name(b) == name) return b;
  throw std::invalid_argument("unknown bundle '" + std::string(name) + "' (expected functions or lambda11)");
}

const HomogeneousSpace& homogeneous_space(Space s) {
  static const HomogeneousSpace spaces[] = {
      {Space::S3xS3, Group::SU2Cubed, "SU2 (diagonal)", 9},
      {Space::CP3, Group::SO5, "U2", 10},
      {Space::Flag, Group::SU3, "T2", 8},
  };
  return spaces[static_cast<int>(s)];
}

void validate(const U2Label& l) {
  if (l.a < 0) throw std::invalid_argument("U2 label needs a >= 0");
  if ((l.a - l.b) % 2 != 0) throw std::invalid_argument("U2 label needs a = b mod 2: " + to_string(l));
}

std::string to_string(const U2Label& l) {
  return "E(" + std::to_string(l.a) + "," + std::to_string(l.b) + ")";
}

long module_dimension(const KModule& m) {
  return std::visit(overloaded{
                        [](const Su2Module& x) {
                          long d = 0;
                          for (const auto& [j, k] : x) d += (j + 1) * k;
                          return d;
                        },
                        [](const U2Module& x) {
                          long d = 0;
                          for (const auto& [l, k] : x) d += (l.a + 1) * k;
                          return d;
                        },
                        [](const TorusModule& x) {
                          long d = 0;
                          for (const auto& [w, k] : x) d += k;
                          return d;
                        },
                    },
                    m);
}

std::string to_string(const KModule& m) {
  std::ostringstream os;
  bool first = true;
  auto term = [&](const std::string& name, long k) {
    os << (first ? "" : " + ") << (k == 1 ? "" : std::to_string(k) + "*") << name;
    first = false;
  };
  std::visit(overloaded{
                 [&](const Su2Module& x) {
                   for (auto it = x.rbegin(); it != x.rend(); ++it) term("Sym^" + std::to_string(it->first), it->second);
                 },
                 [&](const U2Module& x) {
                   for (const auto& [l, k] : x) term(to_string(l), k);
                 },
                 [&](const TorusModule& x) {
                   for (const auto& [w, k] : x) term(to_string(w), k);
                 },
             },
             m);
  if (first) os << "0";
  return os.str();
}

KModule holomorphic_tangent(Space s) {
  switch (s) {
    case Space::S3xS3:
      // p^{1,0} is the complexified adjoint representation.
      return Su2Module{{2, 1}};
    case Space::CP3: {
      // Root spaces of eps_1, eps_2 and -(eps_1 + eps_2), grouped into U2-irreps
      // through the same (m, q) torus map used for restriction.
      std::map<int, std::map<int, long>> by_charge;
      for (auto [l1, l2] : {std::pair{1, 0}, std::pair{0, 1}, std::pair{-1, -1}}) ++by_charge[l1 + l2][l1 - l2];
      U2Module out;
      for (const auto& [q, profile] : by_charge)
        for (const auto& [a, k] : peel_su2_strings(profile)) out[{a, q}] += k;
      return out;
    }
    case Space::Flag:
      // Root spaces of alpha_12, alpha_31, alpha_23.
      return TorusModule{{su3_weight(1, -1, 0), 1}, {su3_weight(-1, 0, 1), 1}, {su3_weight(0, 1, -1), 1}};
  }
  throw std::invalid_argument("unknown space");
}

KModule conjugate(const KModule& m) {
  return std::visit(overloaded{
                        [](const Su2Module& x) -> KModule { return x; },
                        [](const U2Module& x) -> KModule {
                          U2Module out;
                          for (const auto& [l, k] : x) out[{l.a, -l.b}] += k;
                          return out;
                        },
                        [](const TorusModule& x) -> KModule {
                          TorusModule out;
                          for (const auto& [w, k] : x) out[scale(w, -1)] += k;
                          return out;
                        },
                    },
                    m);
}

KModule direct_sum(const KModule& x, const KModule& y) {
  if (x.index() != y.index()) throw std::invalid_argument("direct sum of modules over different groups");
  KModule out = x;
  std::visit(
      [&](auto& acc) {
        using M = std::decay_t<decltype(acc)>;
        for (const auto& [k, m] : std::get<M>(y)) acc[k] += m;
      },
      out);
  return out;
}

KModule tensor(const KModule& x, const KModule& y) {
  if (x.index() != y.index()) throw std::invalid_argument("tensor of modules over different groups");
  if (const auto* sx = std::get_if<Su2Module>(&x)) {
    Su2Module out;
    for (const auto& [a, ka] : *sx)
      for (const auto& [b, kb] : std::get<Su2Module>(y))
        for (const auto& [j, kj] : tensor_decompose_su2(a, b)) out[j] += ka * kb * kj;
    return out;
  }
  if (const auto* ux = std::get_if<U2Module>(&x)) {
    U2Module out;
    for (const auto& [la, ka] : *ux)
      for (const auto& [lb, kb] : std::get<U2Module>(y))
        for (const auto& [j, kj] : tensor_decompose_su2(la.a, lb.a)) out[{j, la.b + lb.b}] += ka * kb * kj;
    return out;
  }
  TorusModule out;
  for (const auto& [wa, ka] : std::get<TorusModule>(x))
    for (const auto& [wb, kb] : std::get<TorusModule>(y)) out[add(wa, wb)] += ka * kb;
  return out;
}

namespace {

KModule trivial_module(Space s) {
  switch (s) {
    case Space::S3xS3: return Su2Module{{0, 1}};
    case Space::CP3: return U2Module{{{0, 0}, 1}};
    case Space::Flag: return TorusModule{{su3_weight(0, 0, 0), 1}};
  }
  throw std::invalid_argument("unknown space");
}

KModule remove_one_trivial(KModule m) {
  std::visit(overloaded{
                 [](Su2Module& x) {
                   if (--x.at(0) == 0) x.erase(0);
                 },
                 [](U2Module& x) {
                   if (--x.at({0, 0}) == 0) x.erase({0, 0});
                 },
                 [&](TorusModule& x) {
                   const auto zero = su3_weight(0, 0, 0);
                   if (--x.at(zero) == 0) x.erase(zero);
                 },
             },
             m);
  return m;
}

}  // namespace

IsotropyModule isotropy_module(Space s, Bundle b) {
  if (b == Bundle::Functions) return {s, b, trivial_module(s)};
  switch (s) {
    case Space::S3xS3:
      return {s, b, Su2Module{{4, 1}, {2, 1}}};
    case Space::CP3:
      return {s, b, U2Module{{{0, 0}, 1}, {{1, 3}, 1}, {{1, -3}, 1}, {{2, 0}, 1}}};
    case Space::Flag: {
      TorusModule t;
      for (int i = 0; i < 3; ++i)
        for (int sign : {1, -1}) {
          int c[3] = {0, 0, 0};
          c[i] = 3 * sign;
          t[su3_weight(c[0], c[1], c[2])] = 1;
        }
      t[su3_weight(0, 0, 0)] = 2;
      return {s, b, t};
    }
  }
  throw std::invalid_argument("unknown space");
}

IsotropyModule derive_lambda11_0(Space s) {
  const KModule p10 = holomorphic_tangent(s);
  return {s, Bundle::Lambda11_0, remove_one_trivial(tensor(p10, conjugate(p10)))};
}

Su2Module restrict_to_diagonal_su2(const IrrepLabel& irrep) {
  if (irrep.group != Group::SU2Cubed) throw std::invalid_argument("diagonal restriction needs an SU2^3 label");
  validate(irrep);
  const auto& l = irrep.labels;
  Su2Module out;
  for (const auto& [j, kj] : tensor_decompose_su2(l[0], l[1]))
    for (const auto& [i, ki] : tensor_decompose_su2(j, l[2])) out[i] += kj * ki;
  return out;
}

U2Module restrict_so5_to_u2(const IrrepLabel& irrep) {
  if (irrep.group != Group::SO5) throw std::invalid_argument("U2 restriction needs an SO5 label");
  const WeightTable table = weight_multiplicities(irrep);
  std::map<int, std::map<int, long>> by_charge;
  for (const auto& [w, k] : table.entries) {
    const Rational m = w[0] - w[1];
    const Rational q = w[0] + w[1];
    by_charge[static_cast<int>(q.numerator())][static_cast<int>(m.numerator())] += k;
  }
  U2Module out;
  for (const auto& [q, profile] : by_charge)
    for (const auto& [a, k] : peel_su2_strings(profile)) {
      const U2Label l{a, q};
      validate(l);
      out[l] += k;
    }
  return out;
}

KModule restrict_to_isotropy(Space s, const IrrepLabel& irrep) {
  if (irrep.group != homogeneous_space(s).group)
    throw std::invalid_argument(to_string(irrep) + " is not a representation of the isometry group of " + space_name(s));
  switch (s) {
    case Space::S3xS3: return restrict_to_diagonal_su2(irrep);
    case Space::CP3: return restrict_so5_to_u2(irrep);
    case Space::Flag: return TorusModule(weight_multiplicities(irrep).entries);
  }
  throw std::invalid_argument("unknown space");
}

long hom_dimension(Space s, const IrrepLabel& irrep, Bundle b) {
  const KModule v = restrict_to_isotropy(s, irrep);
  const KModule e = isotropy_module(s, b).content;
  return std::visit(overloaded{
                        [&](const Su2Module& x) { return count_common(x, std::get<Su2Module>(e)); },
                        [&](const U2Module& x) { return count_common(x, std::get<U2Module>(e)); },
                        [&](const TorusModule& x) { return count_common(x, std::get<TorusModule>(e)); },
                    },
                    v);
}

Rational k_casimir(Space s, const KModule& single_irrep) {
  if (module_dimension(single_irrep) == 0) throw std::invalid_argument("empty module");
  switch (s) {
    case Space::S3xS3: {
      // Diagonal torus direction (1,1,1) has -B_G norm 3 * 8 = 24, so a
      // K-weight j has dual norm j^2 / 24; rho_K = 1.
      const auto& m = std::get<Su2Module>(single_irrep);
      if (m.size() != 1 || m.begin()->second != 1) throw std::invalid_argument("expected one K-irrep");
      const int j = m.begin()->first;
      return Rational(-j * (j + 2), 24);
    }
    case Space::CP3: {
      // K shares the maximal torus of SO5; its positive root is eps_1 - eps_2.
      const auto& m = std::get<U2Module>(single_irrep);
      if (m.size() != 1 || m.begin()->second != 1) throw std::invalid_argument("expected one K-irrep");
      const U2Label l = m.begin()->first;
      const WeightVec nu{Rational(l.b + l.a, 2), Rational(l.b - l.a, 2)};
      const WeightVec rho_k{Rational(1, 2), Rational(-1, 2)};
      const auto& rs = root_system(Group::SO5);
      return rs.killing_scale * euclidean_dot(nu, add(nu, scale(rho_k, 2)));
    }
    case Space::Flag: {
      const auto& m = std::get<TorusModule>(single_irrep);
      if (m.size() != 1 || m.begin()->second != 1) throw std::invalid_argument("expected one K-irrep");
      const WeightVec& mu = m.begin()->first;
      return root_system(Group::SU3).killing_scale * euclidean_dot(mu, mu);
    }
  }
  throw std::invalid_argument("unknown space");
}

}  // namespace nks
