// SPDX-License-Identifier: Apache-2.0
#include "nks/spectrum.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <stdexcept>
#include <string_view>
#include <thread>

namespace nks {

namespace {

bool is_valid(Group g, const std::vector<int>& labels) {
  for (int l : labels)
    if (l < 0) return false;
  return g != Group::SO5 || labels[0] >= labels[1];
}

// Smallest label whose eigenvalue exceeds the cutoff when only coordinate
// `coord` is raised (for SO5 the b-coordinate drags a along, since a >= b).
int coordinate_bound(Group g, int coord, const Rational& cutoff) {
  const int arity = label_arity(g);
  for (int n = 0;; ++n) {
    std::vector<int> labels(arity, 0);
    labels[coord] = n;
    if (g == Group::SO5 && coord == 1) labels[0] = n;
    if (laplace_eigenvalue({g, labels}) > cutoff) return n;
  }
}

// Every neighbour obtained by raising one coordinate must have a strictly
// larger eigenvalue; this is what makes the finite search box complete.
void assert_monotone(const IrrepLabel& irrep, const Rational& value) {
  for (std::size_t i = 0; i < irrep.labels.size(); ++i) {
    IrrepLabel up = irrep;
    ++up.labels[i];
    if (!is_valid(up.group, up.labels)) continue;
    if (laplace_eigenvalue(up) <= value)
      throw std::logic_error("eigenvalue not strictly increasing at " + to_string(irrep));
  }
}

std::vector<IrrepLabel> search_box(Group g, const Rational& cutoff) {
  const int arity = label_arity(g);
  std::vector<int> bound(arity);
  for (int i = 0; i < arity; ++i) bound[i] = coordinate_bound(g, i, cutoff);

  std::vector<IrrepLabel> out;
  std::vector<int> cur(arity, 0);
  while (true) {
    if (is_valid(g, cur)) out.push_back({g, cur});
    int i = arity - 1;
    while (i >= 0 && ++cur[i] >= bound[i]) cur[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

unsigned parse_thread_env(std::string_view text) {
  unsigned value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || value == 0)
    throw std::invalid_argument("NK_SPECTRA_THREADS must be a positive integer, got '" + std::string(text) + "'");
  return value;
}

}  // namespace

unsigned default_thread_count() {
  if (const char* env = std::getenv("NK_SPECTRA_THREADS")) return parse_thread_env(env);
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<SpectrumEntry> enumerate_spectrum(Space s, Bundle b, const Rational& cutoff, unsigned threads) {
  if (cutoff < 0) throw std::invalid_argument("cutoff must be nonnegative");
  const Group g = homogeneous_space(s).group;
  const std::vector<IrrepLabel> candidates = search_box(g, cutoff);

  if (threads == 0) threads = default_thread_count();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(candidates.size())));

  // Strided partition of the label box; each worker owns one output slot.
  std::vector<std::vector<SpectrumEntry>> partial(threads);
  std::vector<std::exception_ptr> errors(threads);
  auto work = [&](unsigned t) {
    try {
      for (std::size_t i = t; i < candidates.size(); i += threads) {
        const IrrepLabel& irrep = candidates[i];
        const Rational value = laplace_eigenvalue(irrep);
        assert_monotone(irrep, value);
        if (value > cutoff) continue;
        const long hom = hom_dimension(s, irrep, b);
        if (hom == 0) continue;
        const long dim = dimension(irrep);
        partial[t].push_back({irrep, value, hom, dim, hom * dim});
      }
    } catch (...) {
      errors[t] = std::current_exception();
    }
  };

  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::vector<SpectrumEntry> out;
  for (auto& p : partial) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end(), [](const SpectrumEntry& x, const SpectrumEntry& y) {
    if (x.eigenvalue != y.eigenvalue) return x.eigenvalue < y.eigenvalue;
    return x.irrep < y.irrep;
  });
  return out;
}

long eigenspace_multiplicity(Space s, Bundle b, const Rational& eigenvalue, unsigned threads) {
  if (eigenvalue < 0) throw std::invalid_argument("eigenvalue must be nonnegative");
  long total = 0;
  for (const auto& e : enumerate_spectrum(s, b, eigenvalue, threads))
    if (e.eigenvalue == eigenvalue) total += e.contribution;
  return total;
}

ModuliReport moduli_upper_bound(Space s, unsigned threads) {
  ModuliReport r{};
  r.space = s;
  r.dim_omega11_12 = eigenspace_multiplicity(s, Bundle::Lambda11_0, Rational(12), threads);
  r.dim_isometry = homogeneous_space(s).isometry_dim;
  r.dim_omega0_12 = eigenspace_multiplicity(s, Bundle::Functions, Rational(12), threads);
  r.nk_upper_bound_raw = r.dim_omega11_12 - r.dim_isometry - r.dim_omega0_12;
  r.nk_upper_bound = std::max(0L, r.nk_upper_bound_raw);
  r.einstein_mult_2 = eigenspace_multiplicity(s, Bundle::Lambda11_0, Rational(2), threads);
  r.einstein_mult_6 = eigenspace_multiplicity(s, Bundle::Lambda11_0, Rational(6), threads);
  return r;
}

EinsteinCheck einstein_deformation_check(Space s, unsigned threads) {
  return {s, eigenspace_multiplicity(s, Bundle::Lambda11_0, Rational(2), threads),
          eigenspace_multiplicity(s, Bundle::Lambda11_0, Rational(6), threads)};
}

ScalNormalization scal_normalization_check(Space s) {
  ScalNormalization out{};
  out.space = s;
  const KModule p10 = holomorphic_tangent(s);
  const KModule p = direct_sum(p10, conjugate(p10));

  bool first = true;
  std::visit(
      [&](const auto& module) {
        for (const auto& [key, mult] : module) {
          std::decay_t<decltype(module)> single{{key, 1}};
          const Rational cas = k_casimir(s, single);
          for (long i = 0; i < mult; ++i) out.summands.push_back({to_string(KModule(single)), cas});
          if (first) {
            out.isotropy_casimir = cas;
            first = false;
          } else if (cas != out.isotropy_casimir) {
            throw std::logic_error("isotropy Casimir is not scalar on " + space_name(s));
          }
        }
      },
      p);

  out.scal_h = Rational(3, 2) - 3 * out.isotropy_casimir;
  // q(Rbar) = -Cas^K; rescaling the metric by 1/12 multiplies the Casimir by 12.
  out.q_rbar = -12 * out.isotropy_casimir;
  return out;
}

}  // namespace nks
