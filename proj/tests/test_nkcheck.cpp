// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nks/nkcheck.hpp"

#include <set>

using namespace nks;
using namespace nks::dga;

namespace {

void require_all(const VerificationReport& r, std::size_t min_checks) {
  INFO("suite " << r.suite);
  CHECK(r.checks.size() >= min_checks);
  std::set<std::string> names;
  for (const Check& c : r.checks) {
    INFO(c.name << ": " << c.residual);
    CHECK(c.passed);
    CHECK(names.insert(c.name).second);
  }
  CHECK(r.passed());
}

const Check& find(const VerificationReport& r, const std::string& name) {
  for (const Check& c : r.checks)
    if (c.name == name) return c;
  FAIL("missing check " << name);
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("pointwise identities") { require_all(verify_pointwise_identities(), 10); }

TEST_CASE("structure equations") {
  const VerificationReport r = verify_structure_equations();
  require_all(r, 12);
  CHECK(find(r, "d_squared").passed);
  CHECK(find(r, "centre_inert").passed);
}

TEST_CASE("Killing suite") {
  const VerificationReport r = verify_killing_suite();
  require_all(r, 6);
  CHECK(find(r, "laplace_xi").passed);
  CHECK(find(r, "codiff_phi_k").passed);
}

TEST_CASE("eigenfunction suite") { require_all(verify_eigenfunction_suite(), 6); }

TEST_CASE("moduli generators reach the bound") {
  const VerificationReport r = verify_moduli_generators(1);
  require_all(r, 5);
  CHECK(find(r, "generator_rank").passed);
  CHECK(verify_moduli_generators(4) == r);
}

TEST_CASE("injectivity argument") { require_all(verify_injectivity_argument(), 3); }

TEST_CASE("verify_flag bundles the flag suites") {
  const auto suites = verify_flag(2);
  REQUIRE(suites.size() == 5);
  CHECK(suites[0].suite == "structure");
  for (const auto& s : suites) CHECK(s.passed());
}

TEST_CASE("a report fails if one check fails") {
  VerificationReport r{"demo", {{"a", true, "0"}, {"b", false, "1"}}};
  CHECK_FALSE(r.passed());
  r.checks[1].passed = true;
  CHECK(r.passed());
  CHECK(VerificationReport{"empty", {}}.passed());
}

TEST_CASE("exact rank") {
  using Row = std::vector<Rational>;
  CHECK(exact_rank({}) == 0);
  CHECK(exact_rank({Row{0, 0}, Row{0, 0}}) == 0);
  CHECK(exact_rank({Row{1, 2}, Row{2, 4}}) == 1);
  CHECK(exact_rank({Row{1, 2, 3}, Row{4, 5, 6}, Row{7, 8, 9}}) == 2);
  CHECK(exact_rank({Row{Rational(1, 3), 1}, Row{1, Rational(1, 3)}}) == 2);
  CHECK(exact_rank({Row{0, 1}, Row{1, 0}, Row{1, 1}}) == 2);
}

TEST_CASE("primitive (1,1) basis") {
  const auto basis = primitive11_basis();
  REQUIRE(basis.size() == 8);
  std::vector<std::vector<Rational>> rows;
  for (const Form& b : basis) {
    CHECK(b.degree() == 2);
    CHECK(b.is_horizontal());
    CHECK(apply_j(b) == b);
    CHECK(inner(b, model().omega).is_zero());
    std::vector<Rational> row;
    for (int i = 1; i <= 6; ++i)
      for (int j = i + 1; j <= 6; ++j)
        row.push_back(b.coefficient(static_cast<Mask>((1u << e_index(i)) | (1u << e_index(j)))).constant_term());
    rows.push_back(row);
  }
  CHECK(exact_rank(rows) == 8);
}
