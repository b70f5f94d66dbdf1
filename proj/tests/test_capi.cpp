// SPDX-License-Identifier: Apache-2.0
// Exercises the shared library through its C interface only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nks/nks.h"

#include <cstring>
#include <string>

namespace {

std::string render(const nks_report* r, nks_format f) {
  char* text = nullptr;
  REQUIRE(nks_report_render(r, f, &text) == NKS_OK);
  std::string out(text);
  nks_string_free(text);
  return out;
}

}  // namespace

TEST_CASE("version") { CHECK(std::string(nks_version()) == "1.0.0"); }

TEST_CASE("name lookups") {
  nks_space s{};
  CHECK(nks_parse_space("flag", &s) == NKS_OK);
  CHECK(s == NKS_SPACE_FLAG);
  CHECK(nks_parse_space("mars", &s) == NKS_INVALID_ARGUMENT);
  CHECK(std::string(nks_last_error()).find("mars") != std::string::npos);
  CHECK(nks_parse_space(nullptr, &s) == NKS_INVALID_ARGUMENT);
  CHECK(nks_parse_space("cp3", nullptr) == NKS_INVALID_ARGUMENT);
  nks_bundle b{};
  CHECK(nks_parse_bundle("functions", &b) == NKS_OK);
  CHECK(b == NKS_BUNDLE_FUNCTIONS);
  nks_format f{};
  CHECK(nks_parse_format("csv", &f) == NKS_OK);
  CHECK(f == NKS_FORMAT_CSV);
  CHECK(nks_parse_format("yaml", &f) == NKS_INVALID_ARGUMENT);
}

TEST_CASE("moduli bound report") {
  nks_report* r = nullptr;
  REQUIRE(nks_moduli_bound(NKS_SPACE_FLAG, &r) == NKS_OK);
  REQUIRE(r != nullptr);
  CHECK(nks_report_passed(r) == 1);
  CHECK(std::string(nks_report_kind(r)) == "moduli-bound");
  const std::string json = render(r, NKS_FORMAT_JSON);
  CHECK(json.find("\"nk_upper_bound\": 8") != std::string::npos);
  CHECK(render(r, NKS_FORMAT_TABLE).find("verdict: PASS") != std::string::npos);
  nks_report_free(r);
}

TEST_CASE("spectrum and multiplicities") {
  long m = -1;
  CHECK(nks_eigenspace_multiplicity(NKS_SPACE_FLAG, NKS_BUNDLE_LAMBDA11, "12", &m) == NKS_OK);
  CHECK(m == 32);
  CHECK(nks_eigenspace_multiplicity(NKS_SPACE_CP3, NKS_BUNDLE_LAMBDA11, "12", &m) == NKS_OK);
  CHECK(m == 20);
  CHECK(nks_eigenspace_multiplicity(NKS_SPACE_S3XS3, NKS_BUNDLE_LAMBDA11, "24/2", &m) == NKS_OK);
  CHECK(m == 9);
  CHECK(nks_eigenspace_multiplicity(NKS_SPACE_FLAG, NKS_BUNDLE_LAMBDA11, "6", &m) == NKS_OK);
  CHECK(m == 0);
  CHECK(nks_eigenspace_multiplicity(NKS_SPACE_FLAG, NKS_BUNDLE_LAMBDA11, "x", &m) == NKS_INVALID_ARGUMENT);
  CHECK(nks_eigenspace_multiplicity(NKS_SPACE_FLAG, NKS_BUNDLE_LAMBDA11, nullptr, &m) == NKS_INVALID_ARGUMENT);
  CHECK(nks_eigenspace_multiplicity(NKS_SPACE_FLAG, NKS_BUNDLE_LAMBDA11, "12", nullptr) == NKS_INVALID_ARGUMENT);

  nks_report* r = nullptr;
  REQUIRE(nks_spectrum(NKS_SPACE_CP3, NKS_BUNDLE_FUNCTIONS, "12", &r) == NKS_OK);
  CHECK(render(r, NKS_FORMAT_JSON).find("\"total\": 16") != std::string::npos);
  nks_report_free(r);
}

TEST_CASE("invalid arguments leave the output NULL") {
  nks_report* r = reinterpret_cast<nks_report*>(0x1);
  CHECK(nks_spectrum(NKS_SPACE_CP3, NKS_BUNDLE_LAMBDA11, "-1", &r) == NKS_INVALID_ARGUMENT);
  CHECK(r == nullptr);
  CHECK(std::strlen(nks_last_error()) > 0);
  CHECK(nks_spectrum(NKS_SPACE_CP3, NKS_BUNDLE_LAMBDA11, "1/0", &r) == NKS_INVALID_ARGUMENT);
  CHECK(nks_spectrum(static_cast<nks_space>(7), NKS_BUNDLE_LAMBDA11, "12", &r) == NKS_INVALID_ARGUMENT);
  CHECK(nks_spectrum(NKS_SPACE_CP3, static_cast<nks_bundle>(-1), "12", &r) == NKS_INVALID_ARGUMENT);
  CHECK(nks_moduli_bound(static_cast<nks_space>(3), &r) == NKS_INVALID_ARGUMENT);
  CHECK(nks_moduli_bound(NKS_SPACE_CP3, nullptr) == NKS_INVALID_ARGUMENT);
  CHECK(nks_all(nullptr) == NKS_INVALID_ARGUMENT);

  REQUIRE(nks_identities(&r) == NKS_OK);
  char* text = nullptr;
  CHECK(nks_report_render(r, static_cast<nks_format>(9), &text) == NKS_INVALID_ARGUMENT);
  CHECK(text == nullptr);
  CHECK(nks_report_render(r, NKS_FORMAT_JSON, nullptr) == NKS_INVALID_ARGUMENT);
  CHECK(nks_report_render(nullptr, NKS_FORMAT_JSON, &text) == NKS_INVALID_ARGUMENT);
  nks_report_free(r);

  CHECK(nks_report_passed(nullptr) == 0);
  CHECK(std::string(nks_report_kind(nullptr)).empty());
  nks_report_free(nullptr);
  nks_string_free(nullptr);
}

TEST_CASE("every builder succeeds") {
  nks_report* r = nullptr;
  for (nks_space s : {NKS_SPACE_S3XS3, NKS_SPACE_CP3, NKS_SPACE_FLAG}) {
    REQUIRE(nks_einstein_check(s, &r) == NKS_OK);
    CHECK(nks_report_passed(r) == 1);
    nks_report_free(r);
  }
  REQUIRE(nks_verify_flag(&r) == NKS_OK);
  CHECK(nks_report_passed(r) == 1);
  nks_report_free(r);
  REQUIRE(nks_all(&r) == NKS_OK);
  CHECK(nks_report_passed(r) == 1);
  CHECK(std::string(nks_report_kind(r)) == "all");
  const std::string csv = render(r, NKS_FORMAT_CSV);
  CHECK(csv == render(r, NKS_FORMAT_CSV));
  nks_report_free(r);
  CHECK(std::strlen(nks_last_error()) == 0);
}
