// SPDX-License-Identifier: Apache-2.0
#include "nks/nks.h"

#include "nks/report.hpp"

#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

struct nks_report {
  nks::ReportDocument doc;
};

namespace {

thread_local std::string last_error;

nks_status fail(nks_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Maps exceptions to status codes: bad input, broken invariant, anything else.
template <class F>
nks_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const std::invalid_argument& e) {
    return fail(NKS_INVALID_ARGUMENT, e.what());
  } catch (const std::logic_error& e) {
    return fail(NKS_ASSERTION_FAILED, e.what());
  } catch (const std::exception& e) {
    return fail(NKS_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(NKS_INTERNAL_ERROR, "unknown error");
  }
}

nks::Space to_space(nks_space s) {
  switch (s) {
    case NKS_SPACE_S3XS3: return nks::Space::S3xS3;
    case NKS_SPACE_CP3: return nks::Space::CP3;
    case NKS_SPACE_FLAG: return nks::Space::Flag;
  }
  throw std::invalid_argument("invalid space value " + std::to_string(static_cast<int>(s)));
}

nks::Bundle to_bundle(nks_bundle b) {
  switch (b) {
    case NKS_BUNDLE_FUNCTIONS: return nks::Bundle::Functions;
    case NKS_BUNDLE_LAMBDA11: return nks::Bundle::Lambda11_0;
  }
  throw std::invalid_argument("invalid bundle value " + std::to_string(static_cast<int>(b)));
}

nks::Format to_format(nks_format f) {
  switch (f) {
    case NKS_FORMAT_TABLE: return nks::Format::Table;
    case NKS_FORMAT_JSON: return nks::Format::Json;
    case NKS_FORMAT_CSV: return nks::Format::Csv;
  }
  throw std::invalid_argument("invalid format value " + std::to_string(static_cast<int>(f)));
}

template <class F>
nks_status build(nks_report** out, F&& make) {
  if (!out) return fail(NKS_INVALID_ARGUMENT, "output pointer is NULL");
  *out = nullptr;
  return guarded([&] {
    *out = new nks_report{make()};
    return NKS_OK;
  });
}

const char* require_text(const char* s, const char* what) {
  if (!s) throw std::invalid_argument(std::string(what) + " is NULL");
  return s;
}

}  // namespace

extern "C" {

const char* nks_version(void) { return "1.0.0"; }

const char* nks_last_error(void) { return last_error.c_str(); }

nks_status nks_parse_space(const char* name, nks_space* out) {
  return guarded([&] {
    if (!out) throw std::invalid_argument("output pointer is NULL");
    *out = static_cast<nks_space>(nks::parse_space(require_text(name, "space")));
    return NKS_OK;
  });
}

nks_status nks_parse_bundle(const char* name, nks_bundle* out) {
  return guarded([&] {
    if (!out) throw std::invalid_argument("output pointer is NULL");
    *out = static_cast<nks_bundle>(nks::parse_bundle(require_text(name, "bundle")));
    return NKS_OK;
  });
}

nks_status nks_parse_format(const char* name, nks_format* out) {
  return guarded([&] {
    if (!out) throw std::invalid_argument("output pointer is NULL");
    *out = static_cast<nks_format>(nks::parse_format(require_text(name, "format")));
    return NKS_OK;
  });
}

nks_status nks_spectrum(nks_space space, nks_bundle bundle, const char* cutoff, nks_report** out) {
  return build(out, [&] {
    const nks::Rational c = nks::parse_rational(require_text(cutoff, "cutoff"));
    return nks::spectrum_report(to_space(space), to_bundle(bundle), c);
  });
}

nks_status nks_moduli_bound(nks_space space, nks_report** out) {
  return build(out, [&] { return nks::moduli_report(to_space(space)); });
}

nks_status nks_einstein_check(nks_space space, nks_report** out) {
  return build(out, [&] { return nks::einstein_report(to_space(space)); });
}

nks_status nks_verify_flag(nks_report** out) {
  return build(out, [] { return nks::verify_flag_report(); });
}

nks_status nks_identities(nks_report** out) {
  return build(out, [] { return nks::identities_report(); });
}

nks_status nks_all(nks_report** out) {
  return build(out, [] { return nks::all_report(); });
}

int nks_report_passed(const nks_report* report) { return report && report->doc.passed ? 1 : 0; }

const char* nks_report_kind(const nks_report* report) { return report ? report->doc.kind.c_str() : ""; }

nks_status nks_report_render(const nks_report* report, nks_format format, char** text) {
  return guarded([&] {
    if (!report || !text) throw std::invalid_argument("report or output pointer is NULL");
    *text = nullptr;
    const std::string s = nks::render(report->doc, to_format(format));
    char* buffer = new char[s.size() + 1];
    std::memcpy(buffer, s.c_str(), s.size() + 1);
    *text = buffer;
    return NKS_OK;
  });
}

void nks_report_free(nks_report* report) { delete report; }

void nks_string_free(char* text) { delete[] text; }

nks_status nks_eigenspace_multiplicity(nks_space space, nks_bundle bundle, const char* eigenvalue, long* out) {
  return guarded([&] {
    if (!out) throw std::invalid_argument("output pointer is NULL");
    const nks::Rational ev = nks::parse_rational(require_text(eigenvalue, "eigenvalue"));
    *out = nks::eigenspace_multiplicity(to_space(space), to_bundle(bundle), ev);
    return NKS_OK;
  });
}

}  // extern "C"
