// SPDX-License-Identifier: Apache-2.0
//
// Report documents shared by the C API and the command-line tool. A document
// is a kind tag, an overall verdict and a JSON payload; the table and CSV
// renderings are derived from the payload only, so every output format
// carries the same numbers. Layout: docs/json_schema.md.
#pragma once

#include "nks/nkcheck.hpp"
#include "nks/spectrum.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace nks {

using Json = nlohmann::ordered_json;

enum class Format { Table, Json, Csv };

Format parse_format(std::string_view name);

struct ReportDocument {
  std::string kind;  // spectrum, moduli-bound, einstein-check, verify-flag, identities, all
  bool passed;
  Json data;

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

ReportDocument spectrum_report(Space s, Bundle b, const Rational& cutoff, unsigned threads = 0);
/// Moduli bound together with the isotropy Casimir normalization; passes iff
/// the multiplicities and bound equal the reference verdicts and the
/// normalization holds.
ReportDocument moduli_report(Space s, unsigned threads = 0);
ReportDocument einstein_report(Space s, unsigned threads = 0);
ReportDocument verify_flag_report(unsigned threads = 0);
ReportDocument identities_report();
/// Union of the individual documents: spectra at cutoff 12 for every space
/// and bundle, moduli bounds, Einstein checks, verify-flag and identities.
ReportDocument all_report(unsigned threads = 0);

std::string render(const ReportDocument& doc, Format f);

Json to_json(const ReportDocument& doc);
ReportDocument document_from_json(const Json& j);

Json to_json(const SpectrumEntry& e);
SpectrumEntry spectrum_entry_from_json(const Json& j);
Json to_json(const ModuliReport& m);
ModuliReport moduli_from_json(const Json& j);
Json to_json(const VerificationReport& r);
VerificationReport verification_from_json(const Json& j);

/// Reference verdicts: dim Omega^{(1,1)}_0(12), dim Omega^0(12), bound.
struct ModuliReference {
  long dim_omega11_12;
  long dim_omega0_12;
  long nk_upper_bound;
};
ModuliReference moduli_reference(Space s);

}  // namespace nks
