// SPDX-License-Identifier: Apache-2.0
#include "nks/report.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace nks {

namespace {

constexpr std::array<Space, 3> kSpaces = {Space::S3xS3, Space::CP3, Space::Flag};

std::string verdict(bool passed) { return passed ? "PASS" : "FAIL"; }

Rational rational_field(const Json& j, const char* key) { return parse_rational(j.at(key).get<std::string>()); }

// Left-aligned columns, two spaces apart, no trailing blanks.
std::string aligned(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv(const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ",";
      out += csv_field(row[c]);
    }
    out += "\n";
  }
  return out;
}

std::string display(const Json& rational_string) { return format(parse_rational(rational_string.get<std::string>())); }

std::vector<std::vector<std::string>> spectrum_rows(const Json& d, bool with_context) {
  std::vector<std::vector<std::string>> rows;
  if (with_context) {
    rows.push_back({"space", "bundle", "eigenvalue", "irrep", "hom_dim", "irrep_dim", "contribution"});
  } else {
    rows.push_back({"eigenvalue", "irrep", "hom_dim", "dim", "contribution"});
  }
  for (const auto& e : d.at("entries")) {
    std::vector<std::string> row{display(e.at("eigenvalue")), e.at("irrep").get<std::string>(),
                                 std::to_string(e.at("hom_dim").get<long>()),
                                 std::to_string(e.at("irrep_dim").get<long>()),
                                 std::to_string(e.at("contribution").get<long>())};
    if (with_context) {
      row.insert(row.begin(), d.at("bundle").get<std::string>());
      row.insert(row.begin(), d.at("space").get<std::string>());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

const std::vector<std::pair<const char*, const char*>> kModuliFields = {
    {"dim_omega11_12", "dim Omega11_0(12)"}, {"dim_isometry", "dim isometry"},
    {"dim_omega0_12", "dim Omega0(12)"},     {"nk_upper_bound_raw", "bound (raw)"},
    {"nk_upper_bound", "bound"},             {"einstein_mult_2", "mult at 2"},
    {"einstein_mult_6", "mult at 6"},
};

std::vector<std::vector<std::string>> verification_rows(const Json& d) {
  std::vector<std::vector<std::string>> rows{{"suite", "check", "status", "residual"}};
  for (const auto& s : d.at("suites"))
    for (const auto& c : s.at("checks"))
      rows.push_back({s.at("suite").get<std::string>(), c.at("name").get<std::string>(),
                      verdict(c.at("passed").get<bool>()), c.at("residual").get<std::string>()});
  return rows;
}

std::string render_table(const ReportDocument& doc) {
  const Json& d = doc.data;
  std::ostringstream out;
  if (doc.kind == "spectrum") {
    out << "spectrum  space=" << d.at("space").get<std::string>() << "  bundle=" << d.at("bundle").get<std::string>()
        << "  cutoff=" << display(d.at("cutoff")) << "\n";
    out << aligned(spectrum_rows(d, false));
    out << "total multiplicity: " << d.at("total").get<long>() << "\n";
  } else if (doc.kind == "moduli-bound") {
    out << "moduli-bound  space=" << d.at("space").get<std::string>() << "\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& [key, label] : kModuliFields) rows.push_back({label, std::to_string(d.at(key).get<long>())});
    const Json& n = d.at("normalization");
    rows.push_back({"isotropy Casimir", display(n.at("isotropy_casimir"))});
    rows.push_back({"scal_h", display(n.at("scal_h"))});
    rows.push_back({"q(Rbar)", display(n.at("q_rbar"))});
    out << aligned(rows);
  } else if (doc.kind == "einstein-check") {
    out << "einstein-check  space=" << d.at("space").get<std::string>() << "\n";
    out << aligned({{"mult at 2", std::to_string(d.at("mult_2").get<long>())},
                    {"mult at 6", std::to_string(d.at("mult_6").get<long>())}});
  } else if (doc.kind == "verify-flag" || doc.kind == "identities") {
    out << doc.kind << "\n" << aligned(verification_rows(d));
  } else if (doc.kind == "all") {
    for (const auto& sub : d.at("documents")) out << render_table(document_from_json(sub)) << "\n";
  } else {
    throw std::invalid_argument("unknown report kind '" + doc.kind + "'");
  }
  out << "verdict: " << verdict(doc.passed) << "\n";
  return out.str();
}

std::string render_csv(const ReportDocument& doc) {
  const Json& d = doc.data;
  if (doc.kind == "spectrum") return csv(spectrum_rows(d, true));
  if (doc.kind == "moduli-bound") {
    std::vector<std::string> header{"space"}, row{d.at("space").get<std::string>()};
    for (const auto& [key, label] : kModuliFields) {
      header.push_back(key);
      row.push_back(std::to_string(d.at(key).get<long>()));
    }
    const Json& n = d.at("normalization");
    for (const char* key : {"isotropy_casimir", "scal_h", "q_rbar"}) {
      header.push_back(key);
      row.push_back(n.at(key).get<std::string>());
    }
    header.push_back("passed");
    row.push_back(doc.passed ? "true" : "false");
    return csv({header, row});
  }
  if (doc.kind == "einstein-check")
    return csv({{"space", "mult_2", "mult_6", "passed"},
                {d.at("space").get<std::string>(), std::to_string(d.at("mult_2").get<long>()),
                 std::to_string(d.at("mult_6").get<long>()), doc.passed ? "true" : "false"}});
  if (doc.kind == "verify-flag" || doc.kind == "identities") return csv(verification_rows(d));
  if (doc.kind == "all") {
    std::string out;
    for (const auto& sub : d.at("documents")) {
      if (!out.empty()) out += "\n";
      out += "# " + sub.at("kind").get<std::string>() + "\n" + render_csv(document_from_json(sub));
    }
    return out;
  }
  throw std::invalid_argument("unknown report kind '" + doc.kind + "'");
}

Json normalization_json(const ScalNormalization& n) {
  Json summands = Json::array();
  for (const auto& [label, cas] : n.summands) summands.push_back({{"k_irrep", label}, {"casimir", serialize(cas)}});
  return {{"isotropy_casimir", serialize(n.isotropy_casimir)},
          {"scal_h", serialize(n.scal_h)},
          {"q_rbar", serialize(n.q_rbar)},
          {"summands", summands},
          {"passed", n.passed()}};
}

ReportDocument verification_document(std::string kind, const std::vector<VerificationReport>& suites) {
  Json list = Json::array();
  bool passed = true;
  for (const auto& s : suites) {
    list.push_back(to_json(s));
    passed = passed && s.passed();
  }
  return {std::move(kind), passed, {{"suites", list}}};
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "table") return Format::Table;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw std::invalid_argument("unknown format '" + std::string(name) + "' (expected table, json or csv)");
}

ModuliReference moduli_reference(Space s) {
  switch (s) {
    case Space::S3xS3: return {9, 0, 0};
    case Space::CP3: return {20, 10, 0};
    case Space::Flag: return {32, 16, 8};
  }
  throw std::invalid_argument("unknown space");
}

Json to_json(const SpectrumEntry& e) {
  return {{"irrep", to_string(e.irrep)},
          {"group", group_name(e.irrep.group)},
          {"labels", e.irrep.labels},
          {"eigenvalue", serialize(e.eigenvalue)},
          {"hom_dim", e.hom_dim},
          {"irrep_dim", e.irrep_dim},
          {"contribution", e.contribution}};
}

SpectrumEntry spectrum_entry_from_json(const Json& j) {
  SpectrumEntry e{};
  e.irrep = {parse_group(j.at("group").get<std::string>()), j.at("labels").get<std::vector<int>>()};
  validate(e.irrep);
  e.eigenvalue = rational_field(j, "eigenvalue");
  e.hom_dim = j.at("hom_dim").get<long>();
  e.irrep_dim = j.at("irrep_dim").get<long>();
  e.contribution = j.at("contribution").get<long>();
  return e;
}

Json to_json(const ModuliReport& m) {
  return {{"space", space_name(m.space)},
          {"dim_omega11_12", m.dim_omega11_12},
          {"dim_isometry", m.dim_isometry},
          {"dim_omega0_12", m.dim_omega0_12},
          {"nk_upper_bound_raw", m.nk_upper_bound_raw},
          {"nk_upper_bound", m.nk_upper_bound},
          {"einstein_mult_2", m.einstein_mult_2},
          {"einstein_mult_6", m.einstein_mult_6}};
}

ModuliReport moduli_from_json(const Json& j) {
  ModuliReport m{};
  m.space = parse_space(j.at("space").get<std::string>());
  m.dim_omega11_12 = j.at("dim_omega11_12").get<long>();
  m.dim_isometry = j.at("dim_isometry").get<long>();
  m.dim_omega0_12 = j.at("dim_omega0_12").get<long>();
  m.nk_upper_bound_raw = j.at("nk_upper_bound_raw").get<long>();
  m.nk_upper_bound = j.at("nk_upper_bound").get<long>();
  m.einstein_mult_2 = j.at("einstein_mult_2").get<long>();
  m.einstein_mult_6 = j.at("einstein_mult_6").get<long>();
  return m;
}

Json to_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"residual", c.residual}});
  return {{"suite", r.suite}, {"passed", r.passed()}, {"checks", checks}};
}

VerificationReport verification_from_json(const Json& j) {
  VerificationReport r{j.at("suite").get<std::string>(), {}};
  for (const auto& c : j.at("checks"))
    r.checks.push_back({c.at("name").get<std::string>(), c.at("passed").get<bool>(), c.at("residual").get<std::string>()});
  return r;
}

Json to_json(const ReportDocument& doc) { return {{"kind", doc.kind}, {"passed", doc.passed}, {"data", doc.data}}; }

ReportDocument document_from_json(const Json& j) {
  return {j.at("kind").get<std::string>(), j.at("passed").get<bool>(), j.at("data")};
}

ReportDocument spectrum_report(Space s, Bundle b, const Rational& cutoff, unsigned threads) {
  const auto entries = enumerate_spectrum(s, b, cutoff, threads);
  Json list = Json::array();
  long total = 0;
  for (const auto& e : entries) {
    list.push_back(to_json(e));
    total += e.contribution;
  }
  return {"spectrum",
          true,
          {{"space", space_name(s)},
           {"bundle", bundle_name(b)},
           {"cutoff", serialize(cutoff)},
           {"entries", list},
           {"total", total}}};
}

ReportDocument moduli_report(Space s, unsigned threads) {
  const ModuliReport m = moduli_upper_bound(s, threads);
  const ScalNormalization n = scal_normalization_check(s);
  const ModuliReference ref = moduli_reference(s);
  Json data = to_json(m);
  data["expected"] = {{"dim_omega11_12", ref.dim_omega11_12},
                      {"dim_omega0_12", ref.dim_omega0_12},
                      {"nk_upper_bound", ref.nk_upper_bound}};
  data["normalization"] = normalization_json(n);
  const bool passed = m.dim_omega11_12 == ref.dim_omega11_12 && m.dim_omega0_12 == ref.dim_omega0_12 &&
                      m.nk_upper_bound == ref.nk_upper_bound && n.passed();
  return {"moduli-bound", passed, data};
}

ReportDocument einstein_report(Space s, unsigned threads) {
  const EinsteinCheck c = einstein_deformation_check(s, threads);
  return {"einstein-check", c.passed(), {{"space", space_name(s)}, {"mult_2", c.mult_2}, {"mult_6", c.mult_6}}};
}

ReportDocument verify_flag_report(unsigned threads) { return verification_document("verify-flag", verify_flag(threads)); }

ReportDocument identities_report() { return verification_document("identities", {verify_pointwise_identities()}); }

ReportDocument all_report(unsigned threads) {
  std::vector<ReportDocument> docs;
  for (Space s : kSpaces)
    for (Bundle b : {Bundle::Functions, Bundle::Lambda11_0}) docs.push_back(spectrum_report(s, b, Rational(12), threads));
  for (Space s : kSpaces) docs.push_back(moduli_report(s, threads));
  for (Space s : kSpaces) docs.push_back(einstein_report(s, threads));
  docs.push_back(verify_flag_report(threads));
  docs.push_back(identities_report());

  Json list = Json::array();
  bool passed = true;
  for (const auto& d : docs) {
    list.push_back(to_json(d));
    passed = passed && d.passed;
  }
  return {"all", passed, {{"documents", list}}};
}

std::string render(const ReportDocument& doc, Format f) {
  switch (f) {
    case Format::Table: return render_table(doc);
    case Format::Json: return to_json(doc).dump(2) + "\n";
    case Format::Csv: return render_csv(doc);
  }
  throw std::invalid_argument("unknown format");
}

}  // namespace nks
