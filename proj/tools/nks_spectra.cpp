// SPDX-License-Identifier: Apache-2.0
//
// nks-spectra: command-line front end over the C API.
//
// Exit status: 0 all assertions hold, 2 usage error, 3 assertion failure,
// 4 internal error.
#include "nks/nks.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

namespace {

enum Exit { kOk = 0, kUsage = 2, kAssertion = 3, kInternal = 4 };

int exit_for(nks_status s) {
  switch (s) {
    case NKS_OK: return kOk;
    case NKS_INVALID_ARGUMENT: return kUsage;
    case NKS_ASSERTION_FAILED: return kAssertion;
    case NKS_INTERNAL_ERROR: return kInternal;
  }
  return kInternal;
}

struct Options {
  std::string space;
  std::string bundle = "lambda11";
  std::string cutoff = "12";
  std::string format = "table";
  std::string output;
};

int emit(nks_status status, nks_report* report, const Options& opt) {
  if (status != NKS_OK) {
    std::cerr << "nks-spectra: " << nks_last_error() << "\n";
    return exit_for(status);
  }
  nks_format format = NKS_FORMAT_TABLE;
  char* text = nullptr;
  nks_status s = nks_parse_format(opt.format.c_str(), &format);
  if (s == NKS_OK) s = nks_report_render(report, format, &text);
  const bool passed = nks_report_passed(report) != 0;
  nks_report_free(report);
  if (s != NKS_OK) {
    std::cerr << "nks-spectra: " << nks_last_error() << "\n";
    return exit_for(s);
  }

  int code = passed ? kOk : kAssertion;
  if (opt.output.empty()) {
    std::cout << text;
    std::cout.flush();
  } else {
    std::ofstream out(opt.output, std::ios::binary);
    out << text;
    if (!out) {
      std::cerr << "nks-spectra: cannot write '" << opt.output << "'\n";
      code = kUsage;
    }
  }
  nks_string_free(text);
  if (!passed) std::cerr << "nks-spectra: assertion failure, see report\n";
  return code;
}

nks_status space_of(const Options& opt, nks_space* out) { return nks_parse_space(opt.space.c_str(), out); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact spectra and deformation checks for homogeneous nearly Kaehler 6-manifolds", "nks-spectra"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(nks_version()));

  Options opt;
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
    sub->add_option("--output", opt.output, "Write the report to this file instead of stdout");
  };
  const auto add_space = [&](CLI::App* sub) {
    sub->add_option("--space", opt.space, "Homogeneous space")
        ->required()
        ->check(CLI::IsMember({"s3xs3", "cp3", "flag"}));
  };

  CLI::App* spectrum = app.add_subcommand("spectrum", "Laplace spectrum up to a cutoff");
  add_space(spectrum);
  spectrum->add_option("--bundle", opt.bundle, "Bundle (default lambda11)")
      ->check(CLI::IsMember({"functions", "lambda11"}));
  spectrum->add_option("--cutoff", opt.cutoff, "Largest eigenvalue, a nonnegative rational (default 12)");
  add_common(spectrum);

  CLI::App* moduli = app.add_subcommand("moduli-bound", "Upper bound on infinitesimal deformations");
  add_space(moduli);
  add_common(moduli);

  CLI::App* einstein = app.add_subcommand("einstein-check", "Multiplicities of eigenvalues 2 and 6");
  add_space(einstein);
  add_common(einstein);

  CLI::App* verify = app.add_subcommand("verify-flag", "Exterior-calculus checks on SU3/T2");
  add_common(verify);

  CLI::App* identities = app.add_subcommand("identities", "Pointwise SU(3)-structure identities");
  add_common(identities);

  CLI::App* all = app.add_subcommand("all", "Every report in one run");
  add_common(all);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  nks_report* report = nullptr;
  nks_space space = NKS_SPACE_S3XS3;
  nks_status status = NKS_OK;

  if (spectrum->parsed()) {
    nks_bundle bundle = NKS_BUNDLE_LAMBDA11;
    status = space_of(opt, &space);
    if (status == NKS_OK) status = nks_parse_bundle(opt.bundle.c_str(), &bundle);
    if (status == NKS_OK) status = nks_spectrum(space, bundle, opt.cutoff.c_str(), &report);
  } else if (moduli->parsed()) {
    status = space_of(opt, &space);
    if (status == NKS_OK) status = nks_moduli_bound(space, &report);
  } else if (einstein->parsed()) {
    status = space_of(opt, &space);
    if (status == NKS_OK) status = nks_einstein_check(space, &report);
  } else if (verify->parsed()) {
    status = nks_verify_flag(&report);
  } else if (identities->parsed()) {
    status = nks_identities(&report);
  } else if (all->parsed()) {
    status = nks_all(&report);
  }
  return emit(status, report, opt);
}
