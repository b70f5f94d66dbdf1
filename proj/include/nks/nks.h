/* SPDX-License-Identifier: Apache-2.0 */
/*
 * C interface to the nearly Kaehler spectra library.
 *
 * Every computation returns an nks_status and, on success, an opaque report
 * handle owned by the caller (release with nks_report_free). On failure the
 * out-parameter is left NULL and nks_last_error() describes the problem; the
 * message is per thread and valid until the next call on that thread.
 *
 * Rationals cross the boundary as strings: "12", "-3/2".
 */
#ifndef NKS_NKS_H
#define NKS_NKS_H

#if defined(_WIN32)
#  if defined(NKS_BUILDING_LIBRARY)
#    define NKS_API __declspec(dllexport)
#  else
#    define NKS_API __declspec(dllimport)
#  endif
#elif defined(__GNUC__)
#  define NKS_API __attribute__((visibility("default")))
#else
#  define NKS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nks_status {
  NKS_OK = 0,
  NKS_INVALID_ARGUMENT = 1,
  NKS_ASSERTION_FAILED = 2, /* an internal consistency check did not hold */
  NKS_INTERNAL_ERROR = 3
} nks_status;

typedef enum nks_space { NKS_SPACE_S3XS3 = 0, NKS_SPACE_CP3 = 1, NKS_SPACE_FLAG = 2 } nks_space;

typedef enum nks_bundle { NKS_BUNDLE_FUNCTIONS = 0, NKS_BUNDLE_LAMBDA11 = 1 } nks_bundle;

typedef enum nks_format { NKS_FORMAT_TABLE = 0, NKS_FORMAT_JSON = 1, NKS_FORMAT_CSV = 2 } nks_format;

typedef struct nks_report nks_report;

NKS_API const char* nks_version(void);
NKS_API const char* nks_last_error(void);

/* Name lookups ("s3xs3", "cp3", "flag"; "functions", "lambda11"; "table", "json", "csv"). */
NKS_API nks_status nks_parse_space(const char* name, nks_space* out);
NKS_API nks_status nks_parse_bundle(const char* name, nks_bundle* out);
NKS_API nks_status nks_parse_format(const char* name, nks_format* out);

/* Report builders. `cutoff` is a nonnegative rational string. */
NKS_API nks_status nks_spectrum(nks_space space, nks_bundle bundle, const char* cutoff, nks_report** out);
NKS_API nks_status nks_moduli_bound(nks_space space, nks_report** out);
NKS_API nks_status nks_einstein_check(nks_space space, nks_report** out);
NKS_API nks_status nks_verify_flag(nks_report** out);
NKS_API nks_status nks_identities(nks_report** out);
NKS_API nks_status nks_all(nks_report** out);

/* Nonzero iff every assertion recorded in the report holds. */
NKS_API int nks_report_passed(const nks_report* report);
NKS_API const char* nks_report_kind(const nks_report* report);
/* Renders into a newly allocated string; free it with nks_string_free. */
NKS_API nks_status nks_report_render(const nks_report* report, nks_format format, char** text);
NKS_API void nks_report_free(nks_report* report);
NKS_API void nks_string_free(char* text);

NKS_API nks_status nks_eigenspace_multiplicity(nks_space space, nks_bundle bundle, const char* eigenvalue,
                                               long* out);

#ifdef __cplusplus
}
#endif

#endif /* NKS_NKS_H */
