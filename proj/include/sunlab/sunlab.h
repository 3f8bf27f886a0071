// Copyright 2026 The sunlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


/* C interface to the sunlab library.
 *
 * Objects are opaque handles created by *_create / *_from_* functions and
 * released with the matching *_free. Every fallible call returns a
 * sunlab_status; on failure sunlab_last_error() describes the cause for the
 * calling thread. Strings returned through char** are owned by the caller
 * and released with sunlab_string_free. Points are passed as arrays of
 * `dim` doubles; clouds as row-major arrays of count * dim doubles. */

#ifndef SUNLAB_SUNLAB_H
#define SUNLAB_SUNLAB_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(SUNLAB_BUILDING)
#    define SUNLAB_API __declspec(dllexport)
#  else
#    define SUNLAB_API __declspec(dllimport)
#  endif
#else
#  define SUNLAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sunlab_status {
  SUNLAB_OK = 0,
  SUNLAB_INVALID_ARGUMENT = 1,
  SUNLAB_DIMENSION_MISMATCH = 2,
  SUNLAB_NOT_SYMMETRIC = 3,
  SUNLAB_DEGENERATE = 4,
  SUNLAB_DUPLICATE_FUNCTIONALS = 5,
  SUNLAB_TOO_LARGE = 6,
  SUNLAB_WEIGHT_MISMATCH = 7,
  SUNLAB_DUPLICATE_POINTS = 8,
  SUNLAB_EMPTY_CLOUD = 9,
  SUNLAB_ENDPOINT_NOT_IN_CLOUD = 10,
  SUNLAB_NOT_FOUND = 11,
  SUNLAB_NOT_A_NEAREST_POINT = 12,
  SUNLAB_QUERY_IN_CLOUD = 13,
  SUNLAB_NO_CANDIDATE = 14,
  SUNLAB_PARSE_ERROR = 15,
  SUNLAB_IO_ERROR = 16,
  SUNLAB_INTERNAL = 17
} sunlab_status;

typedef struct sunlab_space sunlab_space;
typedef struct sunlab_weights sunlab_weights;
typedef struct sunlab_cloud sunlab_cloud;

SUNLAB_API const char* sunlab_version(void);
SUNLAB_API const char* sunlab_status_name(sunlab_status status);
/* Message for the last failure on this thread; empty after a success. */
SUNLAB_API const char* sunlab_last_error(void);
SUNLAB_API void sunlab_string_free(char* s);

/* Spaces. `functionals` holds count * dim doubles; the family must be
 * closed under negation. */
SUNLAB_API sunlab_status sunlab_space_create(const double* functionals, size_t count, size_t dim,
                                             sunlab_space** out);
/* "linf" or "l1" in dimension n. */
SUNLAB_API sunlab_status sunlab_space_builtin(const char* family, size_t n, sunlab_space** out);
SUNLAB_API sunlab_status sunlab_space_from_json(const char* json, sunlab_space** out);
SUNLAB_API sunlab_status sunlab_space_to_json(const sunlab_space* space, char** json);
SUNLAB_API void sunlab_space_free(sunlab_space* space);
SUNLAB_API size_t sunlab_space_dim(const sunlab_space* space);
SUNLAB_API size_t sunlab_space_pair_count(const sunlab_space* space);
SUNLAB_API sunlab_status sunlab_space_norm(const sunlab_space* space, const double* x, double* out);

/* Weights: one positive alpha per functional pair. */
SUNLAB_API sunlab_status sunlab_weights_create(const double* alphas, size_t count,
                                               sunlab_weights** out);
/* "geometric" or "uniform". */
SUNLAB_API sunlab_status sunlab_weights_scheme(const char* scheme, size_t count,
                                               sunlab_weights** out);
SUNLAB_API void sunlab_weights_free(sunlab_weights* weights);

/* Point clouds. */
SUNLAB_API sunlab_status sunlab_cloud_create(const double* points, size_t count, size_t dim,
                                             sunlab_cloud** out);
SUNLAB_API sunlab_status sunlab_cloud_from_json(const char* json, sunlab_cloud** out);
SUNLAB_API sunlab_status sunlab_cloud_from_csv(const char* csv, sunlab_cloud** out);
SUNLAB_API size_t sunlab_cloud_size(const sunlab_cloud* cloud);
SUNLAB_API void sunlab_cloud_free(sunlab_cloud* cloud);

/* Geometry. */
SUNLAB_API sunlab_status sunlab_interval_contains(const sunlab_space* space, const double* x,
                                                  const double* y, const double* z, int* out);
SUNLAB_API sunlab_status sunlab_associated_norm(const sunlab_space* space,
                                                const sunlab_weights* weights, const double* x,
                                                double* out);
SUNLAB_API sunlab_status sunlab_is_between(const sunlab_space* space,
                                           const sunlab_weights* weights, const double* x,
                                           const double* z, const double* y, double tol, int* out);
/* Writes at most `capacity` nearest indices (ascending) and their total
 * number to *count. */
SUNLAB_API sunlab_status sunlab_project(const sunlab_space* space, const sunlab_cloud* cloud,
                                        const double* x, double* distance, size_t* nearest,
                                        size_t capacity, size_t* count);
/* scale < 0 selects the cloud's net spacing. witness may be NULL. */
SUNLAB_API sunlab_status sunlab_m_connected(const sunlab_space* space, const sunlab_cloud* cloud,
                                            double scale, int* connected, size_t witness[2]);
/* `indices` selects functional pairs; out receives `count` doubles. */
SUNLAB_API sunlab_status sunlab_embed_point(const sunlab_space* space, const size_t* indices,
                                            size_t count, const double* x, double* out);

/* Runs a command ("interval", "hull", "mconnect", "path", "project", "sun",
 * "embed", "verify") on a JSON configuration. On SUNLAB_OK, *report holds
 * the JSON report and *exit_code is 0 or 2 (falsification found). */
SUNLAB_API sunlab_status sunlab_run(const char* command, const char* config_json, char** report,
                                    int* exit_code);

/* Draws the figure carried by a report of a two-dimensional run as SVG.
 * Fails with SUNLAB_INVALID_ARGUMENT when the report has no figure. */
SUNLAB_API sunlab_status sunlab_render_svg(const char* report_json, char** svg);

#ifdef __cplusplus
}
#endif

#endif /* SUNLAB_SUNLAB_H */
