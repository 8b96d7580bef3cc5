// Copyright 2026 The bayesopt-cpp Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// =============================================================================

#ifndef BAYESOPT_C_API_H
#define BAYESOPT_C_API_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#define BOPT_OK 0
#define BOPT_INVALID_PARAMS 1
#define BOPT_CALLBACK_ERROR 2
#define BOPT_FAILURE 3

/* Target callback. Set *error to a nonzero value to abort the run. */
typedef double (*bopt_objective)(const double* x, size_t dim, void* user, int* error);

/*
 * Minimizes f over the box [lower, upper] (both of length dim).
 * params_json is a JSON object with the parameter keys (may be NULL or empty);
 * unknown keys are rejected. Bounds given here replace any in params_json.
 * On success best_x (length dim) and best_y are filled and, when trace_csv is
 * not NULL, *trace_csv receives the run trace as CSV, to be released with
 * bopt_free. On failure a message is written to error_buf when it is not NULL.
 */
int bopt_optimize(bopt_objective f, void* user, size_t dim, const double* lower,
                  const double* upper, const char* params_json, double* best_x, double* best_y,
                  char** trace_csv, char* error_buf, size_t error_len);

/* Writes the default parameters as JSON into *out (release with bopt_free). */
int bopt_default_params(char** out);

void bopt_free(void* p);

#ifdef __cplusplus
}
#endif

#endif /* BAYESOPT_C_API_H */
