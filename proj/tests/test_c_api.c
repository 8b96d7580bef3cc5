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

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "bayesopt/c_api.h"

static int failures = 0;

#define CHECK(cond)                                              \
  do {                                                           \
    if (!(cond)) {                                               \
      fprintf(stderr, "%s:%d: check failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                \
    }                                                            \
  } while (0)

static double bowl(const double* x, size_t dim, void* user, int* error) {
  int* calls = (int*)user;
  double s = 0.0;
  size_t i;
  ++*calls;
  *error = 0;
  for (i = 0; i < dim; ++i) s += (x[i] - 0.25) * (x[i] - 0.25);
  return s;
}

static double failing(const double* x, size_t dim, void* user, int* error) {
  int* calls = (int*)user;
  (void)x;
  (void)dim;
  *error = ++*calls == 6 ? 1 : 0;
  return 0.0;
}

static void test_success(void) {
  const double lower[2] = {0.0, 0.0};
  const double upper[2] = {1.0, 1.0};
  double best_x[2] = {-1.0, -1.0};
  double best_y = -1.0;
  char* trace = NULL;
  char err[256] = "";
  int calls = 0;
  int rc = bopt_optimize(bowl, &calls, 2, lower, upper,
                         "{\"n_init\": 5, \"n_iterations\": 10, \"seed\": 3}", best_x, &best_y,
                         &trace, err, sizeof err);
  CHECK(rc == BOPT_OK);
  CHECK(calls == 15);
  CHECK(best_x[0] >= 0.0 && best_x[0] <= 1.0);
  CHECK(best_y >= 0.0 && best_y < 0.05);
  CHECK(trace != NULL && strncmp(trace, "iteration,x0,x1,y", 17) == 0);
  bopt_free(trace);
}

static void test_null_params(void) {
  const double lower[1] = {-1.0};
  const double upper[1] = {1.0};
  double best_x[1];
  double best_y;
  int calls = 0;
  int rc = bopt_optimize(bowl, &calls, 1, lower, upper, "{\"n_iterations\": 2}", best_x,
                         &best_y, NULL, NULL, 0);
  CHECK(rc == BOPT_OK);
  CHECK(calls == 6);
}

static void test_invalid_params(void) {
  const double lower[2] = {0.0, 0.0};
  const double upper[2] = {1.0, 1.0};
  double best_x[2];
  double best_y;
  char err[256] = "";
  int calls = 0;
  int rc = bopt_optimize(bowl, &calls, 2, lower, upper, "{\"no_such_key\": 1}", best_x,
                         &best_y, NULL, err, sizeof err);
  CHECK(rc == BOPT_INVALID_PARAMS);
  CHECK(strstr(err, "no_such_key") != NULL);
  CHECK(calls == 0);

  rc = bopt_optimize(bowl, &calls, 2, upper, lower, NULL, best_x, &best_y, NULL, err,
                     sizeof err);
  CHECK(rc == BOPT_INVALID_PARAMS);
  rc = bopt_optimize(bowl, &calls, 2, lower, upper, "{\"crit_name\": \"cEI(\"}", best_x,
                     &best_y, NULL, err, sizeof err);
  CHECK(rc == BOPT_INVALID_PARAMS);
  rc = bopt_optimize(bowl, &calls, 2, lower, upper, "not json", best_x, &best_y, NULL, err,
                     sizeof err);
  CHECK(rc == BOPT_INVALID_PARAMS);
}

static void test_callback_error(void) {
  const double lower[2] = {0.0, 0.0};
  const double upper[2] = {1.0, 1.0};
  double best_x[2];
  double best_y;
  char err[256] = "";
  int calls = 0;
  int rc = bopt_optimize(failing, &calls, 2, lower, upper,
                         "{\"n_init\": 4, \"n_iterations\": 10}", best_x, &best_y, NULL, err,
                         sizeof err);
  CHECK(rc == BOPT_CALLBACK_ERROR);
  CHECK(calls == 6);
  CHECK(strstr(err, "iteration 2") != NULL);
  CHECK(strstr(err, "evaluation 5") != NULL);
  CHECK(strstr(err, "x = [") != NULL);
}

static void test_default_params(void) {
  char* json = NULL;
  CHECK(bopt_default_params(&json) == BOPT_OK);
  CHECK(json != NULL);
  CHECK(strstr(json, "\"crit_name\"") != NULL);
  CHECK(strstr(json, "\"l_update_every\"") != NULL);
  bopt_free(json);
}

int main(void) {
  test_success();
  test_null_params();
  test_invalid_params();
  test_callback_error();
  test_default_params();
  if (failures != 0) {
    fprintf(stderr, "%d check(s) failed\n", failures);
    return 1;
  }
  printf("all C API checks passed\n");
  return 0;
}
