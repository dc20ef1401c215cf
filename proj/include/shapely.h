// Copyright 2026 The Shapely Authors
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


/* C interface to the shapely library. Objects are opaque handles; every
 * call that can fail returns a status code and leaves a message for
 * shapely_last_error() on the calling thread. */

#ifndef SHAPELY_H_
#define SHAPELY_H_

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define SHAPELY_API __declspec(dllexport)
#else
#define SHAPELY_API __attribute__((visibility("default")))
#endif

typedef enum shapely_status {
  SHAPELY_OK = 0,
  SHAPELY_INVALID_POLYGRAPH = 1,
  SHAPELY_INVALID_MORPHISM = 2,
  SHAPELY_INDEX_OUT_OF_RANGE = 3,
  SHAPELY_ARITY_MISMATCH = 4,
  SHAPELY_NOT_MONIC = 5,
  SHAPELY_NOT_AUTOMORPHISM = 6,
  SHAPELY_MODE_MISMATCH = 7,
  SHAPELY_BOUNDS_MISMATCH = 8,
  SHAPELY_BOUNDS_EXCEEDED = 9,
  SHAPELY_ILL_LABELLED = 10,
  SHAPELY_TYPE_MISMATCH = 11,
  SHAPELY_UNSUPPORTED = 12,
  SHAPELY_PARSE_ERROR = 13,
  SHAPELY_DUPLICATE_NAME = 14,
  SHAPELY_NOT_FOUND = 15,
  SHAPELY_USAGE = 16,
  SHAPELY_NULL_ARGUMENT = 17,
  SHAPELY_INTERNAL = 99
} shapely_status;

typedef enum shapely_mode { SHAPELY_PLANAR = 0, SHAPELY_SYMMETRIC = 1 } shapely_mode;

typedef struct shapely_workspace shapely_workspace;
typedef struct shapely_buffer shapely_buffer;

SHAPELY_API const char* shapely_version(void);
SHAPELY_API const char* shapely_status_name(shapely_status status);
/* Message of the last failed call on this thread; "" if none. */
SHAPELY_API const char* shapely_last_error(void);

/* Text buffers returned by the library. */
SHAPELY_API const char* shapely_buffer_data(const shapely_buffer* buffer);
SHAPELY_API size_t shapely_buffer_size(const shapely_buffer* buffer);
SHAPELY_API void shapely_buffer_destroy(shapely_buffer* buffer);

SHAPELY_API shapely_status shapely_workspace_create(shapely_workspace** out);
SHAPELY_API void shapely_workspace_destroy(shapely_workspace* ws);
/* Adds the declarations in text; source names the text in diagnostics. */
SHAPELY_API shapely_status shapely_workspace_parse(shapely_workspace* ws, const char* text,
                                                   const char* source);
SHAPELY_API shapely_status shapely_workspace_load(shapely_workspace* ws, const char* path);
SHAPELY_API shapely_status shapely_workspace_serialize(const shapely_workspace* ws,
                                                       shapely_buffer** out);
/* Number of declared polygraphs, shapes, morphisms and functors. */
SHAPELY_API shapely_status shapely_workspace_count(const shapely_workspace* ws, size_t* out);

/* 32 hex digits and a terminating zero. */
SHAPELY_API shapely_status shapely_shape_digest(const shapely_workspace* ws, const char* shape,
                                                shapely_mode mode, char out[33]);
SHAPELY_API shapely_status shapely_shape_well_labelled(const shapely_workspace* ws,
                                                       const char* shape, int* out);

/* Runs a command (enumerate, free-monad, apply, free-structure,
 * check-axioms, canon, minext, spectrum) with options given as a JSON
 * object. ws may be NULL. The JSON answer is stored in *out even when the
 * command fails; *exit_code is 0, 1 (domain error) or 2 (usage error). The
 * return value is SHAPELY_OK unless the call itself could not be made. */
SHAPELY_API shapely_status shapely_run(const shapely_workspace* ws, const char* command,
                                       const char* request_json, shapely_buffer** out,
                                       int* exit_code);

#ifdef __cplusplus
}
#endif

#endif /* SHAPELY_H_ */
