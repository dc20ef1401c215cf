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


#include "shapely.h"

#include <string>

#include "shapely/canon.hpp"
#include "shapely/commands.hpp"
#include "shapely/error.hpp"
#include "shapely/workspace.hpp"

struct shapely_workspace {
  shapely::Workspace ws;
};

struct shapely_buffer {
  std::string text;
};

namespace {

thread_local std::string last_error;

shapely_status status_of(shapely::ErrorCode code) {
  using shapely::ErrorCode;
  switch (code) {
    case ErrorCode::kInvalidPolygraph: return SHAPELY_INVALID_POLYGRAPH;
    case ErrorCode::kInvalidMorphism: return SHAPELY_INVALID_MORPHISM;
    case ErrorCode::kIndexOutOfRange: return SHAPELY_INDEX_OUT_OF_RANGE;
    case ErrorCode::kArityMismatch: return SHAPELY_ARITY_MISMATCH;
    case ErrorCode::kNotMonic: return SHAPELY_NOT_MONIC;
    case ErrorCode::kNotAutomorphism: return SHAPELY_NOT_AUTOMORPHISM;
    case ErrorCode::kModeMismatch: return SHAPELY_MODE_MISMATCH;
    case ErrorCode::kBoundsMismatch: return SHAPELY_BOUNDS_MISMATCH;
    case ErrorCode::kBoundsExceeded: return SHAPELY_BOUNDS_EXCEEDED;
    case ErrorCode::kIllLabelled: return SHAPELY_ILL_LABELLED;
    case ErrorCode::kTypeMismatch: return SHAPELY_TYPE_MISMATCH;
    case ErrorCode::kUnsupported: return SHAPELY_UNSUPPORTED;
    case ErrorCode::kParse: return SHAPELY_PARSE_ERROR;
    case ErrorCode::kDuplicateName: return SHAPELY_DUPLICATE_NAME;
    case ErrorCode::kNotFound: return SHAPELY_NOT_FOUND;
    case ErrorCode::kUsage: return SHAPELY_USAGE;
  }
  return SHAPELY_INTERNAL;
}

template <typename F>
shapely_status guarded(F&& f) {
  last_error.clear();
  try {
    f();
    return SHAPELY_OK;
  } catch (const shapely::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return SHAPELY_INTERNAL;
  }
}

shapely_status null_argument(const char* what) {
  last_error = std::string(what) + " is null";
  return SHAPELY_NULL_ARGUMENT;
}

}  // namespace

extern "C" {

const char* shapely_version(void) { return "0.1.0"; }

const char* shapely_status_name(shapely_status status) {
  switch (status) {
    case SHAPELY_OK: return "ok";
    case SHAPELY_NULL_ARGUMENT: return "null-argument";
    case SHAPELY_INTERNAL: return "internal";
    default: break;
  }
  if (status >= SHAPELY_INVALID_POLYGRAPH && status <= SHAPELY_USAGE)
    return shapely::error_code_name(static_cast<shapely::ErrorCode>(status - 1)).data();
  return "unknown";
}

const char* shapely_last_error(void) { return last_error.c_str(); }

const char* shapely_buffer_data(const shapely_buffer* buffer) {
  return buffer ? buffer->text.c_str() : "";
}

size_t shapely_buffer_size(const shapely_buffer* buffer) { return buffer ? buffer->text.size() : 0; }

void shapely_buffer_destroy(shapely_buffer* buffer) { delete buffer; }

shapely_status shapely_workspace_create(shapely_workspace** out) {
  if (!out) return null_argument("out");
  return guarded([&] { *out = new shapely_workspace; });
}

void shapely_workspace_destroy(shapely_workspace* ws) { delete ws; }

shapely_status shapely_workspace_parse(shapely_workspace* ws, const char* text,
                                       const char* source) {
  if (!ws) return null_argument("ws");
  if (!text) return null_argument("text");
  return guarded([&] { ws->ws.parse(text, source ? source : "<input>"); });
}

shapely_status shapely_workspace_load(shapely_workspace* ws, const char* path) {
  if (!ws) return null_argument("ws");
  if (!path) return null_argument("path");
  return guarded([&] { ws->ws.load_file(path); });
}

shapely_status shapely_workspace_serialize(const shapely_workspace* ws, shapely_buffer** out) {
  if (!ws) return null_argument("ws");
  if (!out) return null_argument("out");
  return guarded([&] { *out = new shapely_buffer{ws->ws.serialize()}; });
}

shapely_status shapely_workspace_count(const shapely_workspace* ws, size_t* out) {
  if (!ws) return null_argument("ws");
  if (!out) return null_argument("out");
  return guarded([&] {
    using K = shapely::Workspace::Kind;
    *out = 0;
    for (K k : {K::kPolygraph, K::kShape, K::kMorphism, K::kFunctor}) *out += ws->ws.names(k).size();
  });
}

shapely_status shapely_shape_digest(const shapely_workspace* ws, const char* shape,
                                    shapely_mode mode, char out[33]) {
  if (!ws) return null_argument("ws");
  if (!shape) return null_argument("shape");
  if (!out) return null_argument("out");
  return guarded([&] {
    const auto& s = ws->ws.shape(shape);
    auto m = mode == SHAPELY_SYMMETRIC ? shapely::Mode::kSymmetric : shapely::Mode::kPlanar;
    auto hex = shapely::digest_of(shapely::certificate_of(s.shape, m)).hex();
    hex.copy(out, 32);
    out[32] = '\0';
  });
}

shapely_status shapely_shape_well_labelled(const shapely_workspace* ws, const char* shape,
                                           int* out) {
  if (!ws) return null_argument("ws");
  if (!shape) return null_argument("shape");
  if (!out) return null_argument("out");
  return guarded([&] { *out = shapely::well_labelled(ws->ws.shape(shape).shape) ? 1 : 0; });
}

shapely_status shapely_run(const shapely_workspace* ws, const char* command,
                           const char* request_json, shapely_buffer** out, int* exit_code) {
  if (!command) return null_argument("command");
  if (!out) return null_argument("out");
  if (!exit_code) return null_argument("exit_code");
  return guarded([&] {
    shapely::Json request = shapely::Json::object();
    shapely::CommandResult r;
    bool parsed = true;
    if (request_json && *request_json) {
      request = shapely::Json::parse(request_json, nullptr, false);
      parsed = !request.is_discarded();
    }
    if (!parsed) {
      r.exit_code = 2;
      r.output = shapely::Json{{"command", command},
                               {"error", {{"code", "usage"}, {"message", "request is not JSON"}}}};
    } else {
      r = shapely::run_command(command, request, ws ? ws->ws : shapely::Workspace{});
    }
    *exit_code = r.exit_code;
    if (r.exit_code != 0) last_error = r.output["error"]["message"].get<std::string>();
    *out = new shapely_buffer{shapely::render(r.output)};
  });
}

}  // extern "C"
