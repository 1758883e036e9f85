/*****************************************************************************
Copyright 2026 The sector-desk authors.

Licensed under the Apache License, Version 2.0 (the "License"); you may not
use this file except in compliance with the License. You may obtain a copy of
the License at

   http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
License for the specific language governing permissions and limitations under
the License.
*****************************************************************************/

#include "core/result.hpp"

namespace sector {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ok: return "ok";
    case Errc::timeout: return "timeout";
    case Errc::refused: return "refused";
    case Errc::not_found: return "not-found";
    case Errc::no_access: return "no-access";
    case Errc::exists: return "exists";
    case Errc::conflict: return "conflict";
    case Errc::no_space: return "no-space";
    case Errc::bad_request: return "bad-request";
    case Errc::session_invalid: return "session-invalid";
    case Errc::no_live_replica: return "no-live-replica";
    case Errc::index_required: return "index-required";
    case Errc::broken_channel: return "broken-channel";
    case Errc::resolve_error: return "resolve-error";
    case Errc::udf_error: return "udf-error";
    case Errc::io_error: return "io-error";
    case Errc::denied: return "denied";
    case Errc::busy: return "busy";
    case Errc::internal: return "internal";
  }
  return "unknown";
}

}  // namespace sector
