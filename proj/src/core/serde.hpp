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

#pragma once

#include <json.hpp>

#include "core/bytes.hpp"
#include "core/result.hpp"

namespace sector {

using Json = nlohmann::json;

// Control-message payloads are CBOR-encoded JSON documents; the 14-byte
// datagram header around them is fixed, the payload encoding is ours.
inline Bytes encode_payload(const Json& j) { return Json::to_cbor(j); }

inline Result<Json> decode_payload(ByteView b) {
  Json j = Json::from_cbor(b, true, false);
  if (j.is_discarded())
    return make_error(Errc::bad_request, "undecodable payload");
  return j;
}

inline Json bin(const Bytes& b) { return Json::binary(b); }

inline Bytes unbin(const Json& j) {
  if (j.is_binary()) {
    const auto& v = j.get_binary();
    return Bytes(v.begin(), v.end());
  }
  return {};
}

}  // namespace sector
