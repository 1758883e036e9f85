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

#include <cstdint>
#include <string>

#include "core/result.hpp"

namespace sector {

/// IPv4 host + UDP port. Simulated nodes use synthetic addresses from the
/// cluster topology; real nodes use actual interface addresses.
struct Endpoint {
  uint32_t host = 0;  // IPv4 in host byte order
  uint16_t port = 0;

  bool valid() const { return host != 0 || port != 0; }
  auto operator<=>(const Endpoint&) const = default;

  std::string to_string() const;
  std::string host_string() const;
};

// "a.b.c.d" -> host integer.
Result<uint32_t> parse_ipv4(const std::string& s);
// "a.b.c.d:port".
Result<Endpoint> parse_endpoint(const std::string& s);
std::string format_ipv4(uint32_t host);

}  // namespace sector
