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

#include "core/endpoint.hpp"

#include <cstdio>

namespace sector {

std::string format_ipv4(uint32_t host) {
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%u.%u.%u.%u", (host >> 24) & 0xff,
                (host >> 16) & 0xff, (host >> 8) & 0xff, host & 0xff);
  return buf;
}

std::string Endpoint::to_string() const {
  return format_ipv4(host) + ":" + std::to_string(port);
}

std::string Endpoint::host_string() const { return format_ipv4(host); }

Result<uint32_t> parse_ipv4(const std::string& s) {
  unsigned a, b, c, d;
  char tail;
  int n = std::sscanf(s.c_str(), "%u.%u.%u.%u%c", &a, &b, &c, &d, &tail);
  if (n != 4 || a > 255 || b > 255 || c > 255 || d > 255)
    return make_error(Errc::bad_request, "bad IPv4 address: " + s);
  return uint32_t(a << 24 | b << 16 | c << 8 | d);
}

Result<Endpoint> parse_endpoint(const std::string& s) {
  auto colon = s.rfind(':');
  if (colon == std::string::npos)
    return make_error(Errc::bad_request, "expected host:port, got: " + s);
  auto host = parse_ipv4(s.substr(0, colon));
  if (!host) return host.error();
  unsigned long port = 0;
  try {
    port = std::stoul(s.substr(colon + 1));
  } catch (...) {
    return make_error(Errc::bad_request, "bad port in: " + s);
  }
  if (port == 0 || port > 65535)
    return make_error(Errc::bad_request, "bad port in: " + s);
  return Endpoint{*host, uint16_t(port)};
}

}  // namespace sector
