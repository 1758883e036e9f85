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

#include "core/topology.hpp"

#include <fstream>
#include <sstream>

namespace sector {

int leaf_distance(const TopoLeaf& a, const TopoLeaf& b) {
  if (a.dc != b.dc) return 3;
  if (a.rack != b.rack) return 2;
  if (a.node != b.node) return 1;
  return 0;
}

static std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

Result<Topology> Topology::parse(const std::string& text) {
  Topology topo;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    // strip comments and whitespace
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string place, addr;
    if (!(ls >> place)) continue;  // blank
    if (!(ls >> addr))
      return make_error(Errc::bad_request,
                        "topology line " + std::to_string(lineno) +
                            ": expected '<dc>/<rack>/<node> <host:port>'");
    auto parts = split(place, '/');
    if (parts.size() != 3 || parts[0].empty() || parts[1].empty() ||
        parts[2].empty())
      return make_error(Errc::bad_request,
                        "topology line " + std::to_string(lineno) +
                            ": location must have exactly three levels "
                            "(dc/rack/node), got '" + place + "'");
    auto ep = parse_endpoint(addr);
    if (!ep)
      return make_error(Errc::bad_request, "topology line " +
                                               std::to_string(lineno) + ": " +
                                               ep.error().message);
    TopoLeaf leaf{parts[0], parts[1], parts[2]};
    if (topo.by_host_.count(ep->host))
      return make_error(Errc::bad_request,
                        "topology line " + std::to_string(lineno) +
                            ": duplicate host " + ep->host_string());
    topo.add(leaf, *ep);
  }
  return topo;
}

Result<Topology> Topology::load(const std::string& file) {
  std::ifstream in(file);
  if (!in) return make_error(Errc::io_error, "cannot open topology file " + file);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

void Topology::add(const TopoLeaf& leaf, const Endpoint& ep) {
  by_host_[ep.host] = leaf;
  endpoints_[ep.host] = ep;
}

TopoLeaf Topology::leaf_of(uint32_t host) const {
  auto it = by_host_.find(host);
  if (it != by_host_.end()) return it->second;
  // Synthetic leaf: unknown machines are far from everything, near themselves.
  return TopoLeaf{"?", "?", format_ipv4(host)};
}

Result<TopoLeaf> Topology::lookup(uint32_t host) const {
  auto it = by_host_.find(host);
  if (it == by_host_.end())
    return make_error(Errc::not_found,
                      "host " + format_ipv4(host) + " not in topology");
  return it->second;
}

std::string Topology::serialize() const {
  std::string out;
  for (const auto& [host, leaf] : by_host_) {
    out += leaf.to_string();
    out += ' ';
    out += endpoints_.at(host).to_string();
    out += '\n';
  }
  return out;
}

}  // namespace sector
