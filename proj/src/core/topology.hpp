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

#include <map>
#include <string>
#include <vector>

#include "core/endpoint.hpp"
#include "core/result.hpp"

namespace sector {

/// Position of one machine in the fixed three-level hierarchy.
struct TopoLeaf {
  std::string dc;
  std::string rack;
  std::string node;

  auto operator<=>(const TopoLeaf&) const = default;
  std::string to_string() const { return dc + "/" + rack + "/" + node; }
};

// 0 same node, 1 same rack, 2 same data center, 3 otherwise.
int leaf_distance(const TopoLeaf& a, const TopoLeaf& b);

/// The cluster layout, keyed by each machine's message-port address host.
/// Loaded from a config file with one line per node:
///   <dc>/<rack>/<node> <host:port>
/// Machines that never appear in the config get a synthetic leaf of their
/// own, which places them at distance 3 from everything else.
class Topology {
 public:
  Topology() = default;

  static Result<Topology> parse(const std::string& text);
  static Result<Topology> load(const std::string& file);

  void add(const TopoLeaf& leaf, const Endpoint& ep);

  bool known(uint32_t host) const { return by_host_.count(host) > 0; }
  // Leaf for a host; unknown hosts get the synthetic fallback leaf.
  TopoLeaf leaf_of(uint32_t host) const;
  Result<TopoLeaf> lookup(uint32_t host) const;

  int distance(uint32_t host_a, uint32_t host_b) const {
    return leaf_distance(leaf_of(host_a), leaf_of(host_b));
  }

  size_t size() const { return by_host_.size(); }
  const std::map<uint32_t, TopoLeaf>& entries() const { return by_host_; }

  std::string serialize() const;

 private:
  std::map<uint32_t, TopoLeaf> by_host_;
  std::map<uint32_t, Endpoint> endpoints_;
};

}  // namespace sector
