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
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "core/endpoint.hpp"
#include "core/event_loop.hpp"
#include "core/record_index.hpp"

namespace sector {

using SlaveId = uint32_t;
using SessionId = uint32_t;
using ChannelId = uint32_t;
using JobId = uint32_t;

/// One slice's metadata as the master sees it.
struct FileMeta {
  std::string path;          // logical name, always absolute ("/a/b.dat")
  uint64_t size = 0;         // bytes
  std::optional<uint64_t> record_count;  // absent when the slice has no index
  std::set<SlaveId> replicas;
  Tick timestamp = 0;  // last-modified tick

  bool has_index() const { return record_count.has_value(); }
};

/// Live state of one slave, refreshed by heartbeats.
struct SlaveStatus {
  SlaveId id = 0;
  Endpoint address;        // message-port endpoint
  Endpoint data_address;   // data-port endpoint
  uint64_t free_disk = 0;  // bytes
  uint32_t active_transfers = 0;
  bool alive = false;
};

/// A contiguous run of whole records from one file: the unit of Sphere
/// scheduling, processing, and retry. When the file has no index the
/// segment addresses raw bytes (whole-file mode).
struct Segment {
  uint32_t segment_id = 0;  // unique within a job, in stream order
  std::string file;
  bool whole_file = false;
  // Record addressing (valid when the file has an index).
  uint64_t first_record = 0;
  uint64_t last_record = 0;  // exclusive
  // Byte addressing; always filled in.
  uint64_t byte_offset = 0;
  uint64_t byte_size = 0;
  Bytes params;  // opaque application bytes

  uint64_t record_span() const { return last_record - first_record; }
};

/// Ordered collection of slice files (with indexes where present) forming a
/// Sphere stage's input or output.
struct StreamMember {
  FileMeta meta;
  std::optional<RecordIndex> index;
};

struct SphereStream {
  std::vector<StreamMember> members;

  uint64_t total_size() const {
    uint64_t n = 0;
    for (const auto& m : members) n += m.meta.size;
    return n;
  }
  std::optional<uint64_t> total_records() const {
    uint64_t n = 0;
    for (const auto& m : members) {
      if (!m.meta.record_count) return std::nullopt;
      n += *m.meta.record_count;
    }
    return n;
  }
  bool fully_indexed() const {
    for (const auto& m : members)
      if (!m.index) return false;
    return true;
  }
};

// Logical path rules: absolute, normal components only. Rejects "", "..",
// "." and embedded NULs so a slave can map paths straight onto its root.
bool valid_logical_path(const std::string& path);

}  // namespace sector
