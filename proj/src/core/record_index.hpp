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
#include <vector>

#include "core/bytes.hpp"
#include "core/result.hpp"

namespace sector {

/// Record boundaries of one slice file: N+1 byte offsets for N records.
/// offsets[0] is always 0 and the final entry equals the file size, so
/// record i occupies [offsets[i], offsets[i+1]).
class RecordIndex {
 public:
  RecordIndex() : offsets_{0} {}
  static Result<RecordIndex> from_offsets(std::vector<uint64_t> offsets);

  size_t record_count() const { return offsets_.size() - 1; }
  uint64_t file_size() const { return offsets_.back(); }

  uint64_t offset(size_t i) const { return offsets_[i]; }
  uint64_t record_size(size_t i) const { return offsets_[i + 1] - offsets_[i]; }
  const std::vector<uint64_t>& offsets() const { return offsets_; }

  // Byte range covered by records [first, last).
  std::pair<uint64_t, uint64_t> byte_range(size_t first, size_t last) const {
    return {offsets_[first], offsets_[last]};
  }

  void append_record(uint64_t size) { offsets_.push_back(offsets_.back() + size); }

  // On-disk `.idx` layout: big-endian u64 offsets, no header.
  Bytes encode() const;
  static Result<RecordIndex> decode(ByteView raw);

  bool operator==(const RecordIndex&) const = default;

 private:
  std::vector<uint64_t> offsets_;
};

// Prefix sums over per-record sizes. Every record must be at least one byte.
Result<RecordIndex> build_index(const std::vector<uint64_t>& record_sizes);

// The `.idx` sibling of a data file.
inline std::string index_path(const std::string& data_path) {
  return data_path + ".idx";
}
inline bool is_index_path(const std::string& path) {
  return path.size() > 4 && path.compare(path.size() - 4, 4, ".idx") == 0;
}

}  // namespace sector
