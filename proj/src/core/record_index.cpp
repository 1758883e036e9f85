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

#include "core/record_index.hpp"

namespace sector {

Result<RecordIndex> RecordIndex::from_offsets(std::vector<uint64_t> offsets) {
  if (offsets.empty() || offsets[0] != 0)
    return make_error(Errc::bad_request, "index must start at offset 0");
  for (size_t i = 1; i < offsets.size(); ++i) {
    if (offsets[i] < offsets[i - 1])
      return make_error(Errc::bad_request, "index offsets decrease");
  }
  RecordIndex idx;
  idx.offsets_ = std::move(offsets);
  return idx;
}

Bytes RecordIndex::encode() const {
  Bytes out;
  out.reserve(offsets_.size() * 8);
  for (uint64_t v : offsets_) put_u64(out, v);
  return out;
}

Result<RecordIndex> RecordIndex::decode(ByteView raw) {
  if (raw.size() % 8 != 0 || raw.empty())
    return make_error(Errc::bad_request, "index size not a multiple of 8");
  std::vector<uint64_t> offsets(raw.size() / 8);
  for (size_t i = 0; i < offsets.size(); ++i)
    offsets[i] = get_u64(raw.data() + i * 8);
  return from_offsets(std::move(offsets));
}

Result<RecordIndex> build_index(const std::vector<uint64_t>& record_sizes) {
  RecordIndex idx;
  for (uint64_t s : record_sizes) {
    if (s == 0)
      return make_error(Errc::bad_request, "a record must occupy at least one byte");
    idx.append_record(s);
  }
  return idx;
}

}  // namespace sector
