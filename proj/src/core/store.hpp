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
#include <memory>
#include <string>
#include <vector>

#include "core/bytes.hpp"
#include "core/result.hpp"

namespace sector {

/// Flat keyed byte storage under a slave. Keys look like logical paths
/// ("/a/b.dat"); the directory-backed implementation maps them onto the
/// native file system so slices stay readable with ordinary tools.
class Store {
 public:
  virtual ~Store() = default;

  virtual Result<void> put(const std::string& key, ByteView data) = 0;
  virtual Result<void> append(const std::string& key, ByteView data) = 0;
  virtual Result<Bytes> get(const std::string& key) const = 0;
  virtual Result<Bytes> get_range(const std::string& key, uint64_t offset,
                                  uint64_t len) const = 0;
  virtual Result<uint64_t> size_of(const std::string& key) const = 0;
  virtual bool exists(const std::string& key) const = 0;
  virtual Result<void> rename(const std::string& from, const std::string& to) = 0;
  virtual Result<void> remove(const std::string& key) = 0;
  // Every key with its size, sorted.
  virtual std::vector<std::pair<std::string, uint64_t>> list() const = 0;

  virtual uint64_t free_bytes() const = 0;
  virtual uint64_t used_bytes() const = 0;
};

/// In-memory store with a fixed capacity; the default for simulated slaves.
class MemStore : public Store {
 public:
  explicit MemStore(uint64_t capacity = 4ull << 30) : capacity_(capacity) {}

  Result<void> put(const std::string& key, ByteView data) override;
  Result<void> append(const std::string& key, ByteView data) override;
  Result<Bytes> get(const std::string& key) const override;
  Result<Bytes> get_range(const std::string& key, uint64_t offset,
                          uint64_t len) const override;
  Result<uint64_t> size_of(const std::string& key) const override;
  bool exists(const std::string& key) const override;
  Result<void> rename(const std::string& from, const std::string& to) override;
  Result<void> remove(const std::string& key) override;
  std::vector<std::pair<std::string, uint64_t>> list() const override;

  uint64_t free_bytes() const override {
    return used_ > capacity_ ? 0 : capacity_ - used_;
  }
  uint64_t used_bytes() const override { return used_; }

 private:
  std::map<std::string, Bytes> files_;
  uint64_t capacity_;
  uint64_t used_ = 0;
};

/// Store over a native directory tree. Capacity 0 means "whatever the file
/// system reports"; a nonzero capacity caps usage below that (handy for
/// disk-full fault injection).
class DirStore : public Store {
 public:
  explicit DirStore(std::string root, uint64_t capacity = 0);

  Result<void> put(const std::string& key, ByteView data) override;
  Result<void> append(const std::string& key, ByteView data) override;
  Result<Bytes> get(const std::string& key) const override;
  Result<Bytes> get_range(const std::string& key, uint64_t offset,
                          uint64_t len) const override;
  Result<uint64_t> size_of(const std::string& key) const override;
  bool exists(const std::string& key) const override;
  Result<void> rename(const std::string& from, const std::string& to) override;
  Result<void> remove(const std::string& key) override;
  std::vector<std::pair<std::string, uint64_t>> list() const override;

  uint64_t free_bytes() const override;
  uint64_t used_bytes() const override;

  const std::string& root() const { return root_; }

 private:
  std::string local_path(const std::string& key) const;

  std::string root_;
  uint64_t capacity_;
};

}  // namespace sector
