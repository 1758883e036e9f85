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

#include "core/store.hpp"

#include <filesystem>
#include <fstream>

namespace sector {

namespace fs = std::filesystem;

// ---------------------------------------------------------------- MemStore

Result<void> MemStore::put(const std::string& key, ByteView data) {
  uint64_t old = 0;
  auto it = files_.find(key);
  if (it != files_.end()) old = it->second.size();
  if (used_ - old + data.size() > capacity_)
    return make_error(Errc::no_space, "store full");
  files_[key] = Bytes(data.begin(), data.end());
  used_ = used_ - old + data.size();
  return {};
}

Result<void> MemStore::append(const std::string& key, ByteView data) {
  if (used_ + data.size() > capacity_)
    return make_error(Errc::no_space, "store full");
  auto& f = files_[key];
  f.insert(f.end(), data.begin(), data.end());
  used_ += data.size();
  return {};
}

Result<Bytes> MemStore::get(const std::string& key) const {
  auto it = files_.find(key);
  if (it == files_.end()) return make_error(Errc::not_found, key);
  return it->second;
}

Result<Bytes> MemStore::get_range(const std::string& key, uint64_t offset,
                                  uint64_t len) const {
  auto it = files_.find(key);
  if (it == files_.end()) return make_error(Errc::not_found, key);
  if (offset + len > it->second.size())
    return make_error(Errc::bad_request, "range beyond end of " + key);
  return Bytes(it->second.begin() + offset, it->second.begin() + offset + len);
}

Result<uint64_t> MemStore::size_of(const std::string& key) const {
  auto it = files_.find(key);
  if (it == files_.end()) return make_error(Errc::not_found, key);
  return uint64_t(it->second.size());
}

bool MemStore::exists(const std::string& key) const {
  return files_.count(key) > 0;
}

Result<void> MemStore::rename(const std::string& from, const std::string& to) {
  auto it = files_.find(from);
  if (it == files_.end()) return make_error(Errc::not_found, from);
  auto old = files_.find(to);
  if (old != files_.end()) {
    used_ -= old->second.size();
    files_.erase(old);
  }
  files_[to] = std::move(it->second);
  files_.erase(from);
  return {};
}

Result<void> MemStore::remove(const std::string& key) {
  auto it = files_.find(key);
  if (it == files_.end()) return make_error(Errc::not_found, key);
  used_ -= it->second.size();
  files_.erase(it);
  return {};
}

std::vector<std::pair<std::string, uint64_t>> MemStore::list() const {
  std::vector<std::pair<std::string, uint64_t>> out;
  out.reserve(files_.size());
  for (const auto& [k, v] : files_) out.emplace_back(k, v.size());
  return out;
}

// ---------------------------------------------------------------- DirStore

DirStore::DirStore(std::string root, uint64_t capacity)
    : root_(std::move(root)), capacity_(capacity) {
  fs::create_directories(root_);
}

std::string DirStore::local_path(const std::string& key) const {
  // Keys are pre-validated logical paths; strip the leading slash.
  return root_ + key;
}

Result<void> DirStore::put(const std::string& key, ByteView data) {
  if (capacity_ && used_bytes() + data.size() > capacity_)
    return make_error(Errc::no_space, "store full");
  auto p = local_path(key);
  std::error_code ec;
  fs::create_directories(fs::path(p).parent_path(), ec);
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) return make_error(Errc::io_error, "cannot write " + p);
  out.write(reinterpret_cast<const char*>(data.data()),
            std::streamsize(data.size()));
  if (!out) return make_error(Errc::io_error, "short write to " + p);
  return {};
}

Result<void> DirStore::append(const std::string& key, ByteView data) {
  if (capacity_ && used_bytes() + data.size() > capacity_)
    return make_error(Errc::no_space, "store full");
  auto p = local_path(key);
  std::error_code ec;
  fs::create_directories(fs::path(p).parent_path(), ec);
  std::ofstream out(p, std::ios::binary | std::ios::app);
  if (!out) return make_error(Errc::io_error, "cannot append to " + p);
  out.write(reinterpret_cast<const char*>(data.data()),
            std::streamsize(data.size()));
  if (!out) return make_error(Errc::io_error, "short write to " + p);
  return {};
}

Result<Bytes> DirStore::get(const std::string& key) const {
  auto sz = size_of(key);
  if (!sz) return sz.error();
  return get_range(key, 0, *sz);
}

Result<Bytes> DirStore::get_range(const std::string& key, uint64_t offset,
                                  uint64_t len) const {
  auto p = local_path(key);
  std::ifstream in(p, std::ios::binary);
  if (!in) return make_error(Errc::not_found, key);
  in.seekg(std::streamoff(offset));
  Bytes out(len);
  in.read(reinterpret_cast<char*>(out.data()), std::streamsize(len));
  if (size_t(in.gcount()) != len)
    return make_error(Errc::bad_request, "range beyond end of " + key);
  return out;
}

Result<uint64_t> DirStore::size_of(const std::string& key) const {
  std::error_code ec;
  auto n = fs::file_size(local_path(key), ec);
  if (ec) return make_error(Errc::not_found, key);
  return uint64_t(n);
}

bool DirStore::exists(const std::string& key) const {
  std::error_code ec;
  return fs::is_regular_file(local_path(key), ec);
}

Result<void> DirStore::rename(const std::string& from, const std::string& to) {
  std::error_code ec;
  fs::create_directories(fs::path(local_path(to)).parent_path(), ec);
  fs::rename(local_path(from), local_path(to), ec);
  if (ec) return make_error(Errc::io_error, "rename failed: " + ec.message());
  return {};
}

Result<void> DirStore::remove(const std::string& key) {
  std::error_code ec;
  if (!fs::remove(local_path(key), ec) || ec)
    return make_error(Errc::not_found, key);
  return {};
}

std::vector<std::pair<std::string, uint64_t>> DirStore::list() const {
  std::vector<std::pair<std::string, uint64_t>> out;
  std::error_code ec;
  for (auto it = fs::recursive_directory_iterator(root_, ec);
       it != fs::recursive_directory_iterator(); it.increment(ec)) {
    if (ec) break;
    if (!it->is_regular_file()) continue;
    auto rel = fs::relative(it->path(), root_).generic_string();
    out.emplace_back("/" + rel, it->file_size());
  }
  std::sort(out.begin(), out.end());
  return out;
}

uint64_t DirStore::free_bytes() const {
  std::error_code ec;
  auto info = fs::space(root_, ec);
  uint64_t fs_free = ec ? 0 : info.available;
  if (!capacity_) return fs_free;
  uint64_t used = used_bytes();
  uint64_t cap_free = used > capacity_ ? 0 : capacity_ - used;
  return std::min(fs_free, cap_free);
}

uint64_t DirStore::used_bytes() const {
  uint64_t n = 0;
  for (const auto& [k, sz] : list()) n += sz;
  return n;
}

}  // namespace sector
