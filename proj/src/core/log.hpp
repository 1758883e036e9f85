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

#include <iostream>
#include <mutex>
#include <sstream>

namespace sector {

enum class LogLevel { debug = 0, info = 1, warn = 2, error = 3, off = 4 };

LogLevel log_threshold();
void set_log_threshold(LogLevel lv);
std::mutex& log_mutex();

}  // namespace sector

#define SECTOR_LOG(lv, tag)                                           \
  if (int(lv) < int(::sector::log_threshold())) {                     \
  } else                                                              \
    ::sector::LogLine(lv, tag)

namespace sector {

class LogLine {
 public:
  LogLine(LogLevel lv, const char* tag) : lv_(lv) {
    os_ << "[" << name(lv) << "] " << tag << ": ";
  }
  ~LogLine() {
    std::lock_guard lk(log_mutex());
    std::cerr << os_.str() << "\n";
  }
  template <typename T>
  LogLine& operator<<(const T& v) {
    os_ << v;
    return *this;
  }

 private:
  static const char* name(LogLevel lv) {
    switch (lv) {
      case LogLevel::debug: return "dbg";
      case LogLevel::info: return "inf";
      case LogLevel::warn: return "wrn";
      case LogLevel::error: return "err";
      default: return "?";
    }
  }
  LogLevel lv_;
  std::ostringstream os_;
};

}  // namespace sector

#define LOG_DEBUG(tag) SECTOR_LOG(::sector::LogLevel::debug, tag)
#define LOG_INFO(tag) SECTOR_LOG(::sector::LogLevel::info, tag)
#define LOG_WARN(tag) SECTOR_LOG(::sector::LogLevel::warn, tag)
#define LOG_ERROR(tag) SECTOR_LOG(::sector::LogLevel::error, tag)
