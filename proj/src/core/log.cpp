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

#include "core/log.hpp"

namespace sector {

static LogLevel g_threshold = LogLevel::warn;

LogLevel log_threshold() { return g_threshold; }
void set_log_threshold(LogLevel lv) { g_threshold = lv; }

std::mutex& log_mutex() {
  static std::mutex mu;
  return mu;
}

}  // namespace sector
