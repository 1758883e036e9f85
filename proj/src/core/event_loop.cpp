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

#include "core/event_loop.hpp"

#include <chrono>

namespace sector {

// ---------------------------------------------------------------- SimLoop

TimerId SimLoop::at(Tick t, std::function<void()> fn) {
  if (t < now_) t = now_;
  Key k{t, next_seq_++};
  TimerId id = next_id_++;
  events_.emplace(k, std::make_pair(id, std::move(fn)));
  by_id_.emplace(id, k);
  return id;
}

void SimLoop::cancel(TimerId id) {
  auto it = by_id_.find(id);
  if (it == by_id_.end()) return;
  events_.erase(it->second);
  by_id_.erase(it);
}

void SimLoop::post(std::function<void()> fn) { at(now_, std::move(fn)); }

void SimLoop::run_work(std::function<void()> work, std::function<void()> done) {
  // Simulated compute cost is modeled by the caller; run inline.
  at(now_, [work = std::move(work), done = std::move(done)] {
    work();
    done();
  });
}

bool SimLoop::step() {
  if (events_.empty()) return false;
  auto it = events_.begin();
  now_ = it->first.t;
  auto fn = std::move(it->second.second);
  by_id_.erase(it->second.first);
  events_.erase(it);
  fn();
  return true;
}

void SimLoop::run_until(Tick t) {
  while (!events_.empty() && events_.begin()->first.t <= t) step();
  if (now_ < t) now_ = t;
}

bool SimLoop::run_until_done(const std::function<bool()>& pred, Tick limit) {
  while (!pred()) {
    if (events_.empty() || events_.begin()->first.t > limit) return pred();
    step();
  }
  return true;
}

Tick SimLoop::drain(Tick limit) {
  while (!events_.empty() && events_.begin()->first.t <= limit) step();
  return now_;
}

// --------------------------------------------------------------- RealLoop

RealLoop::RealLoop() : origin_(std::chrono::steady_clock::now()) {}

RealLoop::~RealLoop() {
  stop();
  for (auto& t : workers_)
    if (t.joinable()) t.join();
}

Tick RealLoop::now() const {
  auto d = std::chrono::steady_clock::now() - origin_;
  return Tick(std::chrono::duration_cast<std::chrono::milliseconds>(d).count());
}

TimerId RealLoop::at(Tick t, std::function<void()> fn) {
  std::lock_guard lk(mu_);
  Key k{t, next_seq_++};
  TimerId id = next_id_++;
  events_.emplace(k, std::make_pair(id, std::move(fn)));
  by_id_.emplace(id, k);
  cv_.notify_all();
  return id;
}

void RealLoop::cancel(TimerId id) {
  std::lock_guard lk(mu_);
  auto it = by_id_.find(id);
  if (it == by_id_.end()) return;
  events_.erase(it->second);
  by_id_.erase(it);
}

void RealLoop::post(std::function<void()> fn) { at(0, std::move(fn)); }

void RealLoop::run_work(std::function<void()> work, std::function<void()> done) {
  workers_.emplace_back(
      [this, work = std::move(work), done = std::move(done)]() mutable {
        work();
        post(std::move(done));
      });
}

void RealLoop::run() {
  std::unique_lock lk(mu_);
  while (!stopping_) {
    if (events_.empty()) {
      cv_.wait(lk);
      continue;
    }
    Tick due = events_.begin()->first.t;
    Tick n = now();
    if (due > n) {
      cv_.wait_for(lk, std::chrono::milliseconds(due - n));
      continue;
    }
    auto it = events_.begin();
    auto fn = std::move(it->second.second);
    by_id_.erase(it->second.first);
    events_.erase(it);
    lk.unlock();
    fn();
    lk.lock();
  }
}

void RealLoop::stop() {
  std::lock_guard lk(mu_);
  stopping_ = true;
  cv_.notify_all();
}

}  // namespace sector
