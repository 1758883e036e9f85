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

#include <condition_variable>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <thread>
#include <vector>

namespace sector {

// Logical time in milliseconds since the start of the run.
using Tick = uint64_t;

using TimerId = uint64_t;

/// Single-threaded event loop every node runs on. Simulated mode advances a
/// virtual clock deterministically; real mode follows the wall clock. All
/// protocol and node logic is written against this interface and must not
/// block inside a callback.
class Loop {
 public:
  virtual ~Loop() = default;

  virtual Tick now() const = 0;

  // Schedules fn at absolute tick t (clamped to now). Returns a cancelable id.
  virtual TimerId at(Tick t, std::function<void()> fn) = 0;
  TimerId after(uint64_t dt, std::function<void()> fn) {
    return at(now() + dt, std::move(fn));
  }
  virtual void cancel(TimerId id) = 0;

  // Thread-safe enqueue; runs fn on the loop as soon as possible.
  virtual void post(std::function<void()> fn) = 0;

  // Runs `work` off the loop (real mode) or inline (simulated mode), then
  // `done` back on the loop.
  virtual void run_work(std::function<void()> work,
                        std::function<void()> done) = 0;

  virtual bool simulated() const = 0;
};

/// Deterministic loop: events fire in (tick, insertion-order) order under
/// manual advancement. The whole simulated cluster shares one SimLoop.
class SimLoop : public Loop {
 public:
  Tick now() const override { return now_; }
  TimerId at(Tick t, std::function<void()> fn) override;
  void cancel(TimerId id) override;
  void post(std::function<void()> fn) override;
  void run_work(std::function<void()> work, std::function<void()> done) override;
  bool simulated() const override { return true; }

  // Runs the next due event, advancing the clock to it. False when empty.
  bool step();
  // Advances to tick t, running everything due on the way.
  void run_until(Tick t);
  // Runs until pred() holds or the clock passes `limit`. True if pred held.
  bool run_until_done(const std::function<bool()>& pred, Tick limit);
  // Drains all pending events (clock free-runs). Returns final tick.
  Tick drain(Tick limit = ~Tick(0));

  size_t pending() const { return events_.size(); }

 private:
  struct Key {
    Tick t;
    uint64_t seq;
    bool operator<(const Key& o) const {
      return t != o.t ? t < o.t : seq < o.seq;
    }
  };
  std::map<Key, std::pair<TimerId, std::function<void()>>> events_;
  std::map<TimerId, Key> by_id_;
  Tick now_ = 0;
  uint64_t next_seq_ = 0;
  TimerId next_id_ = 1;
};

/// Wall-clock loop with a worker pool for run_work. Drives daemons and the
/// networked CLI tools.
class RealLoop : public Loop {
 public:
  RealLoop();
  ~RealLoop() override;

  Tick now() const override;
  TimerId at(Tick t, std::function<void()> fn) override;
  void cancel(TimerId id) override;
  void post(std::function<void()> fn) override;
  void run_work(std::function<void()> work, std::function<void()> done) override;
  bool simulated() const override { return false; }

  void run();   // blocks until stop()
  void stop();

 private:
  struct Key {
    Tick t;
    uint64_t seq;
    bool operator<(const Key& o) const {
      return t != o.t ? t < o.t : seq < o.seq;
    }
  };

  mutable std::mutex mu_;
  std::condition_variable cv_;
  std::map<Key, std::pair<TimerId, std::function<void()>>> events_;
  std::map<TimerId, Key> by_id_;
  uint64_t next_seq_ = 0;
  TimerId next_id_ = 1;
  bool stopping_ = false;
  std::chrono::steady_clock::time_point origin_;
  std::vector<std::thread> workers_;
};

/// Cancels outstanding callbacks when the owning object dies; actors wrap
/// every scheduled callback so a killed node goes quiet instantly.
class LifeToken {
 public:
  LifeToken() : alive_(std::make_shared<bool>(true)) {}
  ~LifeToken() { *alive_ = false; }
  LifeToken(const LifeToken&) = delete;
  LifeToken& operator=(const LifeToken&) = delete;

  void revoke() { *alive_ = false; }

  // Wraps fn so it is a no-op once revoked.
  std::function<void()> wrap(std::function<void()> fn) const {
    auto alive = alive_;
    return [alive, fn = std::move(fn)] {
      if (*alive) fn();
    };
  }
  template <typename... A>
  std::function<void(A...)> wrap_args(std::function<void(A...)> fn) const {
    auto alive = alive_;
    return [alive, fn = std::move(fn)](A... a) {
      if (*alive) fn(std::forward<A>(a)...);
    };
  }

  bool alive() const { return *alive_; }

 private:
  std::shared_ptr<bool> alive_;
};

}  // namespace sector
