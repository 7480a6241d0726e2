#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>

namespace pfg {

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded() : std::runtime_error("time budget exhausted") {}
};

using Clock = std::chrono::steady_clock;

/// Per-thread deadline polled by long-running loops (Buchberger, minimalization).
void set_thread_deadline(std::optional<Clock::time_point> deadline);
std::optional<Clock::time_point> thread_deadline();
void poll_deadline();

class DeadlineScope {
 public:
  explicit DeadlineScope(std::optional<Clock::time_point> d) : saved_(thread_deadline()) { set_thread_deadline(d); }
  ~DeadlineScope() { set_thread_deadline(saved_); }
  DeadlineScope(const DeadlineScope&) = delete;
  DeadlineScope& operator=(const DeadlineScope&) = delete;

 private:
  std::optional<Clock::time_point> saved_;
};

}  // namespace pfg
