#include "pfg/budget.hpp"

namespace pfg {

namespace {
thread_local std::optional<Clock::time_point> deadline_;
}

void set_thread_deadline(std::optional<Clock::time_point> deadline) { deadline_ = deadline; }
std::optional<Clock::time_point> thread_deadline() { return deadline_; }

void poll_deadline() {
  if (deadline_ && Clock::now() >= *deadline_) throw BudgetExceeded();
}

}  // namespace pfg
