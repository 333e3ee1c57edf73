#include "tsyslab/shift.hpp"

#include <atomic>

namespace tsyslab {

namespace {
std::atomic<bool> g_theta_zero{false};
}

bool theta_zero_mode() { return g_theta_zero.load(std::memory_order_relaxed); }

void set_theta_zero_mode(bool on) {
  g_theta_zero.store(on, std::memory_order_relaxed);
}

std::string shift_text(const Shift &s) {
  std::string out;
  auto append = [&out](const Rat &x, const char *suffix) {
    if (x == 0)
      return;
    if (x > 0)
      out += "+";
    out += rat_str(x);
    out += suffix;
  };
  append(s.p, "");
  append(s.q, "t");
  return out;
}

} // namespace tsyslab
