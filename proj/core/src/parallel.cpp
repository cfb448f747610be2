#include "ginimds/parallel.hpp"

namespace ginimds {

namespace {

int hardware_default() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : static_cast<int>(n);
}

std::atomic<int>& thread_cap() {
  static std::atomic<int> cap{0};  // 0 = hardware default
  return cap;
}

}  // namespace

int max_threads() {
  const int cap = thread_cap().load(std::memory_order_relaxed);
  return cap > 0 ? cap : hardware_default();
}

void set_max_threads(int n) { thread_cap().store(n > 0 ? n : 0, std::memory_order_relaxed); }

}  // namespace ginimds
