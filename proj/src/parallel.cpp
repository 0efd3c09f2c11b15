#include "limbforge/parallel.hpp"

namespace limbforge {

namespace {
std::atomic<std::size_t> g_threads{1};
}

void set_threads(std::size_t n) { g_threads.store(n); }

std::size_t threads() {
  std::size_t n = g_threads.load();
  if (n == 0) n = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  return n;
}

}  // namespace limbforge
