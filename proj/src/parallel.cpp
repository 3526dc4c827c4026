#include "pearl/parallel.hpp"

#include <cstdlib>
#include <string>

namespace pearl {

namespace {
std::atomic<int> g_override{0};
}

int thread_count() {
  const int forced = g_override.load();
  if (forced > 0) return forced;
  if (const char* env = std::getenv("PEARL_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void set_thread_count(int n) { g_override.store(n < 0 ? 0 : n); }

}  // namespace pearl
