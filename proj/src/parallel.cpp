#include "lindex/parallel.hpp"

#include <atomic>

namespace lindex {

namespace {
std::atomic<unsigned> g_threads{1};
}

void set_thread_count(unsigned count) { g_threads.store(count == 0 ? 1 : count); }

unsigned thread_count() { return g_threads.load(); }

}  // namespace lindex
