#pragma once

#include <cstddef>
#include <algorithm>
#include <exception>
#include <optional>
#include <thread>
#include <type_traits>
#include <vector>

namespace lindex {

/// Worker count used by parallel_map; 1 (the default) runs inline.
void set_thread_count(unsigned count);
unsigned thread_count();

/// Evaluates fn(0..count-1) and returns the results in index order. Work is
/// split into contiguous chunks; each result lands in its own slot, so the
/// output (and any reduction the caller runs over it) is identical for every
/// thread count. If several chunks throw, the exception from the lowest
/// chunk is rethrown.
template <class Fn>
auto parallel_map(std::size_t count, Fn&& fn) -> std::vector<std::invoke_result_t<Fn&, std::size_t>> {
  using T = std::invoke_result_t<Fn&, std::size_t>;
  const std::size_t workers = std::min<std::size_t>(thread_count(), count);
  if (workers <= 1) {
    std::vector<T> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(fn(i));
    return out;
  }
  std::vector<std::optional<T>> slots(count);
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = count * w / workers;
      const std::size_t end = count * (w + 1) / workers;
      pool.emplace_back([&, w, begin, end] {
        try {
          for (std::size_t i = begin; i < end; ++i) slots[i].emplace(fn(i));
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<T> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace lindex
