#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <utility>
#include <vector>

namespace mixspec {

/// Contiguous index ranges [begin, end) covering [0, count), at most `jobs` of them.
/// The split depends only on (count, jobs).
inline std::vector<std::pair<std::size_t, std::size_t>> chunk_ranges(std::size_t count, int jobs) {
  const std::size_t parts = std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), count));
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t base = count / parts;
  const std::size_t extra = count % parts;
  std::size_t begin = 0;
  for (std::size_t i = 0; i < parts; ++i) {
    const std::size_t len = base + (i < extra ? 1 : 0);
    out.emplace_back(begin, begin + len);
    begin += len;
  }
  return out;
}

/// Runs fn(chunk_index, begin, end) for every chunk, one thread per chunk when jobs > 1.
/// The first exception thrown by any chunk is rethrown after all threads join.
template <class Fn>
void for_each_chunk(std::size_t count, int jobs, Fn&& fn) {
  const auto ranges = chunk_ranges(count, jobs);
  if (ranges.size() == 1) {
    fn(std::size_t{0}, ranges[0].first, ranges[0].second);
    return;
  }
  std::vector<std::exception_ptr> errors(ranges.size());
  std::vector<std::thread> threads;
  threads.reserve(ranges.size());
  for (std::size_t i = 0; i < ranges.size(); ++i) {
    threads.emplace_back([&, i] {
      try {
        fn(i, ranges[i].first, ranges[i].second);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace mixspec
