#pragma once

#include <cstddef>
#include <vector>

namespace mfvs {

// Visits every subset of `items` with at most `max_size` elements, ordered by
// size first and then lexicographically by position. The visitor returns true
// to stop the enumeration; the function reports whether it was stopped.
template <typename T, typename Visitor>
bool for_each_subset(const std::vector<T>& items, std::size_t max_size, Visitor&& visit) {
  const std::size_t n = items.size();
  if (max_size > n) max_size = n;
  std::vector<std::size_t> pick;
  std::vector<T> subset;
  for (std::size_t size = 0; size <= max_size; ++size) {
    pick.resize(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      subset.clear();
      for (std::size_t i : pick) subset.push_back(items[i]);
      if (visit(static_cast<const std::vector<T>&>(subset))) return true;
      // advance to the next combination
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return false;
}

}  // namespace mfvs
