#pragma once

#include <vector>

namespace lynperm {

/// Calls fn(chosen, rest) for every k-element subset of items, in
/// combination order; rest holds the complement in original order.
template <typename T, typename Fn>
void for_each_choice(const std::vector<T>& items, int k, Fn&& fn) {
  const int n = static_cast<int>(items.size());
  if (k < 0 || k > n) return;
  std::vector<int> idx(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
  while (true) {
    std::vector<T> chosen;
    std::vector<T> rest;
    chosen.reserve(static_cast<size_t>(k));
    rest.reserve(static_cast<size_t>(n - k));
    int next = 0;
    for (int i = 0; i < n; ++i) {
      if (next < k && idx[static_cast<size_t>(next)] == i) {
        chosen.push_back(items[static_cast<size_t>(i)]);
        ++next;
      } else {
        rest.push_back(items[static_cast<size_t>(i)]);
      }
    }
    fn(chosen, rest);
    if (k == 0) break;
    int t = k - 1;
    while (t >= 0 && idx[static_cast<size_t>(t)] == n - (k - t)) --t;
    if (t < 0) break;
    ++idx[static_cast<size_t>(t)];
    for (int s = t + 1; s < k; ++s) {
      idx[static_cast<size_t>(s)] = idx[static_cast<size_t>(s - 1)] + 1;
    }
  }
}

}  // namespace lynperm
