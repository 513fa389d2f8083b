#pragma once

#include <cstddef>
#include <functional>
#include <mutex>
#include <span>
#include <utility>
#include <vector>

namespace fencetile::detail {

// Lazily grown table of values indexed 0, 1, 2, ... where value i is a
// function of values [0, i). Lookups return copies so the cache never
// leaks references across threads.
template <typename T>
class PrefixCache {
 public:
  using Step = std::function<T(std::span<const T> previous, std::size_t index)>;

  explicit PrefixCache(Step step) : step_(std::move(step)) {}

  T at(std::size_t index) const {
    std::lock_guard lock(mutex_);
    extend(index);
    return values_[index];
  }

  template <typename Fn>
  auto with(std::size_t index, Fn&& fn) const {
    std::lock_guard lock(mutex_);
    extend(index);
    return fn(values_[index]);
  }

 private:
  void extend(std::size_t index) const {
    if (values_.size() <= index) values_.reserve(index + 1);
    while (values_.size() <= index) {
      T next = step_(std::span<const T>(values_), values_.size());
      values_.push_back(std::move(next));
    }
  }

  Step step_;
  mutable std::mutex mutex_;
  mutable std::vector<T> values_;
};

}  // namespace fencetile::detail
