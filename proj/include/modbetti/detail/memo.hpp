#pragma once

#include <map>
#include <mutex>
#include <optional>

namespace modbetti::detail {

// Mutex-guarded memo table. The producer runs outside the lock; two threads
// racing on the same key compute the same exact value and the first insert wins.
template <class Key, class Value>
class Memo {
 public:
  template <class Producer>
  Value get(const Key& key, Producer&& produce) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    Value v = produce();
    std::lock_guard lock(mutex_);
    return table_.emplace(key, std::move(v)).first->second;
  }

  std::size_t size() const {
    std::lock_guard lock(mutex_);
    return table_.size();
  }

  void clear() {
    std::lock_guard lock(mutex_);
    table_.clear();
  }

 private:
  mutable std::mutex mutex_;
  std::map<Key, Value> table_;
};

}  // namespace modbetti::detail
