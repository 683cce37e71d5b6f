#pragma once

#include <future>
#include <map>
#include <memory>
#include <mutex>

namespace veronese {

/// Keyed memoization with at-most-once computation per key. The first caller
/// of a key computes outside the lock; concurrent callers wait on a shared
/// future. A computation that throws is evicted so a later call may retry
/// (relevant when a resource cap is raised between calls).
template <class Key, class Value>
class OnceCache {
public:
    template <class Fn>
    std::shared_ptr<const Value> get_or_compute(const Key& key, Fn&& compute) {
        std::shared_future<std::shared_ptr<const Value>> fut;
        std::shared_ptr<std::promise<std::shared_ptr<const Value>>> prom;
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto it = slots_.find(key);
            if (it == slots_.end()) {
                prom = std::make_shared<std::promise<std::shared_ptr<const Value>>>();
                fut = prom->get_future().share();
                slots_.emplace(key, fut);
            } else {
                fut = it->second;
            }
        }
        if (prom) {
            try {
                prom->set_value(std::make_shared<const Value>(compute()));
            } catch (...) {
                prom->set_exception(std::current_exception());
                {
                    std::lock_guard<std::mutex> lock(mutex_);
                    slots_.erase(key);
                }
                throw;
            }
        }
        return fut.get();
    }

private:
    std::mutex mutex_;
    std::map<Key, std::shared_future<std::shared_ptr<const Value>>> slots_;
};

} // namespace veronese
