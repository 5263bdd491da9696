#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

namespace qschub::detail {

// Insert-only memo table.  Values are computed outside the lock, so the
// compute function may itself consult other memo tables (or this one).
// References returned stay valid for the life of the table.
template <class Key, class Value>
class Memo {
public:
    template <class Compute>
    const Value& get(const Key& key, Compute&& compute) {
        {
            std::shared_lock lock(mutex_);
            auto it = table_.find(key);
            if (it != table_.end()) return *it->second;
        }
        auto value = std::make_unique<Value>(compute());
        std::unique_lock lock(mutex_);
        auto [it, inserted] = table_.try_emplace(key, std::move(value));
        return *it->second;
    }

private:
    std::shared_mutex mutex_;
    std::map<Key, std::unique_ptr<Value>> table_;
};

}  // namespace qschub::detail
