#include "nt/expsum.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace nt {

const RootTable& RootTable::shared(i64 M) {
    static std::mutex mu;
    static std::map<i64, std::unique_ptr<RootTable>> cache;
    if (M < 1 || M > 10000000) throw std::invalid_argument("RootTable: order out of desk-scale range");
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[M];
    if (!slot) slot = std::make_unique<RootTable>(M);
    return *slot;
}

}  // namespace nt
