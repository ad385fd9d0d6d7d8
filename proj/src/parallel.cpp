#include "qfib/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace qfib {

namespace {
std::atomic<int> g_workers{1};
}

int max_workers() { return g_workers.load(std::memory_order_relaxed); }

void set_max_workers(int n) { g_workers.store(n < 1 ? 1 : n, std::memory_order_relaxed); }

int workers_from_env() {
    const char* v = std::getenv("QFIB_WORKERS");
    if (v == nullptr) return 1;
    try {
        int n = std::stoi(std::string(v));
        return n < 1 ? 1 : n;
    } catch (...) {
        return 1;
    }
}

} // namespace qfib
