#include "inertia_lab/config.hpp"

#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace inertia_lab {

void Config::validate() const {
    if (dim_bound < 1) throw std::invalid_argument("dimension bound must be positive");
    if (size_budget == 0) throw std::invalid_argument("size budget must be positive");
    if (threads == 0) throw std::invalid_argument("thread count must be positive");
}

std::size_t budget_from_env(std::size_t fallback) {
    const char* v = std::getenv("INERTIA_LAB_BUDGET");
    if (!v || !*v) return fallback;
    char* end = nullptr;
    const unsigned long long b = std::strtoull(v, &end, 10);
    if (*end != '\0' || b == 0) return fallback;
    return static_cast<std::size_t>(b);
}

BudgetError::BudgetError(const std::string& what, std::size_t requested, std::size_t budget)
    : std::runtime_error(what + ": needs " + std::to_string(requested) + " basis tuples, budget is " +
                         std::to_string(budget)),
      requested_(requested),
      budget_(budget) {}

unsigned chunk_count(std::size_t n, unsigned threads) {
    if (n == 0) return 0;
    return static_cast<unsigned>(std::min<std::size_t>(n, threads == 0 ? 1 : threads));
}

void parallel_for(std::size_t n, unsigned threads,
                  const std::function<void(std::size_t, std::size_t, unsigned)>& body) {
    const unsigned chunks = chunk_count(n, threads);
    if (chunks <= 1) {
        if (n > 0) body(0, n, 0);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(chunks);
    for (unsigned k = 0; k < chunks; ++k) {
        const std::size_t begin = n * k / chunks, end = n * (k + 1) / chunks;
        pool.emplace_back([&, begin, end, k] {
            try {
                body(begin, end, k);
            } catch (...) {
                errors[k] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace inertia_lab
