#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace inertia_lab {

inline constexpr std::size_t kDefaultSizeBudget = 5'000'000;

struct Config {
    enum class Format { table, json };

    int dim_bound = 6;
    std::size_t size_budget = kDefaultSizeBudget;
    unsigned threads = 1;
    Format format = Format::table;
    std::uint64_t seed = 0;

    void validate() const;
};

// INERTIA_LAB_BUDGET if set and valid, else fallback.
std::size_t budget_from_env(std::size_t fallback = kDefaultSizeBudget);

class BudgetError : public std::runtime_error {
public:
    BudgetError(const std::string& what, std::size_t requested, std::size_t budget);
    std::size_t requested() const { return requested_; }
    std::size_t budget() const { return budget_; }

private:
    std::size_t requested_, budget_;
};

// Splits [0, n) into at most `threads` contiguous chunks, in order; body(begin, end, chunk).
// Results are deterministic as long as each chunk writes only to its own slot.
void parallel_for(std::size_t n, unsigned threads,
                  const std::function<void(std::size_t, std::size_t, unsigned)>& body);

// Number of chunks parallel_for will use.
unsigned chunk_count(std::size_t n, unsigned threads);

}  // namespace inertia_lab
