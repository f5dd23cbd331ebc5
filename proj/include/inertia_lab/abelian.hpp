#pragma once

#include "inertia_lab/integer.hpp"

#include <string>
#include <vector>

namespace inertia_lab {

// Z^free_rank + (Q/Z)^divisible_rank + sum Z/torsion[i], torsion[i] | torsion[i+1], each >= 2.
// divisible_rank only shows up for Q/Z coefficients.
struct AbGroupPresentation {
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;
    std::size_t divisible_rank = 0;

    bool is_zero() const { return free_rank == 0 && torsion.empty() && divisible_rank == 0; }
    bool divisibility_chain_holds() const;
    std::string str() const;
    friend bool operator==(const AbGroupPresentation&, const AbGroupPresentation&) = default;
};

// Invariant-factor form of sum Z/orders[i]; zeros become free summands, ones vanish.
AbGroupPresentation from_cyclic_orders(const std::vector<Integer>& orders);

// Adds the summands of b to a and renormalizes.
AbGroupPresentation direct_sum(const AbGroupPresentation& a, const AbGroupPresentation& b);

}  // namespace inertia_lab
