#include "inertia_lab/abelian.hpp"

#include <algorithm>
#include <map>

namespace inertia_lab {

namespace {

// Prime factorization by trial division on an mpz; the orders seen here are small.
std::map<mpz_class, int> factor(mpz_class n) {
    std::map<mpz_class, int> out;
    for (mpz_class p = 2; p * p <= n; ++p) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    if (n > 1) ++out[n];
    return out;
}

}  // namespace

bool AbGroupPresentation::divisibility_chain_holds() const {
    for (std::size_t i = 0; i < torsion.size(); ++i) {
        if (torsion[i] < Integer(2)) return false;
        if (i + 1 < torsion.size() && !divides(torsion[i], torsion[i + 1])) return false;
    }
    return true;
}

std::string AbGroupPresentation::str() const {
    std::vector<std::string> parts;
    if (free_rank == 1) parts.push_back("Z");
    else if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
    for (const auto& t : torsion) parts.push_back("Z/" + t.str());
    if (divisible_rank == 1) parts.push_back("Q/Z");
    else if (divisible_rank > 1) parts.push_back("(Q/Z)^" + std::to_string(divisible_rank));
    if (parts.empty()) return "0";
    std::string s = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) s += " + " + parts[i];
    return s;
}

AbGroupPresentation from_cyclic_orders(const std::vector<Integer>& orders) {
    AbGroupPresentation out;
    // prime -> exponents of the primary parts
    std::map<mpz_class, std::vector<int>> primary;
    for (const auto& o : orders) {
        if (o.is_zero()) {
            ++out.free_rank;
            continue;
        }
        for (auto& [p, e] : factor(o.abs().to_mpz())) primary[p].push_back(e);
    }
    std::size_t count = 0;
    for (auto& [p, es] : primary) {
        std::sort(es.rbegin(), es.rend());
        count = std::max(count, es.size());
    }
    std::vector<mpz_class> inv(count, 1);
    for (auto& [p, es] : primary) {
        for (std::size_t i = 0; i < es.size(); ++i) {
            mpz_class pe;
            mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(es[i]));
            inv[count - 1 - i] *= pe;
        }
    }
    for (auto& v : inv)
        if (v > 1) out.torsion.emplace_back(v);
    return out;
}

AbGroupPresentation direct_sum(const AbGroupPresentation& a, const AbGroupPresentation& b) {
    std::vector<Integer> orders = a.torsion;
    orders.insert(orders.end(), b.torsion.begin(), b.torsion.end());
    AbGroupPresentation out = from_cyclic_orders(orders);
    out.free_rank = a.free_rank + b.free_rank;
    out.divisible_rank = a.divisible_rank + b.divisible_rank;
    return out;
}

}  // namespace inertia_lab
