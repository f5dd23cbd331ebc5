#pragma once

#include "inertia_lab/chain.hpp"
#include "inertia_lab/config.hpp"
#include "inertia_lab/fin_group.hpp"

#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace inertia_lab {

// Normalized bar tuples (a_1, ..., a_n) with no identity entry, indexed in mixed radix
// base |G|-1 with a_1 most significant.
class BarIndex {
public:
    explicit BarIndex(const FinGroup& G);

    std::size_t base() const { return base_; }
    // (|G|-1)^n; throws BudgetError past `budget`.
    std::size_t count(int n, std::size_t budget = SIZE_MAX) const;
    // nullopt when the tuple contains the identity
    std::optional<std::uint64_t> find(std::span<const Elem> tuple) const;
    void decode(int n, std::uint64_t index, std::span<Elem> out) const;
    std::vector<Elem> tuple(int n, std::uint64_t index) const;

private:
    std::size_t base_;
    std::vector<Elem> digit_to_elem_;
    std::vector<std::uint32_t> elem_to_digit_;  // UINT32_MAX for the identity
};

struct Cochain {
    int degree = 0;
    Coefficients coeffs;
    CoeffVector values;  // indexed by BarIndex
};

// Zero cochain, or values from f on normalized tuples; f returns numerators over `den`.
Cochain make_cochain(const FinGroup& G, int n, const Coefficients& A,
                     const std::function<Integer(std::span<const Elem>)>& f = {}, const Integer& den = 1);
// Value at an arbitrary tuple as a numerator over c.values.den; zero if the tuple contains the identity.
Integer cochain_value(const BarIndex& index, const Cochain& c, std::span<const Elem> tuple);

// delta_n : C^n -> C^{n+1}; rows are (n+1)-tuples, entry sum over i of (-1)^i with d_i sigma = tau.
IntMatrix bar_coboundary(const FinGroup& G, int n, std::size_t budget = kDefaultSizeBudget, unsigned threads = 1);
// delta_0 .. delta_{degree_bound-1}
CochainComplex bar_cochain_complex(const FinGroup& G, int degree_bound, std::size_t budget = kDefaultSizeBudget,
                                   unsigned threads = 1);

Cochain coboundary(const FinGroup& G, const Cochain& c, std::size_t budget = kDefaultSizeBudget);
bool is_cocycle(const FinGroup& G, const Cochain& c, std::size_t budget = kDefaultSizeBudget);

class CohomologyBasis {
public:
    CohomologyBasis(const FinGroup& G, int n, const Coefficients& A, std::size_t budget = kDefaultSizeBudget,
                    unsigned threads = 1);

    int degree() const { return degree_; }
    const AbGroupPresentation& presentation() const { return model_.presentation(); }
    std::vector<Cochain> generators() const;
    // Throws std::invalid_argument for non-cocycles.
    ClassCoordinates class_of(const Cochain& c) const;
    Cochain representative(const ClassCoordinates& coords) const;
    const CohomologyModel& model() const { return model_; }

private:
    int degree_;
    CohomologyModel model_;
};

// Verifies d K + K d = |G| id on every normalized n-chain (n >= 1), where K prepends every
// non-identity element; this forces the rational homology in degree n to vanish.
// The (n+1)-tuples are touched on the fly, so their count is checked against the budget.
bool rational_acyclicity_certificate(const FinGroup& G, int n, std::size_t budget = kDefaultSizeBudget,
                                     unsigned threads = 1);

struct CohomologyReport {
    AbGroupPresentation group;
    std::size_t rank_prev = 0;
    std::size_t rank_next = 0;
    bool used_certificate = false;
};

// Group structure of H^n(G; A) without generators. With Z coefficients, the rank of delta_n is
// taken from the acyclicity certificate when (n+1)-cochains exceed `direct_limit`.
CohomologyReport cohomology_presentation(const FinGroup& G, int n, const Coefficients& A,
                                         std::size_t budget = kDefaultSizeBudget, unsigned threads = 1,
                                         std::size_t direct_limit = 50'000);

// H^n(Z/m; A) from the periodic complex A -0-> A -m-> A -0-> ...
AbGroupPresentation cyclic_periodic_cohomology(std::size_t m, int n, const Coefficients& A);

}  // namespace inertia_lab
