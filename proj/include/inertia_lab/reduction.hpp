#pragma once

#include "inertia_lab/chain.hpp"

#include <cstdint>
#include <vector>

namespace inertia_lab {

// Chain complex cut down by elementary reductions along unit incidences (coreductions
// and free-face collapses), leaving a homotopy equivalent complex on the critical cells.
// Fill-in only ever lands on critical cells, so large simplicial chain complexes shrink
// without the blow-up of a general elimination.
class ReducedComplex {
public:
    explicit ReducedComplex(const ChainComplex& C);

    const ChainComplex& complex() const { return reduced_; }
    // Original indices of the critical cells of degree n, in increasing order.
    const std::vector<std::uint32_t>& critical(int n) const { return critical_.at(n); }
    std::size_t steps() const { return steps_.size(); }

    // Pull a cochain on the reduced complex back to the original one (cocycles to cocycles).
    std::vector<Integer> expand_cochain(int n, const std::vector<Integer>& reduced) const;
    // Restrict a cochain on the original complex to the reduced one (cocycles to cocycles).
    std::vector<Integer> restrict_cochain(int n, const std::vector<Integer>& full) const;

private:
    struct Term {
        std::uint32_t cell;  // global id
        Integer coeff;
    };
    struct Step {
        std::uint32_t a, b;  // global ids, deg b = deg a + 1
        Integer unit;        // incidence of a in the boundary of b
        std::vector<Term> boundary;  // boundary of b at the time, a included
        std::vector<Term> cofaces;   // (x, [dx : a]) for the other cofaces of a at the time
    };

    std::vector<std::size_t> offset_;  // global id = offset_[n] + index
    std::vector<Step> steps_;
    std::vector<std::vector<std::uint32_t>> critical_;
    ChainComplex reduced_;

    int degree_of(std::uint32_t global) const;
};

// Homology and cohomology through the reduced complex.
AbGroupPresentation reduced_cohomology(const ChainComplex& C, int n, const Coefficients& A);

}  // namespace inertia_lab
