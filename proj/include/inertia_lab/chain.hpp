#pragma once

#include "inertia_lab/abelian.hpp"
#include "inertia_lab/simplicial.hpp"
#include "inertia_lab/smith.hpp"

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace inertia_lab {

class ChainComplex {
public:
    ChainComplex() = default;
    // boundaries[k] is the map from degree k+1 to degree k, shape ranks[k] x ranks[k+1].
    ChainComplex(std::vector<std::size_t> ranks, std::vector<IntMatrix> boundaries);

    int top_degree() const { return static_cast<int>(ranks_.size()) - 1; }
    std::size_t rank(int n) const { return n < 0 || n > top_degree() ? 0 : ranks_[n]; }
    const std::vector<std::size_t>& ranks() const { return ranks_; }
    // d_n : C_n -> C_{n-1}; zero outside 1..top_degree.
    const IntMatrix& boundary(int n) const;
    std::vector<std::string> d_squared_violations() const;

private:
    std::vector<std::size_t> ranks_;
    std::vector<IntMatrix> maps_;  // maps_[n] = d_n for n in 0..top+1
};

class CochainComplex {
public:
    CochainComplex() = default;
    // coboundaries[k] is delta_k : C^k -> C^{k+1}, shape ranks[k+1] x ranks[k].
    CochainComplex(std::vector<std::size_t> ranks, std::vector<IntMatrix> coboundaries);

    int top_degree() const { return static_cast<int>(ranks_.size()) - 1; }
    std::size_t rank(int n) const { return n < 0 || n > top_degree() ? 0 : ranks_[n]; }
    const std::vector<std::size_t>& ranks() const { return ranks_; }
    // delta_n : C^n -> C^{n+1}; delta_{-1} and delta_top are zero maps of the right shape.
    const IntMatrix& delta(int n) const;
    std::vector<std::string> d_squared_violations() const;

private:
    std::vector<std::size_t> ranks_;
    std::vector<IntMatrix> maps_;  // maps_[n+1] = delta_n
};

CochainComplex dual(const ChainComplex& C);

struct Coefficients {
    enum class Kind { integers, modular, rationals_mod_integers };
    Kind kind = Kind::integers;
    Integer modulus;  // only for modular

    static Coefficients Z() { return {}; }
    static Coefficients Zmod(const Integer& m);
    static Coefficients QmodZ() { return {Kind::rationals_mod_integers, Integer(0)}; }
    // "Z", "Zmod:<m>", "QmodZ"
    static Coefficients parse(const std::string& text);
    std::string str() const;
    friend bool operator==(const Coefficients&, const Coefficients&) = default;
};

// A vector of coefficient values. Z: integers. Z/m: integers in [0,m).
// Q/Z: num[i]/den reduced into [0,1) with den minimal.
struct CoeffVector {
    std::vector<Integer> num;
    Integer den = 1;

    std::size_t size() const { return num.size(); }
    mpq_class value(std::size_t i) const;
    bool is_zero() const;
    friend bool operator==(const CoeffVector&, const CoeffVector&) = default;
};

CoeffVector normalize(CoeffVector v, const Coefficients& A);
CoeffVector add(const CoeffVector& a, const CoeffVector& b, const Coefficients& A);
CoeffVector scale(const CoeffVector& a, const Integer& k, const Coefficients& A);
// Applies an integer matrix to the values and reduces.
CoeffVector apply(const IntMatrix& M, const CoeffVector& x, const Coefficients& A);

struct ClassCoordinates {
    std::vector<Integer> torsion;     // modulo the matching invariant factor
    std::vector<Integer> free;        // Z coefficients only
    std::vector<mpq_class> divisible;  // Q/Z coefficients only, in [0,1)

    bool is_zero() const;
    std::string str() const;
    friend bool operator==(const ClassCoordinates&, const ClassCoordinates&) = default;
};

// H^n of a cochain complex from delta_{n-1} (c_n x c_{n-1}) and delta_n (c_{n+1} x c_n),
// with generators and coordinates of classes.
class CohomologyModel {
public:
    CohomologyModel(const IntMatrix& delta_prev, const IntMatrix& delta_next, Coefficients A);

    const Coefficients& coefficients() const { return coeffs_; }
    const AbGroupPresentation& presentation() const { return presentation_; }
    // One cocycle per torsion summand, then one per free summand; none for divisible summands.
    const std::vector<CoeffVector>& generators() const { return generators_; }
    std::size_t cochain_rank() const { return delta_next_.cols(); }

    bool is_cocycle(const CoeffVector& x) const;
    // Throws std::invalid_argument if x is not a cocycle.
    ClassCoordinates coordinates(const CoeffVector& x) const;
    // Cocycle representing the given coordinates (divisible part ignored).
    CoeffVector representative(const ClassCoordinates& c) const;

private:
    struct RawSummand {
        Integer order;       // 0 means free
        CoeffVector generator;
    };

    Coefficients coeffs_;
    IntMatrix delta_next_;
    std::size_t rank_next_ = 0;
    std::vector<Integer> d_;  // diagonal of delta_next
    std::optional<SmithTransform> next_;
    std::size_t K_ = 0;
    std::size_t rank_R_ = 0;
    std::vector<Integer> e_;  // diagonal of R
    std::optional<SmithTransform> R_;
    // normalization of the finite raw summands
    std::vector<Integer> raw_orders_;
    IntMatrix U_fin_;
    std::vector<std::size_t> kept_;  // rows of U_fin_ with invariant > 1
    std::vector<Integer> invariants_;
    std::size_t free_count_ = 0;
    std::size_t divisible_count_ = 0;
    AbGroupPresentation presentation_;
    std::vector<CoeffVector> generators_;

    std::vector<Integer> raw_coordinates(const CoeffVector& x, std::vector<Integer>& free,
                                         std::vector<mpq_class>& divisible) const;
};

// Group structure only; rank_next may come from outside (for example a rational acyclicity certificate)
// when next_diagonal is not needed (Z coefficients).
AbGroupPresentation cohomology_presentation(std::size_t cochain_rank, std::size_t rank_next,
                                            const std::vector<Integer>* next_diagonal,
                                            const std::vector<Integer>& prev_diagonal, const Coefficients& A);

AbGroupPresentation homology(const ChainComplex& C, int n);
AbGroupPresentation cohomology(const ChainComplex& C, int n, const Coefficients& A);
AbGroupPresentation cohomology(const CochainComplex& C, int n, const Coefficients& A);

// Basis = non-degenerate cells in id order per dimension; faces landing on degenerate simplices drop out.
ChainComplex normalized_chains(const SSet& X);

using Chain = std::map<CellId, Integer>;
using TensorChain = std::map<std::pair<CellId, CellId>, Integer>;

void add_to(Chain& c, CellId id, const Integer& v);
void add_to(TensorChain& c, std::pair<CellId, CellId> id, const Integer& v);

// Boundary of a chain of non-degenerate cells of X.
Chain boundary(const SSet& X, const Chain& c);
// Koszul rule: d(x (x) y) = dx (x) y + (-1)^|x| x (x) dy
TensorChain tensor_boundary(const SSet& X, const SSet& Y, const TensorChain& c);

// Shuffle map: sum over (mu, nu) of sign(mu, nu) (s_nu x, s_mu y).
Chain ez_map(const ProductSSet& P, CellId x, int p, CellId y, int q);
Chain ez_map(const ProductSSet& P, const SSet& X, const SSet& Y, const TensorChain& c);
// Front p-face of the left component tensor back q-face of the right one, summed over p + q = n.
TensorChain aw_map(const ProductSSet& P, const SSet& X, const SSet& Y, CellId z);
TensorChain aw_map(const ProductSSet& P, const SSet& X, const SSet& Y, const Chain& c);

}  // namespace inertia_lab
