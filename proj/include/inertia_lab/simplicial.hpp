#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace inertia_lab {

using CellId = std::uint32_t;

inline constexpr int kDefaultDimBound = 6;

// Weakly increasing map [domain_dim] -> [codomain_dim].
struct OrdinalMap {
    int domain_dim = 0;
    int codomain_dim = 0;
    std::vector<int> images;

    static OrdinalMap identity(int n);
    // d^i_n : [n-1] -> [n], skips i
    static OrdinalMap coface(int n, int i);
    // s^i_n : [n+1] -> [n], hits i twice
    static OrdinalMap codegeneracy(int n, int i);

    bool valid() const;
    bool is_injective() const;
    bool is_surjective() const;
    friend bool operator==(const OrdinalMap&, const OrdinalMap&) = default;
};

// then ∘ first; requires first.codomain_dim == then.domain_dim
OrdinalMap compose_ordinal(const OrdinalMap& first, const OrdinalMap& then);

struct Shuffle {
    int p = 0;
    int q = 0;
    std::vector<int> mu;
    std::vector<int> nu;
    int sign = 1;
};

// All (p,q)-shuffles, lexicographic in mu.
std::vector<Shuffle> shuffles(int p, int q);

// A possibly degenerate simplex s_{i_1} ... s_{i_k} base with i_1 > ... > i_k.
// The word doubles as the set of collapsed positions of the underlying
// surjection [dim] -> [dim - k].
struct Simplex {
    int dim = 0;
    CellId base = 0;
    std::vector<int> degeneracy_word;

    bool is_degenerate() const { return !degeneracy_word.empty(); }
    int base_dim() const { return dim - static_cast<int>(degeneracy_word.size()); }
    OrdinalMap collapse() const;
    static Simplex from_collapse(CellId base, const OrdinalMap& sigma);
    // Bit j set iff j is in the degeneracy word.
    std::uint32_t word_mask() const;
    static Simplex from_mask(int dim, CellId base, std::uint32_t mask);

    friend bool operator==(const Simplex&, const Simplex&) = default;
    friend auto operator<=>(const Simplex&, const Simplex&) = default;
};

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const;
};

class SSet {
public:
    explicit SSet(int dim_bound = kDefaultDimBound) : dim_bound_(dim_bound), by_dim_(dim_bound + 1) {}

    int dim_bound() const { return dim_bound_; }
    // Faces must reference existing cells; ids are handed out in call order.
    CellId add_cell(int dim, std::vector<Simplex> faces, std::string label = {});

    std::size_t size() const { return dims_.size(); }
    std::span<const CellId> cells(int d) const;
    std::size_t count(int d) const { return cells(d).size(); }
    std::vector<std::size_t> counts() const;
    int dim(CellId c) const { return dims_.at(c); }
    std::size_t index_in_dim(CellId c) const { return index_in_dim_.at(c); }
    Simplex face(CellId c, int i) const;
    std::vector<Simplex> faces(CellId c) const;
    // Face i as (base, word mask); no allocation.
    std::pair<CellId, std::uint32_t> face_mask(CellId c, int i) const;
    const std::string& label(CellId c) const;
    Simplex cell(CellId c) const { return Simplex{dim(c), c, {}}; }

private:
    friend class ProductSSet;
    CellId add_packed(int dim, std::span<const std::pair<CellId, std::uint32_t>> faces);

    int dim_bound_;
    std::vector<std::vector<CellId>> by_dim_;
    std::vector<int> dims_;
    std::vector<std::uint32_t> index_in_dim_;
    std::vector<std::size_t> face_offset_;
    std::vector<std::pair<CellId, std::uint32_t>> face_store_;
    std::unordered_map<CellId, std::string> labels_;
};

Simplex apply_face(const SSet& X, const Simplex& s, int i);
Simplex apply_degeneracy(const Simplex& s, int i);
// theta : [m] -> [s.dim]; returns theta^* s in normal form
Simplex apply_ordinal(const SSet& X, const Simplex& s, const OrdinalMap& theta);
std::vector<CellId> vertices(const SSet& X, const Simplex& s);

struct SimplicialOp {
    enum class Kind { face, degeneracy };
    Kind kind;
    int index;
};

// Word in mathematical order: the last entry acts first, so {d1, s0} means d1 s0 x.
Simplex normalize_simplex(const SSet& X, CellId base, std::span<const SimplicialOp> word);

// Exhaustive check of the simplicial identities on generators and their
// degeneracies up to max_dim; returns human-readable violations.
std::vector<std::string> simplicial_identity_violations(const SSet& X, int max_dim);

SSet standard_simplex(int n, int dim_bound = kDefaultDimBound);
SSet minimal_circle(int dim_bound = kDefaultDimBound);
SSet point(int dim_bound = kDefaultDimBound);

class ProductSSet {
public:
    // Returns the faces of a product simplex as a pair of component simplices.
    using FaceRule = std::function<std::pair<Simplex, Simplex>(int, const Simplex&, const Simplex&)>;

    ProductSSet(const SSet& X, const SSet& Y, int dim_bound = -1, FaceRule rule = {});

    const SSet& sset() const { return sset_; }
    Simplex left(CellId c) const;
    Simplex right(CellId c) const;
    // The product simplex (a, b); a and b need equal dimension.
    Simplex find(const Simplex& a, const Simplex& b) const;

private:
    struct Key {
        CellId a, b;
        std::uint32_t word_a, word_b;
        friend bool operator==(const Key&, const Key&) = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const;
    };

    SSet sset_;
    // (base, collapse mask) of each component
    std::vector<std::pair<CellId, std::uint32_t>> left_;
    std::vector<std::pair<CellId, std::uint32_t>> right_;
    std::unordered_map<Key, CellId, KeyHash> index_;
};

SSet product(const SSet& X, const SSet& Y);

// Non-degenerate n-cells of X x Y as (base_x, mask_x, base_y, mask_y) with disjoint masks,
// in the order ProductSSet assigns ids. Needs only the cell tables, not the faces.
void for_each_product_cell(const SSet& X, const SSet& Y, int n,
                           const std::function<void(CellId, std::uint32_t, CellId, std::uint32_t)>& visit);

// Finite groupoid; morphism composition is diagrammatic: compose(f, g) = "f then g".
struct FiniteGroupoid {
    std::size_t object_count = 0;
    std::vector<std::uint32_t> source;
    std::vector<std::uint32_t> target;
    std::vector<std::uint32_t> identity;
    std::function<std::uint32_t(std::uint32_t, std::uint32_t)> compose;

    std::size_t morphism_count() const { return source.size(); }
    bool is_identity(std::uint32_t m) const { return identity.at(source.at(m)) == m; }
};

class NerveSSet {
public:
    NerveSSet(FiniteGroupoid groupoid, int dim_bound);

    const SSet& sset() const { return sset_; }
    const FiniteGroupoid& groupoid() const { return groupoid_; }
    // Morphism chain of a cell; empty for objects.
    const std::vector<std::uint32_t>& chain(CellId c) const { return chains_.at(c); }
    std::uint32_t start_object(CellId c) const { return start_.at(c); }
    // Normal form of a composable chain that may contain identities.
    Simplex find(std::span<const std::uint32_t> chain) const;
    Simplex find_object(std::uint32_t object) const { return Simplex{0, object_cells_.at(object), {}}; }

private:
    struct VecHash {
        std::size_t operator()(const std::vector<std::uint32_t>& v) const;
    };
    Simplex face_of(const std::vector<std::uint32_t>& chain, std::uint32_t start, int i) const;

    FiniteGroupoid groupoid_;
    SSet sset_;
    std::vector<std::vector<std::uint32_t>> chains_;
    std::vector<std::uint32_t> start_;
    std::vector<CellId> object_cells_;
    std::unordered_map<std::vector<std::uint32_t>, CellId, VecHash> index_;
};

struct SimplicialMap {
    const SSet* source = nullptr;
    const SSet* target = nullptr;
    std::vector<Simplex> assignment;  // indexed by source cell id

    Simplex operator()(const Simplex& s) const;
};

std::vector<std::string> simplicial_map_violations(const SimplicialMap& f);

}  // namespace inertia_lab
