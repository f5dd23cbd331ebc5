#pragma once

#include "inertia_lab/abelian.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace inertia_lab {

using Elem = std::uint32_t;

class FinGroup {
public:
    FinGroup() : FinGroup(1, {0}, 0) {}
    // mul is row-major order*order; validated on construction (closure, identity, inverses).
    FinGroup(std::size_t order, std::vector<Elem> mul, Elem identity, std::vector<std::string> labels = {},
             std::string name = {});

    std::size_t order() const { return order_; }
    Elem identity() const { return identity_; }
    Elem mul(Elem a, Elem b) const { return mul_[std::size_t(a) * order_ + b]; }
    Elem inv(Elem a) const { return inv_[a]; }
    // k^-1 g k
    Elem conj(Elem g, Elem k) const { return mul(mul(inv(k), g), k); }
    Elem pow(Elem a, std::int64_t k) const;
    std::size_t element_order(Elem a) const;
    bool is_abelian() const;
    const std::string& label(Elem a) const { return labels_.at(a); }
    const std::string& name() const { return name_; }
    std::span<const Elem> table() const { return mul_; }
    // Non-identity elements in increasing index order.
    const std::vector<Elem>& nontrivial() const { return nontrivial_; }

    // Associativity: exhaustive up to order 64, otherwise `samples` seeded random triples.
    std::vector<std::string> axiom_violations(std::size_t samples = 100000, std::uint64_t seed = 0) const;

    friend bool operator==(const FinGroup& a, const FinGroup& b) {
        return a.order_ == b.order_ && a.identity_ == b.identity_ && a.mul_ == b.mul_;
    }

private:
    std::size_t order_;
    std::vector<Elem> mul_;
    std::vector<Elem> inv_;
    Elem identity_;
    std::vector<Elem> nontrivial_;
    std::vector<std::string> labels_;
    std::string name_;
};

// A subgroup with its own table; embedding[i] is the parent element of local element i.
// Elements are listed in increasing parent index.
struct Subgroup {
    FinGroup group;
    std::vector<Elem> embedding;

    Elem local(Elem parent_elem) const;
};

Subgroup subgroup_from_elements(const FinGroup& G, std::vector<Elem> elements);
Subgroup generated_subgroup(const FinGroup& G, std::span<const Elem> generators);
Subgroup centralizer(const FinGroup& G, Elem g);

struct ConjClassData {
    std::vector<Elem> class_reps;  // minimum element of each class, increasing
    std::vector<std::uint32_t> class_of;
    std::vector<std::vector<Elem>> members;
    std::vector<Subgroup> centralizers;
    // transporter[x]: some k with k^-1 x k = class rep of x; the rep itself gets the identity.
    std::vector<Elem> transporter;
};

ConjClassData conjugacy_classes(const FinGroup& G);

AbGroupPresentation abelianization(const FinGroup& G);

FinGroup cyclic_group(std::size_t n);
FinGroup symmetric_group(std::size_t n);
// Dihedral group of order 2n.
FinGroup dihedral_group(std::size_t n);
// Order 4m; abstract presentation <a, b | a^2m, b^2 = a^m, b a b^-1 = a^-1>.
FinGroup binary_dihedral_abstract(std::size_t m);
FinGroup direct_product(const FinGroup& A, const FinGroup& B);
// Relabels element i as perm[i].
FinGroup relabel(const FinGroup& G, std::span<const Elem> perm);

// a + b sqrt2 + c sqrt5 + d sqrt10
struct FieldElem {
    mpq_class a, b, c, d;

    FieldElem() : a(0), b(0), c(0), d(0) {}
    FieldElem(mpq_class a_, mpq_class b_ = 0, mpq_class c_ = 0, mpq_class d_ = 0)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

    bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
    std::string str() const;
    friend FieldElem operator+(const FieldElem& x, const FieldElem& y);
    friend FieldElem operator-(const FieldElem& x, const FieldElem& y);
    friend FieldElem operator-(const FieldElem& x);
    friend FieldElem operator*(const FieldElem& x, const FieldElem& y);
    friend bool operator==(const FieldElem& x, const FieldElem& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
    friend bool operator<(const FieldElem& x, const FieldElem& y);
};

struct Quaternion {
    FieldElem w, x, y, z;

    FieldElem norm() const;
    Quaternion conjugate() const;
    std::string str() const;
    friend Quaternion operator*(const Quaternion& p, const Quaternion& q);
    friend bool operator==(const Quaternion& p, const Quaternion& q) {
        return p.w == q.w && p.x == q.x && p.y == q.y && p.z == q.z;
    }
    friend bool operator<(const Quaternion& p, const Quaternion& q);
};

// Closes unit quaternions under multiplication; identity gets index 0.
// Throws if the closure exceeds max_order.
FinGroup quaternion_group_closure(std::span<const Quaternion> generators, std::size_t max_order = 1000,
                                  std::string name = {});

enum class AdeFamily { A, D, E6, E7, E8 };

// A_n -> Z/(n+1), D_{n+4} -> 2D_{n+2} (order 4(n+2)), E6/E7/E8 -> 2T/2O/2I.
// `parameter` is n for A and D and ignored for E.
FinGroup ade_group(AdeFamily family, std::size_t parameter = 0);

// Element of Lambda_g = (C_g x Q)/<(g^-1, 1)> with r in [0,1); h is a parent index in C_g.
struct HuanElement {
    Elem h = 0;
    mpq_class r = 0;
    friend bool operator==(const HuanElement&, const HuanElement&) = default;
};

class HuanGroup {
public:
    HuanGroup(const FinGroup& G, Elem g);

    Elem loop() const { return g_; }
    const FinGroup& group() const { return *G_; }
    bool contains(const HuanElement& a) const;
    // (h, r) with arbitrary rational r, reduced to r in [0,1)
    HuanElement normalize(Elem h, const mpq_class& r) const;
    HuanElement identity() const { return {G_->identity(), 0}; }
    HuanElement mul(const HuanElement& a, const HuanElement& b) const;
    HuanElement inv(const HuanElement& a) const;

private:
    const FinGroup* G_;
    Elem g_;
};

mpz_class floor_rational(const mpq_class& r);

}  // namespace inertia_lab
