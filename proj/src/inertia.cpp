#include "inertia_lab/inertia.hpp"

#include <stdexcept>

namespace inertia_lab {

std::vector<std::uint32_t> GSet::fixed_points(Elem g) const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t x = 0; x < size; ++x)
        if (act(g, x) == x) out.push_back(x);
    return out;
}

std::vector<std::string> GSet::axiom_violations(const FinGroup& G) const {
    std::vector<std::string> out;
    if (left.size() != G.order() * size) {
        out.push_back("action table has the wrong size");
        return out;
    }
    for (std::uint32_t x = 0; x < size; ++x)
        if (act(G.identity(), x) != x) out.push_back("identity moves point " + std::to_string(x));
    for (Elem a = 0; a < G.order(); ++a)
        for (Elem b = 0; b < G.order(); ++b)
            for (std::uint32_t x = 0; x < size; ++x)
                if (act(G.mul(a, b), x) != act(a, act(b, x)))
                    out.push_back("(ab).x != a.(b.x) at a=" + std::to_string(a) + " b=" + std::to_string(b) +
                                  " x=" + std::to_string(x));
    return out;
}

GSet point_gset(const FinGroup& G) { return GSet{1, std::vector<std::uint32_t>(G.order(), 0), "point"}; }

GSet left_regular_gset(const FinGroup& G) {
    GSet X{G.order(), std::vector<std::uint32_t>(G.order() * G.order()), "regular"};
    for (Elem g = 0; g < G.order(); ++g)
        for (Elem x = 0; x < G.order(); ++x) X.left[std::size_t(g) * X.size + x] = G.mul(g, x);
    return X;
}

GSet two_orbit_gset(const FinGroup& G) {
    const std::size_t n = G.order() + 1;
    GSet X{n, std::vector<std::uint32_t>(G.order() * n), "two-orbit"};
    for (Elem g = 0; g < G.order(); ++g) {
        X.left[std::size_t(g) * n] = 0;
        for (Elem x = 0; x < G.order(); ++x) X.left[std::size_t(g) * n + 1 + x] = 1 + G.mul(g, x);
    }
    return X;
}

GSet parse_gset(const FinGroup& G, const std::string& spec) {
    if (spec == "point") return point_gset(G);
    if (spec == "regular") return left_regular_gset(G);
    if (spec == "two-orbit") return two_orbit_gset(G);
    throw std::invalid_argument("unknown G-set '" + spec + "' (expected point, regular or two-orbit)");
}

FiniteGroupoid delooping_groupoid(const FinGroup& G) {
    FiniteGroupoid out;
    out.object_count = 1;
    out.source.assign(G.order(), 0);
    out.target.assign(G.order(), 0);
    out.identity = {G.identity()};
    out.compose = [&G](std::uint32_t a, std::uint32_t b) { return G.mul(a, b); };
    return out;
}

NerveSSet nerve_of_group(const FinGroup& G, int dim_bound) { return NerveSSet(delooping_groupoid(G), dim_bound); }

FiniteGroupoid inertia_groupoid(const FinGroup& G) {
    const std::size_t n = G.order();
    FiniteGroupoid out;
    out.object_count = n;
    for (Elem gamma = 0; gamma < n; ++gamma) {
        out.identity.push_back(std::uint32_t(gamma * n + G.identity()));
        for (Elem g = 0; g < n; ++g) {
            out.source.push_back(gamma);
            out.target.push_back(G.conj(gamma, g));
        }
    }
    out.compose = [&G, n](std::uint32_t a, std::uint32_t b) {
        const Elem gamma = a / n, g1 = a % n, g2 = b % n;
        return std::uint32_t(gamma * n + G.mul(g1, g2));
    };
    return out;
}

Elem inertia_object(const FinGroup& G, const InertiaCell& cell, int j) {
    if (j < 0 || j > cell.degree()) throw std::out_of_range("object index out of range");
    Elem conj = G.identity();
    for (int t = 0; t < j; ++t) conj = G.mul(conj, cell.edges[t]);
    return G.conj(cell.loop, conj);
}

InertiaCell inertia_face(const FinGroup& G, const InertiaCell& cell, int i) {
    const int n = cell.degree();
    if (n == 0 || i < 0 || i > n) throw std::out_of_range("face index out of range");
    InertiaCell out;
    if (i == 0) {
        out.loop = G.conj(cell.loop, cell.edges[0]);
        out.edges.assign(cell.edges.begin() + 1, cell.edges.end());
    } else if (i == n) {
        out.loop = cell.loop;
        out.edges.assign(cell.edges.begin(), cell.edges.end() - 1);
    } else {
        out.loop = cell.loop;
        for (int k = 0; k < n; ++k) {
            if (k == i - 1) {
                out.edges.push_back(G.mul(cell.edges[k], cell.edges[k + 1]));
                ++k;
            } else {
                out.edges.push_back(cell.edges[k]);
            }
        }
    }
    return out;
}

bool is_degenerate(const FinGroup& G, const InertiaCell& cell) {
    for (Elem e : cell.edges)
        if (e == G.identity()) return true;
    return false;
}

InertiaNerve::InertiaNerve(const FinGroup& G, int dim_bound) : G_(&G), nerve_(inertia_groupoid(G), dim_bound) {}

InertiaCell InertiaNerve::cell(CellId id) const {
    InertiaCell out;
    const std::size_t n = G_->order();
    out.loop = nerve_.start_object(id);
    for (std::uint32_t m : nerve_.chain(id)) out.edges.push_back(Elem(m % n));
    return out;
}

Simplex InertiaNerve::find(const InertiaCell& cell) const {
    if (cell.edges.empty()) return nerve_.find_object(cell.loop);
    std::vector<std::uint32_t> chain;
    const std::size_t n = G_->order();
    Elem object = cell.loop;
    for (Elem g : cell.edges) {
        chain.push_back(std::uint32_t(object * n + g));
        object = G_->conj(object, g);
    }
    return nerve_.find(chain);
}

Elem InertiaDecomposition::retract(const FinGroup& G, Elem gamma, Elem k) const {
    const Elem target = G.conj(gamma, k);
    return G.mul(G.mul(G.inv(classes.transporter.at(gamma)), k), classes.transporter.at(target));
}

std::vector<Elem> InertiaDecomposition::retract_cell(const FinGroup& G, const InertiaCell& cell) const {
    std::vector<Elem> out;
    Elem object = cell.loop;
    for (Elem k : cell.edges) {
        out.push_back(retract(G, object, k));
        object = G.conj(object, k);
    }
    return out;
}

InertiaDecomposition inertia_decomposition(const FinGroup& G) {
    InertiaDecomposition out;
    out.classes = conjugacy_classes(G);
    for (std::size_t c = 0; c < out.classes.class_reps.size(); ++c) {
        InertiaSector s;
        s.rep = out.classes.class_reps[c];
        s.class_size = out.classes.members[c].size();
        s.centralizer = out.classes.centralizers[c];
        s.centralizer_abelianization = abelianization(s.centralizer.group);
        out.sectors.push_back(std::move(s));
    }
    return out;
}

DecompositionCheck check_inertia_decomposition(const FinGroup& G) {
    const InertiaDecomposition D = inertia_decomposition(G);
    DecompositionCheck out;
    out.components = D.sectors.size();
    out.morphisms = G.order() * G.order();
    for (const auto& s : D.sectors) out.morphisms_by_sectors += s.class_size * s.class_size * s.centralizer.group.order();

    out.section_retraction_identity = true;
    for (const auto& s : D.sectors)
        for (Elem h : s.centralizer.embedding)
            if (D.retract(G, s.rep, h) != h) out.section_retraction_identity = false;

    // retraction respects composition and lands in the centralizer of the sector rep
    out.retraction_is_functor = true;
    for (Elem gamma = 0; gamma < G.order(); ++gamma) {
        const Elem rep = D.sectors[D.sector_of(gamma)].rep;
        for (Elem a = 0; a < G.order(); ++a) {
            const Elem mid = G.conj(gamma, a);
            const Elem ra = D.retract(G, gamma, a);
            if (G.conj(rep, ra) != rep) out.retraction_is_functor = false;
            for (Elem b = 0; b < G.order(); ++b)
                if (D.retract(G, gamma, G.mul(a, b)) != G.mul(ra, D.retract(G, mid, b)))
                    out.retraction_is_functor = false;
        }
    }

    const InertiaNerve nerve(G, 2);
    // The trivial group has no non-degenerate 1-cells, so its complex stops in degree 0.
    const ChainComplex chains = normalized_chains(nerve.sset());
    if (chains.top_degree() >= 1) out.h1_nerve = homology(chains, 1);
    for (const auto& s : D.sectors) out.h1_expected = direct_sum(out.h1_expected, s.centralizer_abelianization);
    return out;
}

std::vector<Elem> evaluation_map(const FinGroup& G, int k, const InertiaCell& cell) {
    const int n = cell.degree();
    if (k < 0 || k > n) throw std::out_of_range("evaluation index out of range");
    std::vector<Elem> out;
    out.reserve(n + 1);
    for (int t = 0; t < k; ++t) out.push_back(cell.edges[t]);
    out.push_back(inertia_object(G, cell, k));
    for (int t = k; t < n; ++t) out.push_back(cell.edges[t]);
    return out;
}

SkeletalCell rotate_cell(const FinGroup& G, Elem g, const SkeletalCell& cell, const RotationWord& word) {
    if (word.degree() != static_cast<int>(cell.edges.size()))
        throw std::invalid_argument("rotation word degree differs from cell degree");
    SkeletalCell out = cell;
    for (std::size_t i = 0; i < out.edges.size(); ++i) out.edges[i] = G.mul(G.pow(g, word.entries[i]), out.edges[i]);
    return out;
}

SkeletalCell skeletal_face(const FinGroup& G, const GSet& X, const SkeletalCell& cell, int i) {
    const int n = static_cast<int>(cell.edges.size());
    if (n == 0 || i < 0 || i > n) throw std::out_of_range("face index out of range");
    SkeletalCell out;
    if (i == 0) {
        out.point = X.right_act(G, cell.point, cell.edges[0]);
        out.edges.assign(cell.edges.begin() + 1, cell.edges.end());
    } else if (i == n) {
        out.point = cell.point;
        out.edges.assign(cell.edges.begin(), cell.edges.end() - 1);
    } else {
        out.point = cell.point;
        for (int k = 0; k < n; ++k) {
            if (k == i - 1) {
                out.edges.push_back(G.mul(cell.edges[k], cell.edges[k + 1]));
                ++k;
            } else {
                out.edges.push_back(cell.edges[k]);
            }
        }
    }
    return out;
}

SkeletalCell skeletal_degeneracy(const FinGroup& G, const SkeletalCell& cell, int i) {
    const int n = static_cast<int>(cell.edges.size());
    if (i < 0 || i > n) throw std::out_of_range("degeneracy index out of range");
    SkeletalCell out = cell;
    out.edges.insert(out.edges.begin() + i, G.identity());
    return out;
}

RotationWord rotation_face(const RotationWord& word, int i) {
    const int n = word.degree();
    if (n == 0 || i < 0 || i > n) throw std::out_of_range("face index out of range");
    RotationWord out;
    if (i == 0) {
        out.entries.assign(word.entries.begin() + 1, word.entries.end());
    } else if (i == n) {
        out.entries.assign(word.entries.begin(), word.entries.end() - 1);
    } else {
        for (int k = 0; k < n; ++k) {
            if (k == i - 1) {
                out.entries.push_back(word.entries[k] + word.entries[k + 1]);
                ++k;
            } else {
                out.entries.push_back(word.entries[k]);
            }
        }
    }
    return out;
}

RotationWord rotation_degeneracy(const RotationWord& word, int i) {
    if (i < 0 || i > word.degree()) throw std::out_of_range("degeneracy index out of range");
    RotationWord out = word;
    out.entries.insert(out.entries.begin() + i, 0);
    return out;
}

namespace {

template <class F>
void for_each_tuple(std::size_t len, std::span<const Elem> alphabet, std::vector<Elem>& buf, const F& f) {
    buf.assign(len, 0);
    if (len == 0) {
        f(buf);
        return;
    }
    if (alphabet.empty()) return;
    std::vector<std::size_t> idx(len, 0);
    while (true) {
        for (std::size_t i = 0; i < len; ++i) buf[i] = alphabet[idx[i]];
        f(buf);
        std::size_t p = len;
        while (p > 0 && ++idx[p - 1] == alphabet.size()) idx[--p] = 0;
        if (p == 0) return;
    }
}

}  // namespace

std::vector<std::string> rotation_action_violations(const FinGroup& G, const GSet& X, int max_degree, int range) {
    std::vector<std::string> out;
    const ConjClassData cls = conjugacy_classes(G);
    auto describe = [](const char* what, Elem g, int n, int i) {
        return std::string(what) + " fails for sector " + std::to_string(g) + " degree " + std::to_string(n) +
               " index " + std::to_string(i);
    };
    for (std::size_t c = 0; c < cls.class_reps.size(); ++c) {
        const Elem g = cls.class_reps[c];
        const auto& C = cls.centralizers[c].embedding;
        for (std::uint32_t x : X.fixed_points(g)) {
            for (int n = 0; n <= max_degree; ++n) {
                std::vector<Elem> edges;
                for_each_tuple(n, C, edges, [&](const std::vector<Elem>& hs) {
                    const SkeletalCell cell{x, hs};
                    std::vector<std::int64_t> w(n, -range);
                    while (true) {
                        const RotationWord word{w};
                        const SkeletalCell rotated = rotate_cell(G, g, cell, word);
                        for (int i = 0; i <= n && n > 0; ++i)
                            if (skeletal_face(G, X, rotated, i) !=
                                rotate_cell(G, g, skeletal_face(G, X, cell, i), rotation_face(word, i)))
                                out.push_back(describe("face", g, n, i));
                        for (int i = 0; i <= n; ++i)
                            if (skeletal_degeneracy(G, rotated, i) !=
                                rotate_cell(G, g, skeletal_degeneracy(G, cell, i), rotation_degeneracy(word, i)))
                                out.push_back(describe("degeneracy", g, n, i));
                        // action law: rotating by w then by -w is the identity
                        RotationWord back{w};
                        for (auto& v : back.entries) v = -v;
                        if (rotate_cell(G, g, rotated, back) != cell) out.push_back(describe("inverse", g, n, 0));
                        int p = n;
                        while (p > 0 && ++w[p - 1] > range) w[--p] = -range;
                        if (p == 0) break;
                    }
                });
                if (out.size() > 20) return out;
            }
        }
    }
    return out;
}

}  // namespace inertia_lab
