#include "inertia_lab/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace inertia_lab {

namespace {

std::vector<std::vector<int>> combinations(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) c[i] = i;
    while (true) {
        out.push_back(c);
        int i = k - 1;
        while (i >= 0 && c[i] == n - k + i) --i;
        if (i < 0) break;
        ++c[i];
        for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
    return out;
}

std::uint32_t word_mask(const std::vector<int>& word) {
    std::uint32_t m = 0;
    for (int w : word) m |= (1u << w);
    return m;
}

std::string describe(const Simplex& s) {
    std::ostringstream os;
    os << "[dim " << s.dim << " base " << s.base << " word";
    for (int w : s.degeneracy_word) os << ' ' << w;
    os << ']';
    return os.str();
}

}  // namespace

OrdinalMap OrdinalMap::identity(int n) {
    OrdinalMap f{n, n, {}};
    for (int i = 0; i <= n; ++i) f.images.push_back(i);
    return f;
}

OrdinalMap OrdinalMap::coface(int n, int i) {
    if (n < 1 || i < 0 || i > n) throw std::out_of_range("coface index out of range");
    OrdinalMap f{n - 1, n, {}};
    for (int k = 0; k < n; ++k) f.images.push_back(k < i ? k : k + 1);
    return f;
}

OrdinalMap OrdinalMap::codegeneracy(int n, int i) {
    if (n < 0 || i < 0 || i > n) throw std::out_of_range("codegeneracy index out of range");
    OrdinalMap f{n + 1, n, {}};
    for (int k = 0; k <= n + 1; ++k) f.images.push_back(k <= i ? k : k - 1);
    return f;
}

bool OrdinalMap::valid() const {
    if (static_cast<int>(images.size()) != domain_dim + 1) return false;
    for (std::size_t k = 0; k < images.size(); ++k) {
        if (images[k] < 0 || images[k] > codomain_dim) return false;
        if (k > 0 && images[k] < images[k - 1]) return false;
    }
    return true;
}

bool OrdinalMap::is_injective() const {
    for (std::size_t k = 1; k < images.size(); ++k)
        if (images[k] == images[k - 1]) return false;
    return true;
}

bool OrdinalMap::is_surjective() const {
    if (images.empty()) return false;
    if (images.front() != 0 || images.back() != codomain_dim) return false;
    for (std::size_t k = 1; k < images.size(); ++k)
        if (images[k] - images[k - 1] > 1) return false;
    return true;
}

OrdinalMap compose_ordinal(const OrdinalMap& first, const OrdinalMap& then) {
    if (first.codomain_dim != then.domain_dim) throw std::invalid_argument("ordinal map dimension mismatch");
    OrdinalMap r{first.domain_dim, then.codomain_dim, {}};
    r.images.reserve(first.images.size());
    for (int v : first.images) r.images.push_back(then.images.at(v));
    return r;
}

std::vector<Shuffle> shuffles(int p, int q) {
    std::vector<Shuffle> out;
    const int n = p + q;
    for (auto& mu : combinations(n, p)) {
        Shuffle s{p, q, mu, {}, 1};
        std::vector<bool> in_mu(n, false);
        for (int m : mu) in_mu[m] = true;
        for (int k = 0; k < n; ++k)
            if (!in_mu[k]) s.nu.push_back(k);
        int inversions = 0;
        for (int a : s.mu)
            for (int b : s.nu)
                if (a > b) ++inversions;
        s.sign = (inversions % 2 == 0) ? 1 : -1;
        out.push_back(std::move(s));
    }
    return out;
}

OrdinalMap Simplex::collapse() const {
    OrdinalMap f{dim, base_dim(), {}};
    f.images.reserve(dim + 1);
    for (int j = 0; j <= dim; ++j) {
        int below = 0;
        for (int w : degeneracy_word)
            if (w < j) ++below;
        f.images.push_back(j - below);
    }
    return f;
}

Simplex Simplex::from_collapse(CellId base, const OrdinalMap& sigma) {
    Simplex s{sigma.domain_dim, base, {}};
    for (int j = sigma.domain_dim - 1; j >= 0; --j)
        if (sigma.images[j] == sigma.images[j + 1]) s.degeneracy_word.push_back(j);
    return s;
}

std::size_t SimplexHash::operator()(const Simplex& s) const {
    std::size_t h = std::hash<std::uint64_t>{}((std::uint64_t(s.base) << 8) | std::uint64_t(s.dim));
    return h ^ (std::hash<std::uint32_t>{}(word_mask(s.degeneracy_word)) * 0x9e3779b97f4a7c15ULL);
}

std::uint32_t Simplex::word_mask() const { return inertia_lab::word_mask(degeneracy_word); }

Simplex Simplex::from_mask(int dim, CellId base, std::uint32_t mask) {
    Simplex s{dim, base, {}};
    for (int j = dim - 1; j >= 0; --j)
        if ((mask >> j) & 1u) s.degeneracy_word.push_back(j);
    return s;
}

CellId SSet::add_cell(int dim, std::vector<Simplex> faces, std::string label) {
    if (dim < 0 || dim > dim_bound_) throw std::out_of_range("cell dimension beyond bound");
    if (dim == 0 ? !faces.empty() : static_cast<int>(faces.size()) != dim + 1)
        throw std::invalid_argument("wrong number of faces");
    std::vector<std::pair<CellId, std::uint32_t>> packed;
    for (const auto& f : faces) {
        if (f.dim != dim - 1) throw std::invalid_argument("face of wrong dimension");
        if (f.base >= dims_.size()) throw std::invalid_argument("face references unknown cell");
        if (dims_[f.base] != f.base_dim()) throw std::invalid_argument("face base dimension mismatch");
        for (std::size_t k = 0; k < f.degeneracy_word.size(); ++k) {
            const int w = f.degeneracy_word[k];
            if (w < 0 || w >= f.dim || (k > 0 && w >= f.degeneracy_word[k - 1]))
                throw std::invalid_argument("face degeneracy word not in normal form");
        }
        packed.emplace_back(f.base, f.word_mask());
    }
    const CellId id = add_packed(dim, packed);
    if (!label.empty()) labels_[id] = std::move(label);
    return id;
}

CellId SSet::add_packed(int dim, std::span<const std::pair<CellId, std::uint32_t>> faces) {
    const CellId id = static_cast<CellId>(dims_.size());
    dims_.push_back(dim);
    index_in_dim_.push_back(static_cast<std::uint32_t>(by_dim_[dim].size()));
    by_dim_[dim].push_back(id);
    face_offset_.push_back(face_store_.size());
    face_store_.insert(face_store_.end(), faces.begin(), faces.end());
    return id;
}

const std::string& SSet::label(CellId c) const {
    static const std::string empty;
    auto it = labels_.find(c);
    return it == labels_.end() ? empty : it->second;
}

std::span<const CellId> SSet::cells(int d) const {
    if (d < 0 || d > dim_bound_) return {};
    return by_dim_[d];
}

std::vector<std::size_t> SSet::counts() const {
    std::vector<std::size_t> c;
    for (int d = 0; d <= dim_bound_; ++d) c.push_back(by_dim_[d].size());
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

std::pair<CellId, std::uint32_t> SSet::face_mask(CellId c, int i) const {
    const int d = dim(c);
    if (i < 0 || i > d || d == 0) throw std::out_of_range("face index out of range");
    return face_store_[face_offset_[c] + i];
}

Simplex SSet::face(CellId c, int i) const {
    auto [base, mask] = face_mask(c, i);
    return Simplex::from_mask(dim(c) - 1, base, mask);
}

std::vector<Simplex> SSet::faces(CellId c) const {
    std::vector<Simplex> out;
    for (int i = 0; i <= dim(c) && dim(c) > 0; ++i) out.push_back(face(c, i));
    return out;
}

Simplex apply_ordinal(const SSet& X, const Simplex& s, const OrdinalMap& theta) {
    if (theta.codomain_dim != s.dim || !theta.valid()) throw std::out_of_range("ordinal map does not fit simplex");
    CellId base = s.base;
    OrdinalMap tau = compose_ordinal(theta, s.collapse());
    while (!tau.is_surjective()) {
        const int p = tau.codomain_dim;
        std::vector<bool> hit(p + 1, false);
        for (int v : tau.images) hit[v] = true;
        int j = p;
        while (hit[j]) --j;
        const Simplex f = X.face(base, j);
        OrdinalMap reduced{tau.domain_dim, p - 1, {}};
        for (int v : tau.images) reduced.images.push_back(v < j ? v : v - 1);
        tau = compose_ordinal(reduced, f.collapse());
        base = f.base;
    }
    return Simplex::from_collapse(base, tau);
}

Simplex apply_face(const SSet& X, const Simplex& s, int i) {
    if (s.dim < 1 || i < 0 || i > s.dim) throw std::out_of_range("face index out of range");
    return apply_ordinal(X, s, OrdinalMap::coface(s.dim, i));
}

Simplex apply_degeneracy(const Simplex& s, int i) {
    if (i < 0 || i > s.dim) throw std::out_of_range("degeneracy index out of range");
    return Simplex::from_collapse(s.base, compose_ordinal(OrdinalMap::codegeneracy(s.dim, i), s.collapse()));
}

std::vector<CellId> vertices(const SSet& X, const Simplex& s) {
    std::vector<CellId> out;
    for (int k = 0; k <= s.dim; ++k) {
        OrdinalMap v{0, s.dim, {k}};
        out.push_back(apply_ordinal(X, s, v).base);
    }
    return out;
}

Simplex normalize_simplex(const SSet& X, CellId base, std::span<const SimplicialOp> word) {
    Simplex s = X.cell(base);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (it->kind == SimplicialOp::Kind::face) s = apply_face(X, s, it->index);
        else s = apply_degeneracy(s, it->index);
    }
    return s;
}

std::vector<std::string> simplicial_identity_violations(const SSet& X, int max_dim) {
    std::vector<std::string> bad;
    auto report = [&](const std::string& what, const Simplex& s) { bad.push_back(what + " on " + describe(s)); };
    for (int n = 0; n <= std::min(max_dim, X.dim_bound()); ++n) {
        for (CellId c : X.cells(n)) {
            std::vector<Simplex> probes{X.cell(c)};
            for (int j = 0; j <= n; ++j) probes.push_back(apply_degeneracy(X.cell(c), j));
            for (const auto& s : probes) {
                const int d = s.dim;
                for (int j = 0; j <= d; ++j)
                    for (int i = 0; i < j && d >= 2; ++i)
                        if (apply_face(X, apply_face(X, s, j), i) != apply_face(X, apply_face(X, s, i), j - 1))
                            report("d_i d_j", s);
                for (int j = 0; j <= d; ++j) {
                    const Simplex sj = apply_degeneracy(s, j);
                    for (int i = 0; i <= d + 1; ++i) {
                        const Simplex lhs = apply_face(X, sj, i);
                        Simplex rhs;
                        if (i < j) rhs = apply_degeneracy(apply_face(X, s, i), j - 1);
                        else if (i == j || i == j + 1) rhs = s;
                        else rhs = apply_degeneracy(apply_face(X, s, i - 1), j);
                        if (lhs != rhs) report("d_i s_j", s);
                    }
                    for (int i = 0; i <= j; ++i)
                        if (apply_degeneracy(sj, i) != apply_degeneracy(apply_degeneracy(s, i), j + 1))
                            report("s_i s_j", s);
                }
            }
        }
    }
    return bad;
}

SSet standard_simplex(int n, int dim_bound) {
    if (n < 0) throw std::invalid_argument("negative simplex dimension");
    SSet X(dim_bound);
    std::unordered_map<std::uint32_t, CellId> by_mask;
    for (int k = 0; k <= std::min(n, dim_bound); ++k) {
        for (auto& verts : combinations(n + 1, k + 1)) {
            std::vector<Simplex> faces;
            if (k > 0) {
                for (int i = 0; i <= k; ++i) {
                    std::uint32_t m = 0;
                    for (int j = 0; j <= k; ++j)
                        if (j != i) m |= 1u << verts[j];
                    faces.push_back(Simplex{k - 1, by_mask.at(m), {}});
                }
            }
            std::string label;
            for (int v : verts) label += std::to_string(v);
            std::uint32_t mask = 0;
            for (int v : verts) mask |= 1u << v;
            by_mask[mask] = X.add_cell(k, std::move(faces), label);
        }
    }
    return X;
}

SSet minimal_circle(int dim_bound) {
    SSet X(dim_bound);
    const CellId star = X.add_cell(0, {}, "*");
    if (dim_bound >= 1) X.add_cell(1, {Simplex{0, star, {}}, Simplex{0, star, {}}}, "l");
    return X;
}

SSet point(int dim_bound) { return standard_simplex(0, dim_bound); }

std::size_t ProductSSet::KeyHash::operator()(const Key& k) const {
    std::uint64_t h = (std::uint64_t(k.a) << 32) ^ k.b;
    h ^= (std::uint64_t(k.word_a) << 40) ^ (std::uint64_t(k.word_b) << 20);
    return std::hash<std::uint64_t>{}(h * 0x9e3779b97f4a7c15ULL);
}

namespace {

using Packed = std::pair<CellId, std::uint32_t>;

std::uint32_t low_bits(int k) { return k >= 32 ? ~0u : ((1u << k) - 1u); }

// Deletes position k of a collapse mask, shifting the higher positions down.
std::uint32_t remove_position(std::uint32_t m, int k) { return (m & low_bits(k)) | ((m >> (k + 1)) << k); }

// Face i of the n-simplex (base, mask) of X, in packed form.
Packed packed_face(const SSet& X, int n, Packed s, int i) {
    const std::uint32_t m = s.second;
    if (i < n && ((m >> i) & 1u)) return {s.first, remove_position(m, i)};
    if (i >= 1 && ((m >> (i - 1)) & 1u)) return {s.first, remove_position(m, i - 1)};
    const int j = i - std::popcount(m & low_bits(i));
    const std::uint32_t reduced = remove_position(m, i);
    const auto [base, w] = X.face_mask(s.first, j);
    std::uint32_t out = 0;
    int v = 0;
    for (int t = 0; t + 1 < n; ++t) {
        if ((reduced >> t) & 1u) {
            out |= 1u << t;
        } else {
            if ((w >> v) & 1u) out |= 1u << t;
            ++v;
        }
    }
    return {base, out};
}

// Removes the positions in `common` from m.
std::uint32_t compress(std::uint32_t m, std::uint32_t common) {
    std::uint32_t out = 0;
    int k = 0;
    for (int t = 0; t < 32 && (m >> t); ++t) {
        if ((common >> t) & 1u) continue;
        if ((m >> t) & 1u) out |= 1u << k;
        ++k;
    }
    return out;
}

}  // namespace

void for_each_product_cell(const SSet& X, const SSet& Y, int n,
                           const std::function<void(CellId, std::uint32_t, CellId, std::uint32_t)>& visit) {
    if (n < 0 || n > 31) throw std::out_of_range("product dimension out of range");
    for (int p = 0; p <= n; ++p) {
        auto xs = X.cells(p);
        if (xs.empty()) continue;
        const auto I_sets = combinations(n, n - p);
        for (CellId x : xs) {
            for (int q = n - p; q <= n; ++q) {
                auto ys = Y.cells(q);
                if (ys.empty()) continue;
                for (CellId y : ys) {
                    for (const auto& I : I_sets) {
                        std::uint32_t mi = 0;
                        for (int i : I) mi |= 1u << i;
                        std::vector<int> free_pos;
                        for (int k = 0; k < n; ++k)
                            if (!((mi >> k) & 1u)) free_pos.push_back(k);
                        for (const auto& Jsub : combinations(static_cast<int>(free_pos.size()), n - q)) {
                            std::uint32_t mj = 0;
                            for (int j : Jsub) mj |= 1u << free_pos[j];
                            visit(x, mi, y, mj);
                        }
                    }
                }
            }
        }
    }
}

ProductSSet::ProductSSet(const SSet& X, const SSet& Y, int dim_bound, FaceRule rule)
    : sset_(std::min(dim_bound < 0 ? X.dim_bound() : dim_bound, std::min(X.dim_bound(), Y.dim_bound()))) {
    const int D = sset_.dim_bound();
    std::vector<Packed> faces;
    for (int n = 0; n <= D; ++n) {
        for_each_product_cell(X, Y, n, [&](CellId x, std::uint32_t mx, CellId y, std::uint32_t my) {
            faces.clear();
            for (int i = 0; i <= n && n > 0; ++i) {
                Packed fa, fb;
                if (rule) {
                    auto [sa, sb] = rule(i, Simplex::from_mask(n, x, mx), Simplex::from_mask(n, y, my));
                    fa = {sa.base, sa.word_mask()};
                    fb = {sb.base, sb.word_mask()};
                } else {
                    fa = packed_face(X, n, {x, mx}, i);
                    fb = packed_face(Y, n, {y, my}, i);
                }
                const std::uint32_t common = fa.second & fb.second;
                auto it = index_.find(Key{fa.first, fb.first, compress(fa.second, common), compress(fb.second, common)});
                if (it == index_.end()) throw std::logic_error("product face not found");
                faces.emplace_back(it->second, common);
            }
            const CellId id = sset_.add_packed(n, faces);
            index_.emplace(Key{x, y, mx, my}, id);
            left_.emplace_back(x, mx);
            right_.emplace_back(y, my);
        });
    }
}

Simplex ProductSSet::left(CellId c) const {
    return Simplex::from_mask(sset_.dim(c), left_.at(c).first, left_[c].second);
}

Simplex ProductSSet::right(CellId c) const {
    return Simplex::from_mask(sset_.dim(c), right_.at(c).first, right_[c].second);
}

Simplex ProductSSet::find(const Simplex& a, const Simplex& b) const {
    if (a.dim != b.dim) throw std::invalid_argument("product components of different dimension");
    const std::uint32_t ma = a.word_mask(), mb = b.word_mask(), common = ma & mb;
    auto it = index_.find(Key{a.base, b.base, compress(ma, common), compress(mb, common)});
    if (it == index_.end()) throw std::out_of_range("product cell beyond dimension bound");
    return Simplex::from_mask(a.dim, it->second, common);
}

SSet product(const SSet& X, const SSet& Y) { return ProductSSet(X, Y).sset(); }

std::size_t NerveSSet::VecHash::operator()(const std::vector<std::uint32_t>& v) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto x : v) h = (h ^ x) * 1099511628211ULL;
    return static_cast<std::size_t>(h);
}

NerveSSet::NerveSSet(FiniteGroupoid groupoid, int dim_bound) : groupoid_(std::move(groupoid)), sset_(dim_bound) {
    const auto& G = groupoid_;
    std::vector<std::vector<std::uint32_t>> outgoing(G.object_count);
    for (std::uint32_t m = 0; m < G.morphism_count(); ++m)
        if (!G.is_identity(m)) outgoing[G.source[m]].push_back(m);
    for (std::uint32_t o = 0; o < G.object_count; ++o) {
        object_cells_.push_back(sset_.add_cell(0, {}));
        chains_.emplace_back();
        start_.push_back(o);
    }
    std::vector<std::vector<std::uint32_t>> layer;
    for (std::uint32_t o = 0; o < G.object_count; ++o)
        for (auto m : outgoing[o]) layer.push_back({m});
    for (int n = 1; n <= dim_bound && !layer.empty(); ++n) {
        for (auto& chain : layer) {
            std::vector<Simplex> faces;
            for (int i = 0; i <= n; ++i) faces.push_back(face_of(chain, G.source[chain[0]], i));
            const CellId id = sset_.add_cell(n, std::move(faces));
            index_[chain] = id;
            chains_.push_back(chain);
            start_.push_back(G.source[chain[0]]);
        }
        if (n == dim_bound) break;
        std::vector<std::vector<std::uint32_t>> next;
        for (auto& chain : layer)
            for (auto m : outgoing[G.target[chain.back()]]) {
                auto longer = chain;
                longer.push_back(m);
                next.push_back(std::move(longer));
            }
        layer = std::move(next);
    }
}

Simplex NerveSSet::face_of(const std::vector<std::uint32_t>& chain, std::uint32_t start, int i) const {
    const int n = static_cast<int>(chain.size());
    const auto& G = groupoid_;
    if (n == 1) return find_object(i == 0 ? G.target[chain[0]] : start);
    std::vector<std::uint32_t> out;
    if (i == 0) {
        out.assign(chain.begin() + 1, chain.end());
    } else if (i == n) {
        out.assign(chain.begin(), chain.end() - 1);
    } else {
        for (int k = 0; k < n; ++k) {
            if (k == i - 1) {
                out.push_back(G.compose(chain[k], chain[k + 1]));
                ++k;
            } else {
                out.push_back(chain[k]);
            }
        }
    }
    return find(out);
}

Simplex NerveSSet::find(std::span<const std::uint32_t> chain) const {
    if (chain.empty()) throw std::invalid_argument("empty chain; use find_object");
    const auto& G = groupoid_;
    for (std::size_t k = 1; k < chain.size(); ++k)
        if (G.target[chain[k - 1]] != G.source[chain[k]]) throw std::invalid_argument("chain not composable");
    std::vector<std::uint32_t> reduced;
    std::vector<int> word;
    for (std::size_t k = 0; k < chain.size(); ++k) {
        if (G.is_identity(chain[k])) word.push_back(static_cast<int>(k));
        else reduced.push_back(chain[k]);
    }
    std::reverse(word.begin(), word.end());
    const int n = static_cast<int>(chain.size());
    if (reduced.empty()) return Simplex{n, object_cells_.at(G.source[chain[0]]), word};
    auto it = index_.find(reduced);
    if (it == index_.end()) throw std::out_of_range("nerve cell beyond dimension bound");
    return Simplex{n, it->second, word};
}

Simplex SimplicialMap::operator()(const Simplex& s) const {
    const Simplex& t = assignment.at(s.base);
    return Simplex::from_collapse(t.base, compose_ordinal(s.collapse(), t.collapse()));
}

std::vector<std::string> simplicial_map_violations(const SimplicialMap& f) {
    std::vector<std::string> bad;
    for (CellId c = 0; c < f.source->size(); ++c) {
        const Simplex x = f.source->cell(c);
        if (f.assignment.at(c).dim != x.dim) {
            bad.push_back("dimension mismatch on " + describe(x));
            continue;
        }
        for (int i = 0; i <= x.dim && x.dim > 0; ++i)
            if (apply_face(*f.target, f(x), i) != f(f.source->face(c, i)))
                bad.push_back("face " + std::to_string(i) + " on " + describe(x));
    }
    return bad;
}

}  // namespace inertia_lab
