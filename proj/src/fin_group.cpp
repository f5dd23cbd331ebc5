#include "inertia_lab/fin_group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace inertia_lab {

FinGroup::FinGroup(std::size_t order, std::vector<Elem> mul, Elem identity, std::vector<std::string> labels,
                   std::string name)
    : order_(order), mul_(std::move(mul)), identity_(identity), labels_(std::move(labels)), name_(std::move(name)) {
    if (order_ == 0) throw std::invalid_argument("group of order zero");
    if (mul_.size() != order_ * order_) throw std::invalid_argument("multiplication table has wrong size");
    if (identity_ >= order_) throw std::invalid_argument("identity out of range");
    for (Elem v : mul_)
        if (v >= order_) throw std::invalid_argument("multiplication table entry out of range");
    for (Elem a = 0; a < order_; ++a)
        if (this->mul(identity_, a) != a || this->mul(a, identity_) != a)
            throw std::invalid_argument("identity is not two-sided");
    inv_.assign(order_, order_);
    for (Elem a = 0; a < order_; ++a) {
        std::vector<bool> seen(order_, false);
        for (Elem b = 0; b < order_; ++b) {
            Elem p = this->mul(a, b);
            if (seen[p]) throw std::invalid_argument("multiplication table is not a Latin square");
            seen[p] = true;
            if (p == identity_) inv_[a] = b;
        }
    }
    for (Elem a = 0; a < order_; ++a)
        if (this->mul(inv_[a], a) != identity_) throw std::invalid_argument("left and right inverses differ");
    for (Elem a = 0; a < order_; ++a)
        if (a != identity_) nontrivial_.push_back(a);
    if (labels_.empty())
        for (Elem a = 0; a < order_; ++a) labels_.push_back(std::to_string(a));
    if (labels_.size() != order_) throw std::invalid_argument("label count differs from order");
}

Elem FinGroup::pow(Elem a, std::int64_t k) const {
    if (k < 0) {
        a = inv(a);
        k = -k;
    }
    k %= static_cast<std::int64_t>(element_order(a));
    Elem r = identity_;
    for (std::int64_t i = 0; i < k; ++i) r = mul(r, a);
    return r;
}

std::size_t FinGroup::element_order(Elem a) const {
    std::size_t k = 1;
    for (Elem x = a; x != identity_; x = mul(x, a)) ++k;
    return k;
}

bool FinGroup::is_abelian() const {
    for (Elem a = 0; a < order_; ++a)
        for (Elem b = a + 1; b < order_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

std::vector<std::string> FinGroup::axiom_violations(std::size_t samples, std::uint64_t seed) const {
    std::vector<std::string> bad;
    auto check = [&](Elem a, Elem b, Elem c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            bad.push_back("associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                          std::to_string(c) + ")");
    };
    if (order_ <= 64) {
        for (Elem a = 0; a < order_; ++a)
            for (Elem b = 0; b < order_; ++b)
                for (Elem c = 0; c < order_; ++c) check(a, b, c);
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(order_ - 1));
        for (std::size_t s = 0; s < samples; ++s) check(pick(rng), pick(rng), pick(rng));
    }
    return bad;
}

Elem Subgroup::local(Elem parent_elem) const {
    auto it = std::lower_bound(embedding.begin(), embedding.end(), parent_elem);
    if (it == embedding.end() || *it != parent_elem) throw std::out_of_range("element not in subgroup");
    return static_cast<Elem>(it - embedding.begin());
}

Subgroup subgroup_from_elements(const FinGroup& G, std::vector<Elem> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    std::vector<std::int64_t> pos(G.order(), -1);
    for (std::size_t i = 0; i < elements.size(); ++i) pos[elements[i]] = static_cast<std::int64_t>(i);
    const std::size_t n = elements.size();
    std::vector<Elem> mul(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const std::int64_t p = pos[G.mul(elements[i], elements[j])];
            if (p < 0) throw std::invalid_argument("element set is not closed under multiplication");
            mul[i * n + j] = static_cast<Elem>(p);
        }
    if (pos[G.identity()] < 0) throw std::invalid_argument("element set misses the identity");
    std::vector<std::string> labels;
    for (Elem e : elements) labels.push_back(G.label(e));
    FinGroup H(n, std::move(mul), static_cast<Elem>(pos[G.identity()]), std::move(labels));
    return Subgroup{std::move(H), std::move(elements)};
}

Subgroup generated_subgroup(const FinGroup& G, std::span<const Elem> generators) {
    std::vector<bool> in(G.order(), false);
    std::vector<Elem> elems{G.identity()};
    in[G.identity()] = true;
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (Elem s : generators) {
            const Elem p = G.mul(elems[i], s);
            if (!in[p]) {
                in[p] = true;
                elems.push_back(p);
            }
        }
    return subgroup_from_elements(G, std::move(elems));
}

Subgroup centralizer(const FinGroup& G, Elem g) {
    std::vector<Elem> elems;
    for (Elem k = 0; k < G.order(); ++k)
        if (G.mul(g, k) == G.mul(k, g)) elems.push_back(k);
    return subgroup_from_elements(G, std::move(elems));
}

ConjClassData conjugacy_classes(const FinGroup& G) {
    ConjClassData d;
    const std::uint32_t unset = UINT32_MAX;
    d.class_of.assign(G.order(), unset);
    d.transporter.assign(G.order(), G.identity());
    for (Elem x = 0; x < G.order(); ++x) {
        if (d.class_of[x] != unset) continue;
        const auto cls = static_cast<std::uint32_t>(d.class_reps.size());
        d.class_reps.push_back(x);
        std::vector<Elem> members{x};
        d.class_of[x] = cls;
        for (Elem k = 0; k < G.order(); ++k) {
            const Elem y = G.conj(x, k);
            if (d.class_of[y] != unset) continue;
            d.class_of[y] = cls;
            d.transporter[y] = G.inv(k);
            members.push_back(y);
        }
        std::sort(members.begin(), members.end());
        d.members.push_back(std::move(members));
        d.centralizers.push_back(centralizer(G, x));
    }
    return d;
}

AbGroupPresentation abelianization(const FinGroup& G) {
    std::vector<Elem> commutators;
    for (Elem a = 0; a < G.order(); ++a)
        for (Elem b = 0; b < G.order(); ++b)
            commutators.push_back(G.mul(G.mul(G.inv(a), G.inv(b)), G.mul(a, b)));
    std::sort(commutators.begin(), commutators.end());
    commutators.erase(std::unique(commutators.begin(), commutators.end()), commutators.end());
    const Subgroup C = generated_subgroup(G, commutators);
    std::vector<bool> in_c(G.order(), false);
    for (Elem e : C.embedding) in_c[e] = true;

    // coset representatives = minimal element of each coset
    std::vector<Elem> coset_rep(G.order(), G.order());
    std::vector<Elem> reps;
    for (Elem x = 0; x < G.order(); ++x) {
        if (coset_rep[x] != G.order()) continue;
        reps.push_back(x);
        for (Elem c : C.embedding) coset_rep[G.mul(x, c)] = x;
    }
    const std::size_t quotient_order = reps.size();
    std::vector<std::size_t> ord;
    for (Elem x : reps) {
        std::size_t k = 1;
        for (Elem p = x; !in_c[p]; p = G.mul(p, x)) ++k;
        ord.push_back(k);
    }

    std::vector<Integer> cyclic;
    std::size_t n = quotient_order;
    for (std::size_t p = 2; p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        // s[j] = log_p #{x : x^(p^j) = 1}
        std::vector<std::size_t> s{0};
        for (std::size_t pj = p;; pj *= p) {
            std::size_t count = 0;
            for (std::size_t o : ord)
                if (pj % o == 0) ++count;
            std::size_t log = 0;
            for (std::size_t c = count; c > 1; c /= p) ++log;
            if (log == s.back()) break;
            s.push_back(log);
        }
        // at_least[j] = number of cyclic p-factors of exponent >= j
        for (std::size_t j = 1; j < s.size(); ++j) {
            const std::size_t at_least = s[j] - s[j - 1];
            const std::size_t at_least_next = j + 1 < s.size() ? s[j + 1] - s[j] : 0;
            std::size_t pj = 1;
            for (std::size_t t = 0; t < j; ++t) pj *= p;
            for (std::size_t t = 0; t < at_least - at_least_next; ++t) cyclic.emplace_back(static_cast<long long>(pj));
        }
    }
    return from_cyclic_orders(cyclic);
}

FinGroup cyclic_group(std::size_t n) {
    if (n == 0) throw std::invalid_argument("cyclic group of order zero");
    std::vector<Elem> mul(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) mul[a * n + b] = static_cast<Elem>((a + b) % n);
    return FinGroup(n, std::move(mul), 0, {}, "Z/" + std::to_string(n));
}

FinGroup symmetric_group(std::size_t n) {
    if (n == 0 || n > 6) throw std::invalid_argument("symmetric group degree must be in 1..6");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::map<std::vector<int>, Elem> index;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < perms.size(); ++i) {
        index[perms[i]] = static_cast<Elem>(i);
        std::string s;
        for (int v : perms[i]) s += std::to_string(v);
        labels.push_back(s);
    }
    const std::size_t N = perms.size();
    std::vector<Elem> mul(N * N);
    std::vector<int> r(n);
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b) {
            for (std::size_t i = 0; i < n; ++i) r[i] = perms[a][perms[b][i]];
            mul[a * N + b] = index.at(r);
        }
    return FinGroup(N, std::move(mul), 0, std::move(labels), "S" + std::to_string(n));
}

FinGroup dihedral_group(std::size_t n) {
    if (n == 0) throw std::invalid_argument("dihedral group needs n >= 1");
    const std::size_t N = 2 * n;
    std::vector<Elem> mul(N * N);
    for (std::size_t x = 0; x < N; ++x)
        for (std::size_t y = 0; y < N; ++y) {
            const std::size_t k = x % n, e = x / n, l = y % n, d = y / n;
            const std::size_t r = (e ? k + n - l : k + l) % n;
            mul[x * N + y] = static_cast<Elem>(r + n * (e ^ d));
        }
    return FinGroup(N, std::move(mul), 0, {}, "D" + std::to_string(N));
}

FinGroup binary_dihedral_abstract(std::size_t m) {
    if (m < 1) throw std::invalid_argument("binary dihedral group needs m >= 1");
    const std::size_t n = 2 * m, N = 4 * m;
    std::vector<Elem> mul(N * N);
    for (std::size_t x = 0; x < N; ++x)
        for (std::size_t y = 0; y < N; ++y) {
            const std::size_t k = x % n, e = x / n, l = y % n, d = y / n;
            std::size_t r = (e ? k + n - l : k + l) % n;
            if (e && d) r = (r + m) % n;
            mul[x * N + y] = static_cast<Elem>(r + n * (e ^ d));
        }
    return FinGroup(N, std::move(mul), 0, {}, "2D" + std::to_string(m));
}

FinGroup direct_product(const FinGroup& A, const FinGroup& B) {
    const std::size_t a = A.order(), b = B.order(), N = a * b;
    std::vector<Elem> mul(N * N);
    std::vector<std::string> labels;
    for (std::size_t x = 0; x < N; ++x) {
        labels.push_back("(" + A.label(Elem(x / b)) + "," + B.label(Elem(x % b)) + ")");
        for (std::size_t y = 0; y < N; ++y)
            mul[x * N + y] = static_cast<Elem>(A.mul(Elem(x / b), Elem(y / b)) * b + B.mul(Elem(x % b), Elem(y % b)));
    }
    return FinGroup(N, std::move(mul), static_cast<Elem>(A.identity() * b + B.identity()), std::move(labels),
                    A.name() + "x" + B.name());
}

FinGroup relabel(const FinGroup& G, std::span<const Elem> perm) {
    const std::size_t n = G.order();
    if (perm.size() != n) throw std::invalid_argument("relabeling has wrong length");
    std::vector<bool> seen(n, false);
    for (Elem p : perm) {
        if (p >= n || seen[p]) throw std::invalid_argument("relabeling is not a permutation");
        seen[p] = true;
    }
    std::vector<Elem> mul(n * n);
    std::vector<std::string> labels(n);
    for (Elem a = 0; a < n; ++a) {
        labels[perm[a]] = G.label(a);
        for (Elem b = 0; b < n; ++b) mul[std::size_t(perm[a]) * n + perm[b]] = perm[G.mul(a, b)];
    }
    return FinGroup(n, std::move(mul), perm[G.identity()], std::move(labels), G.name());
}

FieldElem operator+(const FieldElem& x, const FieldElem& y) {
    return FieldElem(x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d);
}

FieldElem operator-(const FieldElem& x, const FieldElem& y) {
    return FieldElem(x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d);
}

FieldElem operator-(const FieldElem& x) { return FieldElem(-x.a, -x.b, -x.c, -x.d); }

FieldElem operator*(const FieldElem& x, const FieldElem& y) {
    return FieldElem(x.a * y.a + 2 * x.b * y.b + 5 * x.c * y.c + 10 * x.d * y.d,
                     x.a * y.b + x.b * y.a + 5 * (x.c * y.d + x.d * y.c),
                     x.a * y.c + x.c * y.a + 2 * (x.b * y.d + x.d * y.b),
                     x.a * y.d + x.d * y.a + x.b * y.c + x.c * y.b);
}

bool operator<(const FieldElem& x, const FieldElem& y) {
    if (x.a != y.a) return x.a < y.a;
    if (x.b != y.b) return x.b < y.b;
    if (x.c != y.c) return x.c < y.c;
    return x.d < y.d;
}

std::string FieldElem::str() const {
    std::ostringstream os;
    bool first = true;
    auto term = [&](const mpq_class& v, const char* unit) {
        if (v == 0) return;
        if (!first && v > 0) os << '+';
        os << v.get_str() << unit;
        first = false;
    };
    term(a, "");
    term(b, "r2");
    term(c, "r5");
    term(d, "r10");
    if (first) os << '0';
    return os.str();
}

FieldElem Quaternion::norm() const { return w * w + x * x + y * y + z * z; }

Quaternion Quaternion::conjugate() const { return {w, -x, -y, -z}; }

Quaternion operator*(const Quaternion& p, const Quaternion& q) {
    return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
            p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
            p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
            p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}

bool operator<(const Quaternion& p, const Quaternion& q) {
    if (!(p.w == q.w)) return p.w < q.w;
    if (!(p.x == q.x)) return p.x < q.x;
    if (!(p.y == q.y)) return p.y < q.y;
    return p.z < q.z;
}

std::string Quaternion::str() const {
    return "(" + w.str() + "," + x.str() + "," + y.str() + "," + z.str() + ")";
}

FinGroup quaternion_group_closure(std::span<const Quaternion> generators, std::size_t max_order, std::string name) {
    for (const auto& q : generators)
        if (!(q.norm() == FieldElem(1))) throw std::invalid_argument("generator is not a unit quaternion");
    const Quaternion one{FieldElem(1), {}, {}, {}};
    std::vector<Quaternion> elems{one};
    std::vector<std::size_t> parent{0}, via{0};
    std::map<Quaternion, Elem> index{{one, 0}};
    // right[t][x] = x * generators[t]
    std::vector<std::vector<Elem>> right(generators.size());
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (std::size_t t = 0; t < generators.size(); ++t) {
            Quaternion p = elems[i] * generators[t];
            auto it = index.find(p);
            Elem id;
            if (it == index.end()) {
                if (elems.size() >= max_order) throw std::runtime_error("quaternion closure exceeds size cap");
                id = static_cast<Elem>(elems.size());
                index.emplace(p, id);
                elems.push_back(std::move(p));
                parent.push_back(i);
                via.push_back(t);
            } else {
                id = it->second;
            }
            right[t].push_back(id);
        }
    }
    const std::size_t N = elems.size();
    std::vector<Elem> mul(N * N);
    for (std::size_t a = 0; a < N; ++a) {
        mul[a * N] = static_cast<Elem>(a);
        for (std::size_t b = 1; b < N; ++b) mul[a * N + b] = right[via[b]][mul[a * N + parent[b]]];
    }
    std::vector<std::string> labels;
    for (const auto& q : elems) labels.push_back(q.str());
    return FinGroup(N, std::move(mul), 0, std::move(labels), std::move(name));
}

namespace {

const mpq_class kHalf(1, 2);

FieldElem sqrt2_half() { return FieldElem(0, kHalf); }
FieldElem phi() { return FieldElem(kHalf, 0, kHalf); }
FieldElem phi_inv() { return FieldElem(-kHalf, 0, kHalf); }

Quaternion quat(FieldElem w, FieldElem x, FieldElem y, FieldElem z) { return {w, x, y, z}; }

// Generator of an exactly representable cyclic subgroup of Sp(1), or nothing.
bool exact_cyclic_generator(std::size_t order, Quaternion& q) {
    const FieldElem h(kHalf), mh(-kHalf), zero, one(1);
    switch (order) {
        case 1: q = quat(one, zero, zero, zero); return true;
        case 2: q = quat(FieldElem(-1), zero, zero, zero); return true;
        case 3: q = quat(mh, h, h, h); return true;
        case 4: q = quat(zero, one, zero, zero); return true;
        case 5: q = quat(FieldElem(phi_inv().a * kHalf, 0, phi_inv().c * kHalf), h, FieldElem(phi().a * kHalf, 0, phi().c * kHalf), zero); return true;
        case 6: q = quat(h, h, h, h); return true;
        case 8: q = quat(sqrt2_half(), sqrt2_half(), zero, zero); return true;
        case 10: q = quat(FieldElem(phi().a * kHalf, 0, phi().c * kHalf), FieldElem(phi_inv().a * kHalf, 0, phi_inv().c * kHalf), h, zero); return true;
        default: return false;
    }
}

}  // namespace

FinGroup ade_group(AdeFamily family, std::size_t parameter) {
    const FieldElem h(kHalf), zero, one(1);
    switch (family) {
        case AdeFamily::A: {
            const std::size_t order = parameter + 1;
            const std::string name = "Z/" + std::to_string(order);
            Quaternion q;
            if (exact_cyclic_generator(order, q)) {
                const Quaternion gens[] = {q};
                return quaternion_group_closure(gens, 1000, name);
            }
            return cyclic_group(order);
        }
        case AdeFamily::D: {
            const std::size_t m = parameter + 2;
            const std::string name = "2D" + std::to_string(m);
            std::vector<Quaternion> gens;
            switch (m) {
                case 2: gens = {quat(zero, one, zero, zero), quat(zero, zero, one, zero)}; break;
                case 3: gens = {quat(h, h, h, h), quat(zero, sqrt2_half(), -sqrt2_half(), zero)}; break;
                case 4: gens = {quat(sqrt2_half(), sqrt2_half(), zero, zero), quat(zero, zero, one, zero)}; break;
                case 5: {
                    Quaternion a;
                    exact_cyclic_generator(10, a);
                    gens = {a, quat(zero, zero, zero, one)};
                    break;
                }
                default: {
                    FinGroup G = binary_dihedral_abstract(m);
                    return FinGroup(G.order(), std::vector<Elem>(G.table().begin(), G.table().end()), G.identity(), {}, name);
                }
            }
            FinGroup G = quaternion_group_closure(gens, 1000, name);
            if (G.order() != 4 * m) throw std::logic_error("binary dihedral closure has wrong order");
            return G;
        }
        case AdeFamily::E6:
        case AdeFamily::E7:
        case AdeFamily::E8: {
            std::vector<Quaternion> gens;
            std::size_t expected = 0;
            std::string name;
            if (family == AdeFamily::E8) {
                gens = {quat(h, h, h, h), quat(FieldElem(phi().a * kHalf, 0, phi().c * kHalf),
                                               FieldElem(phi_inv().a * kHalf, 0, phi_inv().c * kHalf), h, zero)};
                expected = 120;
                name = "2I";
            } else {
                gens = {quat(zero, one, zero, zero), quat(zero, zero, one, zero), quat(h, h, h, h)};
                expected = 24;
                name = "2T";
                if (family == AdeFamily::E7) {
                    gens.push_back(quat(sqrt2_half(), sqrt2_half(), zero, zero));
                    expected = 48;
                    name = "2O";
                }
            }
            FinGroup G = quaternion_group_closure(gens, 1000, name);
            if (G.order() != expected) throw std::logic_error("exceptional closure has wrong order");
            return G;
        }
    }
    throw std::invalid_argument("unknown ADE family");
}

mpz_class floor_rational(const mpq_class& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

HuanGroup::HuanGroup(const FinGroup& G, Elem g) : G_(&G), g_(g) {
    if (g >= G.order()) throw std::out_of_range("loop element out of range");
}

bool HuanGroup::contains(const HuanElement& a) const {
    return a.h < G_->order() && G_->mul(a.h, g_) == G_->mul(g_, a.h) && a.r >= 0 && a.r < 1;
}

HuanElement HuanGroup::normalize(Elem h, const mpq_class& r) const {
    const mpz_class k = floor_rational(r);
    HuanElement out;
    out.h = G_->mul(h, G_->pow(g_, k.get_si()));
    out.r = r - mpq_class(k);
    return out;
}

HuanElement HuanGroup::mul(const HuanElement& a, const HuanElement& b) const {
    if (!contains(a) || !contains(b)) throw std::invalid_argument("element outside this extended centralizer");
    return normalize(G_->mul(a.h, b.h), a.r + b.r);
}

HuanElement HuanGroup::inv(const HuanElement& a) const {
    if (!contains(a)) throw std::invalid_argument("element outside this extended centralizer");
    return normalize(G_->inv(a.h), -a.r);
}

}  // namespace inertia_lab
