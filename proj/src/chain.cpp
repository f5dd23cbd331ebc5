#include "inertia_lab/chain.hpp"

#include <sstream>
#include <stdexcept>

namespace inertia_lab {

ChainComplex::ChainComplex(std::vector<std::size_t> ranks, std::vector<IntMatrix> boundaries)
    : ranks_(std::move(ranks)) {
    if (boundaries.size() + 1 != ranks_.size() && !(ranks_.empty() && boundaries.empty()))
        throw std::invalid_argument("need one boundary per degree above zero");
    const int top = top_degree();
    maps_.reserve(ranks_.size() + 1);
    maps_.emplace_back(0, ranks_.empty() ? 0 : ranks_[0]);
    for (int n = 1; n <= top; ++n) {
        IntMatrix& d = boundaries[n - 1];
        if (d.rows() != ranks_[n - 1] || d.cols() != ranks_[n]) throw std::invalid_argument("boundary shape mismatch");
        maps_.push_back(std::move(d));
    }
    maps_.emplace_back(ranks_.empty() ? 0 : ranks_.back(), 0);
}

const IntMatrix& ChainComplex::boundary(int n) const {
    if (n < 0 || n > top_degree() + 1) throw std::out_of_range("boundary degree out of range");
    return maps_[n];
}

std::vector<std::string> ChainComplex::d_squared_violations() const {
    std::vector<std::string> bad;
    for (int n = 2; n <= top_degree(); ++n)
        if (!(maps_[n - 1] * maps_[n]).is_zero()) bad.push_back("d_" + std::to_string(n - 1) + " d_" + std::to_string(n) + " != 0");
    return bad;
}

CochainComplex::CochainComplex(std::vector<std::size_t> ranks, std::vector<IntMatrix> coboundaries)
    : ranks_(std::move(ranks)) {
    if (coboundaries.size() + 1 != ranks_.size() && !(ranks_.empty() && coboundaries.empty()))
        throw std::invalid_argument("need one coboundary per degree below the top");
    maps_.emplace_back(ranks_.empty() ? 0 : ranks_[0], 0);
    for (std::size_t k = 0; k < coboundaries.size(); ++k) {
        if (coboundaries[k].rows() != ranks_[k + 1] || coboundaries[k].cols() != ranks_[k])
            throw std::invalid_argument("coboundary shape mismatch");
        maps_.push_back(std::move(coboundaries[k]));
    }
    maps_.emplace_back(0, ranks_.empty() ? 0 : ranks_.back());
}

const IntMatrix& CochainComplex::delta(int n) const {
    if (n < -1 || n > top_degree()) throw std::out_of_range("coboundary degree out of range");
    return maps_[n + 1];
}

std::vector<std::string> CochainComplex::d_squared_violations() const {
    std::vector<std::string> bad;
    for (int n = 0; n + 1 < top_degree(); ++n)
        if (!(delta(n + 1) * delta(n)).is_zero()) bad.push_back("delta_" + std::to_string(n + 1) + " delta_" + std::to_string(n) + " != 0");
    return bad;
}

CochainComplex dual(const ChainComplex& C) {
    std::vector<IntMatrix> cob;
    for (int n = 1; n <= C.top_degree(); ++n) cob.push_back(C.boundary(n).transpose());
    return CochainComplex(C.ranks(), std::move(cob));
}

Coefficients Coefficients::Zmod(const Integer& m) {
    if (m < Integer(2)) throw std::invalid_argument("modulus must be at least 2");
    return {Kind::modular, m};
}

Coefficients Coefficients::parse(const std::string& text) {
    if (text == "Z") return Z();
    if (text == "QmodZ") return QmodZ();
    if (text.rfind("Zmod:", 0) == 0) return Zmod(Integer::parse(text.substr(5)));
    throw std::invalid_argument("unknown coefficients: " + text);
}

std::string Coefficients::str() const {
    switch (kind) {
        case Kind::integers: return "Z";
        case Kind::modular: return "Zmod:" + modulus.str();
        case Kind::rationals_mod_integers: return "QmodZ";
    }
    return "?";
}

mpq_class CoeffVector::value(std::size_t i) const {
    mpq_class q(num.at(i).to_mpz(), den.to_mpz());
    q.canonicalize();
    return q;
}

bool CoeffVector::is_zero() const {
    for (const auto& v : num)
        if (!v.is_zero()) return false;
    return true;
}

CoeffVector normalize(CoeffVector v, const Coefficients& A) {
    switch (A.kind) {
        case Coefficients::Kind::integers:
            if (!v.den.is_one()) throw std::invalid_argument("fractional value for integer coefficients");
            break;
        case Coefficients::Kind::modular:
            if (!v.den.is_one()) throw std::invalid_argument("fractional value for modular coefficients");
            for (auto& x : v.num) x = floor_mod(x, A.modulus);
            break;
        case Coefficients::Kind::rationals_mod_integers: {
            if (v.den.sign() < 0) {
                v.den = -v.den;
                for (auto& x : v.num) x = -x;
            }
            if (v.den.is_zero()) throw std::invalid_argument("zero denominator");
            Integer g = v.den;
            for (auto& x : v.num) {
                x = floor_mod(x, v.den);
                if (!g.is_one()) g = gcd(g, x);
            }
            if (!g.is_one()) {
                for (auto& x : v.num) x = exact_div(x, g);
                v.den = exact_div(v.den, g);
            }
            break;
        }
    }
    return v;
}

CoeffVector add(const CoeffVector& a, const CoeffVector& b, const Coefficients& A) {
    if (a.size() != b.size()) throw std::invalid_argument("cochain length mismatch");
    CoeffVector out;
    out.den = a.den == b.den ? a.den : lcm(a.den, b.den);
    const Integer fa = exact_div(out.den, a.den), fb = exact_div(out.den, b.den);
    out.num.resize(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out.num[i] = a.num[i] * fa;
        out.num[i].add_mul(b.num[i], fb);
    }
    return normalize(std::move(out), A);
}

CoeffVector scale(const CoeffVector& a, const Integer& k, const Coefficients& A) {
    CoeffVector out = a;
    for (auto& x : out.num) x *= k;
    return normalize(std::move(out), A);
}

CoeffVector apply(const IntMatrix& M, const CoeffVector& x, const Coefficients& A) {
    CoeffVector out{M.apply(x.num), x.den};
    return normalize(std::move(out), A);
}

bool ClassCoordinates::is_zero() const {
    for (const auto& t : torsion)
        if (!t.is_zero()) return false;
    for (const auto& f : free)
        if (!f.is_zero()) return false;
    for (const auto& d : divisible)
        if (d != 0) return false;
    return true;
}

std::string ClassCoordinates::str() const {
    std::ostringstream os;
    os << '[';
    bool first = true;
    auto sep = [&] {
        if (!first) os << ',';
        first = false;
    };
    for (const auto& t : torsion) sep(), os << t;
    for (const auto& f : free) sep(), os << f;
    for (const auto& d : divisible) sep(), os << d.get_str();
    os << ']';
    return os.str();
}

namespace {

std::vector<Integer> unit_vector(std::size_t n, std::size_t i) {
    std::vector<Integer> v(n);
    v[i] = 1;
    return v;
}

}  // namespace

CohomologyModel::CohomologyModel(const IntMatrix& delta_prev, const IntMatrix& delta_next, Coefficients A)
    : coeffs_(std::move(A)), delta_next_(delta_next) {
    const std::size_t cn = delta_next.cols();
    if (delta_prev.rows() != cn) throw std::invalid_argument("coboundary shapes do not compose");
    SmithOptions opt;
    opt.transforms = true;
    SmithResult S = smith(delta_next, opt);
    rank_next_ = S.rank();
    d_ = S.diagonal;
    next_ = std::move(S.transform);
    K_ = cn - rank_next_;

    const IntMatrix P = delta_prev.transpose();
    std::vector<MatrixEntry> r_entries;
    for (std::size_t j = 0; j < P.rows(); ++j) {
        std::vector<Integer> x(cn);
        for (const auto& e : P.row(j)) x[e.col] = e.value;
        next_->apply_V_inv(x);
        for (std::size_t i = 0; i < cn; ++i) {
            if (x[i].is_zero()) continue;
            if (i < rank_next_) throw std::logic_error("coboundaries have components along the pivot directions");
            r_entries.push_back({std::uint32_t(i - rank_next_), std::uint32_t(j), x[i]});
        }
    }
    const IntMatrix R = IntMatrix::from_entries(K_, P.rows(), std::move(r_entries));
    SmithResult SR = smith(R, opt);
    rank_R_ = SR.rank();
    e_ = SR.diagonal;
    R_ = std::move(SR.transform);

    // x = V (0^r, U_R^-1 e_i)
    auto lifted = [&](std::size_t i) {
        std::vector<Integer> yp = unit_vector(K_, i);
        R_->apply_U_inv(yp);
        std::vector<Integer> y(cn);
        for (std::size_t k = 0; k < K_; ++k) y[rank_next_ + k] = std::move(yp[k]);
        next_->apply_V(y);
        return y;
    };
    auto pivot_dir = [&](std::size_t i, const Integer& mult) {
        std::vector<Integer> y(cn);
        y[i] = mult;
        next_->apply_V(y);
        return y;
    };

    std::vector<RawSummand> raw;
    std::vector<CoeffVector> free_gens;
    switch (coeffs_.kind) {
        case Coefficients::Kind::integers:
            for (std::size_t i = 0; i < rank_R_; ++i) raw.push_back({e_[i], CoeffVector{lifted(i), 1}});
            for (std::size_t i = rank_R_; i < K_; ++i) free_gens.push_back(CoeffVector{lifted(i), 1});
            free_count_ = K_ - rank_R_;
            break;
        case Coefficients::Kind::modular: {
            const Integer& m = coeffs_.modulus;
            for (std::size_t i = 0; i < rank_next_; ++i) {
                const Integer g = gcd(d_[i], m);
                raw.push_back({g, normalize(CoeffVector{pivot_dir(i, exact_div(m, g)), 1}, coeffs_)});
            }
            for (std::size_t i = 0; i < K_; ++i) {
                const Integer order = i < rank_R_ ? gcd(e_[i], m) : m;
                raw.push_back({order, normalize(CoeffVector{lifted(i), 1}, coeffs_)});
            }
            break;
        }
        case Coefficients::Kind::rationals_mod_integers:
            for (std::size_t i = 0; i < rank_next_; ++i)
                raw.push_back({d_[i], normalize(CoeffVector{pivot_dir(i, Integer(1)), d_[i]}, coeffs_)});
            divisible_count_ = K_ - rank_R_;
            break;
    }

    for (const auto& s : raw) raw_orders_.push_back(s.order);
    if (!raw_orders_.empty()) {
        SmithResult F = smith(IntMatrix::diagonal(raw.size(), raw.size(), raw_orders_), opt);
        U_fin_ = F.transform->U();
        const IntMatrix U_inv = F.transform->U_inv();
        for (std::size_t t = 0; t < F.diagonal.size(); ++t) {
            if (F.diagonal[t].is_one()) continue;
            kept_.push_back(t);
            invariants_.push_back(F.diagonal[t]);
            CoeffVector g{std::vector<Integer>(cn), 1};
            g = normalize(std::move(g), coeffs_);
            for (std::size_t j = 0; j < raw.size(); ++j) {
                const Integer c = U_inv.at(j, t);
                if (!c.is_zero()) g = add(g, scale(raw[j].generator, c, coeffs_), coeffs_);
            }
            generators_.push_back(std::move(g));
        }
    }
    for (auto& g : free_gens) generators_.push_back(std::move(g));
    presentation_.torsion = invariants_;
    presentation_.free_rank = free_count_;
    presentation_.divisible_rank = divisible_count_;
}

bool CohomologyModel::is_cocycle(const CoeffVector& x) const {
    if (x.size() != delta_next_.cols()) throw std::invalid_argument("cochain length mismatch");
    const std::vector<Integer> y = delta_next_.apply(x.num);
    for (const auto& v : y) {
        switch (coeffs_.kind) {
            case Coefficients::Kind::integers:
                if (!v.is_zero()) return false;
                break;
            case Coefficients::Kind::modular:
                if (!divides(coeffs_.modulus, v)) return false;
                break;
            case Coefficients::Kind::rationals_mod_integers:
                if (!divides(x.den, v)) return false;
                break;
        }
    }
    return true;
}

std::vector<Integer> CohomologyModel::raw_coordinates(const CoeffVector& x, std::vector<Integer>& free,
                                                      std::vector<mpq_class>& divisible) const {
    std::vector<Integer> y = x.num;
    next_->apply_V_inv(y);
    std::vector<Integer> yp(y.begin() + static_cast<std::ptrdiff_t>(rank_next_), y.end());
    R_->apply_U(yp);
    std::vector<Integer> raw;
    switch (coeffs_.kind) {
        case Coefficients::Kind::integers:
            for (std::size_t i = 0; i < rank_R_; ++i) raw.push_back(floor_mod(yp[i], e_[i]));
            for (std::size_t i = rank_R_; i < K_; ++i) free.push_back(yp[i]);
            break;
        case Coefficients::Kind::modular: {
            const Integer& m = coeffs_.modulus;
            for (std::size_t i = 0; i < rank_next_; ++i) {
                const Integer g = gcd(d_[i], m);
                raw.push_back(floor_mod(exact_div(floor_mod(y[i], m), exact_div(m, g)), g));
            }
            for (std::size_t i = 0; i < K_; ++i) raw.push_back(floor_mod(yp[i], i < rank_R_ ? gcd(e_[i], m) : m));
            break;
        }
        case Coefficients::Kind::rationals_mod_integers:
            for (std::size_t i = 0; i < rank_next_; ++i) {
                const Integer t = d_[i] * y[i];
                raw.push_back(floor_mod(exact_div(t, x.den), d_[i]));
            }
            for (std::size_t i = rank_R_; i < K_; ++i) {
                mpq_class q(floor_mod(yp[i], x.den).to_mpz(), x.den.to_mpz());
                q.canonicalize();
                divisible.push_back(q);
            }
            break;
    }
    return raw;
}

ClassCoordinates CohomologyModel::coordinates(const CoeffVector& input) const {
    const CoeffVector x = normalize(input, coeffs_);
    if (!is_cocycle(x)) throw std::invalid_argument("class_of needs a cocycle");
    ClassCoordinates c;
    const std::vector<Integer> raw = raw_coordinates(x, c.free, c.divisible);
    for (std::size_t k = 0; k < kept_.size(); ++k) {
        Integer w;
        for (const auto& e : U_fin_.row(kept_[k])) w.add_mul(e.value, raw[e.col]);
        c.torsion.push_back(floor_mod(w, invariants_[k]));
    }
    return c;
}

CoeffVector CohomologyModel::representative(const ClassCoordinates& c) const {
    if (c.torsion.size() != invariants_.size() || c.free.size() != free_count_)
        throw std::invalid_argument("coordinate vector has the wrong shape");
    CoeffVector out = normalize(CoeffVector{std::vector<Integer>(cochain_rank()), 1}, coeffs_);
    for (std::size_t k = 0; k < c.torsion.size(); ++k) out = add(out, scale(generators_[k], c.torsion[k], coeffs_), coeffs_);
    for (std::size_t k = 0; k < c.free.size(); ++k)
        out = add(out, scale(generators_[invariants_.size() + k], c.free[k], coeffs_), coeffs_);
    return out;
}

AbGroupPresentation cohomology_presentation(std::size_t cochain_rank, std::size_t rank_next,
                                            const std::vector<Integer>* next_diagonal,
                                            const std::vector<Integer>& prev_diagonal, const Coefficients& A) {
    if (rank_next + prev_diagonal.size() > cochain_rank) throw std::logic_error("ranks exceed cochain rank");
    const std::size_t K = cochain_rank - rank_next;
    const std::size_t rest = K - prev_diagonal.size();
    AbGroupPresentation out;
    std::vector<Integer> orders;
    switch (A.kind) {
        case Coefficients::Kind::integers:
            out = from_cyclic_orders(prev_diagonal);
            out.free_rank = rest;
            return out;
        case Coefficients::Kind::modular:
            if (!next_diagonal) throw std::invalid_argument("modular coefficients need the next invariants");
            for (const auto& d : *next_diagonal) orders.push_back(gcd(d, A.modulus));
            for (const auto& e : prev_diagonal) orders.push_back(gcd(e, A.modulus));
            for (std::size_t i = 0; i < rest; ++i) orders.push_back(A.modulus);
            return from_cyclic_orders(orders);
        case Coefficients::Kind::rationals_mod_integers:
            if (!next_diagonal) throw std::invalid_argument("Q/Z coefficients need the next invariants");
            out = from_cyclic_orders(*next_diagonal);
            out.divisible_rank = rest;
            return out;
    }
    return out;
}

AbGroupPresentation homology(const ChainComplex& C, int n) {
    if (n < 0 || n > C.top_degree()) throw std::out_of_range("homology degree out of range");
    const SmithResult a = smith(C.boundary(n));
    const SmithResult b = smith(C.boundary(n + 1));
    AbGroupPresentation out = from_cyclic_orders(b.nontrivial());
    out.free_rank = C.rank(n) - a.rank() - b.rank();
    return out;
}

AbGroupPresentation cohomology(const CochainComplex& C, int n, const Coefficients& A) {
    if (n < 0 || n > C.top_degree()) throw std::out_of_range("cohomology degree out of range");
    const SmithResult prev = smith(C.delta(n - 1));
    const SmithResult next = smith(C.delta(n));
    return cohomology_presentation(C.rank(n), next.rank(), &next.diagonal, prev.diagonal, A);
}

AbGroupPresentation cohomology(const ChainComplex& C, int n, const Coefficients& A) {
    return cohomology(dual(C), n, A);
}

ChainComplex normalized_chains(const SSet& X) {
    const auto counts = X.counts();
    std::vector<std::size_t> ranks(counts.begin(), counts.end());
    std::vector<IntMatrix> maps;
    for (std::size_t n = 1; n < ranks.size(); ++n) {
        std::vector<MatrixEntry> entries;
        for (CellId c : X.cells(static_cast<int>(n))) {
            for (int i = 0; i <= static_cast<int>(n); ++i) {
                auto [base, mask] = X.face_mask(c, i);
                if (mask != 0) continue;
                entries.push_back({std::uint32_t(X.index_in_dim(base)), std::uint32_t(X.index_in_dim(c)),
                                   Integer(i % 2 == 0 ? 1 : -1)});
            }
        }
        maps.push_back(IntMatrix::from_entries(ranks[n - 1], ranks[n], std::move(entries)));
    }
    return ChainComplex(std::move(ranks), std::move(maps));
}

void add_to(Chain& c, CellId id, const Integer& v) {
    if (v.is_zero()) return;
    auto [it, inserted] = c.try_emplace(id, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) c.erase(it);
    }
}

void add_to(TensorChain& c, std::pair<CellId, CellId> id, const Integer& v) {
    if (v.is_zero()) return;
    auto [it, inserted] = c.try_emplace(id, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) c.erase(it);
    }
}

Chain boundary(const SSet& X, const Chain& c) {
    Chain out;
    for (const auto& [cell, v] : c) {
        const int d = X.dim(cell);
        for (int i = 0; i <= d && d > 0; ++i) {
            auto [base, mask] = X.face_mask(cell, i);
            if (mask == 0) add_to(out, base, i % 2 == 0 ? v : -v);
        }
    }
    return out;
}

TensorChain tensor_boundary(const SSet& X, const SSet& Y, const TensorChain& c) {
    TensorChain out;
    for (const auto& [cells, v] : c) {
        const auto [x, y] = cells;
        for (const auto& [fx, w] : boundary(X, Chain{{x, Integer(1)}})) add_to(out, {fx, y}, v * w);
        const Integer s = X.dim(x) % 2 == 0 ? v : -v;
        for (const auto& [fy, w] : boundary(Y, Chain{{y, Integer(1)}})) add_to(out, {x, fy}, s * w);
    }
    return out;
}

Chain ez_map(const ProductSSet& P, CellId x, int p, CellId y, int q) {
    Chain out;
    const int n = p + q;
    for (const auto& sh : shuffles(p, q)) {
        std::uint32_t mu = 0, nu = 0;
        for (int m : sh.mu) mu |= 1u << m;
        for (int v : sh.nu) nu |= 1u << v;
        const Simplex cell = P.find(Simplex::from_mask(n, x, nu), Simplex::from_mask(n, y, mu));
        if (cell.is_degenerate()) throw std::logic_error("shuffle produced a degenerate product cell");
        add_to(out, cell.base, Integer(sh.sign));
    }
    return out;
}

Chain ez_map(const ProductSSet& P, const SSet& X, const SSet& Y, const TensorChain& c) {
    Chain out;
    for (const auto& [cells, v] : c)
        for (const auto& [z, w] : ez_map(P, cells.first, X.dim(cells.first), cells.second, Y.dim(cells.second)))
            add_to(out, z, v * w);
    return out;
}

TensorChain aw_map(const ProductSSet& P, const SSet& X, const SSet& Y, CellId z) {
    TensorChain out;
    const int n = P.sset().dim(z);
    const Simplex a = P.left(z), b = P.right(z);
    for (int p = 0; p <= n; ++p) {
        OrdinalMap front{p, n, {}}, back{n - p, n, {}};
        for (int k = 0; k <= p; ++k) front.images.push_back(k);
        for (int k = p; k <= n; ++k) back.images.push_back(k);
        const Simplex fa = apply_ordinal(X, a, front);
        const Simplex bb = apply_ordinal(Y, b, back);
        if (fa.is_degenerate() || bb.is_degenerate()) continue;
        add_to(out, {fa.base, bb.base}, Integer(1));
    }
    return out;
}

TensorChain aw_map(const ProductSSet& P, const SSet& X, const SSet& Y, const Chain& c) {
    TensorChain out;
    for (const auto& [z, v] : c)
        for (const auto& [cells, w] : aw_map(P, X, Y, z)) add_to(out, cells, v * w);
    return out;
}

}  // namespace inertia_lab
