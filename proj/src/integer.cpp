#include "inertia_lab/integer.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace inertia_lab {

namespace {

bool fits(const mpz_class& v) { return mpz_fits_slong_p(v.get_mpz_t()) != 0; }

mpz_class as_mpz(int64_t v) {
    mpz_class r;
    mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
    return r;
}

}  // namespace

Integer::Integer(unsigned long v) {
    if (v <= static_cast<unsigned long>(std::numeric_limits<int64_t>::max())) {
        small_ = static_cast<int64_t>(v);
    } else {
        mpz_class m;
        mpz_set_ui(m.get_mpz_t(), v);
        set_big(std::move(m));
    }
}

Integer::Integer(unsigned long long v) : Integer(static_cast<unsigned long>(v)) {}

Integer::Integer(const mpz_class& v) { set_big(v); }

Integer::Integer(const Integer& other) : small_(other.small_) {
    if (other.big_) big_ = new mpz_class(*other.big_);
}

Integer& Integer::operator=(const Integer& other) {
    if (this == &other) return *this;
    if (other.big_) {
        if (big_) *big_ = *other.big_;
        else big_ = new mpz_class(*other.big_);
    } else {
        delete big_;
        big_ = nullptr;
        small_ = other.small_;
    }
    return *this;
}

Integer& Integer::operator=(Integer&& other) noexcept {
    if (this == &other) return *this;
    delete big_;
    small_ = other.small_;
    big_ = other.big_;
    other.big_ = nullptr;
    return *this;
}

void Integer::set_big(mpz_class&& v) {
    if (fits(v)) {
        delete big_;
        big_ = nullptr;
        small_ = mpz_get_si(v.get_mpz_t());
        return;
    }
    if (big_) *big_ = std::move(v);
    else big_ = new mpz_class(std::move(v));
    small_ = 0;
}

void Integer::set_big(const mpz_class& v) {
    mpz_class copy(v);
    set_big(std::move(copy));
}

Integer Integer::parse(std::string_view text) {
    std::string s(text);
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    mpz_class v;
    if (s.empty() || v.set_str(s, 10) != 0) throw std::invalid_argument("not an integer: " + std::string(text));
    return Integer(v);
}

int64_t Integer::to_int64() const {
    if (big_) throw std::overflow_error("integer does not fit in 64 bits");
    return small_;
}

mpz_class Integer::to_mpz() const { return big_ ? *big_ : as_mpz(small_); }

std::string Integer::str() const { return big_ ? big_->get_str() : std::to_string(small_); }

int Integer::sign() const {
    if (big_) return sgn(*big_);
    return (small_ > 0) - (small_ < 0);
}

Integer Integer::abs() const { return sign() < 0 ? -*this : *this; }

Integer Integer::operator-() const {
    if (!big_ && small_ != std::numeric_limits<int64_t>::min()) return Integer(-small_);
    return Integer(mpz_class(-to_mpz()));
}

Integer& Integer::operator+=(const Integer& b) {
    if (!big_ && !b.big_) {
        int64_t r;
        if (!__builtin_add_overflow(small_, b.small_, &r)) {
            small_ = r;
            return *this;
        }
    }
    set_big(mpz_class(to_mpz() + b.to_mpz()));
    return *this;
}

Integer& Integer::operator-=(const Integer& b) {
    if (!big_ && !b.big_) {
        int64_t r;
        if (!__builtin_sub_overflow(small_, b.small_, &r)) {
            small_ = r;
            return *this;
        }
    }
    set_big(mpz_class(to_mpz() - b.to_mpz()));
    return *this;
}

Integer& Integer::operator*=(const Integer& b) {
    if (!big_ && !b.big_) {
        int64_t r;
        if (!__builtin_mul_overflow(small_, b.small_, &r)) {
            small_ = r;
            return *this;
        }
    }
    set_big(mpz_class(to_mpz() * b.to_mpz()));
    return *this;
}

void Integer::add_mul(const Integer& a, const Integer& b) {
    if (!big_ && !a.big_ && !b.big_) {
        int64_t p, r;
        if (!__builtin_mul_overflow(a.small_, b.small_, &p) && !__builtin_add_overflow(small_, p, &r)) {
            small_ = r;
            return;
        }
    }
    set_big(mpz_class(to_mpz() + a.to_mpz() * b.to_mpz()));
}

void Integer::sub_mul(const Integer& a, const Integer& b) {
    if (!big_ && !a.big_ && !b.big_) {
        int64_t p, r;
        if (!__builtin_mul_overflow(a.small_, b.small_, &p) && !__builtin_sub_overflow(small_, p, &r)) {
            small_ = r;
            return;
        }
    }
    set_big(mpz_class(to_mpz() - a.to_mpz() * b.to_mpz()));
}

bool operator==(const Integer& a, const Integer& b) {
    if (!a.big_ && !b.big_) return a.small_ == b.small_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical form: a big value never fits in int64
}

std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
    int c = cmp(a.to_mpz(), b.to_mpz());
    return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::size_t Integer::hash() const {
    if (!big_) return std::hash<int64_t>{}(small_);
    return std::hash<std::string>{}(big_->get_str(16));
}

Integer floor_div(const Integer& a, const Integer& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    if (a.is_small() && b.is_small()) {
        int64_t x = a.small_value(), y = b.small_value();
        if (!(x == std::numeric_limits<int64_t>::min() && y == -1)) {
            int64_t q = x / y;
            if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
            return Integer(q);
        }
    }
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return Integer(q);
}

Integer floor_mod(const Integer& a, const Integer& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    if (a.is_small() && b.is_small()) {
        int64_t x = a.small_value(), y = b.small_value();
        if (y != -1) {
            int64_t r = x % y;
            if (r != 0 && ((r < 0) != (y < 0))) r += y;
            return Integer(r);
        }
        return Integer(0);
    }
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return Integer(r);
}

Integer gcd(const Integer& a, const Integer& b) {
    if (a.is_small() && b.is_small() && a.small_value() != std::numeric_limits<int64_t>::min() &&
        b.small_value() != std::numeric_limits<int64_t>::min()) {
        int64_t x = a.small_value() < 0 ? -a.small_value() : a.small_value();
        int64_t y = b.small_value() < 0 ? -b.small_value() : b.small_value();
        while (y != 0) {
            int64_t t = x % y;
            x = y;
            y = t;
        }
        return Integer(x);
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return Integer(g);
}

Integer lcm(const Integer& a, const Integer& b) {
    if (a.is_zero() || b.is_zero()) return Integer(0);
    return (exact_div(a.abs(), gcd(a, b))) * b.abs();
}

bool divides(const Integer& d, const Integer& a) {
    if (d.is_zero()) return a.is_zero();
    return floor_mod(a, d).is_zero();
}

Integer exact_div(const Integer& a, const Integer& b) {
    if (a.is_small() && b.is_small() && b.small_value() != -1) return Integer(a.small_value() / b.small_value());
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    return Integer(q);
}

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.str(); }

}  // namespace inertia_lab
