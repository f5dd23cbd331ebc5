#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace inertia_lab {

// Arbitrary-precision integer with an inline int64 fast path.
// Values that fit in int64 are always stored inline, so equality and
// hashing never have to look at the GMP representation for small values.
class Integer {
public:
    Integer() = default;
    Integer(long long v) : small_(v) {}
    Integer(long v) : small_(v) {}
    Integer(int v) : small_(v) {}
    Integer(unsigned v) : small_(v) {}
    Integer(unsigned long v);
    Integer(unsigned long long v);
    explicit Integer(const mpz_class& v);

    Integer(const Integer& other);
    Integer(Integer&& other) noexcept : small_(other.small_), big_(other.big_) { other.big_ = nullptr; }
    Integer& operator=(const Integer& other);
    Integer& operator=(Integer&& other) noexcept;
    ~Integer() { delete big_; }

    static Integer parse(std::string_view text);

    bool is_small() const { return big_ == nullptr; }
    int64_t small_value() const { return small_; }
    int64_t to_int64() const;
    mpz_class to_mpz() const;
    std::string str() const;

    int sign() const;
    bool is_zero() const { return big_ == nullptr && small_ == 0; }
    bool is_one() const { return big_ == nullptr && small_ == 1; }
    bool is_unit() const { return big_ == nullptr && (small_ == 1 || small_ == -1); }
    Integer abs() const;

    Integer operator-() const;
    Integer& operator+=(const Integer& b);
    Integer& operator-=(const Integer& b);
    Integer& operator*=(const Integer& b);
    // this += a * b
    void add_mul(const Integer& a, const Integer& b);
    void sub_mul(const Integer& a, const Integer& b);

    friend Integer operator+(Integer a, const Integer& b) { a += b; return a; }
    friend Integer operator-(Integer a, const Integer& b) { a -= b; return a; }
    friend Integer operator*(Integer a, const Integer& b) { a *= b; return a; }

    friend bool operator==(const Integer& a, const Integer& b);
    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b);

    std::size_t hash() const;

private:
    void set_big(mpz_class&& v);
    void set_big(const mpz_class& v);

    int64_t small_ = 0;
    mpz_class* big_ = nullptr;
};

// Floor division and the matching non-negative remainder for b > 0,
// sign of b for b < 0 (Python semantics).
Integer floor_div(const Integer& a, const Integer& b);
Integer floor_mod(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
bool divides(const Integer& d, const Integer& a);
// Exact division; the caller guarantees b | a.
Integer exact_div(const Integer& a, const Integer& b);

std::ostream& operator<<(std::ostream& os, const Integer& v);

struct IntegerHash {
    std::size_t operator()(const Integer& v) const { return v.hash(); }
};

}  // namespace inertia_lab
