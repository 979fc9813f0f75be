#pragma once

#include <compare>
#include <string>

#include <gmpxx.h>

#include "covertool/errors.hpp"

namespace covertool {

using BigInt = mpz_class;
using Int = long long;

// gmpxx has no long long overloads; route machine ints through long.
static_assert(sizeof(long) == sizeof(long long), "needs 64-bit long");
inline BigInt to_big(Int v) { return BigInt(static_cast<long>(v)); }

// Exact fraction, always normalized: den >= 1, gcd(|num|, den) = 1.
// Thin value wrapper over GMP's mpq_class that canonicalizes on construction.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(Int n) : q_(static_cast<long>(n)) {}  // NOLINT: implicit by design
    Rational(const BigInt& n) : q_(n) {}           // NOLINT
    Rational(const BigInt& num, const BigInt& den);
    Rational(Int num, Int den) : Rational(to_big(num), to_big(den)) {}

    // Parses "u/v" or "u" (exact; floats are rejected). Throws ParseError.
    static Rational parse(const std::string& text);

    BigInt num() const { return q_.get_num(); }
    BigInt den() const { return q_.get_den(); }

    BigInt floor() const;
    BigInt ceil() const;
    Rational frac() const;  // value - floor(value), in [0, 1)

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    std::string str() const;

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { Rational r; r.q_ = -a.q_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class q_;
};

// Generalized binomial coefficient for integer (possibly negative) upper
// argument: binom(top, j) = top(top-1)...(top-j+1)/j!, and 0 for j < 0.
// In particular binom(-1, j) = (-1)^j.
BigInt binomial(const BigInt& top, long long j);
inline BigInt binomial(long long top, long long j) { return binomial(to_big(top), j); }

}  // namespace covertool
