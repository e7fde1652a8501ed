#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

#include "ramsey/errors.hpp"

namespace ramsey {

using Int = mpz_class;

// base^exp with a plain unsigned exponent.
Int int_pow(const Int& base, unsigned long exp);

// Exact rational, always in lowest terms with positive denominator.
// Equality is value equality.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {} // NOLINT: implicit by design, mirrors integer literals
    Rational(const Int& n) : q_(n) {}
    Rational(const Int& num, const Int& den);

    // resolve GMP expression templates to the integer constructor
    template <class U>
    Rational(const __gmp_expr<mpz_t, U>& e) : q_(Int(e)) {}

    // Accepts "a" or "a/b"; the sign may appear on the numerator only.
    static Rational parse(std::string_view text);

    Int numerator() const { return Int(q_.get_num()); }
    Int denominator() const { return Int(q_.get_den()); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    bool is_positive_integer() const { return is_integer() && sgn(q_) > 0; }
    int sign() const { return sgn(q_); }

    // Value as an integer; requires denominator 1.
    Int as_integer() const;

    std::string str() const;

    const mpq_class& raw() const { return q_; }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const { return Rational(mpq_class(-q_)); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t()) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Rational pow(unsigned long e) const;

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}

    mpq_class q_; // invariant: canonical (mpq arithmetic preserves canonical inputs)
};

std::string int_str(const Int& n);

} // namespace ramsey
