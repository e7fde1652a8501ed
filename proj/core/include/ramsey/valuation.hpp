#pragma once

#include <string>

#include "ramsey/rational.hpp"

namespace ramsey {

// p-adic valuation value: a finite integer or the distinguished infinity
// (the valuation of 0). Arithmetic is total: inf + k = inf, min(inf, k) = k.
class Valuation {
public:
    static Valuation infinity() { return Valuation(true, 0); }
    static Valuation finite(long v) { return Valuation(false, v); }

    bool is_infinite() const { return infinite_; }

    long value() const {
        if (infinite_)
            throw Error(ErrorKind::ZeroInput, "infinite valuation has no finite value");
        return value_;
    }

    Valuation operator+(const Valuation& o) const {
        if (infinite_ || o.infinite_)
            return infinity();
        return finite(value_ + o.value_);
    }

    friend Valuation min(const Valuation& a, const Valuation& b) {
        if (a.infinite_)
            return b;
        if (b.infinite_)
            return a;
        return finite(a.value_ < b.value_ ? a.value_ : b.value_);
    }

    friend bool operator==(const Valuation& a, const Valuation& b) {
        if (a.infinite_ != b.infinite_)
            return false;
        return a.infinite_ || a.value_ == b.value_;
    }
    friend bool operator!=(const Valuation& a, const Valuation& b) { return !(a == b); }
    // Total order with infinity above every finite value.
    friend bool operator<(const Valuation& a, const Valuation& b) {
        if (a.infinite_)
            return false;
        if (b.infinite_)
            return true;
        return a.value_ < b.value_;
    }
    friend bool operator<=(const Valuation& a, const Valuation& b) { return !(b < a); }
    friend bool operator>(const Valuation& a, const Valuation& b) { return b < a; }
    friend bool operator>=(const Valuation& a, const Valuation& b) { return !(a < b); }

    std::string str() const { return infinite_ ? "inf" : std::to_string(value_); }

private:
    Valuation(bool inf, long v) : infinite_(inf), value_(v) {}

    bool infinite_;
    long value_;
};

// Deterministic for inputs up to 64-bit scale (trial division below 1000,
// then Miller-Rabin on the fixed base set 2..37); larger candidates are
// refused rather than answered probabilistically.
bool is_prime(const Int& n);

// ord_p of an integer; infinity for 0. Throws NonPrimeModulus unless p is prime.
Valuation padic_val(const Int& p, const Int& x);

// ord_p extended to rationals: ord(num) - ord(den).
Valuation padic_val(const Int& p, const Rational& x);

// padic_val(p, x) reduced mod `modulus` into [0, modulus). Requires x >= 1.
Int val_residue(const Int& p, const Int& modulus, const Int& x);

} // namespace ramsey
