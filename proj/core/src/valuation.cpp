#include "ramsey/valuation.hpp"

namespace ramsey {

namespace {

bool miller_rabin_witness(const Int& n, const Int& n_minus_1, const Int& d, unsigned long r, const Int& a) {
    Int x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n_minus_1)
        return false;
    for (unsigned long i = 1; i < r; ++i) {
        x = (x * x) % n;
        if (x == n_minus_1)
            return false;
    }
    return true; // a witnesses compositeness
}

} // namespace

bool is_prime(const Int& n) {
    if (n < 2)
        return false;
    static const unsigned long small_primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (unsigned long p : small_primes) {
        if (n == p)
            return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p))
            return false;
    }
    for (unsigned long d = 41; d < 1000; d += 2) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), d))
            return n == d;
    }
    if (mpz_sizeinbase(n.get_mpz_t(), 2) > 82)
        throw Error(ErrorKind::BadParameters,
                    "primality of " + int_str(n) + " exceeds the deterministic test range");

    // Deterministic Miller-Rabin for this size with bases 2..37.
    Int n_minus_1 = n - 1;
    Int d = n_minus_1;
    unsigned long r = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), r);
    for (unsigned long a : small_primes) {
        if (miller_rabin_witness(n, n_minus_1, d, r, Int(a)))
            return false;
    }
    return true;
}

namespace {

void require_prime(const Int& p) {
    if (!is_prime(p))
        throw Error(ErrorKind::NonPrimeModulus, int_str(p) + " is not prime");
}

} // namespace

Valuation padic_val(const Int& p, const Int& x) {
    require_prime(p);
    if (sgn(x) == 0)
        return Valuation::infinity();
    Int reduced;
    mp_bitcnt_t count = mpz_remove(reduced.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
    return Valuation::finite(static_cast<long>(count));
}

Valuation padic_val(const Int& p, const Rational& x) {
    require_prime(p);
    if (x.is_zero())
        return Valuation::infinity();
    Int scratch;
    Int num = x.numerator();
    Int den = x.denominator();
    long vn = static_cast<long>(mpz_remove(scratch.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t()));
    long vd = static_cast<long>(mpz_remove(scratch.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()));
    return Valuation::finite(vn - vd);
}

Int val_residue(const Int& p, const Int& modulus, const Int& x) {
    if (modulus < 2)
        throw Error(ErrorKind::BadParameters, "modulus must be >= 2");
    if (sgn(x) <= 0)
        throw Error(ErrorKind::ZeroInput, "val_residue requires x >= 1");
    Valuation v = padic_val(p, x);
    Int val(v.value());
    Int out;
    mpz_mod(out.get_mpz_t(), val.get_mpz_t(), modulus.get_mpz_t());
    return out;
}

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::NonPrimeModulus: return "NonPrimeModulus";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::EmptyEquation: return "EmptyEquation";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::MissingVariable: return "MissingVariable";
    case ErrorKind::NonPositiveValue: return "NonPositiveValue";
    case ErrorKind::FormatError: return "FormatError";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::ZeroCoefficient: return "ZeroCoefficient";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::ConstantTerm: return "ConstantTerm";
    case ErrorKind::NotAPythagoreanTriple: return "NotAPythagoreanTriple";
    case ErrorKind::NonIntegralWitness: return "NonIntegralWitness";
    case ErrorKind::DivisibilityViolated: return "DivisibilityViolated";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::NotSatisfying: return "NotSatisfying";
    case ErrorKind::IncoherentOneHot: return "IncoherentOneHot";
    }
    return "Error";
}

} // namespace ramsey
