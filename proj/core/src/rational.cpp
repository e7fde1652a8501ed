#include "ramsey/rational.hpp"

#include <cctype>

namespace ramsey {

Int int_pow(const Int& base, unsigned long exp) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

Rational::Rational(const Int& num, const Int& den) {
    if (sgn(den) == 0)
        throw Error(ErrorKind::ZeroDenominator, "rational with denominator 0");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero())
        throw Error(ErrorKind::ZeroDenominator, "division by zero");
    return Rational(mpq_class(a.q_ / b.q_));
}

Rational Rational::pow(unsigned long e) const {
    Int num = int_pow(numerator(), e);
    Int den = int_pow(denominator(), e);
    return Rational(num, den);
}

Int Rational::as_integer() const {
    if (!is_integer())
        throw Error(ErrorKind::BadParameters, "value " + str() + " is not an integer");
    return numerator();
}

std::string Rational::str() const {
    if (is_integer())
        return numerator().get_str();
    return numerator().get_str() + "/" + denominator().get_str();
}

std::string int_str(const Int& n) { return n.get_str(); }

namespace {

bool valid_integer_token(std::string_view s, bool allow_sign) {
    if (s.empty())
        return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+'))
        i = 1;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

} // namespace

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!valid_integer_token(text, true))
            throw Error(ErrorKind::FormatError, "bad rational literal '" + std::string(text) + "'");
        return Rational(Int(std::string(text)));
    }
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!valid_integer_token(num, true) || !valid_integer_token(den, false))
        throw Error(ErrorKind::FormatError, "bad rational literal '" + std::string(text) + "'");
    return Rational(Int(std::string(num)), Int(std::string(den)));
}

} // namespace ramsey
