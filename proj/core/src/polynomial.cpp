#include "ramsey/polynomial.hpp"

#include <algorithm>
#include <cctype>

namespace ramsey {

VarId::VarId(std::string name) : name_(std::move(name)) {
    if (name_.empty())
        throw Error(ErrorKind::BadParameters, "empty variable name");
    if (!std::isalpha(static_cast<unsigned char>(name_[0])))
        throw Error(ErrorKind::BadParameters, "variable '" + name_ + "' must start with a letter");
    for (char c : name_)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            throw Error(ErrorKind::BadParameters, "variable '" + name_ + "' has an invalid character");
}

unsigned Monomial::degree() const {
    unsigned d = 0;
    for (const auto& [v, e] : exps)
        d += e;
    return d;
}

int compare_exponents(const Monomial& a, const Monomial& b) {
    unsigned da = a.degree();
    unsigned db = b.degree();
    if (da != db)
        return da > db ? 1 : -1;
    auto ia = a.exps.begin();
    auto ib = b.exps.begin();
    while (ia != a.exps.end() && ib != b.exps.end()) {
        if (ia->first != ib->first) {
            // the monomial owning the alphabetically earlier variable is larger
            return ia->first < ib->first ? 1 : -1;
        }
        if (ia->second != ib->second)
            return ia->second > ib->second ? 1 : -1;
        ++ia;
        ++ib;
    }
    if (ia != a.exps.end())
        return 1;
    if (ib != b.exps.end())
        return -1;
    return 0;
}

Polynomial Polynomial::constant(const Rational& c) {
    Polynomial p;
    if (!c.is_zero())
        p.terms_.push_back(Monomial{c, {}});
    return p;
}

Polynomial Polynomial::var(const VarId& v) {
    Polynomial p;
    p.terms_.push_back(Monomial{Rational(1), {{v, 1u}}});
    return p;
}

Polynomial Polynomial::from_monomials(std::vector<Monomial> monomials) {
    Polynomial p;
    p.terms_ = std::move(monomials);
    p.normalize();
    return p;
}

void Polynomial::normalize() {
    for (auto& m : terms_) {
        for (auto it = m.exps.begin(); it != m.exps.end();) {
            if (it->second == 0)
                it = m.exps.erase(it);
            else
                ++it;
        }
    }
    std::sort(terms_.begin(), terms_.end(),
              [](const Monomial& a, const Monomial& b) { return compare_exponents(a, b) > 0; });
    std::vector<Monomial> merged;
    for (auto& m : terms_) {
        if (!merged.empty() && compare_exponents(merged.back(), m) == 0)
            merged.back().coeff += m.coeff;
        else
            merged.push_back(std::move(m));
    }
    terms_.clear();
    for (auto& m : merged)
        if (!m.coeff.is_zero())
            terms_.push_back(std::move(m));
}

std::set<VarId> Polynomial::variables() const {
    std::set<VarId> out;
    for (const auto& m : terms_)
        for (const auto& [v, e] : m.exps)
            out.insert(v);
    return out;
}

unsigned Polynomial::degree() const {
    unsigned d = 0;
    for (const auto& m : terms_)
        d = std::max(d, m.degree());
    return d;
}

unsigned Polynomial::degree_in(const VarId& v) const {
    unsigned d = 0;
    for (const auto& m : terms_) {
        auto it = m.exps.find(v);
        if (it != m.exps.end())
            d = std::max(d, it->second);
    }
    return d;
}

Rational Polynomial::evaluate(const std::map<VarId, Rational>& assignment) const {
    Rational sum;
    for (const auto& m : terms_) {
        Rational value = m.coeff;
        for (const auto& [v, e] : m.exps) {
            auto it = assignment.find(v);
            if (it == assignment.end())
                throw Error(ErrorKind::MissingVariable, "no value for variable '" + v.name() + "'");
            value *= it->second.pow(e);
        }
        sum += value;
    }
    return sum;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Monomial> out = a.terms_;
    out.insert(out.end(), b.terms_.begin(), b.terms_.end());
    return Polynomial::from_monomials(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial Polynomial::operator-() const {
    std::vector<Monomial> out = terms_;
    for (auto& m : out)
        m.coeff = -m.coeff;
    return Polynomial::from_monomials(std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    std::vector<Monomial> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ma : a.terms_) {
        for (const auto& mb : b.terms_) {
            Monomial m;
            m.coeff = ma.coeff * mb.coeff;
            m.exps = ma.exps;
            for (const auto& [v, e] : mb.exps)
                m.exps[v] += e;
            out.push_back(std::move(m));
        }
    }
    return Polynomial::from_monomials(std::move(out));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    std::vector<Monomial> out = p.terms_;
    for (auto& m : out)
        m.coeff = c * m.coeff;
    return Polynomial::from_monomials(std::move(out));
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial out = Polynomial::constant(Rational(1));
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1u)
            out = out * base;
        base = base * base;
        e >>= 1u;
    }
    return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size())
        return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (compare_exponents(a.terms_[i], b.terms_[i]) != 0)
            return false;
        if (a.terms_[i].coeff != b.terms_[i].coeff)
            return false;
    }
    return true;
}

namespace {

// divisibility of exponent maps: divisor <= dividend pointwise
bool exponents_divide(const std::map<VarId, unsigned>& divisor, const std::map<VarId, unsigned>& dividend) {
    for (const auto& [v, e] : divisor) {
        auto it = dividend.find(v);
        if (it == dividend.end() || it->second < e)
            return false;
    }
    return true;
}

} // namespace

Polynomial Polynomial::reduced_by(const Polynomial& relation) const {
    if (relation.is_zero())
        return *this;
    const Monomial& lead = relation.terms().front();

    Polynomial work = *this;
    std::vector<Monomial> remainder;
    while (!work.is_zero()) {
        const Monomial& top = work.terms().front();
        if (exponents_divide(lead.exps, top.exps)) {
            Monomial quot;
            quot.coeff = top.coeff / lead.coeff;
            quot.exps = top.exps;
            for (const auto& [v, e] : lead.exps) {
                quot.exps[v] -= e;
                if (quot.exps[v] == 0)
                    quot.exps.erase(v);
            }
            Polynomial q;
            q = Polynomial::from_monomials({quot});
            work = work - q * relation;
        } else {
            remainder.push_back(top);
            std::vector<Monomial> rest(work.terms().begin() + 1, work.terms().end());
            work = Polynomial::from_monomials(std::move(rest));
        }
    }
    return Polynomial::from_monomials(std::move(remainder));
}

bool identity_holds(const Polynomial& lhs, const Polynomial& rhs, const std::optional<Polynomial>& relation) {
    Polynomial diff = lhs - rhs;
    if (relation)
        diff = diff.reduced_by(*relation);
    return diff.is_zero();
}

namespace {

std::string monomial_body(const Monomial& m) {
    std::string out;
    Rational c = m.coeff;
    if (c.sign() < 0)
        c = -c;
    bool unit_coeff = (c == Rational(1)) && !m.exps.empty();
    if (!unit_coeff)
        out += c.str();
    bool first = true;
    for (const auto& [v, e] : m.exps) {
        if (!first || !unit_coeff)
            out += "*";
        out += v.name();
        if (e > 1)
            out += "^" + std::to_string(e);
        first = false;
    }
    return out;
}

} // namespace

std::string Polynomial::str() const {
    if (terms_.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const Monomial& m = terms_[i];
        if (i == 0)
            out += (m.coeff.sign() < 0) ? "-" : "";
        else
            out += (m.coeff.sign() < 0) ? " - " : " + ";
        out += monomial_body(m);
    }
    return out;
}

} // namespace ramsey
