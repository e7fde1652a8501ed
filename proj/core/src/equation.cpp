#include "ramsey/equation.hpp"

#include <cctype>

namespace ramsey {

Rational Equation::evaluate(const std::map<VarId, Int>& assignment) const {
    std::map<VarId, Rational> values;
    for (const auto& [v, x] : assignment) {
        if (sgn(x) <= 0)
            throw Error(ErrorKind::NonPositiveValue,
                        "variable '" + v.name() + "' assigned non-positive value " + int_str(x));
        values.emplace(v, Rational(x));
    }
    return lhs_.evaluate(values);
}

namespace {

// Recursive-descent parser over:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := rational | variable ['^' natural]
class ExprParser {
public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    Polynomial parse_expression() {
        Polynomial sum;
        skip_ws();
        int sign = consume_sign();
        sum = sum + apply_sign(sign, parse_term());
        skip_ws();
        while (pos_ < text_.size() && (peek() == '+' || peek() == '-')) {
            char op = take();
            Polynomial t = parse_term();
            sum = (op == '+') ? sum + t : sum - t;
            skip_ws();
        }
        return sum;
    }

    void expect_end() {
        skip_ws();
        if (pos_ != text_.size())
            throw SyntaxError(pos_, "unexpected character '" + std::string(1, peek()) + "'");
    }

    bool at_equals() {
        skip_ws();
        return pos_ < text_.size() && peek() == '=';
    }

    void consume_equals() { take(); }

    std::size_t position() const { return pos_; }

private:
    Polynomial parse_term() {
        Polynomial product = parse_factor();
        skip_ws();
        while (pos_ < text_.size() && peek() == '*') {
            take();
            product = product * parse_factor();
            skip_ws();
        }
        return product;
    }

    Polynomial parse_factor() {
        skip_ws();
        if (pos_ >= text_.size())
            throw SyntaxError(pos_, "expected a coefficient or variable");
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c)))
            return Polynomial::constant(parse_rational());
        if (std::isalpha(static_cast<unsigned char>(c)))
            return parse_variable_power();
        throw SyntaxError(pos_, "expected a coefficient or variable");
    }

    Rational parse_rational() {
        Int num = parse_natural();
        skip_ws();
        if (pos_ < text_.size() && peek() == '/') {
            std::size_t at = pos_;
            take();
            skip_ws();
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(peek())))
                throw SyntaxError(at + 1, "expected a denominator");
            Int den = parse_natural();
            if (sgn(den) == 0)
                throw SyntaxError(at + 1, "zero denominator");
            return Rational(num, den);
        }
        return Rational(num);
    }

    Int parse_natural() {
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek())))
            digits += take();
        return Int(digits);
    }

    Polynomial parse_variable_power() {
        std::string name;
        name += take();
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
            name += take();
        Polynomial p = Polynomial::var(VarId(name));
        skip_ws();
        if (pos_ < text_.size() && peek() == '^') {
            std::size_t at = pos_;
            take();
            skip_ws();
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(peek())))
                throw SyntaxError(at + 1, "expected an exponent");
            Int e = parse_natural();
            if (!e.fits_uint_p())
                throw SyntaxError(at + 1, "exponent too large");
            p = p.pow(static_cast<unsigned>(e.get_ui()));
        }
        return p;
    }

    int consume_sign() {
        if (pos_ < text_.size() && (peek() == '+' || peek() == '-'))
            return take() == '-' ? -1 : 1;
        return 1;
    }

    static Polynomial apply_sign(int sign, const Polynomial& p) { return sign < 0 ? -p : p; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() const { return text_[pos_]; }
    char take() { return text_[pos_++]; }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(std::string_view text) {
    ExprParser parser(text);
    Polynomial p = parser.parse_expression();
    parser.expect_end();
    return p;
}

Equation parse_equation(std::string_view text) {
    ExprParser parser(text);
    Polynomial lhs = parser.parse_expression();
    if (parser.at_equals()) {
        parser.consume_equals();
        Polynomial rhs = parser.parse_expression();
        lhs = lhs - rhs;
    }
    parser.expect_end();
    if (lhs.is_zero())
        throw Error(ErrorKind::EmptyEquation, "all terms cancel to 0 = 0");
    return Equation(std::move(lhs));
}

} // namespace ramsey
