#include "rhombic/algebra.hpp"

#include "rhombic/error.hpp"

#include <cctype>
#include <sstream>

namespace rhombic {

namespace {

Integer parse_integer(std::string_view text, std::size_t offset) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
    }
    if (i == text.size())
        throw ParseError("expected digits", offset + i);
    Integer value = 0;
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError(std::string("unexpected character '") + text[i] + "'", offset + i);
        value = value * 10 + (text[i] - '0');
    }
    return negative ? Integer(-value) : value;
}

} // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text, 0));
    Integer num = parse_integer(text.substr(0, slash), 0);
    Integer den = parse_integer(text.substr(slash + 1), slash + 1);
    if (den == 0)
        throw ParseError("zero denominator", slash + 1);
    return Rational(num, den);
}

std::string format_rational(const Rational& value) {
    return boost::multiprecision::numerator(value).str() + "/" +
           boost::multiprecision::denominator(value).str();
}

Rational power(const Rational& value, int exponent) {
    if (exponent < 0) {
        if (value == 0)
            throw DomainError("zero raised to a negative power");
        return power(Rational(1) / value, -exponent);
    }
    Rational result = 1;
    Rational base = value;
    for (unsigned e = static_cast<unsigned>(exponent); e != 0; e >>= 1) {
        if (e & 1U)
            result *= base;
        base *= base;
    }
    return result;
}

LaurentPolynomial::LaurentPolynomial(const Rational& constant) {
    if (constant != 0)
        terms_.emplace(Exponent{}, constant);
}

LaurentPolynomial LaurentPolynomial::monomial(Exponent e, const Rational& coefficient) {
    LaurentPolynomial p;
    p.add_term(e, coefficient);
    return p;
}

Rational LaurentPolynomial::coefficient(Exponent e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPolynomial::add_term(Exponent e, const Rational& coefficient) {
    if (coefficient == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(e, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0)
            terms_.erase(it);
    }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
    for (const auto& [e, c] : other.terms_)
        add_term(e, c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
    for (const auto& [e, c] : other.terms_)
        add_term(e, -c);
    return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial product;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            product.add_term(ea + eb, ca * cb);
    return product;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& other) {
    *this = *this * other;
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_)
        c *= scalar;
    return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial negated = *this;
    for (auto& [e, c] : negated.terms_)
        c = -c;
    return negated;
}

Rational LaurentPolynomial::evaluate(const Rational& alpha, const Rational& beta, const Rational& q) const {
    Rational sum = 0;
    for (const auto& [e, c] : terms_)
        sum += c * power(alpha, e.alpha) * power(beta, e.beta) * power(q, e.q);
    return sum;
}

LaurentPolynomial LaurentPolynomial::at_q(const Rational& q) const {
    LaurentPolynomial result;
    for (const auto& [e, c] : terms_)
        result.add_term({e.alpha, e.beta, 0}, c * power(q, e.q));
    return result;
}

std::string LaurentPolynomial::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational magnitude = c < 0 ? Rational(-c) : c;
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        first = false;

        std::string factors;
        auto append = [&](const char* name, int power) {
            if (power == 0)
                return;
            if (!factors.empty())
                factors += "*";
            factors += name;
            if (power != 1)
                factors += "^" + std::to_string(power);
        };
        append("a", e.alpha);
        append("b", e.beta);
        append("q", e.q);

        std::string coeff = denominator(magnitude) == 1 ? numerator(magnitude).str()
                                                       : format_rational(magnitude);
        if (factors.empty())
            out << coeff;
        else if (magnitude == 1)
            out << factors;
        else
            out << coeff << "*" << factors;
    }
    return out.str();
}

Integer binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n)
        return 0;
    Integer result = 1;
    for (int i = 1; i <= k; ++i)
        result = result * (n - k + i) / i;
    return result;
}

Integer factorial(int n) {
    Integer result = 1;
    for (int i = 2; i <= n; ++i)
        result *= i;
    return result;
}

Integer lah_number(int n, int r) {
    return binomial(n, r) * factorial(n + 1) / factorial(r + 1);
}

} // namespace rhombic
