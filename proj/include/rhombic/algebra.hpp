#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace rhombic {

using Integer = boost::multiprecision::cpp_int;
// Always kept in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p", "p/q" or "-p/q". Throws ParseError; zero denominators are rejected.
Rational parse_rational(std::string_view text);
// Always "num/den" (so 3 prints as "3/1").
std::string format_rational(const Rational& value);

// Raises value to a signed power. Throws DomainError for 0^k with k < 0.
Rational power(const Rational& value, int exponent);

// Exponents of alpha, beta and q in one monomial.
struct Exponent {
    int alpha = 0;
    int beta = 0;
    int q = 0;

    auto operator<=>(const Exponent&) const = default;
    Exponent operator+(const Exponent& other) const {
        return {alpha + other.alpha, beta + other.beta, q + other.q};
    }
};

// Sparse Laurent polynomial in alpha, beta, q with rational coefficients.
// Zero coefficients are never stored, so structural equality is polynomial equality.
class LaurentPolynomial {
  public:
    using Terms = std::map<Exponent, Rational>;

    LaurentPolynomial() = default;
    LaurentPolynomial(const Rational& constant); // NOLINT: implicit scalar promotion is intended
    LaurentPolynomial(int constant) : LaurentPolynomial(Rational(constant)) {} // NOLINT

    static LaurentPolynomial monomial(Exponent e, const Rational& coefficient = 1);
    static LaurentPolynomial alpha(int power = 1) { return monomial({power, 0, 0}); }
    static LaurentPolynomial beta(int power = 1) { return monomial({0, power, 0}); }
    static LaurentPolynomial q(int power = 1) { return monomial({0, 0, power}); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(Exponent e) const;

    void add_term(Exponent e, const Rational& coefficient);

    LaurentPolynomial& operator+=(const LaurentPolynomial& other);
    LaurentPolynomial& operator-=(const LaurentPolynomial& other);
    LaurentPolynomial& operator*=(const LaurentPolynomial& other);
    LaurentPolynomial& operator*=(const Rational& scalar);

    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
    friend LaurentPolynomial operator*(LaurentPolynomial a, const Rational& s) { return a *= s; }
    friend LaurentPolynomial operator*(const Rational& s, LaurentPolynomial a) { return a *= s; }
    friend LaurentPolynomial operator*(LaurentPolynomial a, int s) { return a *= Rational(s); }
    friend LaurentPolynomial operator*(int s, LaurentPolynomial a) { return a *= Rational(s); }
    LaurentPolynomial operator-() const;

    friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

    // Exact substitution. Throws DomainError when a zero is raised to a negative power.
    Rational evaluate(const Rational& alpha, const Rational& beta, const Rational& q) const;

    // Substitutes only q, keeping alpha and beta symbolic.
    LaurentPolynomial at_q(const Rational& q) const;

    // Human-readable form, e.g. "a^2*b + a*b*q - 3/2*b^-1".
    std::string to_string() const;

  private:
    Terms terms_;
};

inline bool equal(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a == b; }

// n choose k as an exact integer; zero outside 0 <= k <= n.
Integer binomial(int n, int k);
Integer factorial(int n);
// Lah number C(n,r) (n+1)! / (r+1)!.
Integer lah_number(int n, int r);

} // namespace rhombic
