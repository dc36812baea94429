#pragma once

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "lif/rational.hpp"

namespace lif {

/* Truncated formal power series over Rational. A Series of precision N
   stores exactly the coefficients of powers 0..N and knows nothing beyond
   that, so binary operations return the smaller precision of their two
   operands and reading a coefficient past the precision is an error, not
   an implicit zero. */
class Series {
public:
    /* Zero series of the given precision. */
    explicit Series(int precision);
    explicit Series(std::vector<Rational> coeffs);
    Series(std::initializer_list<Rational> coeffs);

    static Series constant(const Rational& value, int precision);
    /* value * z^power; power must not exceed the precision. */
    static Series monomial(const Rational& value, int power, int precision);
    /* The series z (requires precision >= 1). */
    static Series identity(int precision);

    int precision() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& coeff(int n) const;

    bool is_zero() const;
    /* Index of the first nonzero coefficient; precision+1 for the zero series. */
    int valuation() const;

    Series truncated(int new_precision) const;

    /* Equality on the shared coefficient prefix, up to min precision. */
    bool agrees_with(const Series& other) const;

    /* Structural equality: same precision and same coefficients. */
    friend bool operator==(const Series& a, const Series& b) = default;

    /* "[c0, c1, ..., cN]" with Rational text coefficients. */
    std::string str() const;

private:
    std::vector<Rational> coeffs_;  // size precision+1, never empty
};

Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator-(const Series& s);
Series operator*(const Series& a, const Series& b);
Series operator*(const Rational& scalar, const Series& s);
Series operator*(const Series& s, const Rational& scalar);

/* Formal derivative; the result has precision one lower. */
Series derivative(const Series& s);

/* m-fold truncated product by binary exponentiation; pow(s, 0) = 1. */
Series pow(const Series& s, int exponent);

/* Multiplicative inverse; requires a nonzero constant term. */
Series recip(const Series& s);

/* outer(inner); requires inner to have constant term zero. */
Series compose(const Series& outer, const Series& inner);

/* Shift every coefficient up by one power; precision grows by one. */
Series mul_by_x(const Series& s);

std::ostream& operator<<(std::ostream& os, const Series& s);

}  // namespace lif
