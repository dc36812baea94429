#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace lif {

/* Exact rational number on top of GMP. Values are always kept canonical:
   the denominator is positive, gcd(|num|, den) = 1, and zero is stored as
   0/1, so equality of values is structural equality. */
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long value) : value_(value) {}
    explicit Rational(mpz_class value) : value_(std::move(value)) {}
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_negative() const { return sgn(value_) < 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    /* Reciprocal; the denominator sign is re-normalized to positive. */
    Rational inverse() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& other);
    Rational& operator-=(const Rational& other);
    Rational& operator*=(const Rational& other);
    Rational& operator/=(const Rational& other);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.value_ == b.value_;
    }

    /* "p/q" when q != 1, plain "p" otherwise. */
    std::string str() const { return value_.get_str(); }

    /* Inverse of str(); also accepts an optional leading sign. */
    static Rational parse(std::string_view text);

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace lif
