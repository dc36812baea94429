#include "lif/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace lif {

namespace {

mpq_class make_canonical(const mpz_class& num, const mpz_class& den) {
    if (den == 0) {
        throw std::domain_error("rational with denominator zero");
    }
    mpq_class value(num, den);
    value.canonicalize();  // reduces and moves the sign to the numerator
    return value;
}

}  // namespace

Rational::Rational(long num, long den) : value_(make_canonical(num, den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den)
    : value_(make_canonical(num, den)) {}

Rational Rational::inverse() const {
    if (is_zero()) {
        throw std::domain_error("zero has no multiplicative inverse");
    }
    return Rational(value_.get_den(), value_.get_num());
}

Rational Rational::operator-() const {
    Rational result;
    result.value_ = -value_;
    return result;
}

Rational& Rational::operator+=(const Rational& other) {
    value_ += other.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& other) {
    value_ -= other.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& other) {
    value_ *= other.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& other) {
    if (other.is_zero()) {
        throw std::domain_error("division by zero");
    }
    value_ /= other.value_;
    return *this;
}

Rational Rational::parse(std::string_view text) {
    std::size_t pos = 0;
    auto fail = [&text]() {
        throw std::invalid_argument("not a rational: \"" + std::string(text) + "\"");
    };

    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    auto read_digits = [&]() {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
        if (pos == start) {
            fail();
        }
        return std::string(text.substr(start, pos - start));
    };

    std::string num_digits = read_digits();
    std::string den_digits = "1";
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den_digits = read_digits();
    }
    if (pos != text.size()) {
        fail();
    }

    mpz_class num(num_digits);
    if (negative) {
        num = -num;
    }
    return Rational(num, mpz_class(den_digits));
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
    return os << value.str();
}

}  // namespace lif
