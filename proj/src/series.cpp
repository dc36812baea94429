#include "lif/series.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace lif {

namespace {

int check_precision(int precision) {
    if (precision < 0) {
        throw std::domain_error("series precision must be nonnegative");
    }
    return precision;
}

}  // namespace

Series::Series(int precision) : coeffs_(check_precision(precision) + 1) {}

Series::Series(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw std::domain_error("a series needs at least its constant coefficient");
    }
}

Series::Series(std::initializer_list<Rational> coeffs)
    : Series(std::vector<Rational>(coeffs)) {}

Series Series::constant(const Rational& value, int precision) {
    Series result(precision);
    result.coeffs_[0] = value;
    return result;
}

Series Series::monomial(const Rational& value, int power, int precision) {
    Series result(precision);
    if (power < 0 || power > precision) {
        throw std::out_of_range("monomial power outside the series precision");
    }
    result.coeffs_[power] = value;
    return result;
}

Series Series::identity(int precision) {
    return monomial(1, 1, precision);
}

const Rational& Series::coeff(int n) const {
    if (n < 0 || n > precision()) {
        throw std::out_of_range("coefficient index " + std::to_string(n) +
                                " outside known precision " + std::to_string(precision()));
    }
    return coeffs_[static_cast<std::size_t>(n)];
}

bool Series::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return c.is_zero(); });
}

int Series::valuation() const {
    int n = 0;
    while (n <= precision() && coeffs_[static_cast<std::size_t>(n)].is_zero()) {
        ++n;
    }
    return n;
}

Series Series::truncated(int new_precision) const {
    if (new_precision < 0 || new_precision > precision()) {
        throw std::out_of_range("cannot truncate to precision " +
                                std::to_string(new_precision) + " from " +
                                std::to_string(precision()));
    }
    return Series(std::vector<Rational>(coeffs_.begin(),
                                        coeffs_.begin() + new_precision + 1));
}

bool Series::agrees_with(const Series& other) const {
    int shared = std::min(precision(), other.precision());
    for (int n = 0; n <= shared; ++n) {
        if (!(coeffs_[static_cast<std::size_t>(n)] ==
              other.coeffs_[static_cast<std::size_t>(n)])) {
            return false;
        }
    }
    return true;
}

std::string Series::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i > 0) {
            os << ", ";
        }
        os << coeffs_[i].str();
    }
    os << ']';
    return os.str();
}

Series operator+(const Series& a, const Series& b) {
    int n = std::min(a.precision(), b.precision());
    std::vector<Rational> sum(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        sum[static_cast<std::size_t>(i)] = a.coeff(i) + b.coeff(i);
    }
    return Series(std::move(sum));
}

Series operator-(const Series& a, const Series& b) {
    int n = std::min(a.precision(), b.precision());
    std::vector<Rational> diff(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        diff[static_cast<std::size_t>(i)] = a.coeff(i) - b.coeff(i);
    }
    return Series(std::move(diff));
}

Series operator-(const Series& s) {
    std::vector<Rational> negated(s.coeffs().size());
    for (std::size_t i = 0; i < negated.size(); ++i) {
        negated[i] = -s.coeffs()[i];
    }
    return Series(std::move(negated));
}

Series operator*(const Series& a, const Series& b) {
    // Cauchy product, truncated: c_r = sum_{s<=r} a_s b_{r-s}.
    int n = std::min(a.precision(), b.precision());
    std::vector<Rational> prod(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        if (a.coeff(i).is_zero()) {
            continue;
        }
        for (int j = 0; i + j <= n; ++j) {
            prod[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
        }
    }
    return Series(std::move(prod));
}

Series operator*(const Rational& scalar, const Series& s) {
    std::vector<Rational> scaled(s.coeffs().size());
    for (std::size_t i = 0; i < scaled.size(); ++i) {
        scaled[i] = scalar * s.coeffs()[i];
    }
    return Series(std::move(scaled));
}

Series operator*(const Series& s, const Rational& scalar) {
    return scalar * s;
}

Series derivative(const Series& s) {
    if (s.precision() < 1) {
        throw std::domain_error("derivative of a precision-0 series is unknown");
    }
    std::vector<Rational> diff(static_cast<std::size_t>(s.precision()));
    for (int r = 1; r <= s.precision(); ++r) {
        diff[static_cast<std::size_t>(r - 1)] = Rational(r) * s.coeff(r);
    }
    return Series(std::move(diff));
}

Series pow(const Series& s, int exponent) {
    if (exponent < 0) {
        throw std::domain_error("series power with negative exponent");
    }
    Series result = Series::constant(1, s.precision());
    Series base = s;
    while (exponent > 0) {
        if (exponent & 1) {
            result = result * base;
        }
        exponent >>= 1;
        if (exponent > 0) {
            base = base * base;
        }
    }
    return result;
}

Series recip(const Series& s) {
    if (s.coeff(0).is_zero()) {
        throw std::domain_error("series with constant term zero is not invertible");
    }
    // r_0 = 1/s_0 and r_n = -(1/s_0) * sum_{i=1..n} s_i r_{n-i}.
    Rational lead_inv = s.coeff(0).inverse();
    std::vector<Rational> inv(s.coeffs().size());
    inv[0] = lead_inv;
    for (int n = 1; n <= s.precision(); ++n) {
        Rational acc;
        for (int i = 1; i <= n; ++i) {
            acc += s.coeff(i) * inv[static_cast<std::size_t>(n - i)];
        }
        inv[static_cast<std::size_t>(n)] = -(lead_inv * acc);
    }
    return Series(std::move(inv));
}

Series compose(const Series& outer, const Series& inner) {
    if (!inner.coeff(0).is_zero()) {
        throw std::domain_error("composition needs an inner series with constant term zero");
    }
    // Horner evaluation; valuation >= 1 of the inner series means the n-th
    // result coefficient only ever touches outer coefficients <= n.
    int n = std::min(outer.precision(), inner.precision());
    Series acc = Series::constant(outer.coeff(n), n);
    for (int k = n - 1; k >= 0; --k) {
        acc = acc * inner + Series::constant(outer.coeff(k), n);
    }
    return acc;
}

Series mul_by_x(const Series& s) {
    std::vector<Rational> shifted(s.coeffs().size() + 1);
    for (std::size_t i = 0; i < s.coeffs().size(); ++i) {
        shifted[i + 1] = s.coeffs()[i];
    }
    return Series(std::move(shifted));
}

std::ostream& operator<<(std::ostream& os, const Series& s) {
    return os << s.str();
}

}  // namespace lif
