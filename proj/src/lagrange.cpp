#include "lif/lagrange.hpp"

#include <stdexcept>
#include <string>

namespace lif {

namespace {

void require_precision(const Series& s, int needed, const char* role) {
    if (s.precision() < needed) {
        throw std::out_of_range(std::string(role) + " carries precision " +
                                std::to_string(s.precision()) + " but " +
                                std::to_string(needed) + " is needed");
    }
}

Series apply_equation(const Series& phi, const Series& a, int precision) {
    return mul_by_x(compose(phi, a)).truncated(precision);
}

}  // namespace

Series solve_functional_equation(const FunctionalEquation& eq) {
    if (eq.precision < 0) {
        throw std::domain_error("requested precision must be nonnegative");
    }
    require_precision(eq.phi, eq.precision - 1, "phi");

    // Fixed-point iteration A <- x*phi(A) starting from 0; every pass
    // freezes at least one more coefficient, so precision+1 passes settle
    // all of them.
    Series a(eq.precision);
    for (int step = 0; step <= eq.precision; ++step) {
        a = apply_equation(eq.phi, a, eq.precision);
    }
    if (!(apply_equation(eq.phi, a, eq.precision) == a)) {
        throw std::logic_error("functional-equation iteration did not reach a fixpoint");
    }
    return a;
}

Series solve_functional_equation(const Series& phi, int precision) {
    return solve_functional_equation(FunctionalEquation{phi, precision});
}

Rational lif_coefficient(const Series& h, const Series& phi, int n) {
    if (n < 0) {
        throw std::domain_error("coefficient index must be nonnegative");
    }
    require_precision(h, n, "h");
    if (n == 0) {
        // A has no constant term, so [x^0] H(A) = h_0; the identity itself
        // degenerates to 0 = 0 at n = 0.
        return h.coeff(0);
    }
    require_precision(phi, n - 1, "phi");

    Series phi_pow = pow(phi.precision() > n - 1 ? phi.truncated(n - 1) : phi, n);
    return Rational(1, n) * (derivative(h) * phi_pow).coeff(n - 1);
}

std::vector<LifReport> lif_verify(const Series& h, const Series& phi, int max_n) {
    if (max_n < 0) {
        throw std::domain_error("max_n must be nonnegative");
    }
    require_precision(h, max_n, "h");
    require_precision(phi, max_n, "phi");

    Series h_of_a = compose(h, solve_functional_equation(phi, max_n));

    std::vector<LifReport> reports;
    reports.reserve(static_cast<std::size_t>(max_n) + 1);
    // n = 0: the left side carries the explicit factor 0 and the right
    // side asks for a negative power of z, so both sides are zero.
    reports.push_back(LifReport{0, 0, 0, true});

    if (max_n >= 1) {
        Series h_prime = derivative(h);
        Series phi_pow = Series::constant(1, phi.precision());
        for (int n = 1; n <= max_n; ++n) {
            phi_pow = phi_pow * phi;
            Rational lhs_times_n = Rational(n) * h_of_a.coeff(n);
            Rational rhs = (h_prime * phi_pow).coeff(n - 1);
            reports.push_back(LifReport{n, lhs_times_n, rhs, lhs_times_n == rhs});
        }
    }
    return reports;
}

Rational power_coefficient(int k, const Series& phi, int n) {
    if (k < 0 || n < 0) {
        throw std::domain_error("power and coefficient index must be nonnegative");
    }
    if (n == 0) {
        // A^0 = 1; every positive power of A has valuation >= 1.
        return k == 0 ? Rational(1) : Rational(0);
    }
    require_precision(phi, n, "phi");
    if (k == 0 || k > n) {
        // A^k has valuation k, so no x^n term survives outside 1 <= k <= n.
        return Rational(0);
    }
    Series phi_pow = pow(phi.precision() > n ? phi.truncated(n) : phi, n);
    return Rational(k, n) * phi_pow.coeff(n - k);
}

Series compositional_inverse(const Series& f) {
    require_precision(f, 1, "f");
    if (!f.coeff(0).is_zero()) {
        throw std::domain_error("not invertible: constant term is nonzero");
    }
    if (f.coeff(1).is_zero()) {
        throw std::domain_error("not invertible: linear coefficient is zero");
    }
    // G = f^(-1) satisfies G = x * phi(G) with phi = 1/(f/x), so the
    // functional-equation solver produces it directly.
    std::vector<Rational> shifted_down(f.coeffs().begin() + 1, f.coeffs().end());
    Series phi = recip(Series(std::move(shifted_down)));
    return solve_functional_equation(phi, f.precision());
}

}  // namespace lif
