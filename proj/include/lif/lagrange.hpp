#pragma once

#include <vector>

#include "lif/series.hpp"

namespace lif {

/* The equation A(x) = x * phi(A(x)) together with the precision the
   solution is requested at. phi must carry at least precision-1
   coefficients; those are exactly the ones that determine a_1..a_N. */
struct FunctionalEquation {
    Series phi;
    int precision;
};

/* One degree of the inversion identity in division-free form:
   lhs_times_n = n*[x^n] H(A(x)),  rhs = [z^(n-1)] H'(z) phi^n(z). */
struct LifReport {
    int n;
    Rational lhs_times_n;
    Rational rhs;
    bool holds;
};

/* Unique solution A with a_0 = 0, by fixed-point iteration; the fixpoint
   A = x * phi(A) is asserted before returning. */
Series solve_functional_equation(const FunctionalEquation& eq);
Series solve_functional_equation(const Series& phi, int precision);

/* [x^n] H(A(x)) computed as (1/n) [z^(n-1)] H'(z) phi^n(z) for n >= 1,
   and as h_0 for n = 0 (a_0 = 0 forces the constant term of H(A)). */
Rational lif_coefficient(const Series& h, const Series& phi, int n);

/* Checks n*[x^n] H(A) = [z^(n-1)] H' phi^n for each 0 <= n <= max_n,
   computing the two sides along independent routes and never dividing
   by n, so the check is meaningful over any coefficient ring. */
std::vector<LifReport> lif_verify(const Series& h, const Series& phi, int max_n);

/* [x^n] A^k(x), via k/n * [z^(n-k)] phi^n(z) for 1 <= k <= n. */
Rational power_coefficient(int k, const Series& phi, int n);

/* G with f(G(x)) = x = G(f(x)) up to f's precision; requires f_0 = 0 and
   f_1 != 0. */
Series compositional_inverse(const Series& f);

}  // namespace lif
