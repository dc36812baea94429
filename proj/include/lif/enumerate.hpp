#pragma once

#include <gmpxx.h>

#include <vector>

#include "lif/rational.hpp"

namespace lif {

/* Family of unlabelled rooted plane trees in which every internal vertex
   has exactly `arity` ordered children. Trees are measured by their total
   vertex count, external and internal vertices alike. */
struct TreeFamily {
    int arity;  // >= 1
};

struct CountTable {
    TreeFamily family;
    std::vector<mpz_class> counts;  // counts[n] = objects with n vertices
};

/* counts[n] = number of trees of the family with n vertices. Big-integer
   dynamic programming over iterated convolutions; independent of the
   series types by construction, so it can serve as their cross-check. */
CountTable count_trees(TreeFamily family, int max_n);

/* counts[n] = number of ordered k-sequences of trees with n vertices in
   total. k = 0 yields the empty forest only (counts[0] = 1). */
CountTable count_forests(TreeFamily family, int k, int max_n);

/* (1/n) * binomial(n, (n-1)/t) when t divides n-1, else 0. Always an
   integer-valued Rational, equal to count_trees(family, n).counts[n]. */
Rational closed_form(TreeFamily family, int n);

}  // namespace lif
