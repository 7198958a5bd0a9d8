#pragma once

#include "eksr/core/rational.hpp"

namespace eksr {

// NEQ: the endpoints disagree on the clause; EQ: they agree on it.
enum class BoundCase { Neq, Eq };

// Per-clause survival lower bound of the rounding walk, as an exact sum.
// Throws DomainError for k < 3.
Rational closed_form_bound(int k, BoundCase which);

// min(NEQ, EQ): the approximation factor guaranteed for width k.
Rational approximation_factor(int k);

// 1 - 1/(k-1) - 1/k, the simple lower bound on approximation_factor.
Rational simple_factor_bound(int k);

// sum_{j=0..n} C(n,j)/(j+shift) by direct summation, shift in {1, 2}.
Rational binom_sum(int n, int shift);

// Closed forms: (2^{n+1}-1)/(n+1) for shift 1 and
// (2^{n+1} n + 1)/((n+1)(n+2)) for shift 2.
Rational binom_sum_closed(int n, int shift);

}  // namespace eksr
