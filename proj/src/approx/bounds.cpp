#include "eksr/approx/bounds.hpp"

#include "eksr/core/error.hpp"

#include <algorithm>

namespace eksr {

Rational closed_form_bound(int k, BoundCase which) {
    if (k < 3) throw DomainError("closed_form_bound needs k >= 3");
    const int K = which == BoundCase::Neq ? k - 2 : k - 1;
    const Rational weight = which == BoundCase::Neq ? Rational(1, 4) : Rational(1, 2);
    const Rational denom(pow2(static_cast<unsigned long>(K)));
    Rational sum = 0;
    for (int j = 0; j <= K; ++j) {
        Rational p(binomial(static_cast<unsigned long>(K), static_cast<unsigned long>(j)));
        p /= denom;
        Rational last(j, j + 1);
        Rational bracket = last * last + 1;
        if (which == BoundCase::Neq) bracket += make_rational(2 * (j + 1), j + 2);
        sum += weight * p * bracket;
    }
    return sum;
}

Rational approximation_factor(int k) {
    return std::min(closed_form_bound(k, BoundCase::Neq), closed_form_bound(k, BoundCase::Eq));
}

Rational simple_factor_bound(int k) {
    if (k < 3) throw DomainError("simple_factor_bound needs k >= 3");
    return 1 - Rational(1, k - 1) - Rational(1, k);
}

Rational binom_sum(int n, int shift) {
    if (n < 0) throw DomainError("binom_sum needs n >= 0");
    if (shift != 1 && shift != 2) throw DomainError("binom_sum shift must be 1 or 2");
    Rational sum = 0;
    for (int j = 0; j <= n; ++j)
        sum += Rational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(j))) /
               (j + shift);
    return sum;
}

Rational binom_sum_closed(int n, int shift) {
    if (n < 0) throw DomainError("binom_sum_closed needs n >= 0");
    BigInt p = pow2(static_cast<unsigned long>(n) + 1);
    if (shift == 1) return make_rational(p - 1, BigInt(n + 1));
    if (shift == 2) return make_rational(p * n + 1, BigInt(n + 1) * (n + 2));
    throw DomainError("binom_sum_closed shift must be 1 or 2");
}

}  // namespace eksr
