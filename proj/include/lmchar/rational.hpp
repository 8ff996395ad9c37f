#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace lmchar {

// Exact arbitrary-precision scalars. Every computation in this library is
// exact; nothing rounds. Expression templates are off so that arithmetic
// yields plain values suitable for container storage.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

inline Int factorial(unsigned n) {
    Int r = 1;
    for (unsigned k = 2; k <= n; ++k) r *= k;
    return r;
}

inline Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact: r is a binomial coefficient at every step
    }
    return r;
}

}  // namespace lmchar
