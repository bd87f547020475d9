#include "modasc/integer.hpp"

#include <algorithm>

namespace modasc {

Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Integer r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

Integer factorial(std::size_t n) {
    Integer r = 1;
    for (std::size_t i = 2; i <= n; ++i) r *= i;
    return r;
}

Integer power(const Integer& base, std::size_t exp) {
    Integer r = 1;
    for (std::size_t i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace modasc
