#include "facemagic/formulas.hpp"

#include <limits>

#include "facemagic/construct.hpp"
#include "facemagic/errors.hpp"

namespace facemagic {

static long long checked_mul(long long a, long long b) {
    if (a != 0 && b > std::numeric_limits<long long>::max() / a)
        throw ValidationError("count formula overflows 64-bit arithmetic");
    return a * b;
}

static long long factorial(int k) {
    long long f = 1;
    for (int t = 2; t <= k; ++t) f = checked_mul(f, t);
    return f;
}

static long long pow2(int e) {
    if (e < 0 || e > 62) throw ValidationError("2^" + std::to_string(e) + " out of range");
    return 1LL << e;
}

long long beta(int m) {
    if (m < 3 || m % 2 == 0) throw ValidationError("beta needs an odd argument >= 3");
    if (m % 4 == 1) {
        const long long f = factorial((m - 1) / 4);
        return checked_mul(f, f);
    }
    return checked_mul(factorial((m - 3) / 4), factorial((m + 1) / 4));
}

long long count_value_mid(int m, int n) {
    if (m == n) return checked_mul(checked_mul(tau(m, m), pow2(m - 3)),
                                   checked_mul(factorial((m - 1) / 2), factorial((m - 1) / 2)));
    return checked_mul(checked_mul(tau(m, n) + tau(n, m), pow2((m + n) / 2 - 3)),
                       checked_mul(factorial((m - 1) / 2), factorial((n - 1) / 2)));
}

long long lower_bound_value_plus(int m, int n) {
    if (m == n)
        return checked_mul(checked_mul(tau(m, m), pow2(m - 3)), checked_mul(beta(m), beta(m)));
    return checked_mul(checked_mul(tau(m, n) + tau(n, m), pow2((m + n) / 2 - 3)),
                       checked_mul(beta(m), beta(n)));
}

long long lower_bound_total(int m, int n) {
    return count_value_mid(m, n) + 2 * lower_bound_value_plus(m, n);
}

} // namespace facemagic
