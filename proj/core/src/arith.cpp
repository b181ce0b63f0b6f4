#include "bijsum/arith.hpp"

#include <stdexcept>

namespace bijsum {

BigInt factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact: r is always an integer after this step
    }
    return r;
}

BigInt multinomial(int n, const std::vector<int>& parts) {
    int total = 0;
    for (int a : parts) {
        if (a < 0) throw std::invalid_argument("multinomial: negative part");
        total += a;
    }
    if (total != n) throw std::invalid_argument("multinomial: parts do not sum to n");
    BigInt r = factorial(n);
    for (int a : parts) r /= factorial(a);
    return r;
}

BigInt ipow(BigInt base, int exp) {
    if (exp < 0) throw std::invalid_argument("ipow: negative exponent");
    BigInt r = 1;
    while (exp > 0) {
        if (exp & 1) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

double to_double(const BigInt& v) { return v.convert_to<double>(); }

double bijection_density(int n) {
    long double num = factorial(n).convert_to<long double>();
    long double den = 1.0L;
    for (int i = 0; i < n; ++i) den *= n;
    return static_cast<double>(num / den);
}

}  // namespace bijsum
