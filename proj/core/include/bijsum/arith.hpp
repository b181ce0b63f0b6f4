#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace bijsum {

// Exact integer type for solution counts. n!^3 already overflows 64 bits at
// n = 10, so every count that crosses a module boundary uses BigInt.
using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(int n);
BigInt binomial(int n, int k);

// n! / (a_1! a_2! ... a_k!), requires sum(parts) == n.
BigInt multinomial(int n, const std::vector<int>& parts);

BigInt ipow(BigInt base, int exp);

double to_double(const BigInt& v);

// n! / n^n, the density of bijections among all n-tuples over an n-set.
double bijection_density(int n);

}  // namespace bijsum
