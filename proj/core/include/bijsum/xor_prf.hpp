#pragma once

#include "bijsum/counting.hpp"

#include <optional>

namespace bijsum {

// Security accounting for the xor-of-permutations construction on k-bit
// blocks: F(x) = E_1(x) xor E_2(x) with independent random permutations.
// The distinguishing advantage after m queries obeys
//
//   adv(m) <= 2 * prp_adv + constant * m / 2^(3k/2),
//
// and the information-theoretic core of that bound is the exact total
// variation distance between (pi_1 + pi_2 restricted to m points) and uniform,
// which xor_tv computes by full enumeration over G = (Z/2)^k.
struct AdvantageReport {
    int bits = 0;
    int queries = 0;
    double prp_advantage_input = 0.0;
    double bound_constant = 0.0;
    double bound_value = 0.0;
    std::optional<double> exact_tv;
    std::optional<double> empirical_constant;  // tv * n^(3/2) / m
};

// Requires queries < 2^bits. The constant is caller-supplied; nothing here
// pins a numeric value for it.
double advantage_bound(int bits, int queries, double prp_adv, double constant);

// Exact distributional distance for m = queries sampled points.
AdvantageReport xor_tv(int bits, int queries, const Budgets& budgets = {});

// Bound plus optional exact branch in one report.
AdvantageReport xor_advantage(int bits, int queries, double prp_adv, double constant,
                              bool exact, const Budgets& budgets = {});

}  // namespace bijsum
