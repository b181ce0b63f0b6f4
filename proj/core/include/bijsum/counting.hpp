#pragma once

#include "bijsum/arith.hpp"
#include "bijsum/errors.hpp"
#include "bijsum/function_table.hpp"
#include "bijsum/group.hpp"

#include <cstdint>
#include <string>

namespace bijsum {

// Resource caps shared by the exact counters. Every cap is a parameter so
// callers can trade time for reach; defaults keep any single call at desk
// scale.
struct Budgets {
    std::uint64_t state_budget = 50'000'000;   // live DP states, summed over levels
    std::uint64_t char_budget = 10'000'000;    // enumerated character vectors
    std::uint64_t pair_budget = 10'000'000;    // enumerated injection pairs
    std::uint64_t cell_budget = 10'000'000;    // histogram cells n^m
    std::uint64_t kernel_budget = 1'000'000;   // outer-sum kernel invocations
    int triple_dp_max_n = 9;
    int direct_max_n = 14;
    int threads = 1;
};

enum class Strategy { Auto, PairDp, TripleDp, OuterSum, Fourier };

Strategy strategy_from_string(const std::string& name);
std::string strategy_name(Strategy s);

struct CountResult {
    BigInt count;
    int d = 0;
    std::string strategy;
    double elapsed_ms = 0.0;
};

// Solutions to pi_1 + ... + pi_d = f with every pi_i a bijection exist only
// when sum(f) = d * sigma(G).
bool feasible(const AbelianGroup& g, const FunctionTable& f, int d);

// Ordered pairs of bijections with pi_1 + pi_2 = f, by a DP over positions
// whose state is the pair of used-value masks.
CountResult count_pairs(const AbelianGroup& g, const FunctionTable& f, const Budgets& budgets = {});

// Ordered d-tuples of bijections summing to f. Strategies:
//   pair-dp    d = 2 mask DP
//   triple-dp  d = 3 three-mask DP (capped at triple_dp_max_n)
//   outer-sum  enumerate the first bijection, recurse on d-1
//   fourier    n^(d-1)n * sum over all character vectors of coeff^d * chi(f),
//              rounded; the residual must stay below 0.5
// Auto picks the cheapest exact route and never picks fourier.
CountResult count_tuples(const AbelianGroup& g, const FunctionTable& f, int d,
                         Strategy strategy = Strategy::Auto, const Budgets& budgets = {});

// exp(-(2n^2)^-1 * sum_x |f^-1(x)|^2) together with the collision entropy
// -ln sum_x P(f = x)^2; the two satisfy value = exp(-exp(-H2)/2) exactly.
struct SingularSeries {
    double value;
    double collision_entropy;
};
SingularSeries singular_series(const AbelianGroup& g, const FunctionTable& f);

// Leading-order prediction for count_tuples. d = 2 applies to bijective f
// only; d = 3 carries the singular series; d >= 4 is flat in f.
struct Prediction {
    bool available = false;
    bool is_feasible = false;
    double main_value = 0.0;
    double singular_series = 0.0;
    std::string formula;
};
Prediction predict(const AbelianGroup& g, const FunctionTable& f, int d);

// Exact distribution of pi_1 + pi_2 over G^m for independent uniform
// injections {1..m} -> G, compared against uniform. l2 and l1 are norms with
// respect to the uniform probability measure on G^m; tv = l1/2.
struct DistanceReport {
    double l2;
    double l1;
    double tv;
    int m;
    int n;
};
DistanceReport injection_distribution_distance(const AbelianGroup& g, int m,
                                               const Budgets& budgets = {});

}  // namespace bijsum
