#include "bijsum/xor_prf.hpp"

#include <cmath>
#include <stdexcept>

namespace bijsum {

namespace {

void check_args(int bits, int queries) {
    if (bits < 1 || bits > 20) throw std::invalid_argument("bits must be in [1, 20]");
    if (queries < 1) throw std::invalid_argument("queries must be >= 1");
    if (queries >= (1 << bits))
        throw std::invalid_argument("bound needs queries < 2^bits");
}

}  // namespace

double advantage_bound(int bits, int queries, double prp_adv, double constant) {
    check_args(bits, queries);
    if (prp_adv < 0.0 || constant < 0.0)
        throw std::invalid_argument("prp advantage and constant must be nonnegative");
    return 2.0 * prp_adv + constant * queries * std::exp2(-1.5 * bits);
}

AdvantageReport xor_tv(int bits, int queries, const Budgets& budgets) {
    check_args(bits, queries);
    AbelianGroup g{std::vector<int>(bits, 2)};
    DistanceReport dist = injection_distribution_distance(g, queries, budgets);
    AdvantageReport r;
    r.bits = bits;
    r.queries = queries;
    r.exact_tv = dist.tv;
    double n = std::exp2(bits);
    r.empirical_constant = dist.tv * std::pow(n, 1.5) / queries;
    return r;
}

AdvantageReport xor_advantage(int bits, int queries, double prp_adv, double constant,
                              bool exact, const Budgets& budgets) {
    AdvantageReport r;
    if (exact) r = xor_tv(bits, queries, budgets);
    r.bits = bits;
    r.queries = queries;
    r.prp_advantage_input = prp_adv;
    r.bound_constant = constant;
    r.bound_value = advantage_bound(bits, queries, prp_adv, constant);
    return r;
}

}  // namespace bijsum
