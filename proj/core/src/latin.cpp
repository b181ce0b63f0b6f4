#include "bijsum/latin.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace bijsum {

LatinCubeView::LatinCubeView(AbelianGroup g, FunctionTable pi, int d)
    : group_(std::move(g)), pi_(std::move(pi)), d_(d) {
    if (d_ < 2) throw std::invalid_argument("cube dimension must be >= 2");
    if (pi_.group != group_) throw std::invalid_argument("pi lives on a different group");
    if (!pi_.bijective()) throw std::invalid_argument("pi must be a bijection");
    pi_inv_.assign(group_.order(), -1);
    for (int i = 0; i < group_.order(); ++i) pi_inv_[pi_.values[i]] = i;
}

int LatinCubeView::entry(std::span<const int> idx) const {
    if (static_cast<int>(idx.size()) != d_) throw std::invalid_argument("cell index arity mismatch");
    int s = 0;
    for (int i : idx) {
        if (i < 0 || i >= group_.order()) throw std::invalid_argument("cell index out of range");
        s = group_.add(s, pi_.values[i]);
    }
    return pi_inv_[s];
}

bool LatinCubeView::latin_property_holds() const {
    int n = group_.order();
    std::vector<int> idx(d_, 0);
    // Walk every line: fix all axes but one, vary the free axis.
    for (int axis = 0; axis < d_; ++axis) {
        std::fill(idx.begin(), idx.end(), 0);
        while (true) {
            std::vector<char> seen(n, 0);
            for (int v = 0; v < n; ++v) {
                idx[axis] = v;
                int s = entry(idx);
                if (seen[s]) return false;
                seen[s] = 1;
            }
            idx[axis] = 0;
            int a = d_ - 1;
            while (a >= 0) {
                if (a == axis) { --a; continue; }
                if (++idx[a] < n) break;
                idx[a] = 0;
                --a;
            }
            if (a < 0) break;
        }
    }
    return true;
}

double taranenko_ratio(int d, int n, const BigInt& count) {
    // (n^(d-1)/e^d)^n in logs to dodge overflow; the count itself fits a double
    // at every gated size.
    double log_scale = n * ((d - 1) * std::log(double(n)) - double(d));
    return to_double(count) * std::exp(-log_scale);
}

TransversalCount count_transversals(const LatinCubeView& cube, const Budgets& budgets) {
    int n = cube.order();
    int d = cube.dim();
    int cap = d == 2 ? 12 : d == 3 ? 8 : 5;
    if (n > cap) throw BudgetError("count_transversals: order exceeds the DP gate for this dimension");
    if (static_cast<std::uint64_t>(d) * n > 60)
        throw BudgetError("count_transversals: mask packing needs d*n <= 60");

    // States are packed as d n-bit masks: axes 2..d first, symbol mask last.
    // Level i holds only masks of popcount i, so the map stays level-synchronized.
    std::unordered_map<std::uint64_t, BigInt> level;
    level[0] = 1;
    std::uint64_t states_seen = 1;
    std::vector<int> cell(d, 0);
    std::vector<std::uint32_t> masks(d - 1, 0);
    for (int i = 0; i < n; ++i) {
        std::unordered_map<std::uint64_t, BigInt> next;
        next.reserve(level.size() * (n - i));
        cell[0] = i;
        for (const auto& [key, ways] : level) {
            std::uint32_t symbols = static_cast<std::uint32_t>(key >> (std::uint64_t(d - 1) * n)) &
                                    ((1u << n) - 1);
            for (int a = 0; a < d - 1; ++a)
                masks[a] = static_cast<std::uint32_t>(key >> (std::uint64_t(a) * n)) & ((1u << n) - 1);

            // Odometer over the free coordinates of axes 2..d.
            std::vector<int> pick(d - 1, -1);
            int a = 0;
            while (a >= 0) {
                if (a == d - 1) {
                    for (int t = 0; t < d - 1; ++t) cell[t + 1] = pick[t];
                    int s = cube.entry(cell);
                    if (!(symbols & (1u << s))) {
                        std::uint64_t nk = key | (std::uint64_t(1) << (std::uint64_t(d - 1) * n + s));
                        for (int t = 0; t < d - 1; ++t)
                            nk |= std::uint64_t(1) << (std::uint64_t(t) * n + pick[t]);
                        next[nk] += ways;
                    }
                    --a;
                    continue;
                }
                int v = pick[a] + 1;
                while (v < n && (masks[a] & (1u << v))) ++v;
                if (v == n) {
                    pick[a] = -1;
                    --a;
                } else {
                    pick[a] = v;
                    ++a;
                }
            }
        }
        states_seen += next.size();
        if (states_seen > budgets.state_budget) throw BudgetError("count_transversals: state budget exceeded");
        level = std::move(next);
    }
    TransversalCount r;
    r.n = n;
    r.d = d;
    r.count = level.empty() ? BigInt(0) : level.begin()->second;
    r.taranenko_ratio = taranenko_ratio(d, n, r.count);
    return r;
}

CrosscheckReport lemma_crosscheck(const AbelianGroup& g, const FunctionTable& pi, int d,
                                  const Budgets& budgets) {
    LatinCubeView cube(g, pi, d);
    int n = g.order();
    CrosscheckReport r;
    r.transversals = count_transversals(cube, budgets).count;
    r.tuple_count = count_tuples(g, pi, d, Strategy::Auto, budgets).count;
    r.ok = (r.transversals == r.tuple_count);

    // Appending the free bijection: transversals * n! must equal the number of
    // (d+1)-tuples of bijections with pi_1 + ... + pi_d = pi_{d+1}, summed here
    // the long way over every right-hand side.
    if (factorial(n) <= budgets.kernel_budget) {
        r.extended_checked = true;
        r.extended_lhs = r.transversals * factorial(n);
        r.extended_rhs = 0;
        FunctionTable b = identity_table(g);
        std::vector<int>& perm = b.values;
        do {
            r.extended_rhs += count_tuples(g, b, d, Strategy::Auto, budgets).count;
        } while (std::next_permutation(perm.begin(), perm.end()));
        r.ok = r.ok && (r.extended_lhs == r.extended_rhs);
    }
    return r;
}

}  // namespace bijsum
