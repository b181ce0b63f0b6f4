#pragma once

#include "bijsum/counting.hpp"
#include "bijsum/function_table.hpp"
#include "bijsum/group.hpp"

#include <span>
#include <vector>

namespace bijsum {

// d-dimensional Latin hypercube of order n built from a bijection pi on G:
// the cell (i_1,...,i_d) holds the symbol pi^-1(pi(i_1) + ... + pi(i_d)).
// Symbols are position indices 0..n-1. Fixing all but one axis and varying
// the rest walks a coset, so every line is a permutation of the symbols.
class LatinCubeView {
public:
    LatinCubeView(AbelianGroup g, FunctionTable pi, int d);

    int order() const { return group_.order(); }
    int dim() const { return d_; }
    int entry(std::span<const int> idx) const;
    bool latin_property_holds() const;

    const AbelianGroup& group() const { return group_; }
    const FunctionTable& pi() const { return pi_; }

private:
    AbelianGroup group_;
    FunctionTable pi_;
    std::vector<int> pi_inv_;
    int d_;
};

struct TransversalCount {
    BigInt count;
    int n = 0;
    int d = 0;
    double taranenko_ratio = 0.0;
};

// count / (n^(d-1) / e^d)^n, the count measured against the upper-bound scale
// for transversal counts of d-dimensional Latin hypercubes.
double taranenko_ratio(int d, int n, const BigInt& count);

// Exact transversal count by a DP over the first axis. The state is one
// used-index mask per remaining axis plus a used-symbol mask; only the cell
// accessor is consulted, never the algebraic structure behind it.
// Gated at n <= 12 for d = 2, n <= 8 for d = 3, n <= 5 for d >= 4.
TransversalCount count_transversals(const LatinCubeView& cube, const Budgets& budgets = {});

// Transversals of the cube built from pi are in bijection with solutions of
// pi_1 + ... + pi_d = pi; appending the free (d+1)-th bijection multiplies
// the count by n!. Both identities are checked against independent counts.
struct CrosscheckReport {
    BigInt transversals;
    BigInt tuple_count;        // solutions of pi_1 + ... + pi_d = pi
    BigInt extended_lhs;       // transversals * n!
    BigInt extended_rhs;       // sum over bijections b of count(pi_1+...+pi_d = b)
    bool extended_checked = false;
    bool ok = false;
};
CrosscheckReport lemma_crosscheck(const AbelianGroup& g, const FunctionTable& pi, int d,
                                  const Budgets& budgets = {});

}  // namespace bijsum
