#pragma once

#include "bijsum/errors.hpp"
#include "bijsum/function_table.hpp"
#include "bijsum/group.hpp"

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

namespace bijsum {

// Character vector chi = (chi_1,...,chi_n) on G^n, n = |G|, stored as dual
// indices per position. The object of study is the Fourier coefficient of
// the bijection indicator,
//
//   coeff(chi) = n^-n * sum over injective (x_1,...,x_n) of
//                prod_i pair(chi_i, x_i),
//
// which depends only on the multiset {chi_1,...,chi_n}.
struct CharacterVector {
    AbelianGroup group;
    std::vector<int> coords;

    // Number of nonzero coordinates.
    int sparsity() const;
    // Nonzero dual indices, ascending, with repeats.
    std::vector<int> nonzero_sorted() const;
    // Multiplicity of each distinct coordinate value (zero included),
    // ascending by dual index.
    std::vector<std::pair<int, int>> multiplicities() const;
};

CharacterVector trivial_character(const AbelianGroup& g);
CharacterVector sparse_character(const AbelianGroup& g, const std::vector<int>& nonzero);

// chi_i + psi in every coordinate. coeff transforms by the exact law
// coeff(shifted) = coeff(chi) * pair(psi, sigma(G)).
CharacterVector shift_character(const CharacterVector& chi, int psi);

// prod_i pair(chi_i, f(i)).
std::complex<double> apply_character(const CharacterVector& chi, const FunctionTable& f);

struct FourierValue {
    std::complex<double> value;  // raw coefficient, already carrying the n^-n factor
};

// Permanent-based evaluation: coeff = n^-n * perm(M), M[i][x] = pair(chi_i, x),
// via inclusion-exclusion over column subsets with Gray-code updates.
// Cost 2^n * n; refuses n > hard_cap.
FourierValue coeff_direct(const CharacterVector& chi, int hard_cap = 14);

// Memoized evaluation through the structure recursion on the multiset of
// nonzero coordinates. Not thread-safe: confine each table to one thread.
class FourierTable {
public:
    explicit FourierTable(AbelianGroup g, std::size_t memo_cap = std::size_t{1} << 22);

    FourierValue coeff(const CharacterVector& chi);

    // Same, keyed directly by the ascending multiset of nonzero dual indices.
    std::complex<double> coeff_multiset(const std::vector<int>& nonzero);

    const AbelianGroup& group() const { return group_; }
    std::size_t memo_size() const { return memo_.size(); }

private:
    AbelianGroup group_;
    std::size_t memo_cap_;
    double empty_value_;  // n!/n^n
    std::map<std::vector<int>, std::complex<double>> memo_;
};

struct EntropyReport {
    double entropy;   // n^-1 * ln multinomial(n; multiplicities of chi)
    double shannon;   // sum (a_i/n) ln(n/a_i) over the same multiplicities
    int distinct;     // number of distinct coordinate values
};
EntropyReport entropy_report(const CharacterVector& chi);

// Set partitions of the nonzero coordinates whose parts each sum to the
// trivial character ("killing" partitions), enumerated via restricted-growth
// strings. m <= 10.
struct KillingClassification {
    int max_parts;             // largest part count over killing partitions, 0 if none
    bool unique_max_pairing;   // exactly one killing partition with m/2 parts
    bool in_main_class;        // m even and unique_max_pairing
};
KillingClassification classify_killing(const AbelianGroup& g, const std::vector<int>& nonzero);

// sum over m-sparse chi of coeff(chi)^d * apply_character(chi, f).
// Enumerates all C(n,m)*(n-1)^m vectors; refuses when that exceeds the budget.
std::complex<double> sparse_power_sum(FourierTable& table, int m, int d, const FunctionTable& f,
                                      std::uint64_t char_budget = 10'000'000);

// sum over m-sparse chi of |coeff(chi)|^2, with its scale C(n,m)^(1/2)*(n!/n^n)^2.
struct SparsevalReport {
    double sum;
    double scale;
    double ratio;  // sum / scale
};
SparsevalReport sparseval_sum(FourierTable& table, int m, std::uint64_t char_budget = 10'000'000);

// Ratio of |coeff| to each of its two a-priori bounds, plus the repetition
// fraction of the most-repeated nonzero two-torsion coordinate.
struct BoundReport {
    double coeff_abs;
    int m;
    double elementary_ratio;    // vs C(n,m)^(-1/2) * n!/n^n  (sharp only for m <= n/2)
    double sqrt_cancel_ratio;   // vs C(n+k-1,k-1)^(1/2) * multinomial^(-1/2) * n!/n^n
    double torsion_repetition_fraction;
};
BoundReport bound_ratios(FourierTable& table, const CharacterVector& chi);

}  // namespace bijsum
