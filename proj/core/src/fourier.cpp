#include "bijsum/fourier.hpp"

#include "bijsum/arith.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace bijsum {

namespace {

void check_vector(const CharacterVector& chi) {
    if (chi.coords.size() != static_cast<std::size_t>(chi.group.order()))
        throw std::invalid_argument("character vector must have one coordinate per group element");
    for (int c : chi.coords)
        if (c < 0 || c >= chi.group.order())
            throw std::invalid_argument("character index out of range");
}

}  // namespace

int CharacterVector::sparsity() const {
    int m = 0;
    for (int c : coords) m += (c != 0);
    return m;
}

std::vector<int> CharacterVector::nonzero_sorted() const {
    std::vector<int> v;
    for (int c : coords)
        if (c != 0) v.push_back(c);
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<std::pair<int, int>> CharacterVector::multiplicities() const {
    std::vector<int> v = coords;
    std::sort(v.begin(), v.end());
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < v.size();) {
        std::size_t j = i;
        while (j < v.size() && v[j] == v[i]) ++j;
        out.emplace_back(v[i], static_cast<int>(j - i));
        i = j;
    }
    return out;
}

CharacterVector trivial_character(const AbelianGroup& g) {
    return CharacterVector{g, std::vector<int>(g.order(), 0)};
}

CharacterVector sparse_character(const AbelianGroup& g, const std::vector<int>& nonzero) {
    if (static_cast<int>(nonzero.size()) > g.order())
        throw std::invalid_argument("more nonzero coordinates than positions");
    CharacterVector chi{g, std::vector<int>(g.order(), 0)};
    for (std::size_t i = 0; i < nonzero.size(); ++i) {
        if (nonzero[i] <= 0 || nonzero[i] >= g.order())
            throw std::invalid_argument("sparse coordinate must be a nonzero dual index");
        chi.coords[i] = nonzero[i];
    }
    return chi;
}

CharacterVector shift_character(const CharacterVector& chi, int psi) {
    check_vector(chi);
    CharacterVector out{chi.group, chi.coords};
    for (int& c : out.coords) c = chi.group.add(c, psi);
    return out;
}

std::complex<double> apply_character(const CharacterVector& chi, const FunctionTable& f) {
    check_vector(chi);
    if (f.group != chi.group || f.size() != chi.group.order())
        throw std::invalid_argument("character and table live on different domains");
    // Accumulate the root exponent exactly; one table lookup at the end.
    long long t = 0;
    int n = chi.group.order();
    for (int i = 0; i < n; ++i) t += chi.group.pair_exponent(chi.coords[i], f.values[i]);
    return chi.group.roots()[static_cast<int>(t % n)];
}

FourierValue coeff_direct(const CharacterVector& chi, int hard_cap) {
    check_vector(chi);
    const AbelianGroup& g = chi.group;
    int n = g.order();
    if (n > hard_cap) throw BudgetError("coeff_direct: 2^n enumeration refused for n > cap");
    if (n == 0) return FourierValue{{1.0, 0.0}};

    // coeff = perm(M)/n^n with M[i][x] = pair(chi_i, x). Rows are pre-divided
    // by n so every partial product stays O(1) in magnitude.
    std::vector<std::complex<double>> mat(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int x = 0; x < n; ++x) mat[static_cast<std::size_t>(i) * n + x] = g.pair(chi.coords[i], x) / double(n);

    // perm(A) = (-1)^n sum over nonempty column subsets S of
    //           (-1)^|S| prod_i (row sum of A over S),
    // visiting subsets in Gray-code order so each step updates one column.
    std::vector<std::complex<double>> rowsum(n, {0.0, 0.0});
    std::complex<double> total{0.0, 0.0};
    std::uint32_t prev = 0;
    for (std::uint64_t k = 1; k < (std::uint64_t{1} << n); ++k) {
        std::uint32_t gray = static_cast<std::uint32_t>(k ^ (k >> 1));
        std::uint32_t diff = gray ^ prev;
        int j = std::countr_zero(diff);
        if (gray & diff)
            for (int i = 0; i < n; ++i) rowsum[i] += mat[static_cast<std::size_t>(i) * n + j];
        else
            for (int i = 0; i < n; ++i) rowsum[i] -= mat[static_cast<std::size_t>(i) * n + j];
        std::complex<double> prod{1.0, 0.0};
        for (int i = 0; i < n; ++i) prod *= rowsum[i];
        if (std::popcount(gray) & 1)
            total -= prod;
        else
            total += prod;
        prev = gray;
    }
    if (n & 1) total = -total;
    return FourierValue{total};
}

FourierTable::FourierTable(AbelianGroup g, std::size_t memo_cap)
    : group_(std::move(g)), memo_cap_(memo_cap), empty_value_(bijection_density(group_.order())) {}

std::complex<double> FourierTable::coeff_multiset(const std::vector<int>& nonzero) {
    int n = group_.order();
    int m = static_cast<int>(nonzero.size());
    if (m > n) throw std::invalid_argument("multiset larger than position count");
    if (m == 0) return {empty_value_, 0.0};
    if (m == 1) return {0.0, 0.0};
    for (int c : nonzero)
        if (c <= 0 || c >= n) throw std::invalid_argument("multiset entries must be nonzero dual indices");

    auto it = memo_.find(nonzero);
    if (it != memo_.end()) return it->second;

    // Absorb the pivot (largest index) into each other coordinate in turn:
    // coeff(chi) = -(n-m+1)^-1 * sum_i coeff(chi with chi_i += pivot, pivot dropped).
    int pivot = nonzero.back();
    std::complex<double> sum{0.0, 0.0};
    std::vector<int> child;
    child.reserve(nonzero.size() - 1);
    for (int i = 0; i + 1 < m; ++i) {
        int merged = group_.add(nonzero[i], pivot);
        child.clear();
        for (int j = 0; j + 1 < m; ++j)
            if (j != i) child.push_back(nonzero[j]);
        if (merged != 0) {
            child.insert(std::upper_bound(child.begin(), child.end(), merged), merged);
        }
        sum += coeff_multiset(child);
    }
    std::complex<double> val = -sum / double(n - m + 1);

    if (memo_.size() >= memo_cap_) throw BudgetError("coeff_recursive: memo cap exceeded");
    memo_.emplace(nonzero, val);
    return val;
}

FourierValue FourierTable::coeff(const CharacterVector& chi) {
    check_vector(chi);
    if (chi.group != group_) throw std::invalid_argument("character belongs to a different group");
    return FourierValue{coeff_multiset(chi.nonzero_sorted())};
}

EntropyReport entropy_report(const CharacterVector& chi) {
    check_vector(chi);
    int n = chi.group.order();
    auto mult = chi.multiplicities();
    std::vector<int> parts;
    parts.reserve(mult.size());
    for (auto& [value, count] : mult) parts.push_back(count);
    EntropyReport r{};
    r.distinct = static_cast<int>(parts.size());
    r.entropy = std::log(to_double(multinomial(n, parts))) / n;
    double sh = 0.0;
    for (int a : parts) sh += (double(a) / n) * std::log(double(n) / a);
    r.shannon = sh;
    return r;
}

KillingClassification classify_killing(const AbelianGroup& g, const std::vector<int>& nonzero) {
    int m = static_cast<int>(nonzero.size());
    for (int c : nonzero)
        if (c <= 0 || c >= g.order())
            throw std::invalid_argument("killing classification expects nonzero dual indices");
    if (m == 0) return KillingClassification{0, true, true};
    if (m > 10) throw BudgetError("classify_killing: set-partition enumeration refused for m > 10");

    int max_parts = 0;
    long long pairings = 0;  // killing partitions with exactly m/2 parts
    std::vector<int> part_of(m, -1);
    std::vector<int> part_sum;

    // Depth-first over restricted-growth strings: element i joins an existing
    // part or opens a new one.
    auto dfs = [&](auto&& self, int i) -> void {
        if (i == m) {
            for (int s : part_sum)
                if (s != 0) return;
            int parts = static_cast<int>(part_sum.size());
            max_parts = std::max(max_parts, parts);
            if (m % 2 == 0 && parts == m / 2) ++pairings;
            return;
        }
        for (std::size_t p = 0; p < part_sum.size(); ++p) {
            int saved = part_sum[p];
            part_sum[p] = g.add(saved, nonzero[i]);
            self(self, i + 1);
            part_sum[p] = saved;
        }
        part_sum.push_back(nonzero[i]);
        self(self, i + 1);
        part_sum.pop_back();
    };
    dfs(dfs, 0);

    KillingClassification r{};
    r.max_parts = max_parts;
    r.unique_max_pairing = (m % 2 == 0) && pairings == 1;
    r.in_main_class = r.unique_max_pairing;
    return r;
}

namespace {

// Visits every m-sparse character vector: each size-m support (ascending
// positions) crossed with every assignment of nonzero dual indices.
template <typename Fn>
void for_each_sparse(const AbelianGroup& g, int m, std::uint64_t char_budget, Fn&& fn) {
    int n = g.order();
    if (m < 0 || m > n) throw std::invalid_argument("sparsity must be between 0 and n");
    BigInt total = binomial(n, m) * ipow(n - 1, m);
    if (total > char_budget) throw BudgetError("sparse enumeration exceeds character budget");

    std::vector<int> support(m), chars(m, 1);
    for (int i = 0; i < m; ++i) support[i] = i;
    if (m == 0) {
        fn(support, chars);
        return;
    }
    while (true) {
        std::fill(chars.begin(), chars.end(), 1);
        while (true) {
            fn(support, chars);
            int i = m - 1;
            while (i >= 0 && chars[i] == n - 1) chars[i--] = 1;
            if (i < 0) break;
            ++chars[i];
        }
        int i = m - 1;
        while (i >= 0 && support[i] == n - m + i) --i;
        if (i < 0) break;
        ++support[i];
        for (int j = i + 1; j < m; ++j) support[j] = support[j - 1] + 1;
    }
}

std::complex<double> cpow(std::complex<double> z, int d) {
    std::complex<double> r{1.0, 0.0};
    for (int i = 0; i < d; ++i) r *= z;
    return r;
}

}  // namespace

std::complex<double> sparse_power_sum(FourierTable& table, int m, int d, const FunctionTable& f,
                                      std::uint64_t char_budget) {
    const AbelianGroup& g = table.group();
    if (d < 1) throw std::invalid_argument("power must be >= 1");
    if (f.group != g || f.size() != g.order())
        throw std::invalid_argument("table does not match the group");
    int n = g.order();
    std::complex<double> sum{0.0, 0.0};
    std::vector<int> key;
    for_each_sparse(g, m, char_budget, [&](const std::vector<int>& support, const std::vector<int>& chars) {
        key = chars;
        std::sort(key.begin(), key.end());
        std::complex<double> c = table.coeff_multiset(key);
        long long t = 0;
        for (int i = 0; i < m; ++i) t += g.pair_exponent(chars[i], f.values[support[i]]);
        sum += cpow(c, d) * g.roots()[static_cast<int>(t % n)];
    });
    return sum;
}

SparsevalReport sparseval_sum(FourierTable& table, int m, std::uint64_t char_budget) {
    const AbelianGroup& g = table.group();
    int n = g.order();
    double sum = 0.0;
    std::vector<int> key;
    for_each_sparse(g, m, char_budget, [&](const std::vector<int>&, const std::vector<int>& chars) {
        key = chars;
        std::sort(key.begin(), key.end());
        sum += std::norm(table.coeff_multiset(key));
    });
    double u = bijection_density(n);
    SparsevalReport r{};
    r.sum = sum;
    r.scale = std::sqrt(to_double(binomial(n, m))) * u * u;
    r.ratio = sum / r.scale;
    return r;
}

BoundReport bound_ratios(FourierTable& table, const CharacterVector& chi) {
    const AbelianGroup& g = table.group();
    int n = g.order();
    double u = bijection_density(n);
    double cabs = std::abs(table.coeff(chi).value);
    int m = chi.sparsity();

    BoundReport r{};
    r.coeff_abs = cabs;
    r.m = m;
    r.elementary_ratio = cabs * std::sqrt(to_double(binomial(n, m))) / u;

    auto mult = chi.multiplicities();
    int k = static_cast<int>(mult.size());
    std::vector<int> parts;
    parts.reserve(mult.size());
    for (auto& [value, count] : mult) parts.push_back(count);
    double bound = std::sqrt(to_double(binomial(n + k - 1, k - 1))) * u /
                   std::sqrt(to_double(multinomial(n, parts)));
    r.sqrt_cancel_ratio = cabs / bound;

    int max_rep = 0;
    for (auto& [value, count] : mult)
        if (value != 0 && g.two_torsion(value)) max_rep = std::max(max_rep, count);
    r.torsion_repetition_fraction = m == 0 ? 0.0 : double(max_rep) / m;
    return r;
}

}  // namespace bijsum
