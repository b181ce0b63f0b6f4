#include "bijsum/verify.hpp"

#include "bijsum/arith.hpp"
#include "bijsum/counting.hpp"
#include "bijsum/fourier.hpp"
#include "bijsum/latin.hpp"
#include "bijsum/xor_prf.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <sstream>

namespace bijsum {

namespace {

using std::complex;

// One named check aggregating many individual comparisons; the detail keeps
// the first failure (or the case count when everything passed).
class Check {
public:
    explicit Check(std::string name) : name_(std::move(name)) {}

    void expect(bool ok, const std::string& context) {
        ++cases_;
        if (!ok) {
            ++failures_;
            if (first_failure_.empty()) first_failure_ = context;
        }
    }

    void expect_close(double got, double want, double tol, const std::string& context) {
        std::ostringstream os;
        os << context << ": got " << got << ", want " << want << " (tol " << tol << ")";
        expect(std::abs(got - want) <= tol, os.str());
    }

    CheckResult done() const {
        CheckResult r;
        r.name = name_;
        r.pass = failures_ == 0 && cases_ > 0;
        if (cases_ == 0) {
            r.detail = "no cases executed";
        } else if (failures_ == 0) {
            r.detail = std::to_string(cases_) + " cases";
        } else {
            r.detail = std::to_string(failures_) + "/" + std::to_string(cases_) +
                       " failed; first: " + first_failure_;
        }
        return r;
    }

private:
    std::string name_;
    long long cases_ = 0;
    long long failures_ = 0;
    std::string first_failure_;
};

std::vector<AbelianGroup> groups_up_to(int nmax) {
    static const std::vector<std::vector<int>> table = {
        {2},    {3},    {4},    {2, 2}, {5},       {6},    {2, 3}, {7},
        {8},    {2, 4}, {2, 2, 2}, {9},  {3, 3},    {10},   {2, 5}, {11},
        {12},   {2, 6}, {4, 3}, {2, 2, 3}};
    std::vector<AbelianGroup> out;
    for (const auto& f : table) {
        AbelianGroup g{f};
        if (g.order() <= nmax) out.push_back(std::move(g));
    }
    return out;
}

std::string tag(const AbelianGroup& g) { return "G=" + g.spec_string(); }

// Odometer over all n^n character vectors of a small group.
template <typename Fn>
void for_all_vectors(const AbelianGroup& g, Fn&& fn) {
    int n = g.order();
    CharacterVector chi{g, std::vector<int>(n, 0)};
    while (true) {
        fn(chi);
        int i = n - 1;
        while (i >= 0 && chi.coords[i] == n - 1) chi.coords[i--] = 0;
        if (i < 0) break;
        ++chi.coords[i];
    }
}

// Nondecreasing multisets of nonzero dual indices, sizes lo..hi.
template <typename Fn>
void for_all_multisets(const AbelianGroup& g, int lo, int hi, Fn&& fn) {
    std::vector<int> ms;
    auto rec = [&](auto&& self, int min_value) -> void {
        if (static_cast<int>(ms.size()) >= lo) fn(ms);
        if (static_cast<int>(ms.size()) == hi) return;
        for (int v = min_value; v < g.order(); ++v) {
            ms.push_back(v);
            self(self, v);
            ms.pop_back();
        }
    };
    rec(rec, 1);
}

// Reference recursion with a configurable pivot end and sign, used to confirm
// pivot independence and that a sign error would be caught.
complex<double> variant_recursion(const AbelianGroup& g, const std::vector<int>& ms,
                                  bool front_pivot, double sign,
                                  std::map<std::vector<int>, complex<double>>& memo) {
    int n = g.order();
    int m = static_cast<int>(ms.size());
    if (m == 0) return {bijection_density(n), 0.0};
    if (m == 1) return {0.0, 0.0};
    auto it = memo.find(ms);
    if (it != memo.end()) return it->second;
    int pivot_pos = front_pivot ? 0 : m - 1;
    int pivot = ms[pivot_pos];
    complex<double> sum{0.0, 0.0};
    for (int i = 0; i < m; ++i) {
        if (i == pivot_pos) continue;
        std::vector<int> child;
        child.reserve(m - 1);
        for (int j = 0; j < m; ++j)
            if (j != i && j != pivot_pos) child.push_back(ms[j]);
        int merged = g.add(ms[i], pivot);
        if (merged != 0)
            child.insert(std::upper_bound(child.begin(), child.end(), merged), merged);
        sum += variant_recursion(g, child, front_pivot, sign, memo);
    }
    complex<double> val = sign * sum / double(n - m + 1);
    memo.emplace(ms, val);
    return val;
}

long long count_perfect_matchings(int m, const std::vector<std::vector<char>>& adj) {
    // Pair the lowest unmatched vertex with each admissible partner.
    std::vector<long long> dp(std::size_t{1} << m, 0);
    dp[0] = 1;
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        int i = std::countr_zero(mask);
        long long total = 0;
        for (int j = i + 1; j < m; ++j)
            if ((mask >> j & 1) && adj[i][j]) total += dp[mask ^ (1u << i) ^ (1u << j)];
        dp[mask] = total;
    }
    return dp[(std::size_t{1} << m) - 1];
}

std::vector<std::vector<int>> automorphisms(const AbelianGroup& g) {
    // Brute force over permutations fixing 0; viable only for tiny orders.
    int n = g.order();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::vector<std::vector<int>> out;
    do {
        if (perm[0] != 0) continue;
        bool additive = true;
        for (int a = 0; a < n && additive; ++a)
            for (int b = a; b < n && additive; ++b)
                additive = perm[g.add(a, b)] == g.add(perm[a], perm[b]);
        if (additive) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// ---------------------------------------------------------------- group ----

void group_battery(VerifyReport& rep, int nmax) {
    auto groups = groups_up_to(nmax);

    Check roundtrip("index-roundtrip");
    Check bilinear("pairing-bilinearity");
    Check ortho("pairing-orthogonality");
    Check invol("sigma-order-two");
    Check unique_invol("sigma-unique-involution");
    for (const auto& g : groups) {
        int n = g.order();
        for (int x = 0; x < n; ++x) roundtrip.expect(g.index_of(g.coords(x)) == x, tag(g));
        roundtrip.expect(g.coords(0) == std::vector<int>(g.rank(), 0), tag(g) + " identity coords");

        std::mt19937_64 rng(0xB111 + n);
        long long triples = n <= 8 ? -1 : 4000;  // exhaustive when small
        auto each_triple = [&](auto&& fn) {
            if (triples < 0) {
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        for (int c = 0; c < n; ++c) fn(a, b, c);
            } else {
                for (long long s = 0; s < triples; ++s)
                    fn(static_cast<int>(rng() % n), static_cast<int>(rng() % n),
                       static_cast<int>(rng() % n));
            }
        };
        each_triple([&](int chi, int x, int y) {
            auto lhs = g.pair(chi, g.add(x, y));
            auto rhs = g.pair(chi, x) * g.pair(chi, y);
            bilinear.expect(std::abs(lhs - rhs) <= 1e-12, tag(g) + " chi(x+y)");
            auto lhs2 = g.pair(g.add(chi, x), y);  // chi,x as dual indices
            auto rhs2 = g.pair(chi, y) * g.pair(x, y);
            bilinear.expect(std::abs(lhs2 - rhs2) <= 1e-12, tag(g) + " (chi+psi)(y)");
        });

        for (int chi = 0; chi < n; ++chi) {
            complex<double> s{0.0, 0.0};
            for (int x = 0; x < n; ++x) s += g.pair(chi, x);
            double want = chi == 0 ? n : 0.0;
            ortho.expect(std::abs(s - complex<double>{want, 0.0}) <= 1e-9 * n,
                         tag(g) + " chi=" + std::to_string(chi));
        }

        invol.expect(g.add(g.sigma(), g.sigma()) == 0, tag(g));
        int even_factors = 0;
        for (int f : g.factors()) even_factors += (f % 2 == 0);
        unique_invol.expect((g.sigma() != 0) == (even_factors == 1), tag(g));
    }
    rep.checks.push_back(roundtrip.done());
    rep.checks.push_back(bilinear.done());
    rep.checks.push_back(ortho.done());
    rep.checks.push_back(invol.done());
    rep.checks.push_back(unique_invol.done());
}

// -------------------------------------------------------------- fourier ----

void fourier_battery(VerifyReport& rep, int nmax) {
    int exhaustive_max = std::min(nmax, 6);
    int shift_max = std::min(nmax, 5);
    int sparse_max = std::min(nmax, 8);

    Check agree("coeff-methods-agree");
    Check hermit("coeff-hermitian");
    Check one_sparse("one-sparse-vanishes");
    Check parseval("parseval");
    Check elem("elementary-bound");
    Check sqrtb("sqrt-cancellation-bound");
    Check sandwich("entropy-sandwich");
    Check shift("shift-law");

    for (const auto& g : groups_up_to(exhaustive_max)) {
        int n = g.order();
        double u = bijection_density(n);
        FourierTable table(g);
        double parseval_sum = 0.0;
        for_all_vectors(g, [&](const CharacterVector& chi) {
            complex<double> rec = table.coeff(chi).value;
            complex<double> dir = coeff_direct(chi).value;
            agree.expect(std::abs(rec - dir) <= 1e-9 * u, tag(g));

            CharacterVector negchi{g, chi.coords};
            for (int& c : negchi.coords) c = g.neg(c);
            hermit.expect(std::abs(table.coeff(negchi).value - std::conj(rec)) <= 1e-9 * u, tag(g));

            int m = chi.sparsity();
            if (m == 1) one_sparse.expect(std::abs(rec) == 0.0 && std::abs(dir) <= 1e-12, tag(g));
            parseval_sum += std::norm(rec);

            BoundReport b = bound_ratios(table, chi);
            if (2 * m <= n)
                elem.expect(b.coeff_abs <= std::sqrt(1.0 / to_double(binomial(n, m))) * u + 1e-12,
                            tag(g) + " m=" + std::to_string(m));
            sqrtb.expect(b.sqrt_cancel_ratio <= 1.0 + 1e-9, tag(g) + " m=" + std::to_string(m));

            EntropyReport e = entropy_report(chi);
            double slack = double(e.distinct) * std::log(double(n) + 1.0) / n;
            sandwich.expect(e.entropy <= e.shannon + 1e-12 &&
                                e.entropy >= e.shannon - slack - 1e-12,
                            tag(g));
        });
        parseval.expect(std::abs(parseval_sum - u) <= 1e-9 * u,
                        tag(g) + " sum=" + std::to_string(parseval_sum));

        if (n <= shift_max) {
            for_all_vectors(g, [&](const CharacterVector& chi) {
                complex<double> base = table.coeff(chi).value;
                for (int psi = 0; psi < n; ++psi) {
                    complex<double> want = base * g.pair(psi, g.sigma());
                    complex<double> got = table.coeff(shift_character(chi, psi)).value;
                    shift.expect(std::abs(got - want) <= 1e-9 * u,
                                 tag(g) + " psi=" + std::to_string(psi));
                }
            });
        }
    }

    // Sampled method agreement above the exhaustive range.
    for (const auto& g : groups_up_to(std::min(nmax, 8))) {
        int n = g.order();
        if (n <= exhaustive_max) continue;
        double u = bijection_density(n);
        FourierTable table(g);
        std::mt19937_64 rng(0xC0FFEE + n);
        CharacterVector chi{g, std::vector<int>(n, 0)};
        for (int s = 0; s < 2500; ++s) {
            for (int i = 0; i < n; ++i) chi.coords[i] = static_cast<int>(rng() % n);
            complex<double> rec = table.coeff(chi).value;
            complex<double> dir = coeff_direct(chi).value;
            agree.expect(std::abs(rec - dir) <= 1e-9 * u, tag(g) + " sampled");
        }
    }

    // Sparse multisets up to size 4: method agreement plus both bounds.
    for (const auto& g : groups_up_to(sparse_max)) {
        int n = g.order();
        if (n < 5) continue;  // covered exhaustively already
        double u = bijection_density(n);
        FourierTable table(g);
        for_all_multisets(g, 0, 4, [&](const std::vector<int>& ms) {
            int m = static_cast<int>(ms.size());
            CharacterVector chi = sparse_character(g, ms);
            complex<double> rec = table.coeff_multiset(ms);
            complex<double> dir = coeff_direct(chi).value;
            agree.expect(std::abs(rec - dir) <= 1e-9 * u, tag(g) + " sparse m=" + std::to_string(m));
            BoundReport b = bound_ratios(table, chi);
            if (2 * m <= n) elem.expect(b.elementary_ratio <= 1.0 + 1e-9, tag(g) + " sparse");
            sqrtb.expect(b.sqrt_cancel_ratio <= 1.0 + 1e-9, tag(g) + " sparse");
        });
    }
    rep.checks.push_back(agree.done());
    rep.checks.push_back(hermit.done());
    rep.checks.push_back(one_sparse.done());
    rep.checks.push_back(parseval.done());
    rep.checks.push_back(elem.done());
    rep.checks.push_back(sqrtb.done());
    rep.checks.push_back(sandwich.done());
    rep.checks.push_back(shift.done());

    // |coeff(chi0 repeated m times)| for two-torsion chi0 equals
    // (m-1)!! / ((n-m+1)(n-m+3)...(n-1+... )) * n!/n^n, odd factors rising to n.
    Check torsion("two-torsion-product");
    if (nmax >= 4) {
        for (const auto& g : groups_up_to(std::min(nmax, 6))) {
            int n = g.order();
            if (n != 4 && n != 6) continue;
            double u = bijection_density(n);
            FourierTable table(g);
            for (int chi0 = 1; chi0 < n; ++chi0) {
                if (!g.two_torsion(chi0)) continue;
                for (int m = 2; m <= n; m += 2) {
                    double expect_abs = u;
                    for (int t = m - 1; t >= 1; t -= 2) expect_abs *= t;
                    for (int t = n - m + 1; t <= n; t += 2) expect_abs /= t;
                    std::vector<int> ms(m, chi0);
                    torsion.expect_close(std::abs(table.coeff_multiset(ms)), expect_abs, 1e-12,
                                         tag(g) + " chi0=" + std::to_string(chi0) +
                                             " m=" + std::to_string(m));
                }
            }
        }
        rep.checks.push_back(torsion.done());
    }

    // The recursion may absorb the pivot from either end of the multiset.
    Check pivot("pivot-invariance");
    for (const auto& g : groups_up_to(std::min(nmax, 5))) {
        FourierTable table(g);
        std::map<std::vector<int>, complex<double>> memo;
        double u = bijection_density(g.order());
        for_all_multisets(g, 0, g.order(), [&](const std::vector<int>& ms) {
            complex<double> a = table.coeff_multiset(ms);
            complex<double> b = variant_recursion(g, ms, true, -1.0, memo);
            pivot.expect(std::abs(a - b) <= 1e-9 * u, tag(g));
        });
    }
    rep.checks.push_back(pivot.done());

    // A sign error in the recursion must be visible against the permanent
    // route; this pins the discriminating power of coeff-methods-agree.
    Check flip("sign-flip-detectable");
    {
        AbelianGroup g{{4}};
        std::map<std::vector<int>, complex<double>> memo;
        complex<double> wrong = variant_recursion(g, {1, 3, 2, 2}, false, +1.0, memo);
        complex<double> dir = coeff_direct(sparse_character(g, {1, 3, 2, 2})).value;
        flip.expect(std::abs(wrong - dir) > 1e-9 * bijection_density(4),
                    "sign-flipped recursion was not distinguishable");
    }
    rep.checks.push_back(flip.done());

    // Killing-partition classification versus a matching-count oracle.
    Check killing("killing-classification");
    for (const auto& g : groups_up_to(std::min(nmax, 6))) {
        for_all_multisets(g, 1, std::min(6, g.order()), [&](const std::vector<int>& ms) {
            int m = static_cast<int>(ms.size());
            KillingClassification cls = classify_killing(g, ms);
            killing.expect(cls.max_parts <= m / 2, tag(g) + " max-parts");
            if (m % 2 == 1) killing.expect(!cls.in_main_class, tag(g) + " odd m");
            std::vector<std::vector<char>> adj(m, std::vector<char>(m, 0));
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) adj[i][j] = g.add(ms[i], ms[j]) == 0;
            long long matchings = m % 2 == 0 ? count_perfect_matchings(m, adj) : 0;
            killing.expect(cls.in_main_class == (matchings == 1), tag(g) + " uniqueness");
            killing.expect(cls.unique_max_pairing == (matchings == 1), tag(g) + " pairing flag");
        });
    }
    rep.checks.push_back(killing.done());

    // Sparse power sums around their leading term, cyclic groups, d = 3.
    if (nmax >= 5) {
        Check arc("sparse-main-term");
        for (int n = 5; n <= std::min(nmax, 9); ++n) {
            AbelianGroup g{{n}};
            FourierTable table(g);
            FunctionTable f = zero_table(g);
            double u = bijection_density(n);
            double u3 = u * u * u;
            complex<double> s2 = sparse_power_sum(table, 2, 3, f);
            arc.expect(s2.real() < 0.0, "n=" + std::to_string(n) + " m=2 sign");
            arc.expect(std::abs(s2 - complex<double>{-0.5 * u3, 0.0}) <= u3 * 5.0 / n,
                       "n=" + std::to_string(n) + " m=2 deviation");
            for (int m : {1, 3}) {
                complex<double> s = sparse_power_sum(table, m, 3, f);
                arc.expect(std::abs(s) <= u3 * 5.0 / n,
                           "n=" + std::to_string(n) + " m=" + std::to_string(m));
            }
        }
        rep.checks.push_back(arc.done());
    }

    // Partition of the full character sum into bounded-defect, low-entropy,
    // and high-entropy classes; the first class must also match n times the
    // sparse sums, and the total must reproduce the exact triple count.
    if (nmax >= 4) {
        Check split("three-way-split");
        for (const auto& g : groups_up_to(std::min(nmax, 5))) {
            int n = g.order();
            if (n < 3) continue;
            FourierTable table(g);
            int M = std::min(2, (n - 1) / 2);
            double eps = 0.3;
            std::vector<FunctionTable> fs{random_feasible_table(g, 3, 11)};
            if (feasible(g, zero_table(g), 3)) fs.push_back(zero_table(g));
            for (const FunctionTable& f : fs) {
                complex<double> total{0, 0}, major{0, 0}, sparse_tail{0, 0}, high{0, 0};
                for_all_vectors(g, [&](const CharacterVector& chi) {
                    complex<double> c = table.coeff(chi).value;
                    complex<double> term = c * c * c * apply_character(chi, f);
                    total += term;
                    int max_mult = 0;
                    for (const auto& mc : chi.multiplicities()) max_mult = std::max(max_mult, mc.second);
                    int defect = n - max_mult;
                    if (defect <= M)
                        major += term;
                    else if (entropy_report(chi).entropy <= eps)
                        sparse_tail += term;
                    else
                        high += term;
                });
                double u3 = std::pow(bijection_density(n), 3);
                double tol = 1e-9 * std::max(std::abs(total), u3);
                split.expect(std::abs(major + sparse_tail + high - total) <= tol,
                             tag(g) + " classes sum");
                complex<double> sparse_sum{0, 0};
                for (int m = 0; m <= M; ++m) sparse_sum += sparse_power_sum(table, m, 3, f);
                split.expect(std::abs(major - double(n) * sparse_sum) <= tol,
                             tag(g) + " shifted sparse identity");
                BigInt exact = count_tuples(g, f, 3).count;
                long double scaled = static_cast<long double>(total.real());
                for (int i = 0; i < 2 * n; ++i) scaled *= n;
                split.expect(std::abs(static_cast<double>(scaled - exact.convert_to<long double>())) < 0.5,
                             tag(g) + " total vs count");
            }
        }
        rep.checks.push_back(split.done());
    }
}

// ------------------------------------------------------------- counting ----

void counting_battery(VerifyReport& rep, VerifyLevel level) {
    int nmax = level == VerifyLevel::Quick ? 4 : 5;

    Check agree("strategy-agreement");
    for (const auto& g : groups_up_to(nmax)) {
        for (int d = 2; d <= 4; ++d) {
            std::vector<FunctionTable> fs{zero_table(g), random_feasible_table(g, d, 5)};
            for (const auto& f : fs) {
                std::vector<Strategy> strategies{Strategy::Fourier};
                if (d == 2) strategies.push_back(Strategy::PairDp);
                if (d == 3) {
                    strategies.push_back(Strategy::TripleDp);
                    strategies.push_back(Strategy::OuterSum);
                }
                if (d >= 4) strategies.push_back(Strategy::OuterSum);
                BigInt first = count_tuples(g, f, d, strategies[0]).count;
                for (std::size_t i = 1; i < strategies.size(); ++i) {
                    BigInt other = count_tuples(g, f, d, strategies[i]).count;
                    agree.expect(other == first,
                                 tag(g) + " d=" + std::to_string(d) + " " +
                                     strategy_name(strategies[i]) + " vs " +
                                     strategy_name(strategies[0]));
                }
            }
        }
    }
    rep.checks.push_back(agree.done());

    Check zero("zero-on-infeasible");
    Check sym("pair-decomposition");
    Check translate("translation-invariance");
    Check relabel("relabel-invariance");
    Check series("singular-series-range");
    for (const auto& g : groups_up_to(4)) {
        int n = g.order();
        // all f over G^n
        FunctionTable f{g, std::vector<int>(n, 0)};
        while (true) {
            for (int d : {2, 3}) {
                BigInt c = count_tuples(g, f, d).count;
                if (!feasible(g, f, d)) zero.expect(c == 0, tag(g) + " d=" + std::to_string(d));
            }
            SingularSeries s = singular_series(g, f);
            series.expect(s.value >= std::exp(-0.5) - 1e-12 &&
                              s.value <= std::exp(-0.5 / n) + 1e-12,
                          tag(g) + " range");
            series.expect(std::abs(s.value - std::exp(-0.5 * std::exp(-s.collision_entropy))) <= 1e-12,
                          tag(g) + " entropy identity");
            if (f.bijective())
                series.expect(std::abs(s.value - std::exp(-0.5 / n)) <= 1e-12, tag(g) + " bijective");

            int i = n - 1;
            while (i >= 0 && f.values[i] == n - 1) f.values[i--] = 0;
            if (i < 0) break;
            ++f.values[i];
        }

        // triple count decomposes over the first bijection
        std::vector<FunctionTable> fs{identity_table(g), random_feasible_table(g, 3, 3)};
        for (const auto& table : fs) {
            BigInt triple = count_tuples(g, table, 3).count;
            BigInt via_pairs = 0;
            FunctionTable b = identity_table(g);
            FunctionTable rest{g, std::vector<int>(n)};
            do {
                for (int i = 0; i < n; ++i) rest.values[i] = g.sub(table.values[i], b.values[i]);
                via_pairs += count_pairs(g, rest).count;
            } while (std::next_permutation(b.values.begin(), b.values.end()));
            sym.expect(triple == via_pairs, tag(g));
        }

        // translation and relabeling symmetries
        std::vector<FunctionTable> gs{zero_table(g), identity_table(g),
                                      random_feasible_table(g, 2, 9)};
        for (const auto& base : gs) {
            BigInt c0 = count_pairs(g, base).count;
            for (int c = 0; c < n; ++c) {
                FunctionTable shifted = base;
                for (int& v : shifted.values) v = g.add(v, c);
                translate.expect(count_pairs(g, shifted).count == c0,
                                 tag(g) + " c=" + std::to_string(c));
            }
        }
        FunctionTable f3 = random_feasible_table(g, 3, 13);
        BigInt c3 = count_tuples(g, f3, 3).count;
        std::mt19937_64 rng(17);
        for (int trial = 0; trial < 3; ++trial) {
            FunctionTable perm = f3;
            for (int i = n - 1; i > 0; --i)
                std::swap(perm.values[i], perm.values[rng() % (i + 1)]);
            relabel.expect(count_tuples(g, perm, 3).count == c3, tag(g) + " positions");
        }
        for (const auto& alpha : automorphisms(g)) {
            FunctionTable mapped = f3;
            for (int& v : mapped.values) v = alpha[v];
            relabel.expect(count_tuples(g, mapped, 3).count == c3, tag(g) + " automorphism");
        }
    }
    rep.checks.push_back(zero.done());
    rep.checks.push_back(sym.done());
    rep.checks.push_back(translate.done());
    rep.checks.push_back(relabel.done());
    rep.checks.push_back(series.done());

    Check dist("distance-norms");
    {
        int dist_nmax = level == VerifyLevel::Quick ? 4 : 6;
        for (const auto& g : groups_up_to(dist_nmax)) {
            int n = g.order();
            for (int m = 1; m < std::min(n, 4); ++m) {
                DistanceReport r = injection_distribution_distance(g, m);
                dist.expect(r.tv == r.l1 / 2.0, tag(g) + " tv=l1/2");
                dist.expect(r.l1 <= r.l2 + 1e-12, tag(g) + " l1<=l2");
                dist.expect(r.tv >= 0.0 && r.tv <= 1.0, tag(g) + " tv range");
                if (m == 1) dist.expect(r.tv == 0.0, tag(g) + " m=1 exact zero");
            }
        }
        AbelianGroup z3{{3}};
        DistanceReport r = injection_distribution_distance(z3, 2);
        dist.expect(std::abs(r.l2 - std::sqrt(0.125)) <= 1e-12, "Z/3 m=2 l2");
        dist.expect(std::abs(r.tv - 1.0 / 6.0) <= 1e-12, "Z/3 m=2 tv");
    }
    rep.checks.push_back(dist.done());

    Check pred("prediction-consistency");
    for (const auto& g : groups_up_to(nmax)) {
        int n = g.order();
        FunctionTable f = random_feasible_table(g, 3, 21);
        Prediction p = predict(g, f, 3);
        double density = to_double(factorial(n)) * to_double(factorial(n)) *
                         to_double(factorial(n)) / std::pow(double(n), n - 1);
        pred.expect(p.available && p.is_feasible, tag(g) + " d=3 availability");
        pred.expect_close(p.main_value, p.singular_series * density, 1e-9 * p.main_value + 1e-12,
                          tag(g) + " d=3 formula");
        FunctionTable z = zero_table(g);
        Prediction p2 = predict(g, z, 2);
        pred.expect(!p2.available, tag(g) + " d=2 non-bijective has no prediction");
        Prediction p4 = predict(g, random_feasible_table(g, 4, 22), 4);
        pred.expect(p4.available && std::abs(p4.singular_series - 1.0) == 0.0, tag(g) + " d>=4 flat");
    }
    rep.checks.push_back(pred.done());
}

// ---------------------------------------------------------------- latin ----

void latin_battery(VerifyReport& rep, VerifyLevel level) {
    int n2 = level == VerifyLevel::Quick ? 4 : 8;   // latin-property scan, d=2
    int n3 = level == VerifyLevel::Quick ? 4 : 5;   // and d=3

    Check prop("latin-property");
    for (const auto& g : groups_up_to(n2)) {
        LatinCubeView square(g, identity_table(g), 2);
        prop.expect(square.latin_property_holds(), tag(g) + " d=2 identity");
        LatinCubeView shuffled(g, random_bijection(g, 101), 2);
        prop.expect(shuffled.latin_property_holds(), tag(g) + " d=2 random");
        if (g.order() <= n3) {
            LatinCubeView cube(g, random_bijection(g, 202), 3);
            prop.expect(cube.latin_property_holds(), tag(g) + " d=3");
        }
    }
    rep.checks.push_back(prop.done());

    Check invariant("transversal-pi-invariance");
    for (const auto& g : groups_up_to(4)) {
        int n = g.order();
        BigInt base = count_transversals(LatinCubeView(g, identity_table(g), 2)).count;
        FunctionTable pi = identity_table(g);
        do {
            BigInt c = count_transversals(LatinCubeView(g, pi, 2)).count;
            invariant.expect(c == base, tag(g) + " d=2");
        } while (std::next_permutation(pi.values.begin(), pi.values.end()));
        if (n <= 3) {
            BigInt base3 = count_transversals(LatinCubeView(g, identity_table(g), 3)).count;
            pi = identity_table(g);
            do {
                BigInt c = count_transversals(LatinCubeView(g, pi, 3)).count;
                invariant.expect(c == base3, tag(g) + " d=3");
            } while (std::next_permutation(pi.values.begin(), pi.values.end()));
        }
    }
    rep.checks.push_back(invariant.done());

    Check cyclic("cyclic-transversal-counts");
    {
        std::vector<std::pair<int, long long>> want{{2, 0}, {3, 3}, {4, 0}};
        if (level == VerifyLevel::Full) {
            want.push_back({5, 15});
            want.push_back({6, 0});
            want.push_back({7, 133});
        }
        for (auto [n, count] : want) {
            AbelianGroup g{{n}};
            TransversalCount t = count_transversals(LatinCubeView(g, identity_table(g), 2));
            cyclic.expect(t.count == count, "Z/" + std::to_string(n));
        }
    }
    rep.checks.push_back(cyclic.done());

    Check solution("transversal-solution-count");
    {
        int s2 = level == VerifyLevel::Quick ? 4 : 5;
        for (const auto& g : groups_up_to(s2)) {
            CrosscheckReport r = lemma_crosscheck(g, identity_table(g), 2);
            solution.expect(r.ok && r.extended_checked, tag(g) + " d=2 identity");
            CrosscheckReport rr = lemma_crosscheck(g, random_bijection(g, 303), 2);
            solution.expect(rr.ok && rr.extended_checked, tag(g) + " d=2 random");
        }
        for (const auto& g : groups_up_to(4)) {
            CrosscheckReport r = lemma_crosscheck(g, random_bijection(g, 404), 3);
            solution.expect(r.ok && r.extended_checked, tag(g) + " d=3");
        }
    }
    rep.checks.push_back(solution.done());
}

// ------------------------------------------------------------------ xor ----

void xor_battery(VerifyReport& rep, VerifyLevel level) {
    Check one("xor-single-query-uniform");
    for (int k = 1; k <= 3; ++k) {
        if (level == VerifyLevel::Quick && k > 2) break;
        AdvantageReport r = xor_tv(k, 1);
        one.expect(r.exact_tv.has_value() && *r.exact_tv == 0.0, "k=" + std::to_string(k));
    }
    rep.checks.push_back(one.done());

    Check grid("xor-grid-constant");
    {
        int kmax = level == VerifyLevel::Quick ? 2 : 3;
        Budgets budgets;
        // The (Z/2)^k fast path makes the full pair enumeration cheap, so the
        // grid raises the pair cap rather than shrinking its range.
        budgets.pair_budget = std::uint64_t{1} << 31;
        for (int k = 2; k <= kmax; ++k) {
            for (int m = 1; m < (1 << k); ++m) {
                AdvantageReport r = xor_tv(k, m, budgets);
                grid.expect(r.empirical_constant.has_value() && *r.empirical_constant <= 10.0,
                            "k=" + std::to_string(k) + " m=" + std::to_string(m));
            }
        }
    }
    rep.checks.push_back(grid.done());

    Check shape("advantage-bound-shape");
    for (int k = 2; k <= 6; ++k) {
        for (double prp : {0.0, 1e-3}) {
            double prev = -1.0;
            for (int m = 1; m < std::min(1 << k, 9); ++m) {
                double b = advantage_bound(k, m, prp, 3.0);
                shape.expect(b >= 2.0 * prp, "k=" + std::to_string(k) + " floor");
                shape.expect(b >= prev, "k=" + std::to_string(k) + " monotone");
                prev = b;
            }
        }
        bool threw = false;
        try {
            advantage_bound(k, 1 << k, 0.0, 1.0);
        } catch (const std::invalid_argument&) {
            threw = true;
        }
        shape.expect(threw, "k=" + std::to_string(k) + " m=2^k rejected");
    }
    rep.checks.push_back(shape.done());
}

// --------------------------------------------------------- frozen counts ----

void frozen_battery(VerifyReport& rep) {
    Check frozen("frozen-small-counts");
    {
        AbelianGroup z2{{2}};
        frozen.expect(count_pairs(z2, zero_table(z2)).count == 2, "Z/2 pairs to zero");
        FunctionTable f01{z2, {0, 1}};
        frozen.expect(count_tuples(z2, f01, 3).count == 4, "Z/2 triples to identity");
        frozen.expect(count_tuples(z2, zero_table(z2), 3).count == 0, "Z/2 triples to zero");

        AbelianGroup z3{{3}};
        frozen.expect(count_pairs(z3, identity_table(z3)).count == 3, "Z/3 pairs to identity");
        frozen.expect(count_tuples(z3, zero_table(z3), 3).count == 18, "Z/3 triples to zero");

        AbelianGroup z4{{4}};
        FourierTable t4(z4);
        frozen.expect(std::abs(t4.coeff_multiset({}) - complex<double>{24.0 / 256.0, 0.0}) <= 1e-15,
                      "Z/4 trivial coefficient");
        frozen.expect(std::abs(t4.coeff_multiset({2, 2}) - complex<double>{-1.0 / 32.0, 0.0}) <= 1e-12,
                      "Z/4 (2,2) coefficient");

        AbelianGroup z5{{5}};
        FourierTable t5(z5);
        frozen.expect(std::abs(t5.coeff_multiset({1, 4}) - complex<double>{-30.0 / 3125.0, 0.0}) <= 1e-12,
                      "Z/5 (1,4) coefficient");
    }
    rep.checks.push_back(frozen.done());
}

}  // namespace

VerifyReport run_verify(VerifyLevel level) {
    VerifyReport rep;
    int group_nmax = level == VerifyLevel::Quick ? 4 : 12;
    int fourier_nmax = level == VerifyLevel::Quick ? 4 : 9;
    group_battery(rep, group_nmax);
    fourier_battery(rep, fourier_nmax);
    counting_battery(rep, level);
    latin_battery(rep, level);
    xor_battery(rep, level);
    frozen_battery(rep);
    return rep;
}

VerifyReport run_fourier_verify(int nmax) {
    VerifyReport rep;
    fourier_battery(rep, nmax);
    return rep;
}

}  // namespace bijsum
