#include "bijsum/counting.hpp"

#include "bijsum/fourier.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace bijsum {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void check_total(const AbelianGroup& g, const FunctionTable& f) {
    if (f.group != g) throw std::invalid_argument("table group does not match");
    if (f.size() != g.order()) throw std::invalid_argument("table must assign every position");
}

// Pair DP engine, shared by count_pairs and the outer-sum base case.
// State key packs (mask of values used by pi_1) << 20 | (mask used by pi_2).
BigInt pair_dp(const AbelianGroup& g, const FunctionTable& f, const Budgets& budgets) {
    int n = g.order();
    if (n > 20) throw BudgetError("pair-dp: n too large for mask packing");
    std::vector<int> sub(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) sub[static_cast<std::size_t>(a) * n + b] = g.sub(a, b);

    std::unordered_map<std::uint64_t, BigInt> level;
    level.reserve(64);
    level[0] = 1;
    std::uint64_t states_seen = 1;
    for (int i = 0; i < n; ++i) {
        std::unordered_map<std::uint64_t, BigInt> next;
        next.reserve(level.size() * (n - i));
        int fi = f.values[i];
        for (const auto& [key, ways] : level) {
            std::uint32_t used1 = static_cast<std::uint32_t>(key >> 20);
            std::uint32_t used2 = static_cast<std::uint32_t>(key & 0xFFFFFu);
            for (int y = 0; y < n; ++y) {
                if (used1 & (1u << y)) continue;
                int z = sub[static_cast<std::size_t>(fi) * n + y];
                if (used2 & (1u << z)) continue;
                std::uint64_t nk = (std::uint64_t(used1 | (1u << y)) << 20) | (used2 | (1u << z));
                next[nk] += ways;
            }
        }
        states_seen += next.size();
        if (states_seen > budgets.state_budget) throw BudgetError("pair-dp: state budget exceeded");
        level = std::move(next);
    }
    if (level.empty()) return 0;
    return level.begin()->second;
}

BigInt triple_dp(const AbelianGroup& g, const FunctionTable& f, const Budgets& budgets) {
    int n = g.order();
    if (n > budgets.triple_dp_max_n) throw BudgetError("triple-dp: n exceeds cap");
    std::vector<int> sub(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) sub[static_cast<std::size_t>(a) * n + b] = g.sub(a, b);

    std::unordered_map<std::uint64_t, BigInt> level;
    level[0] = 1;
    std::uint64_t states_seen = 1;
    for (int i = 0; i < n; ++i) {
        std::unordered_map<std::uint64_t, BigInt> next;
        next.reserve(level.size() * (n - i));
        int fi = f.values[i];
        for (const auto& [key, ways] : level) {
            std::uint32_t used1 = static_cast<std::uint32_t>(key >> 40);
            std::uint32_t used2 = static_cast<std::uint32_t>((key >> 20) & 0xFFFFFu);
            std::uint32_t used3 = static_cast<std::uint32_t>(key & 0xFFFFFu);
            for (int y = 0; y < n; ++y) {
                if (used1 & (1u << y)) continue;
                int rest = sub[static_cast<std::size_t>(fi) * n + y];
                for (int z = 0; z < n; ++z) {
                    if (used2 & (1u << z)) continue;
                    int w = sub[static_cast<std::size_t>(rest) * n + z];
                    if (used3 & (1u << w)) continue;
                    std::uint64_t nk = (std::uint64_t(used1 | (1u << y)) << 40) |
                                       (std::uint64_t(used2 | (1u << z)) << 20) |
                                       (used3 | (1u << w));
                    next[nk] += ways;
                }
            }
        }
        states_seen += next.size();
        if (states_seen > budgets.state_budget) throw BudgetError("triple-dp: state budget exceeded");
        level = std::move(next);
    }
    if (level.empty()) return 0;
    return level.begin()->second;
}

BigInt count_dispatch(const AbelianGroup& g, const FunctionTable& f, int d, Strategy strategy,
                      const Budgets& budgets, std::string& chosen);

// Enumerates pi_1 in lexicographic order and recurses on f - pi_1.
BigInt outer_sum(const AbelianGroup& g, const FunctionTable& f, int d, const Budgets& budgets) {
    int n = g.order();
    BigInt kernels = 1;
    for (int i = 0; i < d - 2; ++i) kernels *= factorial(n);
    if (kernels > budgets.kernel_budget) throw BudgetError("outer-sum: kernel budget exceeded");

    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    BigInt total = 0;
    FunctionTable rest{g, std::vector<int>(n)};
    std::string inner;
    do {
        for (int i = 0; i < n; ++i) rest.values[i] = g.sub(f.values[i], perm[i]);
        total += count_dispatch(g, rest, d - 1, Strategy::Auto, budgets, inner);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

BigInt fourier_count(const AbelianGroup& g, const FunctionTable& f, int d, const Budgets& budgets) {
    int n = g.order();
    BigInt vectors = ipow(n, n);
    if (vectors > budgets.char_budget) throw BudgetError("fourier: n^n character budget exceeded");

    // count = n^((d-1)n) * sum over all chi in the dual of G^n of
    //         coeff(chi)^d * chi(f); the sum is real up to roundoff and the
    //         scaled value must land within 0.5 of an integer.
    FourierTable table(g);
    CharacterVector chi = trivial_character(g);
    std::complex<double> sum{0.0, 0.0};
    std::vector<int> key;
    std::uint64_t total = vectors.convert_to<std::uint64_t>();
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (int i = 0; i < n; ++i) {
            chi.coords[i] = static_cast<int>(c % n);
            c /= n;
        }
        key = chi.nonzero_sorted();
        std::complex<double> coeff = table.coeff_multiset(key);
        std::complex<double> term{1.0, 0.0};
        for (int i = 0; i < d; ++i) term *= coeff;
        long long t = 0;
        for (int i = 0; i < n; ++i) t += g.pair_exponent(chi.coords[i], f.values[i]);
        sum += term * g.roots()[static_cast<int>(t % n)];
    }
    long double scale = 1.0L;
    for (int i = 0; i < (d - 1) * n; ++i) scale *= n;
    long double value = scale * static_cast<long double>(sum.real());
    long double rounded = std::round(value);
    if (std::fabs(value - rounded) >= 0.5L || std::fabs(scale * sum.imag()) >= 0.5L)
        throw std::runtime_error("fourier count did not resolve to an integer");
    return BigInt(static_cast<long long>(rounded));
}

BigInt count_dispatch(const AbelianGroup& g, const FunctionTable& f, int d, Strategy strategy,
                      const Budgets& budgets, std::string& chosen) {
    if (strategy == Strategy::Auto) {
        if (d == 2) {
            strategy = Strategy::PairDp;
        } else if (d == 3) {
            strategy = g.order() <= budgets.triple_dp_max_n ? Strategy::TripleDp : Strategy::OuterSum;
        } else {
            strategy = Strategy::OuterSum;
        }
    }
    chosen = strategy_name(strategy);
    switch (strategy) {
        case Strategy::PairDp:
            if (d != 2) throw std::invalid_argument("pair-dp applies to d = 2 only");
            return pair_dp(g, f, budgets);
        case Strategy::TripleDp:
            if (d != 3) throw std::invalid_argument("triple-dp applies to d = 3 only");
            return triple_dp(g, f, budgets);
        case Strategy::OuterSum:
            if (d < 3) throw std::invalid_argument("outer-sum needs d >= 3");
            return outer_sum(g, f, d, budgets);
        case Strategy::Fourier:
            return fourier_count(g, f, d, budgets);
        case Strategy::Auto:
            break;
    }
    throw std::invalid_argument("unknown strategy");
}

}  // namespace

Strategy strategy_from_string(const std::string& name) {
    if (name == "auto") return Strategy::Auto;
    if (name == "pair-dp") return Strategy::PairDp;
    if (name == "triple-dp") return Strategy::TripleDp;
    if (name == "outer-sum") return Strategy::OuterSum;
    if (name == "fourier") return Strategy::Fourier;
    throw std::invalid_argument("unknown strategy: " + name);
}

std::string strategy_name(Strategy s) {
    switch (s) {
        case Strategy::Auto: return "auto";
        case Strategy::PairDp: return "pair-dp";
        case Strategy::TripleDp: return "triple-dp";
        case Strategy::OuterSum: return "outer-sum";
        case Strategy::Fourier: return "fourier";
    }
    return "?";
}

bool feasible(const AbelianGroup& g, const FunctionTable& f, int d) {
    check_total(g, f);
    if (d < 1) throw std::invalid_argument("d must be >= 1");
    int target = 0;
    for (int i = 0; i < d; ++i) target = g.add(target, g.sigma());
    return f.value_sum() == target;
}

CountResult count_pairs(const AbelianGroup& g, const FunctionTable& f, const Budgets& budgets) {
    check_total(g, f);
    auto start = Clock::now();
    CountResult r;
    r.d = 2;
    r.strategy = "pair-dp";
    r.count = pair_dp(g, f, budgets);
    r.elapsed_ms = ms_since(start);
    return r;
}

CountResult count_tuples(const AbelianGroup& g, const FunctionTable& f, int d, Strategy strategy,
                         const Budgets& budgets) {
    check_total(g, f);
    if (d < 2) throw std::invalid_argument("d must be >= 2");
    auto start = Clock::now();
    CountResult r;
    r.d = d;
    r.count = count_dispatch(g, f, d, strategy, budgets, r.strategy);
    r.elapsed_ms = ms_since(start);
    return r;
}

SingularSeries singular_series(const AbelianGroup& g, const FunctionTable& f) {
    check_total(g, f);
    int n = g.order();
    std::vector<int> fiber(n, 0);
    for (int v : f.values) ++fiber[v];
    double sq = 0.0;
    for (int c : fiber) sq += double(c) * c;
    SingularSeries s{};
    s.value = std::exp(-sq / (2.0 * n * n));
    s.collision_entropy = -std::log(sq / (double(n) * n));
    return s;
}

Prediction predict(const AbelianGroup& g, const FunctionTable& f, int d) {
    check_total(g, f);
    if (d < 2) throw std::invalid_argument("d must be >= 2");
    int n = g.order();
    Prediction p;
    p.is_feasible = feasible(g, f, d);
    double density_power = 0.0;  // n!^d / n^(n-1), via long double
    {
        long double v = 1.0L;
        long double fact = factorial(n).convert_to<long double>();
        for (int i = 0; i < d; ++i) v *= fact;
        for (int i = 0; i < n - 1; ++i) v /= n;
        density_power = static_cast<double>(v);
    }
    if (d == 2) {
        if (!f.bijective()) {
            p.available = false;  // no leading-order formula for non-bijective targets
            return p;
        }
        p.available = true;
        p.singular_series = std::exp(-0.5);
        p.formula = "exp(-1/2) * n!^2 / n^(n-1)";
        p.main_value = p.is_feasible ? p.singular_series * density_power : 0.0;
        return p;
    }
    if (d == 3) {
        p.available = true;
        p.singular_series = singular_series(g, f).value;
        p.formula = "S(f) * n!^3 / n^(n-1)";
        p.main_value = p.is_feasible ? p.singular_series * density_power : 0.0;
        return p;
    }
    p.available = true;
    p.singular_series = 1.0;
    p.formula = "n!^d / n^(n-1)";
    p.main_value = p.is_feasible ? density_power : 0.0;
    return p;
}

namespace {

// Lexicographic enumeration of injections {1..m} -> G, each emitted as its
// packed base-n index over G^m (position 0 most significant).
void enumerate_injections(int n, int m, std::vector<std::uint32_t>& out) {
    std::vector<int> tuple(m);
    std::vector<char> used(n, 0);
    std::uint64_t packed = 0;
    std::vector<std::uint64_t> weights(m, 1);
    for (int i = m - 2; i >= 0; --i) weights[i] = weights[i + 1] * n;
    auto dfs = [&](auto&& self, int i) -> void {
        if (i == m) {
            out.push_back(static_cast<std::uint32_t>(packed));
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            used[v] = 1;
            packed += weights[i] * v;
            self(self, i + 1);
            packed -= weights[i] * v;
            used[v] = 0;
        }
    };
    dfs(dfs, 0);
}

}  // namespace

DistanceReport injection_distribution_distance(const AbelianGroup& g, int m,
                                               const Budgets& budgets) {
    int n = g.order();
    if (m < 1 || m >= n) throw std::invalid_argument("need 1 <= m < n");

    std::uint64_t cells = 1;
    for (int i = 0; i < m; ++i) {
        if (cells > budgets.cell_budget / n) throw BudgetError("distance: n^m cell budget exceeded");
        cells *= n;
    }
    if (cells > 0xFFFFFFFFu) throw BudgetError("distance: packed index needs 32 bits");
    std::uint64_t injections = 1;
    for (int i = 0; i < m; ++i) injections *= n - i;
    if (injections > budgets.pair_budget / injections)
        throw BudgetError("distance: injection pair budget exceeded");

    std::vector<std::uint32_t> packed;
    packed.reserve(injections);
    enumerate_injections(n, m, packed);

    bool xor_group = true;
    for (int f : g.factors()) xor_group &= (f == 2);

    // Histogram of pi_1 + pi_2 over G^m, one bin per packed index.
    std::vector<std::uint32_t> hist(cells, 0);
    int threads = std::max(1, budgets.threads);
    if (xor_group) {
        // Base-n digits are bit fields when every factor is 2, so the packed
        // index of a sum is the XOR of packed indices.
        auto worker = [&](std::size_t lo, std::size_t hi, std::vector<std::uint32_t>& h) {
            for (std::size_t i = lo; i < hi; ++i) {
                std::uint32_t a = packed[i];
                for (std::uint32_t b : packed) ++h[a ^ b];
            }
        };
        if (threads == 1) {
            worker(0, packed.size(), hist);
        } else {
            std::vector<std::vector<std::uint32_t>> parts(threads);
            std::vector<std::thread> pool;
            std::size_t chunk = (packed.size() + threads - 1) / threads;
            for (int t = 0; t < threads; ++t) {
                std::size_t lo = std::min(packed.size(), t * chunk);
                std::size_t hi = std::min(packed.size(), lo + chunk);
                parts[t].assign(cells, 0);
                pool.emplace_back([&, lo, hi, t] { worker(lo, hi, parts[t]); });
            }
            for (auto& th : pool) th.join();
            for (int t = 0; t < threads; ++t)
                for (std::uint64_t c = 0; c < cells; ++c) hist[c] += parts[t][c];
        }
    } else {
        // General path: unpack digits once, add coordinate-wise per pair.
        std::vector<std::uint16_t> digits(packed.size() * m);
        for (std::size_t i = 0; i < packed.size(); ++i) {
            std::uint64_t v = packed[i];
            for (int p = m - 1; p >= 0; --p) {
                digits[i * m + p] = static_cast<std::uint16_t>(v % n);
                v /= n;
            }
        }
        std::vector<int> addtab(static_cast<std::size_t>(n) * n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) addtab[static_cast<std::size_t>(a) * n + b] = g.add(a, b);
        for (std::size_t i = 0; i < packed.size(); ++i) {
            const std::uint16_t* da = &digits[i * m];
            for (std::size_t j = 0; j < packed.size(); ++j) {
                const std::uint16_t* db = &digits[j * m];
                std::uint64_t idx = 0;
                for (int p = 0; p < m; ++p) idx = idx * n + addtab[static_cast<std::size_t>(da[p]) * n + db[p]];
                ++hist[idx];
            }
        }
    }

    // ratio(g) = P(sum = g) / uniform = N(g) * n^m / I^2.
    long double pairs = static_cast<long double>(injections) * injections;
    long double l2sq = 0.0L, l1 = 0.0L;
    for (std::uint64_t c = 0; c < cells; ++c) {
        long double ratio = static_cast<long double>(hist[c]) * cells / pairs;
        long double diff = ratio - 1.0L;
        l2sq += diff * diff;
        l1 += std::fabs(diff);
    }
    DistanceReport r{};
    r.m = m;
    r.n = n;
    r.l2 = static_cast<double>(std::sqrt(l2sq / cells));
    r.l1 = static_cast<double>(l1 / cells);
    r.tv = r.l1 / 2.0;
    return r;
}

}  // namespace bijsum
