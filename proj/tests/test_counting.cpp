#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bijsum/counting.hpp"
#include "bijsum/errors.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

using namespace bijsum;

namespace {

// Oracle: enumerate all d-tuples of bijections and test the sum pointwise.
BigInt brute_count(const AbelianGroup& g, const FunctionTable& f, int d) {
    int n = g.order();
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    BigInt count = 0;
    std::vector<int> pick(d, 0);
    while (true) {
        bool match = true;
        for (int i = 0; i < n && match; ++i) {
            int s = 0;
            for (int t = 0; t < d; ++t) s = g.add(s, perms[pick[t]][i]);
            match = s == f.values[i];
        }
        if (match) ++count;
        int t = d - 1;
        while (t >= 0 && pick[t] + 1 == static_cast<int>(perms.size())) pick[t--] = 0;
        if (t < 0) break;
        ++pick[t];
    }
    return count;
}

}  // namespace

TEST_CASE("pinned small counts, all against the brute oracle") {
    AbelianGroup z2{{2}};
    FunctionTable z2zero = zero_table(z2);
    FunctionTable z2swap{z2, {0, 1}};
    CHECK(brute_count(z2, z2zero, 2) == 2);
    CHECK(count_pairs(z2, z2zero).count == 2);
    CHECK(brute_count(z2, z2swap, 3) == 4);
    CHECK(count_tuples(z2, z2swap, 3).count == 4);
    CHECK(brute_count(z2, z2zero, 3) == 0);
    CHECK(count_tuples(z2, z2zero, 3).count == 0);

    AbelianGroup z3{{3}};
    CHECK(brute_count(z3, identity_table(z3), 2) == 3);
    CHECK(count_pairs(z3, identity_table(z3)).count == 3);
    CHECK(brute_count(z3, zero_table(z3), 3) == 18);
    CHECK(count_tuples(z3, zero_table(z3), 3).count == 18);
}

TEST_CASE("every strategy matches the oracle") {
    for (const auto& factors : std::vector<std::vector<int>>{{2}, {3}, {4}, {2, 2}}) {
        AbelianGroup g{factors};
        std::vector<FunctionTable> fs{zero_table(g), identity_table(g),
                                      random_feasible_table(g, 2, 1),
                                      random_feasible_table(g, 3, 2)};
        for (const auto& f : fs) {
            BigInt want2 = brute_count(g, f, 2);
            CHECK(count_tuples(g, f, 2, Strategy::PairDp).count == want2);
            CHECK(count_tuples(g, f, 2, Strategy::Fourier).count == want2);
            CHECK(count_pairs(g, f).count == want2);

            BigInt want3 = brute_count(g, f, 3);
            CHECK(count_tuples(g, f, 3, Strategy::TripleDp).count == want3);
            CHECK(count_tuples(g, f, 3, Strategy::OuterSum).count == want3);
            CHECK(count_tuples(g, f, 3, Strategy::Fourier).count == want3);
            CHECK(count_tuples(g, f, 3, Strategy::Auto).count == want3);
        }
        FunctionTable f4 = random_feasible_table(g, 4, 3);
        if (g.order() <= 3) {
            BigInt want4 = brute_count(g, f4, 4);
            CHECK(count_tuples(g, f4, 4, Strategy::OuterSum).count == want4);
            CHECK(count_tuples(g, f4, 4, Strategy::Fourier).count == want4);
        } else {
            CHECK(count_tuples(g, f4, 4, Strategy::OuterSum).count ==
                  count_tuples(g, f4, 4, Strategy::Fourier).count);
        }
    }
}

TEST_CASE("feasibility gate") {
    AbelianGroup z4{{4}};
    // sigma(Z/4) = 2, so d = 2 needs sum(f) = 0
    FunctionTable ok{z4, {1, 3, 0, 0}};
    FunctionTable bad{z4, {1, 0, 0, 0}};
    CHECK(feasible(z4, ok, 2));
    CHECK_FALSE(feasible(z4, bad, 2));
    CHECK(count_pairs(z4, bad).count == 0);
    // d = 3 needs sum(f) = 2
    CHECK(feasible(z4, FunctionTable{z4, {2, 0, 0, 0}}, 3));
    CHECK_FALSE(feasible(z4, zero_table(z4), 3));
    CHECK(count_tuples(z4, zero_table(z4), 3).count == 0);
}

TEST_CASE("strategy parsing and reporting") {
    CHECK(strategy_from_string("auto") == Strategy::Auto);
    CHECK(strategy_from_string("pair-dp") == Strategy::PairDp);
    CHECK(strategy_from_string("triple-dp") == Strategy::TripleDp);
    CHECK(strategy_from_string("outer-sum") == Strategy::OuterSum);
    CHECK(strategy_from_string("fourier") == Strategy::Fourier);
    CHECK_THROWS_AS(strategy_from_string("nope"), std::invalid_argument);
    CHECK(strategy_name(Strategy::TripleDp) == "triple-dp");

    AbelianGroup z3{{3}};
    CountResult r = count_tuples(z3, zero_table(z3), 3);
    CHECK(r.d == 3);
    CHECK(r.strategy == "triple-dp");
    CHECK(r.elapsed_ms >= 0.0);
}

TEST_CASE("budget and argument errors") {
    AbelianGroup z5{{5}};
    Budgets tiny;
    tiny.state_budget = 3;
    CHECK_THROWS_AS(count_pairs(z5, zero_table(z5), tiny), BudgetError);
    Budgets small;
    small.triple_dp_max_n = 4;
    CHECK_THROWS_AS(count_tuples(z5, zero_table(z5), 3, Strategy::TripleDp, small), BudgetError);
    small.kernel_budget = 2;
    CHECK_THROWS_AS(count_tuples(z5, zero_table(z5), 3, Strategy::OuterSum, small), BudgetError);

    CHECK_THROWS_AS(count_tuples(z5, zero_table(z5), 1), std::invalid_argument);
    AbelianGroup z3{{3}};
    CHECK_THROWS_AS(count_pairs(z3, FunctionTable{z3, {0, 1}}), std::invalid_argument);
}

TEST_CASE("singular series") {
    AbelianGroup z4{{4}};
    SingularSeries constant = singular_series(z4, zero_table(z4));
    CHECK(constant.value == doctest::Approx(std::exp(-0.5)).epsilon(1e-12));
    CHECK(constant.collision_entropy == doctest::Approx(0.0).epsilon(1e-12));

    SingularSeries bij = singular_series(z4, identity_table(z4));
    CHECK(bij.value == doctest::Approx(std::exp(-0.125)).epsilon(1e-12));
    CHECK(bij.collision_entropy == doctest::Approx(std::log(4.0)).epsilon(1e-12));

    // two values hit twice each: sum of squared fiber sizes 8, H2 = ln 2
    SingularSeries mid = singular_series(z4, FunctionTable{z4, {0, 0, 1, 1}});
    CHECK(mid.collision_entropy == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(mid.value == doctest::Approx(std::exp(-0.25)).epsilon(1e-12));
}

TEST_CASE("prediction") {
    // d = 3, G = Z/7, f = 0: exp(-1/2) * 5040^3 / 7^6
    AbelianGroup z7{{7}};
    Prediction p = predict(z7, zero_table(z7), 3);
    CHECK(p.available);
    CHECK(p.is_feasible);
    double want = std::exp(-0.5) * std::pow(5040.0, 3) / std::pow(7.0, 6);
    CHECK(p.main_value == doctest::Approx(want).epsilon(1e-12));
    CHECK(want == doctest::Approx(6.600e5).epsilon(1e-3));

    // d = 2 on a bijection: exp(-1/2) * n!^2 / n^(n-1)
    AbelianGroup z5{{5}};
    Prediction p2 = predict(z5, identity_table(z5), 2);
    CHECK(p2.available);
    CHECK(p2.main_value == doctest::Approx(std::exp(-0.5) * 14400.0 / 625.0).epsilon(1e-12));
    CHECK(p2.main_value == doctest::Approx(13.97).epsilon(1e-3));

    // d = 2 without a bijective target carries no prediction
    Prediction p3 = predict(z5, zero_table(z5), 2);
    CHECK_FALSE(p3.available);

    // infeasible target: prediction zero
    AbelianGroup z4{{4}};
    Prediction p4 = predict(z4, zero_table(z4), 3);
    CHECK_FALSE(p4.is_feasible);
    CHECK(p4.main_value == 0.0);

    // d >= 4: no singular series factor
    Prediction p5 = predict(z5, zero_table(z5), 4);
    CHECK(p5.available);
    CHECK(p5.main_value ==
          doctest::Approx(std::pow(120.0, 4) / std::pow(5.0, 4)).epsilon(1e-12));
}

TEST_CASE("injection distance: exact values and norms") {
    AbelianGroup z3{{3}};
    DistanceReport r = injection_distribution_distance(z3, 2);
    CHECK(r.m == 2);
    CHECK(r.n == 3);
    CHECK(r.l2 == doctest::Approx(std::sqrt(0.125)).epsilon(1e-12));
    CHECK(r.tv == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
    CHECK(r.tv == r.l1 / 2.0);
    CHECK(r.l1 <= r.l2 + 1e-12);

    // oracle for Z/3, m = 2: 6 injections, 36 ordered pairs; the sum lands in
    // the 3 cells of the diagonal-free part unevenly. Recompute by hand here.
    {
        std::vector<std::pair<int, int>> inj;
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                if (a != b) inj.emplace_back(a, b);
        std::vector<int> hist(9, 0);
        for (const auto& p : inj)
            for (const auto& q : inj)
                hist[z3.add(p.first, q.first) * 3 + z3.add(p.second, q.second)]++;
        double l2 = 0.0, l1 = 0.0;
        for (int c = 0; c < 9; ++c) {
            double ratio = hist[c] * 9.0 / 36.0;
            l2 += (ratio - 1.0) * (ratio - 1.0) / 9.0;
            l1 += std::abs(ratio - 1.0) / 9.0;
        }
        CHECK(r.l2 == doctest::Approx(std::sqrt(l2)).epsilon(1e-12));
        CHECK(r.l1 == doctest::Approx(l1).epsilon(1e-12));
    }

    for (int m : {1, 2, 3}) {
        AbelianGroup z5{{5}};
        DistanceReport d5 = injection_distribution_distance(z5, m);
        if (m == 1) CHECK(d5.tv == 0.0);
        CHECK(d5.l1 <= d5.l2 + 1e-12);
    }
}

TEST_CASE("injection distance: thread count does not change the answer") {
    AbelianGroup v8{{2, 2, 2}};
    Budgets one;
    one.threads = 1;
    Budgets four;
    four.threads = 4;
    DistanceReport a = injection_distribution_distance(v8, 3, one);
    DistanceReport b = injection_distribution_distance(v8, 3, four);
    CHECK(a.l2 == b.l2);
    CHECK(a.l1 == b.l1);
    CHECK(a.tv == b.tv);
}

TEST_CASE("injection distance budgets") {
    AbelianGroup z5{{5}};
    Budgets tight;
    tight.pair_budget = 10;
    CHECK_THROWS_AS(injection_distribution_distance(z5, 3, tight), BudgetError);
    Budgets cells;
    cells.cell_budget = 4;
    CHECK_THROWS_AS(injection_distribution_distance(z5, 2, cells), BudgetError);
    CHECK_THROWS_AS(injection_distribution_distance(z5, 6), std::invalid_argument);
}
