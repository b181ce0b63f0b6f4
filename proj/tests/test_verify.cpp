#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bijsum/verify.hpp"

#include <algorithm>
#include <set>
#include <string>

using namespace bijsum;

namespace {

bool has_check(const VerifyReport& rep, const std::string& name) {
    return std::any_of(rep.checks.begin(), rep.checks.end(),
                       [&](const CheckResult& c) { return c.name == name; });
}

}  // namespace

TEST_CASE("quick battery passes and covers every suite") {
    VerifyReport rep = run_verify(VerifyLevel::Quick);
    for (const auto& c : rep.checks) {
        INFO(c.name, ": ", c.detail);
        CHECK(c.pass);
    }
    CHECK(rep.all_pass());
    CHECK(rep.checks.size() >= 25);

    // one representative per suite
    for (const char* name :
         {"pairing-bilinearity", "coeff-methods-agree", "parseval", "shift-law",
          "two-torsion-product", "sign-flip-detectable", "killing-classification",
          "three-way-split", "strategy-agreement", "singular-series-range",
          "latin-property", "cyclic-transversal-counts", "xor-single-query-uniform",
          "frozen-small-counts"}) {
        CHECK(has_check(rep, name));
    }

    // check names are unique
    std::set<std::string> names;
    for (const auto& c : rep.checks) names.insert(c.name);
    CHECK(names.size() == rep.checks.size());
}

TEST_CASE("fourier battery alone") {
    VerifyReport rep = run_fourier_verify(5);
    for (const auto& c : rep.checks) {
        INFO(c.name, ": ", c.detail);
        CHECK(c.pass);
    }
    CHECK(has_check(rep, "coeff-methods-agree"));
    CHECK(has_check(rep, "sparse-main-term"));
    CHECK_FALSE(has_check(rep, "strategy-agreement"));
}
