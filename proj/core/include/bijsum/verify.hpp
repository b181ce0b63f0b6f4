#pragma once

#include <string>
#include <vector>

namespace bijsum {

// Identity batteries over the whole library. Quick keeps every suite at
// group order <= 4 and finishes in seconds; Full runs each invariant at its
// stated range (order <= 12 where cheap, exhaustive Fourier scans to order 6,
// sparse scans to order 7, the xor grid to k = 3).
enum class VerifyLevel { Quick, Full };

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

VerifyReport run_verify(VerifyLevel level);

// The Fourier subset only, over groups of order <= nmax (exhaustive
// comparisons are still capped at order 6 internally).
VerifyReport run_fourier_verify(int nmax);

}  // namespace bijsum
