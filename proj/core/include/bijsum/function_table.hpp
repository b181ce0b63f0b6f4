#pragma once

#include "bijsum/group.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace bijsum {

// A function {0,...,n-1} -> G stored as element indices. Total tables have
// exactly n = |G| entries; shorter tables describe partial assignments and
// only appear on injection-statistics paths.
struct FunctionTable {
    AbelianGroup group;
    std::vector<int> values;

    int size() const { return static_cast<int>(values.size()); }
    bool injective() const;
    bool bijective() const { return size() == group.order() && injective(); }

    // Index of sum_i values[i].
    int value_sum() const;
};

FunctionTable zero_table(const AbelianGroup& g);

// Position i maps to element index i.
FunctionTable identity_table(const AbelianGroup& g);

// Deterministic table with value sum d * sigma(G): the first n-1 entries are
// mt19937_64(seed) draws reduced mod n, the last entry closes the sum.
FunctionTable random_feasible_table(const AbelianGroup& g, int d, std::uint64_t seed);

// Fisher-Yates shuffle of the identity table driven by mt19937_64(seed).
FunctionTable random_bijection(const AbelianGroup& g, std::uint64_t seed);

// One-line JSON: {"group":[m1,...,mr],"values":[[c1,...,cr],...]} with one
// coordinate vector per value. parse/format round-trip exactly.
FunctionTable table_from_json(const std::string& text);
std::string table_to_json(const FunctionTable& f);
FunctionTable load_table(const std::string& path);

}  // namespace bijsum
