#include "bijsum/function_table.hpp"

#include <json.hpp>

#include <fstream>
#include <random>
#include <stdexcept>

namespace bijsum {

bool FunctionTable::injective() const {
    std::vector<char> seen(group.order(), 0);
    for (int v : values) {
        if (v < 0 || v >= group.order()) throw std::invalid_argument("table value out of range");
        if (seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

int FunctionTable::value_sum() const {
    int s = 0;
    for (int v : values) s = group.add(s, v);
    return s;
}

FunctionTable zero_table(const AbelianGroup& g) {
    return FunctionTable{g, std::vector<int>(g.order(), 0)};
}

FunctionTable identity_table(const AbelianGroup& g) {
    FunctionTable f{g, std::vector<int>(g.order())};
    for (int i = 0; i < g.order(); ++i) f.values[i] = i;
    return f;
}

FunctionTable random_feasible_table(const AbelianGroup& g, int d, std::uint64_t seed) {
    if (d < 1) throw std::invalid_argument("d must be >= 1");
    int n = g.order();
    std::mt19937_64 rng(seed);
    FunctionTable f{g, std::vector<int>(n, 0)};
    int target = 0;
    for (int i = 0; i < d; ++i) target = g.add(target, g.sigma());
    int partial = 0;
    for (int i = 0; i + 1 < n; ++i) {
        f.values[i] = static_cast<int>(rng() % n);
        partial = g.add(partial, f.values[i]);
    }
    f.values[n - 1] = g.sub(target, partial);
    return f;
}

FunctionTable random_bijection(const AbelianGroup& g, std::uint64_t seed) {
    FunctionTable f = identity_table(g);
    std::mt19937_64 rng(seed);
    for (int i = g.order() - 1; i > 0; --i) {
        int j = static_cast<int>(rng() % (i + 1));
        std::swap(f.values[i], f.values[j]);
    }
    return f;
}

FunctionTable table_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.contains("group") || !j.contains("values"))
        throw std::invalid_argument("table JSON needs \"group\" and \"values\"");
    AbelianGroup g{j.at("group").get<std::vector<int>>()};
    FunctionTable f{g, {}};
    for (const auto& cv : j.at("values"))
        f.values.push_back(g.index_of(cv.get<std::vector<int>>()));
    if (f.size() != g.order())
        throw std::invalid_argument("table JSON must list exactly one value per position");
    return f;
}

std::string table_to_json(const FunctionTable& f) {
    nlohmann::json j;
    j["group"] = f.group.factors();
    auto values = nlohmann::json::array();
    for (int v : f.values) values.push_back(f.group.coords(v));
    j["values"] = std::move(values);
    return j.dump();
}

FunctionTable load_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open table file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return table_from_json(text);
}

}  // namespace bijsum
