// Command line front end. Every subcommand prints one machine-readable
// record: json is a single line, csv is a header row plus value rows, plain
// is key: value text. Exact counts always travel as decimal strings.
//
// Exit codes: 0 success, 2 invalid arguments, 3 budget exceeded,
// 4 verification failure.

#include "CLI11.hpp"
#include "json.hpp"

#include "bijsum/arith.hpp"
#include "bijsum/counting.hpp"
#include "bijsum/errors.hpp"
#include "bijsum/fourier.hpp"
#include "bijsum/function_table.hpp"
#include "bijsum/group.hpp"
#include "bijsum/latin.hpp"
#include "bijsum/verify.hpp"
#include "bijsum/xor_prf.hpp"

#include <complex>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using json = nlohmann::ordered_json;

std::string csv_escape(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string cell_text(const json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

// One level of nesting is flattened with dotted keys so csv and plain stay
// tabular.
void flatten(const json& rec, std::vector<std::pair<std::string, json>>& out) {
    for (const auto& [key, value] : rec.items()) {
        if (value.is_object()) {
            for (const auto& [k2, v2] : value.items()) out.emplace_back(key + "." + k2, v2);
        } else {
            out.emplace_back(key, value);
        }
    }
}

void emit_record(const std::string& format, const json& rec) {
    if (format == "json") {
        std::cout << rec.dump() << "\n";
        return;
    }
    std::vector<std::pair<std::string, json>> fields;
    flatten(rec, fields);
    if (format == "csv") {
        for (std::size_t i = 0; i < fields.size(); ++i)
            std::cout << (i ? "," : "") << csv_escape(fields[i].first);
        std::cout << "\n";
        for (std::size_t i = 0; i < fields.size(); ++i)
            std::cout << (i ? "," : "") << csv_escape(cell_text(fields[i].second));
        std::cout << "\n";
        return;
    }
    for (const auto& [key, value] : fields) std::cout << key << ": " << cell_text(value) << "\n";
}

void emit_rows(const std::string& format, const std::vector<std::string>& columns,
               const std::vector<std::vector<json>>& rows) {
    if (format == "json") {
        json out = json::array();
        for (const auto& row : rows) {
            json rec;
            for (std::size_t i = 0; i < columns.size(); ++i) rec[columns[i]] = row[i];
            out.push_back(std::move(rec));
        }
        std::cout << out.dump() << "\n";
        return;
    }
    if (format == "csv") {
        for (std::size_t i = 0; i < columns.size(); ++i)
            std::cout << (i ? "," : "") << csv_escape(columns[i]);
        std::cout << "\n";
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                std::cout << (i ? "," : "") << csv_escape(cell_text(row[i]));
            std::cout << "\n";
        }
        return;
    }
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < columns.size(); ++i)
            std::cout << (i ? "  " : "") << columns[i] << "=" << cell_text(row[i]);
        std::cout << "\n";
    }
}

void add_format_flag(CLI::App* cmd, std::string& format) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "plain"}));
}

void add_budget_flags(CLI::App* cmd, bijsum::Budgets& b) {
    cmd->add_option("--state-budget", b.state_budget, "cap on live DP states");
    cmd->add_option("--char-budget", b.char_budget, "cap on enumerated characters");
    cmd->add_option("--pair-budget", b.pair_budget, "cap on enumerated injection pairs");
    cmd->add_option("--cell-budget", b.cell_budget, "cap on histogram cells");
    cmd->add_option("--kernel-budget", b.kernel_budget, "cap on outer-sum kernel calls");
    cmd->add_option("--threads", b.threads, "worker thread cap (counts are thread-invariant)");
}

bijsum::FunctionTable resolve_table(const bijsum::AbelianGroup& g, const std::string& spec,
                                    int d, std::optional<std::uint64_t>& seed) {
    if (spec == "zero") return bijsum::zero_table(g);
    if (spec.rfind("random:", 0) == 0) {
        seed = std::stoull(spec.substr(7));
        return bijsum::random_feasible_table(g, d, *seed);
    }
    bijsum::FunctionTable f = bijsum::load_table(spec);
    if (!(f.group == g)) throw std::invalid_argument("table group differs from --group");
    return f;
}

bijsum::FunctionTable resolve_pi(const bijsum::AbelianGroup& g, const std::string& spec,
                                 std::optional<std::uint64_t>& seed) {
    if (spec == "identity") return bijsum::identity_table(g);
    if (spec.rfind("random:", 0) == 0) {
        seed = std::stoull(spec.substr(7));
        return bijsum::random_bijection(g, *seed);
    }
    throw std::invalid_argument("--pi must be identity or random:<seed>");
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t used = 0;
        out.push_back(std::stoi(tok, &used));
        if (used != tok.size()) throw std::invalid_argument("bad integer in list: " + tok);
    }
    return out;
}

int report_verify(const bijsum::VerifyReport& rep, const std::string& format,
                  const std::string& level) {
    if (format == "json") {
        json rec;
        rec["level"] = level;
        rec["all_pass"] = rep.all_pass();
        json checks = json::array();
        for (const auto& c : rep.checks)
            checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        rec["checks"] = std::move(checks);
        std::cout << rec.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "name,pass,detail\n";
        for (const auto& c : rep.checks)
            std::cout << csv_escape(c.name) << "," << (c.pass ? "true" : "false") << ","
                      << csv_escape(c.detail) << "\n";
    } else {
        int failed = 0;
        for (const auto& c : rep.checks) {
            failed += !c.pass;
            std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << "  (" << c.detail << ")\n";
        }
        if (failed)
            std::cout << failed << " of " << rep.checks.size() << " checks failed\n";
        else
            std::cout << "all " << rep.checks.size() << " checks passed\n";
    }
    return rep.all_pass() ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Fourier coefficients and solution counts for bijection sum equations"};
    app.require_subcommand(1);
    int exit_code = 0;

    // group info
    auto* group_cmd = app.add_subcommand("group", "group structure queries");
    group_cmd->require_subcommand(1);
    auto* info_cmd = group_cmd->add_subcommand("info", "order, factors, element sum");
    struct {
        std::string group;
        std::string format = "json";
    } info;
    info_cmd->add_option("--group", info.group, "group spec, e.g. 5 or 4x2")->required();
    add_format_flag(info_cmd, info.format);
    info_cmd->callback([&] {
        bijsum::AbelianGroup g = bijsum::AbelianGroup::parse(info.group);
        json rec;
        rec["group"] = g.spec_string();
        rec["n"] = g.order();
        rec["rank"] = g.rank();
        rec["factors"] = g.factors();
        rec["sigma"] = g.sigma();
        rec["sigma_coords"] = g.coords(g.sigma());
        emit_record(info.format, rec);
    });

    // fourier coeff | sparse-sum | verify
    auto* fourier_cmd = app.add_subcommand("fourier", "bijection indicator coefficients");
    fourier_cmd->require_subcommand(1);

    auto* coeff_cmd = fourier_cmd->add_subcommand("coeff", "one coefficient, both methods");
    struct {
        std::string group;
        std::string chi;
        std::string format = "json";
        bijsum::Budgets budgets;
    } co;
    coeff_cmd->add_option("--group", co.group, "group spec")->required();
    coeff_cmd->add_option("--chi", co.chi, "comma-separated dual indices, one per position")
        ->required();
    add_format_flag(coeff_cmd, co.format);
    add_budget_flags(coeff_cmd, co.budgets);
    coeff_cmd->callback([&] {
        bijsum::AbelianGroup g = bijsum::AbelianGroup::parse(co.group);
        std::vector<int> coords = parse_int_list(co.chi);
        if (static_cast<int>(coords.size()) != g.order())
            throw std::invalid_argument("--chi needs exactly n entries");
        for (int& c : coords) {
            c %= g.order();
            if (c < 0) c += g.order();
        }
        bijsum::CharacterVector chi{g, coords};
        bijsum::FourierTable table(g);
        std::complex<double> value = table.coeff(chi).value;
        bijsum::EntropyReport ent = bijsum::entropy_report(chi);
        bijsum::BoundReport bounds = bijsum::bound_ratios(table, chi);
        json rec;
        rec["re"] = value.real();
        rec["im"] = value.imag();
        rec["method"] = "recursion";
        rec["n"] = g.order();
        rec["m"] = chi.sparsity();
        rec["entropy"] = ent.entropy;
        rec["shannon"] = ent.shannon;
        rec["bounds"] = json{{"coeff_abs", bounds.coeff_abs},
                             {"elementary_ratio", bounds.elementary_ratio},
                             {"sqrt_cancel_ratio", bounds.sqrt_cancel_ratio},
                             {"torsion_repetition_fraction", bounds.torsion_repetition_fraction}};
        if (g.order() <= co.budgets.direct_max_n) {
            std::complex<double> direct = bijsum::coeff_direct(chi, co.budgets.direct_max_n).value;
            rec["direct_agrees"] =
                std::abs(direct - value) <= 1e-9 * bijsum::bijection_density(g.order());
        }
        emit_record(co.format, rec);
    });

    auto* sparse_cmd = fourier_cmd->add_subcommand("sparse-sum", "m-sparse power sum");
    struct {
        std::string group;
        std::string f = "zero";
        int m = 0;
        int d = 3;
        std::string format = "json";
        bijsum::Budgets budgets;
    } sp;
    sparse_cmd->add_option("--group", sp.group, "group spec")->required();
    sparse_cmd->add_option("--m", sp.m, "sparsity level")->required();
    sparse_cmd->add_option("--d", sp.d, "power");
    sparse_cmd->add_option("--f", sp.f, "target table: zero or a JSON file path");
    add_format_flag(sparse_cmd, sp.format);
    add_budget_flags(sparse_cmd, sp.budgets);
    sparse_cmd->callback([&] {
        bijsum::AbelianGroup g = bijsum::AbelianGroup::parse(sp.group);
        std::optional<std::uint64_t> seed;
        if (sp.f.rfind("random:", 0) == 0)
            throw std::invalid_argument("sparse-sum takes --f zero or a file path");
        bijsum::FunctionTable f = resolve_table(g, sp.f, sp.d, seed);
        bijsum::FourierTable table(g);
        std::complex<double> s =
            bijsum::sparse_power_sum(table, sp.m, sp.d, f, sp.budgets.char_budget);
        double u = bijsum::bijection_density(g.order());
        double scale = 1.0;
        for (int i = 0; i < sp.d; ++i) scale *= u;
        json rec;
        rec["re"] = s.real();
        rec["im"] = s.imag();
        rec["method"] = "sparse-enumeration";
        rec["n"] = g.order();
        rec["m"] = sp.m;
        rec["d"] = sp.d;
        rec["scale"] = scale;
        emit_record(sp.format, rec);
    });

    auto* fverify_cmd = fourier_cmd->add_subcommand("verify", "coefficient identity battery");
    struct {
        int nmax = 6;
        std::string format = "plain";
    } fv;
    fverify_cmd->add_option("--nmax", fv.nmax, "largest group order to scan");
    add_format_flag(fverify_cmd, fv.format);
    fverify_cmd->callback([&] {
        bijsum::VerifyReport rep = bijsum::run_fourier_verify(fv.nmax);
        exit_code = report_verify(rep, fv.format, "fourier");
    });

    // count
    auto* count_cmd = app.add_subcommand("count", "exact d-tuple solution count");
    struct {
        std::string group;
        std::string f = "zero";
        int d = 2;
        std::string strategy = "auto";
        std::string format = "json";
        bijsum::Budgets budgets;
    } ct;
    count_cmd->add_option("--group", ct.group, "group spec")->required();
    count_cmd->add_option("--d", ct.d, "number of bijections")->required();
    count_cmd->add_option("--f", ct.f, "target: zero, random:<seed>, or a JSON file path");
    count_cmd->add_option("--strategy", ct.strategy, "counting strategy")
        ->check(CLI::IsMember({"auto", "pair-dp", "triple-dp", "outer-sum", "fourier"}));
    add_format_flag(count_cmd, ct.format);
    add_budget_flags(count_cmd, ct.budgets);
    count_cmd->callback([&] {
        bijsum::AbelianGroup g = bijsum::AbelianGroup::parse(ct.group);
        std::optional<std::uint64_t> seed;
        bijsum::FunctionTable f = resolve_table(g, ct.f, ct.d, seed);
        bijsum::CountResult r = bijsum::count_tuples(g, f, ct.d,
                                                     bijsum::strategy_from_string(ct.strategy),
                                                     ct.budgets);
        bijsum::Prediction p = bijsum::predict(g, f, ct.d);
        json rec;
        rec["n"] = g.order();
        rec["d"] = ct.d;
        rec["feasible"] = bijsum::feasible(g, f, ct.d);
        rec["exact"] = r.count.str();
        rec["prediction"] = p.available ? json(p.main_value) : json(nullptr);
        rec["singular_series"] = p.available ? json(p.singular_series) : json(nullptr);
        rec["ratio"] = (p.available && p.main_value > 0.0)
                           ? json(bijsum::to_double(r.count) / p.main_value)
                           : json(nullptr);
        rec["strategy"] = r.strategy;
        rec["elapsed_ms"] = r.elapsed_ms;
        if (seed) rec["seed"] = std::to_string(*seed);
        emit_record(ct.format, rec);
    });

    // dist
    auto* dist_cmd = app.add_subcommand("dist", "injection sum distance from uniform");
    struct {
        std::string group;
        int m = 1;
        std::string format = "json";
        bijsum::Budgets budgets;
    } di;
    dist_cmd->add_option("--group", di.group, "group spec")->required();
    dist_cmd->add_option("--m", di.m, "number of sampled points")->required();
    add_format_flag(dist_cmd, di.format);
    add_budget_flags(dist_cmd, di.budgets);
    dist_cmd->callback([&] {
        bijsum::AbelianGroup g = bijsum::AbelianGroup::parse(di.group);
        bijsum::DistanceReport r = bijsum::injection_distribution_distance(g, di.m, di.budgets);
        json rec;
        rec["n"] = r.n;
        rec["m"] = r.m;
        rec["l2"] = r.l2;
        rec["l1"] = r.l1;
        rec["tv"] = r.tv;
        emit_record(di.format, rec);
    });

    // latin transversals | crosscheck
    auto* latin_cmd = app.add_subcommand("latin", "group-based Latin hypercubes");
    latin_cmd->require_subcommand(1);

    auto* trans_cmd = latin_cmd->add_subcommand("transversals", "exact transversal count");
    struct {
        std::string group;
        int d = 2;
        std::string pi = "identity";
        int sweep = 0;
        std::string format = "json";
        bijsum::Budgets budgets;
    } tr;
    trans_cmd->add_option("--group", tr.group, "group spec (ignored with --sweep)");
    trans_cmd->add_option("--d", tr.d, "cube dimension");
    trans_cmd->add_option("--pi", tr.pi, "defining bijection: identity or random:<seed>");
    trans_cmd->add_option("--sweep", tr.sweep,
                          "emit one row per cyclic group order 3..nmax instead");
    add_format_flag(trans_cmd, tr.format);
    add_budget_flags(trans_cmd, tr.budgets);
    trans_cmd->callback([&] {
        if (tr.sweep > 0) {
            std::vector<std::vector<json>> rows;
            for (int n = 3; n <= tr.sweep; ++n) {
                bijsum::AbelianGroup g{{n}};
                bijsum::FunctionTable id = bijsum::identity_table(g);
                bijsum::TransversalCount t =
                    bijsum::count_transversals(bijsum::LatinCubeView(g, id, tr.d), tr.budgets);
                bijsum::Prediction p = bijsum::predict(g, id, tr.d);
                json prediction = p.available ? json(p.main_value) : json(nullptr);
                json ratio = (p.available && p.main_value > 0.0)
                                 ? json(bijsum::to_double(t.count) / p.main_value)
                                 : json(nullptr);
                rows.push_back({json(n), json(tr.d), json(t.count.str()), prediction, ratio,
                                json(t.taranenko_ratio)});
            }
            emit_rows(tr.format, {"n", "d", "transversals", "prediction", "ratio",
                                  "taranenko_ratio"},
                      rows);
            return;
        }
        if (tr.group.empty()) throw std::invalid_argument("--group is required without --sweep");
        bijsum::AbelianGroup g = bijsum::AbelianGroup::parse(tr.group);
        std::optional<std::uint64_t> seed;
        bijsum::FunctionTable pi = resolve_pi(g, tr.pi, seed);
        bijsum::LatinCubeView cube(g, pi, tr.d);
        bijsum::TransversalCount t = bijsum::count_transversals(cube, tr.budgets);
        bijsum::BigInt tuples = bijsum::count_tuples(g, pi, tr.d, bijsum::Strategy::Auto,
                                                     tr.budgets)
                                    .count;
        json rec;
        rec["n"] = t.n;
        rec["d"] = t.d;
        rec["transversals"] = t.count.str();
        rec["taranenko_ratio"] = t.taranenko_ratio;
        rec["crosscheck_ok"] = t.count == tuples;
        if (seed) rec["seed"] = std::to_string(*seed);
        emit_record(tr.format, rec);
    });

    auto* cross_cmd = latin_cmd->add_subcommand("crosscheck", "transversal and solution counts");
    struct {
        std::string group;
        int d = 2;
        std::string pi = "identity";
        std::string format = "json";
        bijsum::Budgets budgets;
    } cr;
    cross_cmd->add_option("--group", cr.group, "group spec")->required();
    cross_cmd->add_option("--d", cr.d, "cube dimension");
    cross_cmd->add_option("--pi", cr.pi, "defining bijection: identity or random:<seed>");
    add_format_flag(cross_cmd, cr.format);
    add_budget_flags(cross_cmd, cr.budgets);
    cross_cmd->callback([&] {
        bijsum::AbelianGroup g = bijsum::AbelianGroup::parse(cr.group);
        std::optional<std::uint64_t> seed;
        bijsum::FunctionTable pi = resolve_pi(g, cr.pi, seed);
        bijsum::CrosscheckReport r = bijsum::lemma_crosscheck(g, pi, cr.d, cr.budgets);
        json rec;
        rec["n"] = g.order();
        rec["d"] = cr.d;
        rec["transversals"] = r.transversals.str();
        rec["tuple_count"] = r.tuple_count.str();
        rec["extended_checked"] = r.extended_checked;
        if (r.extended_checked) {
            rec["extended_lhs"] = r.extended_lhs.str();
            rec["extended_rhs"] = r.extended_rhs.str();
        }
        rec["crosscheck_ok"] = r.ok;
        if (seed) rec["seed"] = std::to_string(*seed);
        emit_record(cr.format, rec);
        if (!r.ok) exit_code = 4;
    });

    // xor-advantage
    auto* xor_cmd = app.add_subcommand("xor-advantage", "xor of two permutations, PRF accounting");
    struct {
        int bits = 0;
        int queries = 0;
        double prp_adv = 0.0;
        double constant = 1.0;
        bool exact = false;
        std::string format = "json";
        bijsum::Budgets budgets;
    } xa;
    // The packed-xor scan is cheap per pair; the library-wide default budget
    // would reject the natural k = 3 grid.
    xa.budgets.pair_budget = std::uint64_t{1} << 31;
    xor_cmd->add_option("--bits", xa.bits, "block width k, group (Z/2)^k")->required();
    xor_cmd->add_option("--queries", xa.queries, "query budget m < 2^k")->required();
    xor_cmd->add_option("--prp-adv", xa.prp_adv, "assumed PRP advantage of each permutation");
    xor_cmd->add_option("--constant", xa.constant, "multiplier for the m/2^(3k/2) term");
    xor_cmd->add_flag("--exact", xa.exact, "also compute the exact total variation");
    add_format_flag(xor_cmd, xa.format);
    add_budget_flags(xor_cmd, xa.budgets);
    xor_cmd->callback([&] {
        bijsum::AdvantageReport r = bijsum::xor_advantage(xa.bits, xa.queries, xa.prp_adv,
                                                          xa.constant, xa.exact, xa.budgets);
        json rec;
        rec["bits"] = r.bits;
        rec["queries"] = r.queries;
        rec["prp_advantage"] = r.prp_advantage_input;
        rec["bound_constant"] = r.bound_constant;
        rec["bound_value"] = r.bound_value;
        rec["exact_tv"] = r.exact_tv ? json(*r.exact_tv) : json(nullptr);
        rec["empirical_constant"] =
            r.empirical_constant ? json(*r.empirical_constant) : json(nullptr);
        emit_record(xa.format, rec);
    });

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "full identity battery");
    struct {
        std::string level = "quick";
        std::string format = "plain";
    } ve;
    verify_cmd->add_option("--level", ve.level, "quick or full")
        ->check(CLI::IsMember({"quick", "full"}));
    add_format_flag(verify_cmd, ve.format);
    verify_cmd->callback([&] {
        bijsum::VerifyLevel level =
            ve.level == "full" ? bijsum::VerifyLevel::Full : bijsum::VerifyLevel::Quick;
        bijsum::VerifyReport rep = bijsum::run_verify(level);
        exit_code = report_verify(rep, ve.format, ve.level);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const bijsum::BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
