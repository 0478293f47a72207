#include "fermat/commands.hpp"

#include "fermat/characters.hpp"
#include "fermat/cusps.hpp"
#include "fermat/diagonals.hpp"
#include "fermat/isotypic.hpp"
#include "fermat/precycles.hpp"
#include "fermat/splitting.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace fermat::cli {

namespace {

std::string dec(const Int& value) { return value.str(); }
std::string dec(long long value) { return std::to_string(value); }

std::string verdict_str(bool ok) { return ok ? "pass" : "fail"; }

void require(bool condition, const std::string& message) {
    if (!condition) throw std::invalid_argument(message);
}

/* Fixed-size work pool over a task list.  Results go into preallocated
 * slots indexed by task id, so the output order never depends on
 * scheduling.  The first worker exception is rethrown after the join.
 */
void parallel_for(std::size_t count, int jobs,
                  const std::function<void(std::size_t)>& body) {
    std::size_t workers = jobs < 1 ? 1 : static_cast<std::size_t>(jobs);
    workers = std::min(workers, count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    return;
                }
            }
        });
    for (auto& worker : pool) worker.join();
    if (failure) std::rethrow_exception(failure);
}

// ---------------------------------------------------------------- decompose

json decompose_entry(const FermatParams& params, long long max_enum,
                     bool& ok) {
    const CharacterSet dual = enumerate_dual_group(params, max_enum);
    const CharacterSet a = set_A(params, max_enum);
    const Int closed_form = count_A_closed_form(params);

    json b_sizes = json::array();
    bool b_ok = true;
    const Int b_expected = int_pow(Int(params.d), static_cast<unsigned>(params.n));
    for (int i = 0; i < params.ambient_vars(); ++i) {
        const Int size = Int(set_B(params, {i}, max_enum).size());
        b_sizes.push_back(dec(size));
        b_ok = b_ok && size == b_expected;
    }

    std::map<int, Int> histogram;
    for (const Character& chi : a.members) histogram[hodge_type(params, chi).q] += 1;

    json hist_json = json::object();
    json griffiths_json = json::object();
    bool hodge_ok = true;
    for (int q = 0; q <= params.n; ++q) {
        const auto it = histogram.find(q);
        const Int counted = it == histogram.end() ? Int(0) : it->second;
        const Int oracle = griffiths_hodge_number(params, q);
        hist_json[std::to_string(q)] = dec(counted);
        griffiths_json[std::to_string(q)] = dec(oracle);
        hodge_ok = hodge_ok && counted == oracle;
    }

    const bool group_ok = Int(dual.size()) == group_order(params);
    const bool closed_ok = Int(a.size()) == closed_form;

    json checks;
    checks["group_order_match"] = group_ok;
    checks["closed_form_match"] = closed_ok;
    checks["b_sizes_match"] = b_ok;
    checks["hodge_oracle_match"] = hodge_ok;
    bool entry_ok = group_ok && closed_ok && b_ok && hodge_ok;
    if (params.n == 1) {
        const bool curve_ok =
            Int(a.size()) == Int(params.d - 1) * (params.d - 2);
        checks["curve_count_match"] = curve_ok;
        entry_ok = entry_ok && curve_ok;
    }

    json entry;
    entry["d"] = dec(params.d);
    entry["n"] = dec(params.n);
    entry["group_order"] = dec(group_order(params));
    entry["count_A"] = dec(Int(a.size()));
    entry["count_A_closed_form"] = dec(closed_form);
    entry["b_sizes"] = b_sizes;
    entry["hodge_histogram"] = hist_json;
    entry["griffiths_counts"] = griffiths_json;
    entry["checks"] = checks;
    entry["verdict"] = verdict_str(entry_ok);
    ok = entry_ok;
    return entry;
}

// -------------------------------------------------------------- split-check

struct SplitCombo {
    int n = 1;
    int p = 1;
    int q = 0;
};

const std::vector<SplitCombo> default_split_combos = {
    {1, 1, 0}, {3, 2, 0}, {5, 3, 0}, {3, 2, 1}, {5, 3, 1},
};

json split_entry(int d, const SplitCombo& combo, long long max_enum,
                 bool& ok) {
    const FermatParams params{d, combo.n};
    const LocalizationModel model =
        build_model(params, combo.p, combo.q, max_enum);
    const SplitReport result = verify_split(model);
    const Int expected_scalar =
        int_pow(Int(d), static_cast<unsigned>(combo.n + 1));
    const bool scalar_ok = result.scalar == expected_scalar;

    json checks = json::array();
    bool checks_ok = true;
    for (const SplitCheck& check : result.checks) {
        checks.push_back(json{{"name", check.name}, {"passed", check.passed}});
        checks_ok = checks_ok && check.passed;
    }
    const bool entry_ok = result.verdict && checks_ok && scalar_ok;

    json entry;
    entry["d"] = dec(d);
    entry["n"] = dec(combo.n);
    entry["p"] = dec(combo.p);
    entry["q"] = dec(combo.q);
    entry["middle_dim"] = dec(model.middle.dimension());
    entry["support_dim"] = dec(model.support.dimension());
    entry["kernel_dim"] = dec(model.kernel_dim);
    entry["scalar"] = dec(result.scalar);
    entry["scalar_match"] = scalar_ok;
    entry["witness"] =
        json{{"kind", result.witness.kind_name()},
             {"support_size", dec(Int(result.witness.char_support.size()))}};
    entry["checks"] = checks;
    entry["verdict"] = verdict_str(entry_ok);
    ok = entry_ok;
    return entry;
}

// --------------------------------------------------------- cusp class group

json cusp_entry(int d, bool& ok) {
    const CuspLattice lattice = build_cusp_lattice(d);
    const bool rank_ok =
        lattice.rank() == static_cast<std::size_t>(3 * d - 1);

    json entry;
    entry["d"] = dec(d);
    entry["rank"] = dec(Int(lattice.rank()));
    entry["expected_rank"] = dec(3 * d - 1);
    entry["rank_match"] = rank_ok;
    entry["generators_used"] = dec(lattice.generators_used);
    if (rank_ok) {
        const ClassGroup group = class_group(lattice);
        json factors = json::array();
        for (const Int& factor : group.invariant_factors)
            factors.push_back(dec(factor));
        entry["invariant_factors"] = factors;
        entry["class_group_exponent"] = dec(class_group_exponent(group));
    }
    entry["verdict"] = verdict_str(rank_ok);
    ok = rank_ok;
    return entry;
}

json torsion_probe_entry(bool& ok) {
    // The worked curve example: at d = 3 the difference of two cusps on the
    // same axis has order exactly 3 in the class group.
    const Int order = torsion_order(
        point_difference(Cusp{0, 0}, Cusp{0, 1}, 3), 3);
    const bool match = order == 3;
    json entry;
    entry["d"] = dec(3);
    entry["divisor"] = "P(0,0) - P(0,1)";
    entry["order"] = dec(order);
    entry["expected_order"] = dec(3);
    entry["verdict"] = verdict_str(match);
    ok = match;
    return entry;
}

// ----------------------------------------------------------------- triangle

struct TriangleCase {
    std::vector<int> indices;
    int a = 0;
    int b = 0;
    int c = 0;
};

std::vector<TriangleCase> triangle_case_list(const FermatParams& params) {
    std::vector<TriangleCase> cases;
    const int vars = params.ambient_vars();
    for (unsigned mask = 0; mask < (1u << vars); ++mask) {
        std::vector<int> indices;
        std::vector<int> pool;
        for (int i = 0; i < vars; ++i)
            ((mask >> i) & 1 ? indices : pool).push_back(i);
        if (static_cast<int>(indices.size()) + 2 > params.n) continue;
        for (std::size_t x = 0; x < pool.size(); ++x)
            for (std::size_t y = x + 1; y < pool.size(); ++y)
                for (std::size_t z = y + 1; z < pool.size(); ++z)
                    cases.push_back(
                        {indices, pool[x], pool[y], pool[z]});
    }
    return cases;
}

json triangle_summary(const FermatParams& params, bool list_cases, bool& ok) {
    const std::vector<TriangleCase> cases = triangle_case_list(params);
    json case_list = json::array();
    bool all_admissible = true;
    for (const TriangleCase& item : cases) {
        const PreCycle cycle =
            triangle_cycle(params, item.indices, item.a, item.b, item.c);
        const bool admissible = is_admissible(cycle);
        all_admissible = all_admissible && admissible;
        if (list_cases) {
            json indices = json::array();
            for (int i : item.indices) indices.push_back(dec(i));
            case_list.push_back(json{{"indices", indices},
                                     {"corners", json::array({dec(item.a),
                                                              dec(item.b),
                                                              dec(item.c)})},
                                     {"admissible", admissible}});
        }
    }

    json entry;
    entry["d"] = dec(params.d);
    entry["n"] = dec(params.n);
    entry["case_count"] = dec(Int(cases.size()));
    entry["all_admissible"] = all_admissible;
    if (list_cases) entry["cases"] = case_list;
    entry["verdict"] = verdict_str(all_admissible);
    ok = all_admissible;
    return entry;
}

// ----------------------------------------------------------------- diagonal

json diagonal_entry(int g, bool& ok) {
    const CurveBasis basis(g);
    const bool small_nonzero =
        !partial_diagonal_class(Diagonal::small_diagonal, basis).is_zero();
    const bool modified_zero = modified_diagonal_class(basis).is_zero();
    // Exactly these three fields; the verdict lives one level up.
    json entry;
    entry["g"] = dec(g);
    entry["small_diagonal_nonzero"] = small_nonzero;
    entry["modified_diagonal_zero"] = modified_zero;
    ok = small_nonzero && modified_zero;
    return entry;
}

// ------------------------------------------------------------------ plumbing

struct DRange {
    int lo = 1;
    int hi = 1;
};

DRange resolve_d_range(const RunConfig& config, int default_lo,
                       int default_hi) {
    require(!(config.d && config.d_range),
            "pass either --d or --d-range, not both");
    DRange range{default_lo, default_hi};
    if (config.d) range = {*config.d, *config.d};
    if (config.d_range) range = {config.d_range->first, config.d_range->second};
    require(range.lo >= 1, "degree range must start at 1 or above");
    require(range.lo <= range.hi, "degree range is empty");
    return range;
}

struct CommandPlan {
    json inputs;
    std::function<json()> run; // returns the report body, incl. "verdict"
};

CommandPlan plan_decompose(const RunConfig& config) {
    require(config.d.has_value(), "decompose requires --d");
    require(config.n.has_value(), "decompose requires --n");
    const FermatParams params{*config.d, *config.n};
    validate(params);

    CommandPlan plan;
    plan.inputs["d"] = dec(params.d);
    plan.inputs["n"] = dec(params.n);
    plan.inputs["max_enum"] = dec(config.max_enum);
    plan.run = [params, max_enum = config.max_enum] {
        bool ok = false;
        return decompose_entry(params, max_enum, ok);
    };
    return plan;
}

CommandPlan plan_split_check(const RunConfig& config) {
    const DRange range = resolve_d_range(config, 3, 8);
    std::vector<SplitCombo> combos;
    if (config.n || config.p || config.q) {
        require(config.n.has_value() && config.p.has_value(),
                "an explicit split point needs --n and --p");
        combos.push_back({*config.n, *config.p, config.q.value_or(0)});
    } else {
        combos = default_split_combos;
    }

    CommandPlan plan;
    plan.inputs["d_min"] = dec(range.lo);
    plan.inputs["d_max"] = dec(range.hi);
    json combos_json = json::array();
    for (const SplitCombo& combo : combos)
        combos_json.push_back(json{{"n", dec(combo.n)},
                                   {"p", dec(combo.p)},
                                   {"q", dec(combo.q)}});
    plan.inputs["combos"] = combos_json;
    plan.inputs["max_enum"] = dec(config.max_enum);

    plan.run = [range, combos, max_enum = config.max_enum,
                jobs = config.jobs] {
        std::vector<std::pair<int, SplitCombo>> tasks;
        for (int d = range.lo; d <= range.hi; ++d)
            for (const SplitCombo& combo : combos) tasks.emplace_back(d, combo);

        std::vector<json> slots(tasks.size());
        std::vector<char> oks(tasks.size(), 0);
        parallel_for(tasks.size(), jobs, [&](std::size_t i) {
            bool ok = false;
            slots[i] = split_entry(tasks[i].first, tasks[i].second, max_enum, ok);
            oks[i] = ok ? 1 : 0;
        });

        json entries = json::array();
        bool all_ok = true;
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            entries.push_back(std::move(slots[i]));
            all_ok = all_ok && oks[i];
        }
        json body;
        body["entries"] = std::move(entries);
        body["verdict"] = verdict_str(all_ok);
        return body;
    };
    return plan;
}

CommandPlan plan_cusp_class_group(const RunConfig& config) {
    const DRange range = resolve_d_range(config, 1, 20);

    CommandPlan plan;
    plan.inputs["d_min"] = dec(range.lo);
    plan.inputs["d_max"] = dec(range.hi);
    plan.run = [range, jobs = config.jobs] {
        const std::size_t count = static_cast<std::size_t>(range.hi - range.lo + 1);
        std::vector<json> slots(count);
        std::vector<char> oks(count, 0);
        parallel_for(count, jobs, [&](std::size_t i) {
            bool ok = false;
            slots[i] = cusp_entry(range.lo + static_cast<int>(i), ok);
            oks[i] = ok ? 1 : 0;
        });

        json entries = json::array();
        bool all_ok = true;
        for (std::size_t i = 0; i < count; ++i) {
            entries.push_back(std::move(slots[i]));
            all_ok = all_ok && oks[i];
        }
        json body;
        body["entries"] = std::move(entries);
        body["verdict"] = verdict_str(all_ok);
        return body;
    };
    return plan;
}

CommandPlan plan_torsion_order(const RunConfig& config) {
    require(config.d.has_value(), "torsion-order requires --d");
    require(!config.divisor.empty(), "torsion-order requires --divisor");
    const int d = *config.d;
    const CuspidalDivisor divisor = parse_divisor_spec(config.divisor, d);

    CommandPlan plan;
    plan.inputs["d"] = dec(d);
    json coefficients = json::array();
    for (const Int& coefficient : divisor)
        coefficients.push_back(dec(coefficient));
    plan.inputs["divisor"] = coefficients;
    plan.run = [d, divisor] {
        // torsion_order rejects nonzero degree as invalid input.
        const Int order = torsion_order(divisor, d);
        json body;
        body["d"] = dec(d);
        body["divisor_degree"] = dec(divisor_degree(divisor));
        body["order"] = dec(order);
        body["verdict"] = verdict_str(true);
        return body;
    };
    return plan;
}

CommandPlan plan_verify_triangle(const RunConfig& config) {
    require(config.d.has_value(), "verify-triangle requires --d");
    require(config.n.has_value(), "verify-triangle requires --n");
    const FermatParams params{*config.d, *config.n};
    validate(params);

    CommandPlan plan;
    plan.inputs["d"] = dec(params.d);
    plan.inputs["n"] = dec(params.n);
    plan.run = [params] {
        bool ok = false;
        return triangle_summary(params, /*list_cases=*/true, ok);
    };
    return plan;
}

CommandPlan plan_modified_diagonal(const RunConfig& config) {
    int g_lo = 0;
    int g_hi = 5;
    if (config.g) {
        require(*config.g >= 0, "genus must be nonnegative");
        g_lo = g_hi = *config.g;
    }

    CommandPlan plan;
    plan.inputs["g_min"] = dec(g_lo);
    plan.inputs["g_max"] = dec(g_hi);
    plan.run = [g_lo, g_hi] {
        json entries = json::array();
        bool all_ok = true;
        for (int g = g_lo; g <= g_hi; ++g) {
            bool ok = false;
            entries.push_back(diagonal_entry(g, ok));
            all_ok = all_ok && ok;
        }
        json body;
        body["entries"] = std::move(entries);
        body["verdict"] = verdict_str(all_ok);
        return body;
    };
    return plan;
}

CommandPlan plan_all_checks(const RunConfig& config) {
    CommandPlan plan;
    plan.inputs["max_enum"] = dec(config.max_enum);
    plan.run = [max_enum = config.max_enum, jobs = config.jobs] {
        json sections;
        bool all_ok = true;

        auto run_grid = [&](const std::vector<std::function<json(bool&)>>& tasks) {
            std::vector<json> slots(tasks.size());
            std::vector<char> oks(tasks.size(), 0);
            parallel_for(tasks.size(), jobs, [&](std::size_t i) {
                bool ok = false;
                slots[i] = tasks[i](ok);
                oks[i] = ok ? 1 : 0;
            });
            json entries = json::array();
            bool grid_ok = true;
            for (std::size_t i = 0; i < tasks.size(); ++i) {
                entries.push_back(std::move(slots[i]));
                grid_ok = grid_ok && oks[i];
            }
            return std::make_pair(std::move(entries), grid_ok);
        };

        {
            std::vector<std::function<json(bool&)>> tasks;
            for (int d = 1; d <= 12; ++d)
                for (int n = 1; n <= 3; ++n)
                    tasks.push_back([d, n, max_enum](bool& ok) {
                        return decompose_entry(FermatParams{d, n}, max_enum, ok);
                    });
            auto [entries, ok] = run_grid(tasks);
            sections["decompose"] =
                json{{"entries", std::move(entries)}, {"verdict", verdict_str(ok)}};
            all_ok = all_ok && ok;
        }

        {
            std::vector<std::function<json(bool&)>> tasks;
            for (int d = 3; d <= 8; ++d)
                for (const SplitCombo& combo : default_split_combos)
                    tasks.push_back([d, combo, max_enum](bool& ok) {
                        return split_entry(d, combo, max_enum, ok);
                    });
            auto [entries, ok] = run_grid(tasks);
            sections["split"] =
                json{{"entries", std::move(entries)}, {"verdict", verdict_str(ok)}};
            all_ok = all_ok && ok;
        }

        {
            std::vector<std::function<json(bool&)>> tasks;
            for (int d = 1; d <= 20; ++d)
                tasks.push_back([d](bool& ok) { return cusp_entry(d, ok); });
            auto [entries, ok] = run_grid(tasks);
            bool torsion_ok = false;
            json torsion = torsion_probe_entry(torsion_ok);
            sections["cusp"] = json{{"entries", std::move(entries)},
                                    {"torsion_check", std::move(torsion)},
                                    {"verdict", verdict_str(ok && torsion_ok)}};
            all_ok = all_ok && ok && torsion_ok;
        }

        {
            std::vector<std::function<json(bool&)>> tasks;
            for (int d = 1; d <= 6; ++d)
                for (int n = 1; n <= 5; ++n)
                    tasks.push_back([d, n](bool& ok) {
                        return triangle_summary(FermatParams{d, n},
                                                /*list_cases=*/false, ok);
                    });
            auto [entries, ok] = run_grid(tasks);
            sections["triangle"] =
                json{{"entries", std::move(entries)}, {"verdict", verdict_str(ok)}};
            all_ok = all_ok && ok;
        }

        {
            std::vector<std::function<json(bool&)>> tasks;
            for (int g = 0; g <= 5; ++g)
                tasks.push_back([g](bool& ok) { return diagonal_entry(g, ok); });
            auto [entries, ok] = run_grid(tasks);
            sections["modified_diagonal"] =
                json{{"entries", std::move(entries)}, {"verdict", verdict_str(ok)}};
            all_ok = all_ok && ok;
        }

        json body;
        body["sections"] = std::move(sections);
        body["verdict"] = verdict_str(all_ok);
        return body;
    };
    return plan;
}

CommandPlan plan_command(const RunConfig& config) {
    if (config.command == "decompose") return plan_decompose(config);
    if (config.command == "split-check") return plan_split_check(config);
    if (config.command == "cusp-class-group") return plan_cusp_class_group(config);
    if (config.command == "torsion-order") return plan_torsion_order(config);
    if (config.command == "verify-triangle") return plan_verify_triangle(config);
    if (config.command == "modified-diagonal") return plan_modified_diagonal(config);
    if (config.command == "all-checks") return plan_all_checks(config);
    throw std::invalid_argument("unknown command: " + config.command);
}

} // namespace

RunResult run_command(const RunConfig& config) {
    const auto started = std::chrono::steady_clock::now();
    CommandPlan plan = plan_command(config);
    const std::string key = cache_key(config.command, plan.inputs);

    if (!config.cache_dir.empty()) {
        if (auto cached = cache_load(config.cache_dir, key)) {
            RunResult out;
            out.report = std::move(*cached);
            out.exit_code = out.report.value("verdict", "fail") == "pass"
                                ? exit_pass
                                : exit_check_failed;
            out.cache_hit = true;
            return out;
        }
    }

    json body = plan.run();

    json report;
    report["command"] = config.command;
    report["schema"] = report_schema;
    report["version"] = artifact_version;
    report["inputs"] = std::move(plan.inputs);
    for (auto& [key_name, value] : body.items()) report[key_name] = value;

    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - started)
                             .count();
    finalize_report(report, elapsed);
    if (!config.cache_dir.empty()) cache_store(config.cache_dir, key, report);

    RunResult out;
    out.exit_code =
        report["verdict"] == "pass" ? exit_pass : exit_check_failed;
    out.report = std::move(report);
    return out;
}

namespace {

std::string trimmed(const std::string& text) {
    const auto first = text.find_first_not_of(" \t");
    if (first == std::string::npos) return "";
    const auto last = text.find_last_not_of(" \t");
    return text.substr(first, last - first + 1);
}

long long parse_integer(const std::string& text) {
    const std::string t = trimmed(text);
    if (t.empty()) throw std::invalid_argument("empty number in divisor spec");
    std::size_t used = 0;
    long long value = 0;
    try {
        value = std::stoll(t, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad number in divisor spec: '" + text + "'");
    }
    if (used != t.size())
        throw std::invalid_argument("bad number in divisor spec: '" + text + "'");
    return value;
}

} // namespace

std::vector<Int> parse_divisor_spec(const std::string& spec, int d) {
    if (d < 1) throw std::invalid_argument("degree d must be at least 1");
    CuspidalDivisor out = zero_divisor(d);
    bool any_term = false;

    std::size_t start = 0;
    while (start <= spec.size()) {
        const std::size_t end = spec.find(';', start);
        const std::string segment =
            spec.substr(start, end == std::string::npos ? std::string::npos
                                                        : end - start);
        start = end == std::string::npos ? spec.size() + 1 : end + 1;
        if (trimmed(segment).empty()) continue;

        std::vector<std::string> parts;
        std::size_t pos = 0;
        while (true) {
            const std::size_t comma = segment.find(',', pos);
            parts.push_back(segment.substr(
                pos, comma == std::string::npos ? std::string::npos
                                                : comma - pos));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (parts.size() != 3)
            throw std::invalid_argument(
                "divisor terms have the form axis,idx,coeff: '" + segment + "'");

        const long long axis = parse_integer(parts[0]);
        const long long idx = parse_integer(parts[1]);
        const long long coeff = parse_integer(parts[2]);
        if (axis < 0 || axis >= 3)
            throw std::invalid_argument("cusp axis must be 0, 1, or 2");
        if (idx < 0 || idx >= d)
            throw std::invalid_argument("cusp index must lie in [0, d)");
        out[static_cast<std::size_t>(axis * d + idx)] += Int(coeff);
        any_term = true;
    }
    if (!any_term)
        throw std::invalid_argument("divisor specification has no terms");
    return out;
}

} // namespace fermat::cli
