#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "excol/certified.hpp"
#include "excol/dominating.hpp"
#include "excol/exact_chromatic.hpp"
#include "excol/gen.hpp"
#include "excol/io.hpp"
#include "excol/list_solver.hpp"
#include "excol/oracle.hpp"
#include "excol/randomized.hpp"
#include "excol/report.hpp"
#include "excol/set_removal.hpp"
#include "excol/structure.hpp"
#include "excol/trimmed.hpp"

namespace {

using namespace excol;

struct Budgets {
    int table_cap = kDefaultTableCap;
    int enum_cap = kDefaultEnumCap;
};

Budgets env_budgets() {
    Budgets b;
    if (const char* s = std::getenv("EXCOL_TABLE_CAP")) b.table_cap = std::atoi(s);
    if (const char* s = std::getenv("EXCOL_ENUM_CAP")) b.enum_cap = std::atoi(s);
    return b;
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw ParseError("rational with zero denominator: " + text);
        return Rational(num, den);
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        int frac = static_cast<int>(text.size() - dot - 1);
        BigInt den = 1;
        for (int i = 0; i < frac; ++i) den *= 10;
        return Rational(BigInt(digits), den);
    }
    return Rational(BigInt(text));
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double ms() const { return elapsed_ms(start_); }

private:
    std::chrono::steady_clock::time_point start_;
};

void print_report(const RunReport& report, const Graph* g) {
    std::cout << report.to_json(g).dump(2) << '\n';
}

VertexSet trimmed_s(const Graph& g, int delta) { return greedy_distance3_set(g, delta); }

int cmd_decide(const std::string& file, int k, const std::string& algorithm, int delta,
               const Budgets& budgets) {
    Graph g = load_dimacs_file(file);
    RunReport report;
    report.command = "decide";
    report.parameters["file"] = file;
    report.parameters["k"] = k;
    report.parameters["algorithm"] = algorithm;
    Timer timer;
    WorkStats stats;
    bool verdict = false;
    if (algorithm == "bhk") {
        verdict = decide_k_colorable(g, k, budgets.table_cap);
        report.lattice_entries = g.vertex_count() <= 62
                                     ? (std::uint64_t{1} << g.vertex_count())
                                     : 0;
    } else if (algorithm == "trimmed") {
        report.parameters["delta"] = delta;
        TrimmedInstance inst{g, trimmed_s(g, delta), k, delta};
        verdict = decide_trimmed(inst, &stats, budgets.table_cap);
        report.lattice_entries = stats.lattice_entries;
    } else if (algorithm == "bounded") {
        report.parameters["delta"] = delta;
        verdict = decide_bounded(g, k, delta, &stats, budgets.table_cap, budgets.enum_cap);
        report.lattice_entries = stats.lattice_entries;
    } else {
        throw ParseError("unknown decide algorithm: " + algorithm);
    }
    report.verdict = verdict ? "true" : "false";
    report.wall_ms = timer.ms();
    print_report(report, &g);
    return 0;
}

int cmd_color(const std::string& file, int k, const std::string& algorithm, int delta,
              bool delta_given, const std::string& alpha_text, std::uint64_t seed,
              std::uint64_t max_reps, int threads, const Budgets& budgets) {
    Graph g = load_dimacs_file(file);
    RunReport report;
    report.command = "color";
    report.seed = seed;
    report.parameters["file"] = file;
    report.parameters["k"] = k;
    report.parameters["algorithm"] = algorithm;
    Timer timer;
    std::optional<PartialColoring> coloring;
    if (algorithm == "bhk") {
        coloring = find_coloring(g, k, [&budgets](const Graph& h, int kk) {
            return decide_k_colorable(h, kk, budgets.table_cap);
        });
    } else if (algorithm == "trimmed") {
        report.parameters["delta"] = delta;
        WorkStats stats;
        coloring = find_coloring_trimmed(g, k, delta, &stats, budgets.table_cap, budgets.enum_cap);
        report.lattice_entries = stats.lattice_entries;
    } else if (algorithm == "reduction") {
        Rational alpha = parse_rational(alpha_text);
        if (!delta_given) delta = 12;  // driver default; --delta overrides
        report.parameters["delta"] = delta;
        report.parameters["alpha"] = rational_string(alpha);
        ReductionStats rstats;
        coloring = solve_k_via_k_minus_1(g, k, alpha, delta, &rstats, budgets.table_cap,
                                         budgets.enum_cap);
        report.parameters["branch"] = rstats.used_bounded_branch ? "bounded" : "dominating";
        report.attempts = rstats.colorings_tried;
    } else if (algorithm == "a3") {
        SixColoringResult res = solve_coloring_randomized(g, k, Rational(19, 100), seed, max_reps,
                                                          threads);
        coloring = res.coloring;
        report.attempts = res.attempts;
        report.parameters["rep_cap"] = res.rep_cap;
        report.parameters["r"] = res.params.r;
        report.parameters["delta_prime"] = res.params.delta_prime;
        report.parameters["epsilon"] = rational_string(res.params.epsilon);
        report.parameters["beta_prime"] = rational_string(res.params.beta_prime);
        report.parameters["max_reps"] = res.params.max_reps;
    } else {
        throw ParseError("unknown color algorithm: " + algorithm);
    }
    report.verdict = coloring.has_value() ? "found" : "absent";
    report.coloring = coloring;
    report.wall_ms = timer.ms();
    print_report(report, &g);
    return 0;
}

int cmd_listcolor(const std::string& graph_file, const std::string& lists_file, int k,
                  const std::string& algorithm, int delta, const Budgets& budgets) {
    Graph g = load_dimacs_file(graph_file);
    ListAssignment lists = load_lists_file(lists_file, g.vertex_count());
    RunReport report;
    report.command = "listcolor";
    report.parameters["graph"] = graph_file;
    report.parameters["lists"] = lists_file;
    report.parameters["k"] = k;
    report.parameters["algorithm"] = algorithm;
    Timer timer;
    if (algorithm == "bounded") {
        report.parameters["delta"] = delta;
        WorkStats stats;
        bool verdict =
            decide_list_bounded(g, lists, k, delta, &stats, budgets.table_cap, budgets.enum_cap);
        report.lattice_entries = stats.lattice_entries;
        report.verdict = verdict ? "true" : "false";
    } else if (algorithm == "backtracking") {
        ListInstance inst{g, lists};
        std::optional<PartialColoring> coloring = solve_list_backtracking(inst);
        report.verdict = coloring.has_value() ? "found" : "absent";
        report.coloring = coloring;
    } else {
        throw ParseError("unknown listcolor algorithm: " + algorithm);
    }
    report.wall_ms = timer.ms();
    print_report(report, &g);
    return 0;
}

int cmd_removal(const std::string& family_file, const std::string& c_text) {
    SetFamily fam = load_family_file(family_file);
    Rational c = parse_rational(c_text);
    RunReport report;
    report.command = "removal";
    report.parameters["family"] = family_file;
    report.parameters["C"] = rational_string(c);
    Timer timer;
    RemovalResult res = removal_lemma(fam, c);
    bool certified = removal_certificate_holds(fam, c, res);
    report.verdict = certified ? "true" : "false";
    report.parameters["kept"] = res.kept.size();
    report.parameters["family_size"] = fam.members.size();
    report.parameters["removed_universe"] = res.removed_universe;
    report.parameters["threshold_used"] = res.threshold_used;
    report.parameters["rho_bound"] = rational_string(res.rho_bound);
    report.parameters["certificate_holds"] = certified;
    report.wall_ms = timer.ms();
    print_report(report, nullptr);
    return 0;
}

int cmd_gen(const std::vector<std::string>& gnp, const std::vector<std::string>& bounded,
            const std::vector<std::string>& min_degree, bool hard_removal, int hard_c,
            int hard_delta, int hard_n, std::uint64_t seed, const std::string& out_path) {
    std::string payload;
    if (!gnp.empty()) {
        if (gnp.size() != 2) throw ParseError("--gnp expects N P");
        payload = emit_dimacs(gen_gnp(std::stoi(gnp[0]), std::stod(gnp[1]), seed));
    } else if (!bounded.empty()) {
        if (bounded.size() != 3) throw ParseError("--bounded expects N DELTA ALPHA");
        payload = emit_dimacs(
            gen_bounded(std::stoi(bounded[0]), std::stoi(bounded[1]), std::stod(bounded[2]), seed));
    } else if (!min_degree.empty()) {
        if (min_degree.size() != 3) throw ParseError("--min-degree expects N P MINDEG");
        payload = emit_dimacs(gen_min_degree(std::stoi(min_degree[0]), std::stod(min_degree[1]),
                                             std::stoi(min_degree[2]), seed));
    } else if (hard_removal) {
        payload = emit_family(hard_instance(hard_c, hard_delta, hard_n));
    } else {
        throw ParseError("gen: pick one of --gnp, --bounded, --min-degree, --hard-removal");
    }
    if (out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(out_path);
        out << payload;
    }
    return 0;
}

int cmd_bench(const std::string& family, const std::string& sizes_text, int k, int delta,
              const std::string& algorithms, std::uint64_t seed, const Budgets& budgets) {
    // sizes "a:b:step"
    int a = 0, b = 0, step = 1;
    if (std::sscanf(sizes_text.c_str(), "%d:%d:%d", &a, &b, &step) != 3 || step <= 0)
        throw ParseError("--sizes expects a:b:step");
    std::vector<std::string> algos;
    {
        std::string cur;
        for (char ch : algorithms + ",") {
            if (ch == ',') {
                if (!cur.empty()) algos.push_back(cur);
                cur.clear();
            } else {
                cur += ch;
            }
        }
    }
    std::cout << "n,algorithm,verdict,entries_touched,bound_rhs,wall_ms,seed\n";
    for (int n = a; n <= b; n += step) {
        Graph g;
        if (family == "comb") {
            if (n % 2 != 0) continue;
            g = comb_graph(n / 2);
        } else if (family == "gnp") {
            g = gen_gnp(n, 0.5, seed + static_cast<std::uint64_t>(n));
        } else {
            throw ParseError("unknown bench family: " + family);
        }
        for (const std::string& algo : algos) {
            Timer timer;
            std::string verdict;
            std::uint64_t entries = 0;
            std::string bound;
            if (algo == "bhk") {
                verdict = decide_k_colorable(g, k, budgets.table_cap) ? "true" : "false";
                entries = std::uint64_t{1} << g.vertex_count();
                bound = BigInt(BigInt(1) << g.vertex_count()).str();
            } else if (algo == "trimmed") {
                TrimmedInstance inst{g, trimmed_s(g, delta), k, delta};
                WorkStats stats;
                verdict = decide_trimmed(inst, &stats, budgets.table_cap) ? "true" : "false";
                entries = stats.lattice_entries;
                bound = stats.records.empty() ? "" : rational_string(stats.records.back().bound);
            } else {
                throw ParseError("unknown bench algorithm: " + algo);
            }
            std::cout << g.vertex_count() << ',' << algo << ',' << verdict << ',' << entries << ','
                      << bound << ',' << timer.ms() << ',' << seed << '\n';
        }
    }
    return 0;
}

int cmd_oracle(const std::string& what, const std::string& file, const std::string& lists_file,
               int k, const std::string& c_text) {
    RunReport report;
    report.command = "oracle " + what;
    Timer timer;
    if (what == "decide") {
        Graph g = load_dimacs_file(file);
        report.parameters["k"] = k;
        report.oracle_calls = 1;
        report.verdict = brute_k_colorable(g, k) ? "true" : "false";
        report.wall_ms = timer.ms();
        print_report(report, &g);
    } else if (what == "cover") {
        Graph g = load_dimacs_file(file);
        report.parameters["k"] = k;
        report.oracle_calls = 1;
        BigInt count = brute_cover_count(g, k, {}, g.vertices());
        report.verdict = count > 0 ? "true" : "false";
        report.parameters["cover_count"] = count.str();
        report.wall_ms = timer.ms();
        print_report(report, &g);
    } else if (what == "listcolor") {
        Graph g = load_dimacs_file(file);
        ListAssignment lists = load_lists_file(lists_file, g.vertex_count());
        report.oracle_calls = 1;
        report.verdict = brute_list_colorable(ListInstance{g, lists}) ? "true" : "false";
        report.wall_ms = timer.ms();
        print_report(report, &g);
    } else if (what == "removal-best") {
        SetFamily fam = load_family_file(file);
        Rational c = parse_rational(c_text);
        report.oracle_calls = 1;
        report.parameters["C"] = rational_string(c);
        Rational best = brute_removal_best(fam, c);
        report.verdict = "true";
        report.parameters["best_score"] = rational_string(best);
        report.wall_ms = timer.ms();
        print_report(report, nullptr);
    } else {
        throw ParseError("unknown oracle subcommand: " + what);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact coloring toolkit"};
    app.require_subcommand(1);
    Budgets budgets = env_budgets();

    std::string file, lists_file, alpha_text = "1/4", c_text = "1";
    std::string decide_algorithm = "bhk", color_algorithm = "bhk", lc_algorithm = "bounded";
    std::string family = "comb", sizes = "16:24:2", algorithms = "bhk,trimmed";
    int k = 3, delta = 3, threads = 1;
    std::uint64_t seed = 1, max_reps = 0;

    CLI::App* decide = app.add_subcommand("decide", "k-colorability decision");
    decide->add_option("--k", k, "number of colors")->required();
    decide->add_option("--algorithm", decide_algorithm, "bhk|trimmed|bounded");
    decide->add_option("--delta", delta, "degree bound for the trimmed paths");
    decide->add_option("file", file, "DIMACS .col input")->required();

    CLI::App* color = app.add_subcommand("color", "find a k-coloring");
    color->add_option("--k", k, "number of colors")->required();
    color->add_option("--algorithm", color_algorithm, "bhk|trimmed|reduction|a3");
    color->add_option("--delta", delta, "degree bound");
    color->add_option("--alpha", alpha_text, "bounded-fraction threshold (rational)");
    color->add_option("--seed", seed, "rng seed");
    color->add_option("--max-reps", max_reps, "repetition cap (0 = default)");
    color->add_option("--threads", threads, "parallel repetitions");
    color->add_option("file", file, "DIMACS .col input")->required();

    CLI::App* listcolor = app.add_subcommand("listcolor", "list-coloring");
    listcolor->add_option("--k", k, "max list size")->required();
    listcolor->add_option("--algorithm", lc_algorithm, "bounded|backtracking");
    listcolor->add_option("--delta", delta, "degree bound");
    listcolor->add_option("graph", file, "DIMACS .col input")->required();
    listcolor->add_option("lists", lists_file, "lists file")->required();

    CLI::App* removal = app.add_subcommand("removal", "removal lemma with certificate");
    removal->add_option("--C", c_text, "trade-off constant (rational)")->required();
    removal->add_option("family", file, "family file")->required();

    std::vector<std::string> gnp, bounded, min_degree;
    bool hard_removal = false;
    int hard_c = 1, hard_delta = 2, hard_n = 1;
    std::string out_path;
    CLI::App* gen = app.add_subcommand("gen", "instance generation");
    gen->add_option("--gnp", gnp, "N P")->expected(2);
    gen->add_option("--bounded", bounded, "N DELTA ALPHA")->expected(3);
    gen->add_option("--min-degree", min_degree, "N P MINDEG")->expected(3);
    gen->add_flag("--hard-removal", hard_removal, "adversarial removal family");
    gen->add_option("--C", hard_c, "hard instance C");
    gen->add_option("--delta", hard_delta, "hard instance delta");
    gen->add_option("--n", hard_n, "hard instance copies");
    gen->add_option("--seed", seed, "rng seed");
    gen->add_option("-o,--out", out_path, "output path (default stdout)");

    CLI::App* bench = app.add_subcommand("bench", "scaling matrix as CSV");
    bench->add_option("--family", family, "comb|gnp");
    bench->add_option("--sizes", sizes, "a:b:step");
    bench->add_option("--k", k, "number of colors");
    bench->add_option("--delta", delta, "degree bound");
    bench->add_option("--algorithms", algorithms, "comma list of bhk,trimmed");
    bench->add_option("--seed", seed, "rng seed");

    std::string oracle_what;
    CLI::App* oracle = app.add_subcommand("oracle", "brute-force references");
    oracle->add_option("what", oracle_what, "decide|cover|listcolor|removal-best")->required();
    oracle->add_option("--k", k, "number of colors");
    oracle->add_option("--C", c_text, "trade-off constant");
    oracle->add_option("file", file, "graph or family file")->required();
    oracle->add_option("lists", lists_file, "lists file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (decide->parsed()) return cmd_decide(file, k, decide_algorithm, delta, budgets);
        if (color->parsed())
            return cmd_color(file, k, color_algorithm, delta, color->count("--delta") > 0,
                             alpha_text, seed, max_reps, threads, budgets);
        if (listcolor->parsed())
            return cmd_listcolor(file, lists_file, k, lc_algorithm, delta, budgets);
        if (removal->parsed()) return cmd_removal(file, c_text);
        if (gen->parsed())
            return cmd_gen(gnp, bounded, min_degree, hard_removal, hard_c, hard_delta, hard_n,
                           seed, out_path);
        if (bench->parsed()) return cmd_bench(family, sizes, k, delta, algorithms, seed, budgets);
        if (oracle->parsed()) return cmd_oracle(oracle_what, file, lists_file, k, c_text);
    } catch (const ResourceError& e) {
        std::cout << Json{{"error", "resource"}, {"message", e.what()}}.dump(2) << '\n';
        return 2;
    } catch (const ParseError& e) {
        std::cout << Json{{"error", "input"}, {"message", e.what()}}.dump(2) << '\n';
        return 3;
    } catch (const ContractError& e) {
        std::cout << Json{{"error", "input"}, {"message", e.what()}}.dump(2) << '\n';
        return 3;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 4;
    }
    return 0;
}
