// Command-line front end: check, gen, verify, enumerate, dot.
//
// Exit codes: 0 success, 1 counterexample found, 2 input error, 3 resource limit.

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bbd/core.hpp"
#include "bbd/exemplars.hpp"
#include "bbd/harness.hpp"
#include "bbd/json_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << text;
}

bbd::BipartiteDigraph load_graph(const std::string& path) {
    return bbd::parse_graph(read_file(path));
}

// "a=4,p=0.5,seed=7,count=100"
bbd::SampleConfig parse_sample(const std::string& text) {
    bbd::SampleConfig cfg;
    bool have_a = false, have_p = false, have_seed = false, have_count = false;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw InputError("bad --sample item '" + item + "'");
        const std::string key = item.substr(0, eq);
        const std::string value = item.substr(eq + 1);
        try {
            std::size_t used = 0;
            if (key == "a") {
                cfg.a = std::stoi(value, &used);
                have_a = true;
            } else if (key == "p") {
                cfg.arc_probability = std::stod(value, &used);
                have_p = true;
            } else if (key == "seed") {
                cfg.seed = std::stoull(value, &used);
                have_seed = true;
            } else if (key == "count") {
                cfg.count = std::stoi(value, &used);
                have_count = true;
            } else {
                throw InputError("unknown --sample key '" + key + "'");
            }
            if (used != value.size()) throw std::invalid_argument(value);
        } catch (const std::logic_error&) {
            throw InputError("bad value for --sample key '" + key + "'");
        }
    }
    if (!have_a || !have_p || !have_seed || !have_count) {
        throw InputError("--sample needs a=, p=, seed= and count=");
    }
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Balanced bipartite digraph toolkit: degree conditions, cycles, theorem checks"};
    app.require_subcommand(1);

    // check
    auto* check = app.add_subcommand("check", "Report the full property matrix of a graph file");
    std::string check_file, check_json;
    check->add_option("file", check_file, "Graph file")->required();
    check->add_option("--json", check_json, "Write the JSON report here ('-' for stdout)");

    // gen
    auto* gen = app.add_subcommand("gen", "Write a named example or reference family");
    std::string gen_family, gen_out;
    std::optional<int> gen_a;
    int gen_size_a = 1;
    gen->add_option("family", gen_family, "D8, D6, H6, EX4, EX5, Hprime6, DirectedCycle, "
                                          "CompleteBipartite, SymmetricCycle, SymmetricPath")
        ->required();
    gen->add_option("--a", gen_a, "Half-order for parametric families");
    gen->add_option("--size-a", gen_size_a, "EX4: size of part A");
    gen->add_option("-o,--output", gen_out, "Output file (default stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "Check a theorem over a population of graphs");
    std::string verify_id, verify_sample, verify_json;
    std::optional<int> verify_exhaustive, verify_min_order;
    int verify_workers = 1;
    std::uint64_t verify_budget = bbd::SearchBudget{}.max_expansions;
    verify->add_option("theorem", verify_id, "T1_9, T1_10, C5_1, L4_1, L4_2, L4_3, L4_4, T6_1")
        ->required();
    auto* ex_opt = verify->add_option("--exhaustive-a", verify_exhaustive,
                                      "Enumerate all arc sets of this half-order (<= 3)");
    auto* sample_opt = verify->add_option("--sample", verify_sample,
                                          "Seeded sample: a=N,p=P,seed=S,count=C");
    ex_opt->excludes(sample_opt);
    verify->add_option("--workers", verify_workers, "Worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--json", verify_json, "Write the JSON verdict here ('-' for stdout)");
    verify->add_option("--min-order", verify_min_order, "Override the theorem's order bound 2a");
    verify->add_option("--budget", verify_budget, "Node-expansion cap per search");

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "Enumerate all arc sets of a small order");
    int enum_a = 2;
    std::string enum_filter;
    bool enum_dedupe = false, enum_count_only = false;
    enumerate->add_option("--a", enum_a, "Half-order (<= 3)")->required();
    enumerate->add_option("--filter", enum_filter,
                          "Comma-separated: strong,B1,B0,degree_sum_4a_minus_3,"
                          "degree_sum_2a_plus_3,wang,not_directed_cycle,hamiltonian,not_hamiltonian");
    enumerate->add_flag("--dedupe", enum_dedupe, "One graph per isomorphism class");
    enumerate->add_flag("--count-only", enum_count_only, "Print only the number of matches");

    // dot
    auto* dot = app.add_subcommand("dot", "Export a graph file as Graphviz DOT");
    std::string dot_file, dot_out;
    dot->add_option("file", dot_file, "Graph file")->required();
    dot->add_option("-o,--output", dot_out, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*check) {
            const auto g = load_graph(check_file);
            const auto doc = bbd::run_check(g);
            if (!check_json.empty()) {
                write_output(check_json, bbd::to_json(doc).dump(2) + "\n");
            }
            if (check_json.empty() || check_json != "-") std::cout << bbd::to_text(doc);
            return kExitOk;
        }
        if (*gen) {
            const auto family = bbd::parse_family(gen_family);
            if (!family) throw InputError("unknown family '" + gen_family + "'");
            write_output(gen_out, bbd::serialize(bbd::generate({*family, gen_a, gen_size_a})));
            return kExitOk;
        }
        if (*verify) {
            const auto id = bbd::parse_theorem(verify_id);
            if (!id) throw InputError("unknown theorem '" + verify_id + "'");
            bbd::Population population;
            if (verify_exhaustive) {
                population = bbd::ExhaustivePopulation{*verify_exhaustive};
            } else if (!verify_sample.empty()) {
                auto cfg = parse_sample(verify_sample);
                cfg.constraints = bbd::hypothesis_constraints(*id);
                population = cfg;
            } else {
                throw InputError("verify needs --exhaustive-a or --sample");
            }
            bbd::VerifyOptions options;
            options.min_order = verify_min_order;
            options.workers = verify_workers;
            options.budget.max_expansions = verify_budget;
            const auto verdict = bbd::verify_theorem(*id, population, options);
            const std::string json = bbd::to_json(verdict).dump(2) + "\n";
            if (!verify_json.empty()) write_output(verify_json, json);
            if (verify_json != "-") {
                std::cout << bbd::theorem_name(verdict.theorem) << ": total " << verdict.total
                          << ", checked " << verdict.checked << ", passed " << verdict.passed
                          << ", counterexamples " << verdict.counterexamples.size()
                          << ", inconclusive " << verdict.inconclusive.size() << '\n';
            }
            if (!verdict.counterexamples.empty()) return kExitCounterexample;
            if (!verdict.inconclusive.empty()) return kExitResource;
            return kExitOk;
        }
        if (*enumerate) {
            bbd::EnumerateOptions options;
            options.filter = bbd::parse_constraints(enum_filter);
            options.dedupe = enum_dedupe;
            std::uint64_t matches = 0;
            bbd::enumerate_all(enum_a, options, [&](const bbd::BipartiteDigraph& g, std::uint64_t bits) {
                ++matches;
                if (!enum_count_only) std::cout << "# slot bits " << bits << '\n' << bbd::serialize(g) << '\n';
            });
            if (enum_count_only) std::cout << matches << '\n';
            return kExitOk;
        }
        if (*dot) {
            write_output(dot_out, bbd::export_dot(load_graph(dot_file)));
            return kExitOk;
        }
    } catch (const bbd::ResourceLimit& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return kExitResource;
    } catch (const bbd::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitInput;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitOk;
}
