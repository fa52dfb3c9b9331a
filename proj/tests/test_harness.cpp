#include <doctest.h>

#include <algorithm>

#include "bbd/exemplars.hpp"
#include "bbd/harness.hpp"
#include "bbd/json_io.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace bbd;
using testing_support::family;
using testing_support::fixture;
using testing_support::from_text;

namespace {

int count_substr(const std::string& s, const std::string& needle) {
    int n = 0;
    for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
    return n;
}

SampleConfig sample(int a, double p, std::uint64_t seed, int count, std::vector<Constraint> cs = {}) {
    SampleConfig cfg;
    cfg.a = a;
    cfg.arc_probability = p;
    cfg.seed = seed;
    cfg.count = count;
    cfg.constraints = std::move(cs);
    return cfg;
}

}  // namespace

TEST_CASE("constraint and theorem names round-trip") {
    for (Constraint c : {Constraint::Strong, Constraint::B1, Constraint::B0,
                         Constraint::DegreeSum4aMinus3, Constraint::DegreeSum2aPlus3,
                         Constraint::Wang, Constraint::NotDirectedCycle, Constraint::Hamiltonian,
                         Constraint::NotHamiltonian}) {
        CHECK(parse_constraint(constraint_name(c)) == c);
    }
    CHECK(parse_constraints("strong,B1") == std::vector<Constraint>{Constraint::Strong, Constraint::B1});
    CHECK(parse_constraints("").empty());
    CHECK_THROWS_AS(parse_constraints("strong,B7"), std::invalid_argument);
    for (TheoremId id : all_theorems()) CHECK(parse_theorem(theorem_name(id)) == id);
    CHECK_FALSE(parse_theorem("T9_9"));
}

TEST_CASE("sampling is deterministic per seed") {
    const auto cfg = sample(4, 0.5, 7, 2);
    const auto first = sample_random(cfg);
    const auto second = sample_random(cfg);
    REQUIRE(first.size() == 2);
    CHECK(first == second);
    CHECK(sample_random(sample(4, 0.5, 8, 2)) != first);
}

TEST_CASE("sampling with p=1 yields complete graphs") {
    const auto graphs = sample_random(sample(4, 1.0, 1, 5, {Constraint::Strong, Constraint::B1}));
    REQUIRE(graphs.size() == 5);
    for (const auto& g : graphs) CHECK(g == family(Family::CompleteBipartite, 4));
}

TEST_CASE("sampling sparse strong graphs is infeasible") {
    auto cfg = sample(4, 0.01, 1, 1, {Constraint::Strong});
    CHECK_THROWS_AS(sample_random(cfg), SamplingInfeasible);
    cfg.max_attempts_per_graph = 10;
    CHECK_THROWS_AS(sample_random(cfg), ResourceLimit);
}

TEST_CASE("sampling contracts and constraint filtering") {
    CHECK_THROWS_AS(sample_random(sample(1, 0.5, 1, 1)), ContractViolation);
    CHECK_THROWS_AS(sample_random(sample(4, 0.0, 1, 1)), ContractViolation);
    CHECK_THROWS_AS(sample_random(sample(4, 1.5, 1, 1)), ContractViolation);
    CHECK_THROWS_AS(sample_random(sample(4, 0.5, 1, 0)), ContractViolation);
    const std::vector<Constraint> cs{Constraint::Strong, Constraint::B0};
    for (const auto& g : sample_random(sample(4, 0.6, 3, 50, cs))) {
        CHECK(oracle::strong(g));
        CHECK(oracle::max_bk(g).value_or(100) >= 0);
    }
}

TEST_CASE("enumeration at a=2") {
    std::uint64_t seen = 0, prev = 0;
    bool ordered = true;
    const auto visited = enumerate_all(2, {}, [&](const BipartiteDigraph& g, std::uint64_t bits) {
        if (seen > 0 && bits <= prev) ordered = false;
        prev = bits;
        ++seen;
        CHECK(to_slot_bits(g) == bits);
    });
    CHECK(seen == 256);
    CHECK(visited == 256);
    CHECK(ordered);

    std::uint64_t brute_strong = 0;
    for (std::uint64_t bits = 0; bits < 256; ++bits) brute_strong += oracle::strong(from_slot_bits(2, bits));
    EnumerateOptions strong_only;
    strong_only.filter = {Constraint::Strong};
    std::uint64_t strong_count = 0;
    enumerate_all(2, strong_only, [&](const BipartiteDigraph&, std::uint64_t) { ++strong_count; });
    CHECK(strong_count == brute_strong);
    CHECK(strong_count > 0);

    EnumerateOptions dedupe;
    dedupe.dedupe = true;
    std::set<std::string> forms;
    enumerate_all(2, dedupe, [&](const BipartiteDigraph& g, std::uint64_t) {
        CHECK(forms.insert(canonical_form(g)).second);
    });
    std::set<std::string> all_forms;
    for (std::uint64_t bits = 0; bits < 256; ++bits) all_forms.insert(canonical_form(from_slot_bits(2, bits)));
    CHECK(forms == all_forms);

    CHECK_THROWS_AS(enumerate_all(4, {}, [](const BipartiteDigraph&, std::uint64_t) {}), ResourceLimit);
}

TEST_CASE("enumerate_range covers a slice") {
    std::vector<std::uint64_t> got;
    enumerate_range(3, 1000, 1010, {}, [&](const BipartiteDigraph&, std::uint64_t bits) { got.push_back(bits); });
    REQUIRE(got.size() == 10);
    CHECK(got.front() == 1000);
    CHECK(got.back() == 1009);
}

TEST_CASE("T1_9 on D8 passes through the exception clause") {
    const auto v = verify_theorem(TheoremId::T1_9, ExplicitPopulation{"D8", {family(Family::D8)}});
    CHECK(v.total == 1);
    CHECK(v.checked == 1);
    CHECK(v.passed == 1);
    CHECK(v.ok());
}

TEST_CASE("T1_9 on H'6 is vacuous") {
    const auto v = verify_theorem(TheoremId::T1_9, ExplicitPopulation{"H'6", {family(Family::Hprime6)}});
    CHECK(v.total == 1);
    CHECK(v.checked == 0);
    CHECK(v.skipped() == 1);
    CHECK(v.ok());
}

TEST_CASE("counterexamples re-validate from their serialization") {
    VerifyOptions opts;
    opts.min_order = 6;
    const auto hp = family(Family::Hprime6);
    const auto v = verify_theorem(TheoremId::T1_9,
                                  ExplicitPopulation{"order six", {hp, hp.converse(), family(Family::D6)}},
                                  opts);
    CHECK(v.checked == 3);
    CHECK(v.passed + v.counterexamples.size() == v.checked);
    REQUIRE(v.counterexamples.size() == 3);
    CHECK(std::is_sorted(v.counterexamples.begin(), v.counterexamples.end()));
    for (const auto& ce : v.counterexamples) {
        const auto g = parse_graph(ce.graph);
        CHECK(oracle::strong(g));
        CHECK(oracle::max_bk(g).value_or(100) >= 1);
        CHECK_FALSE(oracle::hamiltonian(g));
        CHECK_FALSE(oracle::isomorphic(g, family(Family::D8)));
        CHECK_FALSE(ce.evidence.empty());
        CHECK(check_theorem_on(TheoremId::T1_9, g, 6, {}) == CheckOutcome::Counterexample);
    }
}

TEST_CASE("structural checks on the sharpness examples at their own order") {
    SearchBudget budget;
    CHECK(check_theorem_on(TheoremId::L4_2, family(Family::D6), 6, budget) == CheckOutcome::Counterexample);
    CHECK(check_theorem_on(TheoremId::L4_3, family(Family::H6), 6, budget) == CheckOutcome::Counterexample);
    for (int a = 4; a <= 6; ++a) {
        CHECK(check_theorem_on(TheoremId::L4_2, family(Family::EX5, a), 8, budget) ==
              CheckOutcome::HypothesisFails);
        CHECK(check_theorem_on(TheoremId::L4_3, family(Family::EX5, a), 8, budget) ==
              CheckOutcome::Passed);
        CHECK(check_theorem_on(TheoremId::L4_3, family(Family::EX4, a), 8, budget) ==
              CheckOutcome::HypothesisFails);
    }
    CHECK(check_theorem_on(TheoremId::T6_1, family(Family::D8), 8, budget) == CheckOutcome::Passed);
    CHECK(check_theorem_on(TheoremId::T6_1, family(Family::DirectedCycle, 4), 8, budget) ==
          CheckOutcome::HypothesisFails);
    CHECK(check_theorem_on(TheoremId::L4_4, family(Family::CompleteBipartite, 4), 8, budget) ==
          CheckOutcome::Passed);
}

TEST_CASE("budget exhaustion is reported as inconclusive") {
    VerifyOptions opts;
    opts.budget.max_expansions = 1;
    const auto v = verify_theorem(TheoremId::T1_9, ExplicitPopulation{"D8", {family(Family::D8)}}, opts);
    CHECK(v.checked == 0);
    CHECK(v.inconclusive.size() == 1);
    CHECK(v.counterexamples.empty());
    CHECK_FALSE(v.ok());
}

TEST_CASE("verdicts do not depend on the worker count") {
    const auto cfg = sample(4, 0.7, 42, 60, hypothesis_constraints(TheoremId::T1_9));
    VerifyOptions one, many;
    many.workers = 4;
    const auto v1 = verify_theorem(TheoremId::T1_9, cfg, one);
    const auto v4 = verify_theorem(TheoremId::T1_9, cfg, many);
    CHECK(v1.total == 60);
    CHECK(to_json(v1).dump(2) == to_json(v4).dump(2));
    CHECK(to_json(v1).dump(2) == to_json(verify_theorem(TheoremId::T1_9, cfg, one)).dump(2));
    REQUIRE(v1.population_digest);
}

TEST_CASE("exhaustive verification at a=2 is vacuous for order-8 theorems") {
    const auto v = verify_theorem(TheoremId::L4_3, ExhaustivePopulation{2});
    CHECK(v.total == 256);
    CHECK(v.checked == 0);
    CHECK(v.ok());
}

TEST_CASE("run_check examples") {
    const auto d8 = run_check(family(Family::D8));
    CHECK(d8.strong.kind == ConnectivityKind::Strong);
    CHECK(d8.max_bk == BkLevel::finite(1));
    CHECK(d8.hamiltonian.known);
    CHECK_FALSE(d8.hamiltonian.cycle);
    CHECK(d8.iso_d8 == true);
    CHECK(d8.dominating_pair_count == 10);
    CHECK(d8.even_spectrum == std::vector<int>{2, 4, 6});

    const auto dc = run_check(family(Family::DirectedCycle, 5));
    CHECK(dc.dominating_pair_count == 0);
    CHECK(dc.even_spectrum == std::vector<int>{10});
    CHECK(dc.max_bk.is_unbounded());
    CHECK(dc.iso_d8 == false);

    const auto d6 = run_check(family(Family::D6));
    REQUIRE(d6.ug_two_connected);
    CHECK(d6.ug_two_connected->kind == ConnectivityKind::CutVertex);
    CHECK(d6.max_bk == BkLevel::finite(1));

    CHECK_THROWS_AS(run_check(family(Family::CompleteBipartite, 11)), ContractViolation);
}

TEST_CASE("reports are internally consistent") {
    std::mt19937_64 rng(10);
    for (int trial = 0; trial < 60; ++trial) {
        const int a = 2 + static_cast<int>(rng() % 3);
        const auto g = oracle::random_graph(a, 0.5, rng);
        const auto doc = run_check(g);
        REQUIRE(doc.even_spectrum);
        const bool full = !doc.even_spectrum->empty() && doc.even_spectrum->back() == 2 * a;
        CHECK(doc.hamiltonian.cycle.has_value() == full);
        CHECK(doc.cycle_factor.has_value() ==
              (doc.matching_x_to_y.matching.has_value() && doc.matching_y_to_x.matching.has_value()));
    }
}

TEST_CASE("unknown fields survive a tiny budget") {
    SearchBudget tiny;
    tiny.max_expansions = 1;
    const auto doc = run_check(family(Family::D8), tiny);
    CHECK_FALSE(doc.hamiltonian.known);
    CHECK_FALSE(doc.even_spectrum);
    const auto j = to_json(doc);
    CHECK(j["even_spectrum"] == "unknown");
    CHECK(j["hamiltonian"]["found"] == "unknown");
}

TEST_CASE("JSON report schema") {
    const auto j = to_json(run_check(family(Family::D8)));
    std::vector<std::string> keys;
    for (const auto& item : j.items()) keys.push_back(item.key());
    CHECK(keys == std::vector<std::string>{"format_version", "graph", "degrees", "strong",
                                           "ug_two_connected", "dominating_pair_count", "max_bk",
                                           "conditions", "matchings", "cycle_factor",
                                           "even_spectrum", "hamiltonian", "iso_d8"});
    CHECK(j["max_bk"] == 1);
    CHECK(j["conditions"]["B1"]["holds"] == true);
    CHECK(j["conditions"]["degree_sum_4a_minus_3"]["holds"] == false);
    CHECK(j["matchings"]["XtoY"]["perfect"] == true);
    CHECK(j["hamiltonian"]["found"] == false);
    CHECK(j["iso_d8"] == true);
    CHECK(to_json(run_check(family(Family::DirectedCycle, 3)))["max_bk"] == "inf");
    CHECK(to_json(run_check(family(Family::D8))).dump() == j.dump());
}

TEST_CASE("DOT export") {
    const auto two = export_dot(from_text("a 1\nx0 y0\ny0 x0\n"));
    CHECK(two.find("x0 -> y0;") != std::string::npos);
    CHECK(two.find("y0 -> x0;") != std::string::npos);
    CHECK(count_substr(two, "->") == 2);
    CHECK(count_substr(two, "rank=same") == 2);

    const auto d8 = export_dot(family(Family::D8));
    CHECK(count_substr(d8, "->") == 20);
    for (int i = 0; i < 4; ++i) {
        CHECK(d8.find(" x" + std::to_string(i) + ";") != std::string::npos);
        CHECK(d8.find(" y" + std::to_string(i) + ";") != std::string::npos);
    }

    const auto empty = export_dot(BipartiteDigraph(2));
    CHECK(count_substr(empty, "->") == 0);
    CHECK(empty.find("{ rank=same; x0; x1; }") != std::string::npos);
    CHECK(empty.find("{ rank=same; y0; y1; }") != std::string::npos);
    CHECK(export_dot(family(Family::D8)) == d8);
}

TEST_CASE("FNV-1a reference values") {
    CHECK(fnv1a("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(fnv1a("foobar") == 0x85944171f73967e8ULL);
}
