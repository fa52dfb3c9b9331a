#pragma once

/// \file harness.hpp
/// \brief Population-level theorem checks: seeded random sampling, exhaustive
/// enumeration at small orders, per-graph property reports and DOT export.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bbd/conditions.hpp"
#include "bbd/core.hpp"
#include "bbd/cycles.hpp"
#include "bbd/matching.hpp"

namespace bbd {

/// Rejection sampling could not produce a graph within the attempt cap.
class SamplingInfeasible : public ResourceLimit {
public:
    using ResourceLimit::ResourceLimit;
};

enum class Constraint {
    Strong,
    B1,
    B0,
    DegreeSum4aMinus3,
    DegreeSum2aPlus3,
    Wang,
    NotDirectedCycle,
    Hamiltonian,
    NotHamiltonian,
};

std::string_view constraint_name(Constraint c) noexcept;
std::optional<Constraint> parse_constraint(std::string_view name);

/// Parses a comma-separated constraint list. Throws std::invalid_argument.
std::vector<Constraint> parse_constraints(std::string_view list);

/// Evaluates one constraint. Hamiltonicity constraints may throw ResourceLimit.
bool satisfies(const BipartiteDigraph& g, Constraint c, const SearchBudget& budget = {});
bool satisfies_all(const BipartiteDigraph& g, const std::vector<Constraint>& constraints,
                   const SearchBudget& budget = {});

struct SampleConfig {
    int a = 4;
    double arc_probability = 0.5;
    std::uint64_t seed = 0;
    int count = 1;
    std::vector<Constraint> constraints;
    std::uint64_t max_attempts_per_graph = 1'000'000;
};

/// Draws every arc slot independently with the configured probability from a
/// std::mt19937_64 stream seeded with cfg.seed, and keeps graphs that satisfy
/// all constraints. Throws SamplingInfeasible when one accepted graph needs
/// more than cfg.max_attempts_per_graph draws.
std::vector<BipartiteDigraph> sample_random(const SampleConfig& cfg);

struct EnumerateOptions {
    std::vector<Constraint> filter;
    /// Emit only the first graph (in slot-bit order) of each isomorphism class.
    bool dedupe = false;
    SearchBudget budget;
};

/// Visits every arc set of half-order a (a <= 3) in ascending slot-bit order,
/// passing those that satisfy the filter. Returns the number visited. Throws
/// ResourceLimit for a > 3.
std::uint64_t enumerate_all(int a, const EnumerateOptions& options,
                            const std::function<void(const BipartiteDigraph&, std::uint64_t)>& visit);

/// Same, restricted to slot bits in [first, last). Requires a <= 3 and no dedupe.
std::uint64_t enumerate_range(int a, std::uint64_t first, std::uint64_t last,
                              const EnumerateOptions& options,
                              const std::function<void(const BipartiteDigraph&, std::uint64_t)>& visit);

enum class TheoremId { T1_9, T1_10, C5_1, L4_1, L4_2, L4_3, L4_4, T6_1 };

std::string_view theorem_name(TheoremId id) noexcept;
std::optional<TheoremId> parse_theorem(std::string_view name);
const std::vector<TheoremId>& all_theorems();

/// Smallest order 2a the theorem's hypotheses admit by default.
int default_min_order(TheoremId id) noexcept;

/// The degree/connectivity hypotheses of a theorem as sampling constraints
/// (order is handled separately).
std::vector<Constraint> hypothesis_constraints(TheoremId id);

struct ExhaustivePopulation {
    int a = 2;
};

struct ExplicitPopulation {
    std::string label;
    std::vector<BipartiteDigraph> graphs;
};

using Population = std::variant<ExhaustivePopulation, SampleConfig, ExplicitPopulation>;

struct VerifyOptions {
    /// Overrides default_min_order.
    std::optional<int> min_order;
    int workers = 1;
    SearchBudget budget;
};

struct GraphEvidence {
    std::string graph;  // canonical serialization
    std::string evidence;

    friend auto operator<=>(const GraphEvidence&, const GraphEvidence&) = default;
};

struct TheoremVerdict {
    TheoremId theorem = TheoremId::T1_9;
    int min_order = 8;
    Population population;
    std::uint64_t total = 0;    // population size
    std::uint64_t checked = 0;  // hypotheses held, conclusion decided
    std::uint64_t passed = 0;
    std::vector<GraphEvidence> counterexamples;  // sorted
    std::vector<GraphEvidence> inconclusive;     // sorted; hit a resource limit
    /// FNV-1a over the serialized population, for sampled and explicit populations.
    std::optional<std::uint64_t> population_digest;

    std::uint64_t skipped() const noexcept { return total - checked - inconclusive.size(); }
    bool ok() const noexcept { return counterexamples.empty() && inconclusive.empty(); }
};

/// Per-graph outcome of a theorem check.
enum class CheckOutcome { HypothesisFails, Passed, Counterexample };

/// Checks one graph. On Counterexample, `evidence` says which conclusion
/// failed. Throws ResourceLimit when a search runs out of budget.
CheckOutcome check_theorem_on(TheoremId id, const BipartiteDigraph& g, int min_order,
                              const SearchBudget& budget, std::string* evidence = nullptr);

TheoremVerdict verify_theorem(TheoremId id, const Population& population,
                              const VerifyOptions& options = {});

struct HamiltonianField {
    bool known = false;
    std::optional<Cycle> cycle;
};

struct NamedCondition {
    std::string id;
    ConditionReport report;
};

struct ReportDocument {
    std::string graph;
    int a = 0;
    std::vector<std::pair<VertexId, DegreeTriple>> degrees;
    ConnectivityCertificate strong;
    std::optional<ConnectivityCertificate> ug_two_connected;  // absent for order < 3
    int dominating_pair_count = 0;
    BkLevel max_bk = BkLevel::unbounded();
    std::vector<NamedCondition> conditions;
    MatchingOutcome matching_x_to_y;
    MatchingOutcome matching_y_to_x;
    std::optional<CycleFactor> cycle_factor;
    std::optional<std::vector<int>> even_spectrum;  // absent: resource limit
    HamiltonianField hamiltonian;
    std::optional<bool> iso_d8;  // absent: unknown
};

/// Full property matrix of one graph. Requires a <= 10. Searches that hit the
/// budget leave their field unknown instead of failing the report.
ReportDocument run_check(const BipartiteDigraph& g, const SearchBudget& budget = {});

/// Graphviz digraph with X and Y in separate rank groups.
std::string export_dot(const BipartiteDigraph& g);

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view bytes, std::uint64_t state = 0xcbf29ce484222325ULL);

}  // namespace bbd
