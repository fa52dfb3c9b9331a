#include "bbd/harness.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "bbd/exemplars.hpp"

namespace bbd {

namespace {

constexpr std::array<std::pair<Constraint, std::string_view>, 9> kConstraintNames{{
    {Constraint::Strong, "strong"},
    {Constraint::B1, "B1"},
    {Constraint::B0, "B0"},
    {Constraint::DegreeSum4aMinus3, "degree_sum_4a_minus_3"},
    {Constraint::DegreeSum2aPlus3, "degree_sum_2a_plus_3"},
    {Constraint::Wang, "wang"},
    {Constraint::NotDirectedCycle, "not_directed_cycle"},
    {Constraint::Hamiltonian, "hamiltonian"},
    {Constraint::NotHamiltonian, "not_hamiltonian"},
}};

constexpr std::array<std::pair<TheoremId, std::string_view>, 8> kTheoremNames{{
    {TheoremId::T1_9, "T1_9"},
    {TheoremId::T1_10, "T1_10"},
    {TheoremId::C5_1, "C5_1"},
    {TheoremId::L4_1, "L4_1"},
    {TheoremId::L4_2, "L4_2"},
    {TheoremId::L4_3, "L4_3"},
    {TheoremId::L4_4, "L4_4"},
    {TheoremId::T6_1, "T6_1"},
}};

}  // namespace

std::string_view constraint_name(Constraint c) noexcept {
    for (const auto& [k, name] : kConstraintNames) {
        if (k == c) return name;
    }
    return "?";
}

std::optional<Constraint> parse_constraint(std::string_view name) {
    for (const auto& [k, n] : kConstraintNames) {
        if (n == name) return k;
    }
    return std::nullopt;
}

std::vector<Constraint> parse_constraints(std::string_view list) {
    std::vector<Constraint> result;
    std::size_t pos = 0;
    while (pos <= list.size()) {
        std::size_t end = list.find(',', pos);
        if (end == std::string_view::npos) end = list.size();
        const std::string_view token = list.substr(pos, end - pos);
        if (!token.empty()) {
            const auto c = parse_constraint(token);
            if (!c) throw std::invalid_argument("unknown constraint '" + std::string(token) + "'");
            result.push_back(*c);
        }
        pos = end + 1;
    }
    return result;
}

bool satisfies(const BipartiteDigraph& g, Constraint c, const SearchBudget& budget) {
    const int a = g.half_order();
    switch (c) {
        case Constraint::Strong: return is_strong(g).kind == ConnectivityKind::Strong;
        case Constraint::B1: return check_condition_Bk(g, 1).holds;
        case Constraint::B0: return check_condition_Bk(g, 0).holds;
        case Constraint::DegreeSum4aMinus3: return check_degree_sum(g, 4 * a - 3).holds;
        case Constraint::DegreeSum2aPlus3: return check_degree_sum(g, 2 * a + 3).holds;
        case Constraint::Wang: return check_wang(g).holds;
        case Constraint::NotDirectedCycle: return !is_directed_cycle(g);
        case Constraint::Hamiltonian: return hamiltonian_cycle(g, budget).has_value();
        case Constraint::NotHamiltonian: return !hamiltonian_cycle(g, budget).has_value();
    }
    return false;
}

bool satisfies_all(const BipartiteDigraph& g, const std::vector<Constraint>& constraints,
                   const SearchBudget& budget) {
    return std::all_of(constraints.begin(), constraints.end(),
                       [&](Constraint c) { return satisfies(g, c, budget); });
}

// ---------------------------------------------------------------------------
// Populations

std::vector<BipartiteDigraph> sample_random(const SampleConfig& cfg) {
    if (cfg.a < 2 || cfg.a > kMaxHalfOrder) {
        throw ContractViolation("sampling needs 2 <= a <= " + std::to_string(kMaxHalfOrder));
    }
    if (!(cfg.arc_probability > 0.0 && cfg.arc_probability <= 1.0)) {
        throw ContractViolation("arc probability must be in (0, 1]");
    }
    if (cfg.count < 1) throw ContractViolation("sample count must be >= 1");

    std::mt19937_64 rng(cfg.seed);
    // 53 high bits as a uniform double in [0, 1); avoids the
    // implementation-defined std::uniform_real_distribution.
    auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

    const int a = cfg.a;
    std::vector<BipartiteDigraph> result;
    result.reserve(cfg.count);
    std::vector<Arc> arcs;
    while (static_cast<int>(result.size()) < cfg.count) {
        bool accepted = false;
        for (std::uint64_t attempt = 0; attempt < cfg.max_attempts_per_graph; ++attempt) {
            arcs.clear();
            for (Side side : {Side::X, Side::Y}) {
                for (int i = 0; i < a; ++i) {
                    for (int j = 0; j < a; ++j) {
                        if (uniform() < cfg.arc_probability) {
                            arcs.push_back({{side, i}, {opposite(side), j}});
                        }
                    }
                }
            }
            BipartiteDigraph g(a, arcs);
            if (satisfies_all(g, cfg.constraints)) {
                result.push_back(std::move(g));
                accepted = true;
                break;
            }
        }
        if (!accepted) {
            throw SamplingInfeasible("no graph satisfying the constraints in " +
                                     std::to_string(cfg.max_attempts_per_graph) + " attempts");
        }
    }
    return result;
}

namespace {

void check_enumerable(int a) {
    if (a < 1) throw ContractViolation("enumeration needs a >= 1");
    if (a > 3) throw ResourceLimit("exhaustive enumeration is capped at a <= 3");
}

}  // namespace

std::uint64_t enumerate_range(int a, std::uint64_t first, std::uint64_t last,
                              const EnumerateOptions& options,
                              const std::function<void(const BipartiteDigraph&, std::uint64_t)>& visit) {
    check_enumerable(a);
    if (options.dedupe) throw ContractViolation("enumerate_range does not deduplicate");
    const std::uint64_t end = std::min(last, std::uint64_t{1} << arc_slot_count(a));
    std::uint64_t visited = 0;
    for (std::uint64_t bits = first; bits < end; ++bits) {
        const BipartiteDigraph g = from_slot_bits(a, bits);
        ++visited;
        if (satisfies_all(g, options.filter, options.budget)) visit(g, bits);
    }
    return visited;
}

std::uint64_t enumerate_all(int a, const EnumerateOptions& options,
                            const std::function<void(const BipartiteDigraph&, std::uint64_t)>& visit) {
    check_enumerable(a);
    const std::uint64_t total = std::uint64_t{1} << arc_slot_count(a);
    if (!options.dedupe) return enumerate_range(a, 0, total, options, visit);

    EnumerateOptions plain = options;
    plain.dedupe = false;
    std::set<std::string> seen;
    return enumerate_range(a, 0, total, plain, [&](const BipartiteDigraph& g, std::uint64_t bits) {
        if (seen.insert(canonical_form(g)).second) visit(g, bits);
    });
}

// ---------------------------------------------------------------------------
// Theorems

std::string_view theorem_name(TheoremId id) noexcept {
    for (const auto& [k, name] : kTheoremNames) {
        if (k == id) return name;
    }
    return "?";
}

std::optional<TheoremId> parse_theorem(std::string_view name) {
    for (const auto& [k, n] : kTheoremNames) {
        if (n == name) return k;
    }
    return std::nullopt;
}

const std::vector<TheoremId>& all_theorems() {
    static const std::vector<TheoremId> ids = [] {
        std::vector<TheoremId> v;
        for (const auto& [k, n] : kTheoremNames) v.push_back(k);
        return v;
    }();
    return ids;
}

int default_min_order(TheoremId id) noexcept {
    switch (id) {
        case TheoremId::C5_1: return 10;
        case TheoremId::L4_1: return 4;
        default: return 8;
    }
}

std::vector<Constraint> hypothesis_constraints(TheoremId id) {
    using C = Constraint;
    switch (id) {
        case TheoremId::T1_9: return {C::Strong, C::B1};
        case TheoremId::T1_10: return {C::Strong, C::DegreeSum4aMinus3};
        case TheoremId::C5_1: return {C::Strong, C::Wang};
        case TheoremId::L4_1: return {C::Strong, C::DegreeSum2aPlus3};
        case TheoremId::L4_2: return {C::Strong, C::B1};
        case TheoremId::L4_3: return {C::Strong, C::B0};
        case TheoremId::L4_4: return {C::Strong, C::B0, C::NotDirectedCycle};
        case TheoremId::T6_1: return {C::Strong, C::B1, C::NotDirectedCycle};
    }
    return {};
}

namespace {

const BipartiteDigraph& exceptional_graph() {
    static const BipartiteDigraph d8 = generate(FamilySpec{Family::D8, std::nullopt, 1});
    return d8;
}

bool is_exception(const BipartiteDigraph& g) {
    return g.half_order() == 4 && is_isomorphic(g, exceptional_graph()).isomorphic;
}

// Underlying graph 2-connected, and a bypass for every cycle of length at
// most 2a - 2. Bypass existence depends only on the cycle's vertex set.
std::optional<std::string> two_connected_with_bypasses(const BipartiteDigraph& g,
                                                       const SearchBudget& budget) {
    const auto ug = ug_two_connected(g);
    if (ug.kind != ConnectivityKind::TwoConnected) {
        return "underlying graph not 2-connected (cut vertex " +
               (ug.cut_vertex ? ug.cut_vertex->str() : std::string("?")) + ")";
    }
    std::set<FlatMask> tried;
    std::optional<std::string> failure;
    enumerate_cycles(
        g, g.order() - 2,
        [&](const Cycle& c) {
            if (!tried.insert(c.vertex_mask(g)).second) return true;
            if (!find_bypass(g, c)) {
                failure = "no bypass for cycle " + c.str();
                return false;
            }
            return true;
        },
        budget);
    return failure;
}

std::optional<std::string> conclusion_failure(TheoremId id, const BipartiteDigraph& g,
                                              const SearchBudget& budget) {
    switch (id) {
        case TheoremId::T1_9:
            if (hamiltonian_cycle(g, budget) || is_exception(g)) return std::nullopt;
            return "not Hamiltonian and not isomorphic to D8";
        case TheoremId::T1_10:
        case TheoremId::C5_1:
            if (hamiltonian_cycle(g, budget)) return std::nullopt;
            return "not Hamiltonian";
        case TheoremId::L4_1:
        case TheoremId::L4_2: return two_connected_with_bypasses(g, budget);
        case TheoremId::L4_3: {
            for (MatchDirection d : {MatchDirection::XtoY, MatchDirection::YtoX}) {
                if (auto s = hall_violator(g, d)) {
                    std::string msg = std::string("no perfect matching ") +
                                      (d == MatchDirection::XtoY ? "XtoY" : "YtoX") +
                                      ", Hall violator {";
                    for (std::size_t i = 0; i < s->size(); ++i) {
                        msg += (i ? "," : "") + (*s)[i].str();
                    }
                    return msg + "}";
                }
            }
            if (!cycle_factor(g)) return "no cycle factor";
            return std::nullopt;
        }
        case TheoremId::L4_4:
            if (non_hamiltonian_long_cycle(g, budget)) return std::nullopt;
            return "no cycle of length in [4, 2a-2]";
        case TheoremId::T6_1: {
            if (is_exception(g)) return std::nullopt;
            const auto spectrum = even_spectrum(g, budget);
            for (int len = 4; len <= g.order(); len += 2) {
                if (!std::binary_search(spectrum.begin(), spectrum.end(), len)) {
                    return "no cycle of length " + std::to_string(len);
                }
            }
            return std::nullopt;
        }
    }
    return std::nullopt;
}

}  // namespace

CheckOutcome check_theorem_on(TheoremId id, const BipartiteDigraph& g, int min_order,
                              const SearchBudget& budget, std::string* evidence) {
    if (g.order() < min_order) return CheckOutcome::HypothesisFails;
    if (!satisfies_all(g, hypothesis_constraints(id), budget)) return CheckOutcome::HypothesisFails;
    auto failure = conclusion_failure(id, g, budget);
    if (!failure) return CheckOutcome::Passed;
    if (evidence) *evidence = std::move(*failure);
    return CheckOutcome::Counterexample;
}

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t state) {
    for (unsigned char c : bytes) {
        state ^= c;
        state *= 0x100000001b3ULL;
    }
    return state;
}

namespace {

struct Tally {
    std::uint64_t total = 0;
    std::uint64_t checked = 0;
    std::uint64_t passed = 0;
    std::vector<GraphEvidence> counterexamples;
    std::vector<GraphEvidence> inconclusive;

    void add(TheoremId id, const BipartiteDigraph& g, int min_order, const SearchBudget& budget) {
        ++total;
        std::string evidence;
        try {
            switch (check_theorem_on(id, g, min_order, budget, &evidence)) {
                case CheckOutcome::HypothesisFails: break;
                case CheckOutcome::Passed:
                    ++checked;
                    ++passed;
                    break;
                case CheckOutcome::Counterexample:
                    ++checked;
                    counterexamples.push_back({serialize(g), std::move(evidence)});
                    break;
            }
        } catch (const ResourceLimit& e) {
            inconclusive.push_back({serialize(g), e.what()});
        }
    }

    void merge(Tally&& other) {
        total += other.total;
        checked += other.checked;
        passed += other.passed;
        std::move(other.counterexamples.begin(), other.counterexamples.end(),
                  std::back_inserter(counterexamples));
        std::move(other.inconclusive.begin(), other.inconclusive.end(),
                  std::back_inserter(inconclusive));
    }
};

// Splits [0, n) into `workers` contiguous chunks and runs `work(chunk, lo, hi)`.
void run_chunked(std::uint64_t n, int workers, std::vector<Tally>& tallies,
                 const std::function<void(Tally&, std::uint64_t, std::uint64_t)>& work) {
    workers = std::max(1, workers);
    tallies.assign(workers, Tally{});
    if (workers == 1) {
        work(tallies[0], 0, n);
        return;
    }
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(workers);
    for (int w = 0; w < workers; ++w) {
        const std::uint64_t lo = n * w / workers;
        const std::uint64_t hi = n * (w + 1) / workers;
        threads.emplace_back([&, w, lo, hi] {
            try {
                work(tallies[w], lo, hi);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace

TheoremVerdict verify_theorem(TheoremId id, const Population& population,
                              const VerifyOptions& options) {
    TheoremVerdict verdict;
    verdict.theorem = id;
    verdict.min_order = options.min_order.value_or(default_min_order(id));
    verdict.population = population;

    std::vector<Tally> tallies;
    auto check_list = [&](const std::vector<BipartiteDigraph>& graphs) {
        std::uint64_t digest = fnv1a("");
        for (const auto& g : graphs) digest = fnv1a(serialize(g), digest);
        verdict.population_digest = digest;
        run_chunked(graphs.size(), options.workers, tallies,
                    [&](Tally& t, std::uint64_t lo, std::uint64_t hi) {
                        for (std::uint64_t i = lo; i < hi; ++i) {
                            t.add(id, graphs[i], verdict.min_order, options.budget);
                        }
                    });
    };

    if (const auto* ex = std::get_if<ExhaustivePopulation>(&population)) {
        check_enumerable(ex->a);
        const std::uint64_t total = std::uint64_t{1} << arc_slot_count(ex->a);
        run_chunked(total, options.workers, tallies,
                    [&](Tally& t, std::uint64_t lo, std::uint64_t hi) {
                        for (std::uint64_t bits = lo; bits < hi; ++bits) {
                            t.add(id, from_slot_bits(ex->a, bits), verdict.min_order,
                                  options.budget);
                        }
                    });
    } else if (const auto* cfg = std::get_if<SampleConfig>(&population)) {
        check_list(sample_random(*cfg));
    } else {
        check_list(std::get<ExplicitPopulation>(population).graphs);
    }

    Tally all;
    for (auto& t : tallies) all.merge(std::move(t));
    std::sort(all.counterexamples.begin(), all.counterexamples.end());
    std::sort(all.inconclusive.begin(), all.inconclusive.end());
    verdict.total = all.total;
    verdict.checked = all.checked;
    verdict.passed = all.passed;
    verdict.counterexamples = std::move(all.counterexamples);
    verdict.inconclusive = std::move(all.inconclusive);
    return verdict;
}

// ---------------------------------------------------------------------------
// Reports

ReportDocument run_check(const BipartiteDigraph& g, const SearchBudget& budget) {
    if (g.half_order() > 10) throw ContractViolation("run_check supports a <= 10");
    const int a = g.half_order();
    ReportDocument doc;
    doc.graph = serialize(g);
    doc.a = a;
    for (VertexId v : g.vertices()) doc.degrees.emplace_back(v, degree(g, v));
    doc.strong = is_strong(g);
    if (g.order() >= 3) doc.ug_two_connected = ug_two_connected(g);
    doc.dominating_pair_count = static_cast<int>(dominating_pairs(g).size());
    doc.max_bk = max_Bk(g);
    doc.conditions = {
        {"B_-1", check_condition_Bk(g, -1)},
        {"B0", check_condition_Bk(g, 0)},
        {"B1", check_condition_Bk(g, 1)},
        {"degree_sum_4a_minus_3", check_degree_sum(g, 4 * a - 3)},
        {"degree_sum_2a_plus_3", check_degree_sum(g, 2 * a + 3)},
        {"wang", check_wang(g)},
    };
    doc.matching_x_to_y = match_or_certify(g, MatchDirection::XtoY);
    doc.matching_y_to_x = match_or_certify(g, MatchDirection::YtoX);
    doc.cycle_factor = cycle_factor(g);
    try {
        doc.even_spectrum = even_spectrum(g, budget);
    } catch (const ResourceLimit&) {
    }
    try {
        doc.hamiltonian.cycle = hamiltonian_cycle(g, budget);
        doc.hamiltonian.known = true;
    } catch (const ResourceLimit&) {
    }
    doc.iso_d8 = is_isomorphic(g, exceptional_graph()).isomorphic;
    return doc;
}

std::string export_dot(const BipartiteDigraph& g) {
    std::ostringstream out;
    out << "digraph bbd {\n";
    out << "  rankdir=LR;\n";
    for (Side side : {Side::X, Side::Y}) {
        out << "  { rank=same;";
        for (int i = 0; i < g.half_order(); ++i) out << ' ' << VertexId{side, i}.str() << ';';
        out << " }\n";
    }
    for (const Arc& arc : g.arcs()) {
        out << "  " << arc.from.str() << " -> " << arc.to.str() << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace bbd
