#include <doctest.h>

#include <random>
#include <set>

#include "bbd/matching.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace bbd;
using testing_support::family;
using testing_support::fixture;

namespace {

void check_matching_valid(const BipartiteDigraph& g, const Matching& m) {
    std::set<VertexId> sources, targets;
    for (const Arc& arc : m.arcs) {
        CHECK(g.has_arc(arc.from, arc.to));
        CHECK(arc.from.side == source_side(m.direction));
        CHECK(sources.insert(arc.from).second);
        CHECK(targets.insert(arc.to).second);
    }
}

void check_violator(const BipartiteDigraph& g, MatchDirection dir, const std::vector<VertexId>& s) {
    REQUIRE_FALSE(s.empty());
    for (VertexId v : s) CHECK(v.side == source_side(dir));
    CHECK(neighbor_set(g, s, Direction::Out).size() < s.size());
    // Inclusion-minimal: dropping any member restores Hall's inequality.
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
        std::vector<VertexId> t;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i != drop) t.push_back(s[i]);
        }
        CHECK(neighbor_set(g, t, Direction::Out).size() >= t.size());
    }
}

void check_factor(const BipartiteDigraph& g, const CycleFactor& f) {
    std::set<VertexId> seen;
    for (const Cycle& c : f.cycles) {
        CHECK(c.valid_in(g));
        CHECK(c.length() % 2 == 0);
        for (VertexId v : c.vertices()) CHECK(seen.insert(v).second);
    }
    CHECK(static_cast<int>(seen.size()) == g.order());
}

}  // namespace

TEST_CASE("Hall violator examples") {
    const auto h6 = hall_violator(fixture("H6.bbd"), MatchDirection::XtoY);
    REQUIRE(h6);
    CHECK(*h6 == std::vector<VertexId>{xv(0), xv(1)});

    const auto ex4 = hall_violator(fixture("EX4.bbd"), MatchDirection::XtoY);
    REQUIRE(ex4);
    CHECK(*ex4 == std::vector<VertexId>{xv(0), xv(1), xv(2)});
    CHECK(neighbor_set(fixture("EX4.bbd"), *ex4, Direction::Out).size() == 2);

    for (int a = 1; a <= 6; ++a) {
        const auto k = family(Family::CompleteBipartite, a);
        CHECK_FALSE(hall_violator(k, MatchDirection::XtoY));
        CHECK_FALSE(hall_violator(k, MatchDirection::YtoX));
    }
}

TEST_CASE("perfect matching examples") {
    const auto d8 = fixture("D8.bbd");
    const auto m = perfect_matching(d8, MatchDirection::XtoY);
    REQUIRE(m);
    CHECK(m->is_perfect(4));
    check_matching_valid(d8, *m);

    CHECK_FALSE(perfect_matching(fixture("H6.bbd"), MatchDirection::XtoY));

    const auto dc = family(Family::DirectedCycle, 5);
    const auto fwd = perfect_matching(dc, MatchDirection::XtoY);
    REQUIRE(fwd);
    CHECK(fwd->arcs.size() == 5);
    for (const Arc& arc : fwd->arcs) CHECK(arc.from.side == Side::X);
}

TEST_CASE("cycle factor examples") {
    const auto dc = family(Family::DirectedCycle, 4);
    const auto f = cycle_factor(dc);
    REQUIRE(f);
    REQUIRE(f->cycles.size() == 1);
    CHECK(f->cycles[0].length() == 8);

    const auto d8 = fixture("D8.bbd");
    const auto fd8 = cycle_factor(d8);
    REQUIRE(fd8);
    check_factor(d8, *fd8);

    const auto h6 = fixture("H6.bbd");
    CHECK_FALSE(cycle_factor(h6));
    const auto cert = match_or_certify(h6, MatchDirection::XtoY);
    CHECK_FALSE(cert.matching);
    REQUIRE(cert.violator);
    CHECK(*cert.violator == std::vector<VertexId>{xv(0), xv(1)});
}

TEST_CASE("matching duality against exhaustive Hall checks") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 600; ++trial) {
        const int a = 1 + static_cast<int>(rng() % 5);
        const double p = 0.1 + 0.6 * static_cast<double>(rng() % 100) / 100.0;
        const auto g = oracle::random_graph(a, p, rng);
        for (MatchDirection dir : {MatchDirection::XtoY, MatchDirection::YtoX}) {
            const auto m = perfect_matching(g, dir);
            const auto s = hall_violator(g, dir);
            CHECK(m.has_value() != s.has_value());
            CHECK(m.has_value() == oracle::hall_holds(g, source_side(dir)));
            if (m) {
                CHECK(m->is_perfect(a));
                check_matching_valid(g, *m);
            }
            if (s) check_violator(g, dir, *s);

            const auto maxm = maximum_matching(g, dir);
            check_matching_valid(g, maxm);
            CHECK(maxm.is_perfect(a) == m.has_value());

            const auto outcome = match_or_certify(g, dir);
            CHECK(outcome.matching.has_value() != outcome.violator.has_value());
        }
        const auto f = cycle_factor(g);
        CHECK(f.has_value() ==
              (oracle::hall_holds(g, Side::X) && oracle::hall_holds(g, Side::Y)));
        if (f) check_factor(g, *f);
    }
}

TEST_CASE("matching verdicts are invariant under relabeling") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 200; ++trial) {
        const int a = 2 + static_cast<int>(rng() % 4);
        const auto g = oracle::random_graph(a, 0.35, rng);
        const auto h = oracle::shuffle(g, rng, false);
        CHECK(perfect_matching(g, MatchDirection::XtoY).has_value() ==
              perfect_matching(h, MatchDirection::XtoY).has_value());
        CHECK(perfect_matching(g, MatchDirection::YtoX).has_value() ==
              perfect_matching(h, MatchDirection::YtoX).has_value());
        CHECK(cycle_factor(g).has_value() == cycle_factor(h).has_value());
    }
}
