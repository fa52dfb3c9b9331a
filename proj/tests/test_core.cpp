#include <doctest.h>

#include <random>

#include "bbd/core.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace bbd;
using testing_support::fixture;
using testing_support::from_text;

TEST_CASE("vertex ids render and parse") {
    CHECK(xv(3).str() == "x3");
    CHECK(yv(0).str() == "y0");
    CHECK(parse_vertex("y12") == yv(12));
    CHECK_THROWS_AS(parse_vertex("z1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_vertex("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_vertex("x01"), std::invalid_argument);
    CHECK_THROWS_AS(parse_vertex("x-1"), std::invalid_argument);
    CHECK(xv(5) < yv(0));
}

TEST_CASE("parse the smallest balanced digraph") {
    const auto g = from_text("a 1\nx0 y0\ny0 x0\n");
    CHECK(g.half_order() == 1);
    CHECK(g.arc_count() == 2);
    CHECK(g.has_arc(xv(0), yv(0)));
    CHECK(g.has_arc(yv(0), xv(0)));
}

TEST_CASE("D8 fixture has 20 arcs") {
    const auto g = fixture("D8.bbd");
    CHECK(g.half_order() == 4);
    CHECK(g.arc_count() == 20);
}

TEST_CASE("comments and blank lines are ignored") {
    const auto g = parse_graph("# leading\nbbd 1\n\n# mid\na 2\nx0 y1\n\n# tail\n");
    CHECK(g.arc_count() == 1);
    CHECK(g.has_arc(xv(0), yv(1)));
}

namespace {

int parse_error_line(const std::string& text) {
    try {
        parse_graph(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return -1;
}

std::string parse_error_text(const std::string& text) {
    try {
        parse_graph(text);
    } catch (const ParseError& e) {
        return e.what();
    }
    return {};
}

}  // namespace

TEST_CASE("parse errors name the offending line") {
    CHECK(parse_error_line("bbd 1\na 2\nx0 x1\n") == 3);
    CHECK(parse_error_text("bbd 1\na 2\nx0 x1\n").find("same-side arc") != std::string::npos);
    CHECK(parse_error_line("bbd 1\na 2\nx0 y2\n") == 3);
    CHECK(parse_error_line("bbd 1\na 2\nx0 y1\ny0 x0\nx0 y1\n") == 5);
    CHECK(parse_error_text("bbd 1\na 2\nx0 y1\nx0 y1\n").find("duplicate arc") != std::string::npos);
    CHECK(parse_error_line("bbd 2\na 2\n") == 1);
    CHECK(parse_error_line("graph\n") == 1);
    CHECK(parse_error_line("bbd 1\nb 2\n") == 2);
    CHECK(parse_error_line("bbd 1\na 0\n") == 2);
    CHECK(parse_error_line("bbd 1\na two\n") == 2);
    CHECK(parse_error_line("bbd 1\na 2\nx0 y1 y0\n") == 3);
    CHECK(parse_error_line("bbd 1\na 2\nx0 q1\n") == 3);
    CHECK(parse_error_line("bbd 1\r\na 2\n") == 1);
    CHECK_THROWS_AS(parse_graph(""), ParseError);
    CHECK_THROWS_AS(parse_graph("bbd 1\n"), ParseError);
}

TEST_CASE("construction rejects bad arcs") {
    const std::vector<Arc> same_side{{xv(0), xv(1)}};
    const std::vector<Arc> out_of_range{{xv(0), yv(2)}};
    const std::vector<Arc> duplicate{{xv(0), yv(1)}, {xv(0), yv(1)}};
    CHECK_THROWS_AS(BipartiteDigraph(2, same_side), ContractViolation);
    CHECK_THROWS_AS(BipartiteDigraph(2, out_of_range), ContractViolation);
    CHECK_THROWS_AS(BipartiteDigraph(2, duplicate), ContractViolation);
    CHECK_THROWS_AS(BipartiteDigraph(0), ContractViolation);
    CHECK_THROWS_AS(BipartiteDigraph(kMaxHalfOrder + 1), ContractViolation);
}

TEST_CASE("serialization is canonical and round-trips") {
    const auto g = from_text("a 2\ny1 x0\nx1 y0\nx0 y1\n");
    CHECK(serialize(g) == "bbd 1\na 2\nx0 y1\nx1 y0\ny1 x0\n");
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const int a = 1 + static_cast<int>(rng() % 7);
        const auto h = oracle::random_graph(a, 0.4, rng);
        const auto back = parse_graph(serialize(h));
        CHECK(back == h);
        CHECK(serialize(back) == serialize(h));
    }
}

TEST_CASE("degree examples") {
    const auto d8 = fixture("D8.bbd");
    CHECK(degree(d8, xv(2)).total == 7);
    CHECK(degree(d8, xv(0)).total == 3);
    const auto h6 = fixture("H6.bbd");
    CHECK(degree(h6, yv(0)).total == 4);  // u
    CHECK_THROWS_AS(degree(d8, xv(4)), ContractViolation);
}

TEST_CASE("degree sums agree with the arc count") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const int a = 1 + static_cast<int>(rng() % 6);
        const auto g = oracle::random_graph(a, 0.5, rng);
        std::size_t outs = 0, ins = 0;
        for (VertexId v : g.vertices()) {
            const auto d = degree(g, v);
            CHECK(d.total == d.out + d.in);
            CHECK(d.out <= a);
            CHECK(d.in <= a);
            CHECK(d.total == oracle::total_degree(g, v));
            outs += d.out;
            ins += d.in;
        }
        CHECK(outs == g.arc_count());
        CHECK(ins == g.arc_count());
        CHECK(g.arc_count() <= static_cast<std::size_t>(2 * a * a));
    }
}

TEST_CASE("neighbor_set examples") {
    const auto h6 = fixture("H6.bbd");
    const std::vector<VertexId> xy{xv(0), xv(1)};
    CHECK(neighbor_set(h6, xy, Direction::Out) == std::vector<VertexId>{yv(0)});

    const auto ex4 = fixture("EX4.bbd");
    const std::vector<VertexId> ab{xv(0), xv(1), xv(2)};
    CHECK(neighbor_set(ex4, ab, Direction::Out) == std::vector<VertexId>{yv(0), yv(1)});

    CHECK(neighbor_set(h6, std::vector<VertexId>{}, Direction::Out).empty());
    CHECK(neighbor_set(h6, std::vector<VertexId>{}, Direction::In).empty());

    const std::vector<VertexId> mixed{xv(0), yv(0)};
    CHECK_THROWS_AS(neighbor_set(h6, mixed, Direction::Out), ContractViolation);

    const std::vector<VertexId> ys{yv(1)};
    CHECK(neighbor_set(h6, ys, Direction::In) == std::vector<VertexId>{xv(2)});
}

TEST_CASE("converse and relabel") {
    const auto d8 = fixture("D8.bbd");
    const auto conv = d8.converse();
    CHECK(conv.arc_count() == d8.arc_count());
    CHECK(conv.has_arc(yv(3), xv(2)));
    CHECK(conv.converse() == d8);

    const std::vector<int> id{0, 1, 2, 3};
    CHECK(d8.relabel(id, id) == d8);
    const auto swapped = d8.relabel(id, id, true);
    CHECK(swapped.has_arc(xv(0), yv(1)));  // y0 -> x1 became x0 -> y1
    CHECK(swapped.relabel(id, id, true) == d8);
    const std::vector<int> bad{0, 0, 1, 2};
    CHECK_THROWS_AS(d8.relabel(bad, id), ContractViolation);
}

TEST_CASE("with_arcs returns a new graph") {
    const auto g = from_text("a 2\nx0 y0\n");
    const std::vector<Arc> extra{{yv(0), xv(0)}};
    const auto h = g.with_arcs(extra);
    CHECK(g.arc_count() == 1);
    CHECK(h.arc_count() == 2);
    const std::vector<Arc> dup{{xv(0), yv(0)}};
    CHECK_THROWS_AS(g.with_arcs(dup), ContractViolation);
}

TEST_CASE("slot bits follow the normalized arc order") {
    CHECK(arc_slot_count(3) == 18);
    CHECK(arc_slot(2, {xv(0), yv(0)}) == 0);
    CHECK(arc_slot(2, {xv(1), yv(0)}) == 2);
    CHECK(arc_slot(2, {yv(0), xv(1)}) == 5);
    for (std::uint64_t bits = 0; bits < 256; ++bits) {
        const auto g = from_slot_bits(2, bits);
        CHECK(to_slot_bits(g) == bits);
        CHECK(g.arc_count() == static_cast<std::size_t>(__builtin_popcountll(bits)));
        const auto arcs = g.arcs();
        for (std::size_t i = 1; i < arcs.size(); ++i) {
            CHECK(arc_slot(2, arcs[i - 1]) < arc_slot(2, arcs[i]));
        }
    }
    CHECK_THROWS_AS(from_slot_bits(6, 0), ContractViolation);
}
