#include "bbd/core.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>

namespace bbd {

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

std::string VertexId::str() const {
    return (side == Side::X ? "x" : "y") + std::to_string(index);
}

VertexId parse_vertex(std::string_view token) {
    if (token.size() < 2 || (token[0] != 'x' && token[0] != 'y')) {
        throw std::invalid_argument("bad vertex token '" + std::string(token) + "'");
    }
    int index = 0;
    const char* first = token.data() + 1;
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, index);
    if (ec != std::errc{} || ptr != last || index < 0 || (token.size() > 2 && token[1] == '0')) {
        throw std::invalid_argument("bad vertex token '" + std::string(token) + "'");
    }
    return {token[0] == 'x' ? Side::X : Side::Y, index};
}

BipartiteDigraph::BipartiteDigraph(int a) : a_(a) {
    if (a < 1 || a > kMaxHalfOrder) {
        throw ContractViolation("half-order must be in [1, " + std::to_string(kMaxHalfOrder) +
                                "], got " + std::to_string(a));
    }
    out_.assign(2 * static_cast<std::size_t>(a), 0);
    in_.assign(2 * static_cast<std::size_t>(a), 0);
}

BipartiteDigraph::BipartiteDigraph(int a, std::span<const Arc> arcs) : BipartiteDigraph(a) {
    for (const Arc& arc : arcs) add_arc(arc);
}

void BipartiteDigraph::add_arc(const Arc& arc) {
    if (!contains(arc.from) || !contains(arc.to)) {
        throw ContractViolation("vertex index out of range in arc " + arc.from.str() + " " +
                                arc.to.str());
    }
    if (arc.from.side == arc.to.side) {
        throw ContractViolation("same-side arc " + arc.from.str() + " " + arc.to.str());
    }
    const std::uint64_t to_bit = std::uint64_t{1} << arc.to.index;
    auto& out = out_[flat(arc.from)];
    if (out & to_bit) {
        throw ContractViolation("duplicate arc " + arc.from.str() + " " + arc.to.str());
    }
    out |= to_bit;
    in_[flat(arc.to)] |= std::uint64_t{1} << arc.from.index;
    ++arc_count_;
}

bool BipartiteDigraph::has_arc(VertexId from, VertexId to) const noexcept {
    if (!contains(from) || !contains(to) || from.side == to.side) return false;
    return (out_[flat(from)] >> to.index) & 1U;
}

std::vector<VertexId> BipartiteDigraph::vertices() const {
    std::vector<VertexId> result;
    result.reserve(out_.size());
    for (int f = 0; f < order(); ++f) result.push_back(vertex(f));
    return result;
}

std::vector<Arc> BipartiteDigraph::arcs() const {
    std::vector<Arc> result;
    result.reserve(arc_count_);
    for (int f = 0; f < order(); ++f) {
        const VertexId from = vertex(f);
        for (std::uint64_t m = out_[f]; m != 0; m &= m - 1) {
            result.push_back({from, {opposite(from.side), std::countr_zero(m)}});
        }
    }
    return result;
}

BipartiteDigraph BipartiteDigraph::with_arcs(std::span<const Arc> extra) const {
    BipartiteDigraph copy = *this;
    for (const Arc& arc : extra) copy.add_arc(arc);
    return copy;
}

BipartiteDigraph BipartiteDigraph::converse() const {
    std::vector<Arc> reversed;
    for (const Arc& arc : arcs()) reversed.push_back({arc.to, arc.from});
    return BipartiteDigraph(a_, reversed);
}

BipartiteDigraph BipartiteDigraph::relabel(std::span<const int> x_perm, std::span<const int> y_perm,
                                           bool swap_sides) const {
    auto is_perm = [this](std::span<const int> p) {
        if (static_cast<int>(p.size()) != a_) return false;
        std::vector<bool> seen(a_, false);
        for (int i : p) {
            if (i < 0 || i >= a_ || seen[i]) return false;
            seen[i] = true;
        }
        return true;
    };
    if (!is_perm(x_perm) || !is_perm(y_perm)) {
        throw ContractViolation("relabel needs two permutations of [0, a)");
    }
    auto map = [&](VertexId v) -> VertexId {
        const int idx = v.side == Side::X ? x_perm[v.index] : y_perm[v.index];
        const Side side = swap_sides ? opposite(v.side) : v.side;
        return {side, idx};
    };
    std::vector<Arc> mapped;
    for (const Arc& arc : arcs()) mapped.push_back({map(arc.from), map(arc.to)});
    return BipartiteDigraph(a_, mapped);
}

DegreeTriple degree(const BipartiteDigraph& g, VertexId v) {
    if (!g.contains(v)) throw ContractViolation("vertex " + v.str() + " not in graph");
    const int out = std::popcount(g.out_mask(v));
    const int in = std::popcount(g.in_mask(v));
    return {out, in, out + in};
}

std::vector<VertexId> neighbor_set(const BipartiteDigraph& g, std::span<const VertexId> set,
                                   Direction direction) {
    if (set.empty()) return {};
    const Side side = set.front().side;
    std::uint64_t mask = 0;
    for (VertexId v : set) {
        if (v.side != side) throw ContractViolation("neighbor_set needs a one-sided vertex set");
        if (!g.contains(v)) throw ContractViolation("vertex " + v.str() + " not in graph");
        mask |= direction == Direction::Out ? g.out_mask(v) : g.in_mask(v);
    }
    std::vector<VertexId> result;
    for (; mask != 0; mask &= mask - 1) result.push_back({opposite(side), std::countr_zero(mask)});
    return result;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

}  // namespace

BipartiteDigraph parse_graph(std::string_view text) {
    // Header lines must come first; comments and blank lines may appear anywhere.
    enum class Stage { Magic, HalfOrder, Arcs } stage = Stage::Magic;
    int a = 0;
    std::vector<Arc> arcs;
    std::vector<int> arc_lines;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            throw ParseError(line_no, "CR line ending (expected LF)");
        }
        const auto tokens = split_ws(line);
        if (tokens.empty() || tokens.front().front() == '#') {
            if (end == text.size()) break;
            continue;
        }
        switch (stage) {
            case Stage::Magic:
                if (tokens.size() != 2 || tokens[0] != "bbd") {
                    throw ParseError(line_no, "expected magic line 'bbd 1'");
                }
                if (tokens[1] != "1") {
                    throw ParseError(line_no, "unsupported format version '" +
                                                  std::string(tokens[1]) + "'");
                }
                stage = Stage::HalfOrder;
                break;
            case Stage::HalfOrder: {
                if (tokens.size() != 2 || tokens[0] != "a") {
                    throw ParseError(line_no, "expected 'a <integer>'");
                }
                auto [ptr, ec] = std::from_chars(tokens[1].data(),
                                                 tokens[1].data() + tokens[1].size(), a);
                if (ec != std::errc{} || ptr != tokens[1].data() + tokens[1].size() || a < 1 ||
                    a > kMaxHalfOrder) {
                    throw ParseError(line_no, "half-order must be an integer in [1, " +
                                                  std::to_string(kMaxHalfOrder) + "]");
                }
                stage = Stage::Arcs;
                break;
            }
            case Stage::Arcs: {
                if (tokens.size() != 2) throw ParseError(line_no, "malformed arc line");
                Arc arc;
                try {
                    arc = {parse_vertex(tokens[0]), parse_vertex(tokens[1])};
                } catch (const std::invalid_argument& e) {
                    throw ParseError(line_no, e.what());
                }
                if (arc.from.index >= a || arc.to.index >= a) {
                    throw ParseError(line_no, "vertex index >= a (" + std::to_string(a) + ")");
                }
                if (arc.from.side == arc.to.side) {
                    throw ParseError(line_no, "same-side arc " + arc.from.str() + " " +
                                                  arc.to.str());
                }
                arcs.push_back(arc);
                arc_lines.push_back(line_no);
                break;
            }
        }
        if (end == text.size()) break;
    }
    if (stage == Stage::Magic) throw ParseError(line_no, "missing magic line 'bbd 1'");
    if (stage == Stage::HalfOrder) throw ParseError(line_no, "missing 'a <integer>' line");

    std::vector<std::size_t> order(arcs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t l, std::size_t r) { return arcs[l] < arcs[r]; });
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (arcs[order[i]] == arcs[order[i - 1]]) {
            const Arc& dup = arcs[order[i]];
            throw ParseError(arc_lines[order[i]],
                             "duplicate arc " + dup.from.str() + " " + dup.to.str());
        }
    }
    return BipartiteDigraph(a, arcs);
}

std::string serialize(const BipartiteDigraph& g) {
    std::ostringstream out;
    out << "bbd 1\n" << "a " << g.half_order() << '\n';
    for (const Arc& arc : g.arcs()) out << arc.from.str() << ' ' << arc.to.str() << '\n';
    return out.str();
}

int arc_slot_count(int a) { return 2 * a * a; }

int arc_slot(int a, const Arc& arc) {
    const int base = arc.from.side == Side::X ? 0 : a * a;
    return base + arc.from.index * a + arc.to.index;
}

BipartiteDigraph from_slot_bits(int a, std::uint64_t bits) {
    if (arc_slot_count(a) > 64) throw ContractViolation("slot bits need 2a^2 <= 64");
    std::vector<Arc> arcs;
    for (; bits != 0; bits &= bits - 1) {
        const int slot = std::countr_zero(bits);
        if (slot >= arc_slot_count(a)) throw ContractViolation("slot bit beyond 2a^2");
        const Side side = slot < a * a ? Side::X : Side::Y;
        const int rest = slot % (a * a);
        arcs.push_back({{side, rest / a}, {opposite(side), rest % a}});
    }
    return BipartiteDigraph(a, arcs);
}

std::uint64_t to_slot_bits(const BipartiteDigraph& g) {
    const int a = g.half_order();
    if (arc_slot_count(a) > 64) throw ContractViolation("slot bits need 2a^2 <= 64");
    std::uint64_t bits = 0;
    for (int f = 0; f < g.order(); ++f) {
        const int base = f < a ? f * a : a * a + (f - a) * a;
        bits |= g.out_mask(f) << base;
    }
    return bits;
}

}  // namespace bbd
