#include "bbd/conditions.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace bbd {

std::vector<DominatingPair> dominating_pairs(const BipartiteDigraph& g) {
    std::vector<DominatingPair> pairs;
    const int a = g.half_order();
    for (Side side : {Side::X, Side::Y}) {
        for (int i = 0; i < a; ++i) {
            const VertexId u{side, i};
            for (int j = i + 1; j < a; ++j) {
                const VertexId v{side, j};
                const std::uint64_t common = g.out_mask(u) & g.out_mask(v);
                if (common == 0) continue;
                const VertexId witness{opposite(side), std::countr_zero(common)};
                assert(g.has_arc(u, witness) && g.has_arc(v, witness));
                pairs.push_back({u, v, witness});
            }
        }
    }
    return pairs;
}

namespace {

template <typename Pred>
ConditionReport check_pairs(const BipartiteDigraph& g, int threshold, Pred satisfied) {
    ConditionReport report;
    report.threshold = threshold;
    for (const DominatingPair& p : dominating_pairs(g)) {
        const int du = degree(g, p.u).total;
        const int dv = degree(g, p.v).total;
        if (!satisfied(du, dv)) {
            report.holds = false;
            report.violating_pair = p;
            report.violating_values = std::pair{du, dv};
            break;
        }
    }
    return report;
}

}  // namespace

ConditionReport check_condition_Bk(const BipartiteDigraph& g, int k) {
    const int threshold = 2 * g.half_order() - 2 + k;
    return check_pairs(g, threshold, [&](int du, int dv) { return std::max(du, dv) >= threshold; });
}

BkLevel max_Bk(const BipartiteDigraph& g) {
    const auto pairs = dominating_pairs(g);
    if (pairs.empty()) return BkLevel::unbounded();
    int lowest = 4 * g.half_order();
    for (const DominatingPair& p : pairs) {
        lowest = std::min(lowest, std::max(degree(g, p.u).total, degree(g, p.v).total));
    }
    return BkLevel::finite(lowest - (2 * g.half_order() - 2));
}

ConditionReport check_degree_sum(const BipartiteDigraph& g, int bound) {
    return check_pairs(g, bound, [&](int du, int dv) { return du + dv >= bound; });
}

ConditionReport check_wang(const BipartiteDigraph& g) {
    const int a = g.half_order();
    const int high = 2 * a - 1;
    const int low = a + 1;
    return check_pairs(g, high, [&](int du, int dv) {
        return (du >= high && dv >= low) || (dv >= high && du >= low);
    });
}

FlatMask reachable_from(const BipartiteDigraph& g, int from_flat, Direction direction,
                        FlatMask blocked) {
    FlatMask seen = FlatMask{1} << from_flat;
    FlatMask frontier = seen;
    while (frontier != 0) {
        FlatMask next = 0;
        for (FlatMask m = frontier; m != 0; m &= m - 1) {
            const int f = std::countr_zero(m);
            next |= direction == Direction::Out ? g.out_flat(f) : g.in_flat(f);
        }
        frontier = next & ~seen & ~blocked;
        seen |= frontier;
    }
    return seen;
}

ConnectivityCertificate is_strong(const BipartiteDigraph& g) {
    const int n = g.order();
    const FlatMask all = all_vertices_mask(n);
    if (reachable_from(g, 0, Direction::Out) == all && reachable_from(g, 0, Direction::In) == all) {
        return {ConnectivityKind::Strong, {}, std::nullopt};
    }
    for (int f = 0; f < n; ++f) {
        const FlatMask reach = reachable_from(g, f, Direction::Out);
        if (reach == all) continue;
        ConnectivityCertificate cert{ConnectivityKind::NotStrong, {}, std::nullopt};
        for (FlatMask m = reach; m != 0; m &= m - 1) {
            cert.closed_set.push_back(g.vertex(std::countr_zero(m)));
        }
        return cert;
    }
    // Unreachable: if every vertex reaches everything the graph is strong.
    assert(false);
    return {ConnectivityKind::NotStrong, {}, std::nullopt};
}

bool is_directed_cycle(const BipartiteDigraph& g) {
    if (static_cast<int>(g.arc_count()) != g.order()) return false;
    for (int f = 0; f < g.order(); ++f) {
        if (std::popcount(g.out_flat(f)) != 1 || std::popcount(g.in_flat(f)) != 1) return false;
    }
    return is_strong(g).kind == ConnectivityKind::Strong;
}

namespace {

bool ug_connected_without(const BipartiteDigraph& g, FlatMask removed) {
    const FlatMask all = all_vertices_mask(g.order()) & ~removed;
    if (all == 0) return true;
    const int start = std::countr_zero(all);
    FlatMask seen = FlatMask{1} << start;
    FlatMask frontier = seen;
    while (frontier != 0) {
        FlatMask next = 0;
        for (FlatMask m = frontier; m != 0; m &= m - 1) {
            const int f = std::countr_zero(m);
            next |= g.out_flat(f) | g.in_flat(f);
        }
        frontier = next & all & ~seen;
        seen |= frontier;
    }
    return seen == all;
}

}  // namespace

ConnectivityCertificate ug_two_connected(const BipartiteDigraph& g) {
    if (g.order() < 3) {
        throw ContractViolation("ug_two_connected needs order >= 3");
    }
    for (int f = 0; f < g.order(); ++f) {
        if (!ug_connected_without(g, FlatMask{1} << f)) {
            return {ConnectivityKind::CutVertex, {}, g.vertex(f)};
        }
    }
    if (!ug_connected_without(g, 0)) {
        // Unreachable for order >= 3.
        return {ConnectivityKind::CutVertex, {}, std::nullopt};
    }
    return {ConnectivityKind::TwoConnected, {}, std::nullopt};
}

}  // namespace bbd
