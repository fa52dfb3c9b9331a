#pragma once

/// \file conditions.hpp
/// \brief Dominating pairs, degree conditions over them, and connectivity
/// predicates. Every negative verdict carries a witness that can be checked
/// on its own.

#include <optional>
#include <utility>
#include <vector>

#include "bbd/core.hpp"

namespace bbd {

/// Two same-side vertices with a common out-neighbor. Normalized u.index < v.index;
/// `witness` is the smallest common out-neighbor.
struct DominatingPair {
    VertexId u;
    VertexId v;
    VertexId witness;

    friend constexpr auto operator<=>(const DominatingPair&, const DominatingPair&) = default;
};

struct ConditionReport {
    bool holds = true;
    int threshold = 0;
    std::optional<DominatingPair> violating_pair;
    /// Total degrees of violating_pair->u and violating_pair->v.
    std::optional<std::pair<int, int>> violating_values;
};

/// Largest k for which B_k holds. Unbounded when the graph has no
/// dominating pair (every B_k then holds vacuously).
class BkLevel {
public:
    static BkLevel unbounded() { return BkLevel(); }
    static BkLevel finite(int k) { return BkLevel(k); }

    bool is_unbounded() const noexcept { return !value_.has_value(); }
    /// Precondition: !is_unbounded().
    int value() const { return value_.value(); }
    /// True when B_k holds at this level.
    bool admits(int k) const noexcept { return !value_ || k <= *value_; }

    friend bool operator==(const BkLevel&, const BkLevel&) = default;

private:
    BkLevel() = default;
    explicit BkLevel(int k) : value_(k) {}
    std::optional<int> value_;
};

enum class ConnectivityKind { Strong, NotStrong, TwoConnected, CutVertex };

struct ConnectivityCertificate {
    ConnectivityKind kind = ConnectivityKind::Strong;
    /// NotStrong: a vertex set S with no arc leaving it (V \ S is nonempty).
    std::vector<VertexId> closed_set;
    /// CutVertex: a vertex whose removal disconnects the underlying graph.
    std::optional<VertexId> cut_vertex;
};

/// All dominating pairs, sorted (X pairs first, then by indices).
std::vector<DominatingPair> dominating_pairs(const BipartiteDigraph& g);

/// B_k: max{d(u), d(v)} >= 2a - 2 + k for every dominating pair.
ConditionReport check_condition_Bk(const BipartiteDigraph& g, int k);

BkLevel max_Bk(const BipartiteDigraph& g);

/// d(u) + d(v) >= bound for every dominating pair.
ConditionReport check_degree_sum(const BipartiteDigraph& g, int bound);

/// For every dominating pair, one member has degree >= 2a - 1 and the other
/// >= a + 1. The report's threshold is 2a - 1.
ConditionReport check_wang(const BipartiteDigraph& g);

ConnectivityCertificate is_strong(const BipartiteDigraph& g);

/// 2-connectivity of the underlying undirected graph. Requires order >= 3.
/// A disconnected underlying graph also yields CutVertex, with a vertex whose removal
/// leaves it disconnected.
ConnectivityCertificate ug_two_connected(const BipartiteDigraph& g);

/// Strong with every in- and out-degree equal to 1: a single directed cycle
/// through all 2a vertices.
bool is_directed_cycle(const BipartiteDigraph& g);

/// Vertices reachable from `from_flat` (itself included) along arcs in
/// `direction`, skipping vertices in `blocked`.
FlatMask reachable_from(const BipartiteDigraph& g, int from_flat, Direction direction,
                        FlatMask blocked = 0);

/// Mask with the low `order` bits set.
constexpr FlatMask all_vertices_mask(int order) noexcept {
    return order >= 64 ? ~FlatMask{0} : (FlatMask{1} << order) - 1;
}

}  // namespace bbd
