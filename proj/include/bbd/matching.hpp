#pragma once

/// \file matching.hpp
/// \brief Directional perfect matchings, Hall violators and cycle factors.

#include <optional>
#include <vector>

#include "bbd/core.hpp"
#include "bbd/cycles.hpp"

namespace bbd {

enum class MatchDirection { XtoY, YtoX };

constexpr Side source_side(MatchDirection d) noexcept {
    return d == MatchDirection::XtoY ? Side::X : Side::Y;
}

struct Matching {
    MatchDirection direction = MatchDirection::XtoY;
    /// Sorted by source vertex.
    std::vector<Arc> arcs;

    bool is_perfect(int a) const noexcept { return static_cast<int>(arcs.size()) == a; }
};

struct CycleFactor {
    /// Ordered by smallest vertex.
    std::vector<Cycle> cycles;
};

/// Exactly one of the two members is set.
struct MatchingOutcome {
    std::optional<Matching> matching;
    std::optional<std::vector<VertexId>> violator;
};

/// Maximum matching in `direction` by augmenting paths. Free sources are
/// processed lowest index first, and neighbors are scanned in index order.
Matching maximum_matching(const BipartiteDigraph& g, MatchDirection direction);

/// A set S of sources with |N(S)| < |S|, or absent when Hall's condition holds.
/// S is the alternating tree of the lowest free source of a maximum matching,
/// then shrunk to be inclusion-minimal.
std::optional<std::vector<VertexId>> hall_violator(const BipartiteDigraph& g,
                                                   MatchDirection direction);

std::optional<Matching> perfect_matching(const BipartiteDigraph& g, MatchDirection direction);

/// Perfect matching or Hall violator, whichever exists.
MatchingOutcome match_or_certify(const BipartiteDigraph& g, MatchDirection direction);

/// The permutation given by one X->Y and one Y->X perfect matching, split
/// into cycles. Absent iff one of the matchings does not exist.
std::optional<CycleFactor> cycle_factor(const BipartiteDigraph& g);

}  // namespace bbd
