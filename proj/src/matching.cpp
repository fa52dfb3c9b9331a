#include "bbd/matching.hpp"

#include <algorithm>
#include <bit>

namespace bbd {

namespace {

class Kuhn {
public:
    Kuhn(const BipartiteDigraph& g, MatchDirection direction)
        : g_(g), side_(source_side(direction)), a_(g.half_order()),
          match_of_source_(a_, -1), match_of_target_(a_, -1) {}

    void run() {
        for (int s = 0; s < a_; ++s) {
            visited_ = 0;
            augment(s);
        }
    }

    std::uint64_t targets_of(int source) const { return g_.out_mask(VertexId{side_, source}); }
    int source_of(int target) const { return match_of_target_[target]; }
    int target_of(int source) const { return match_of_source_[source]; }
    Side side() const { return side_; }

private:
    bool augment(int s) {
        for (std::uint64_t m = targets_of(s) & ~visited_; m != 0; m &= m - 1) {
            const int t = std::countr_zero(m);
            if (visited_ & (std::uint64_t{1} << t)) continue;
            visited_ |= std::uint64_t{1} << t;
            if (match_of_target_[t] < 0 || augment(match_of_target_[t])) {
                match_of_target_[t] = s;
                match_of_source_[s] = t;
                return true;
            }
        }
        return false;
    }

    const BipartiteDigraph& g_;
    Side side_;
    int a_;
    std::vector<int> match_of_source_;
    std::vector<int> match_of_target_;
    std::uint64_t visited_ = 0;
};

Matching to_matching(const Kuhn& k, MatchDirection direction, int a) {
    Matching m{direction, {}};
    for (int s = 0; s < a; ++s) {
        if (k.target_of(s) >= 0) {
            m.arcs.push_back({{k.side(), s}, {opposite(k.side()), k.target_of(s)}});
        }
    }
    return m;
}

std::uint64_t image(const Kuhn& k, std::uint64_t sources) {
    std::uint64_t result = 0;
    for (; sources != 0; sources &= sources - 1) result |= k.targets_of(std::countr_zero(sources));
    return result;
}

}  // namespace

Matching maximum_matching(const BipartiteDigraph& g, MatchDirection direction) {
    Kuhn k(g, direction);
    k.run();
    return to_matching(k, direction, g.half_order());
}

std::optional<std::vector<VertexId>> hall_violator(const BipartiteDigraph& g,
                                                   MatchDirection direction) {
    const int a = g.half_order();
    Kuhn k(g, direction);
    k.run();
    int free_source = -1;
    for (int s = 0; s < a && free_source < 0; ++s) {
        if (k.target_of(s) < 0) free_source = s;
    }
    if (free_source < 0) return std::nullopt;

    // Alternating tree: every target reached is matched (the matching is
    // maximum), and its partner joins S. So |N(S)| = |S| - 1.
    std::uint64_t set = std::uint64_t{1} << free_source;
    std::uint64_t reached = 0;
    while (true) {
        const std::uint64_t fresh = image(k, set) & ~reached;
        if (fresh == 0) break;
        reached |= fresh;
        for (std::uint64_t m = fresh; m != 0; m &= m - 1) {
            set |= std::uint64_t{1} << k.source_of(std::countr_zero(m));
        }
    }

    for (int s = 0; s < a; ++s) {
        const std::uint64_t bit = std::uint64_t{1} << s;
        if (!(set & bit)) continue;
        const std::uint64_t smaller = set & ~bit;
        if (smaller != 0 && std::popcount(image(k, smaller)) < std::popcount(smaller)) set = smaller;
    }

    std::vector<VertexId> result;
    for (std::uint64_t m = set; m != 0; m &= m - 1) {
        result.push_back({source_side(direction), std::countr_zero(m)});
    }
    return result;
}

std::optional<Matching> perfect_matching(const BipartiteDigraph& g, MatchDirection direction) {
    Matching m = maximum_matching(g, direction);
    if (!m.is_perfect(g.half_order())) return std::nullopt;
    return m;
}

MatchingOutcome match_or_certify(const BipartiteDigraph& g, MatchDirection direction) {
    MatchingOutcome outcome;
    outcome.matching = perfect_matching(g, direction);
    if (!outcome.matching) outcome.violator = hall_violator(g, direction);
    return outcome;
}

std::optional<CycleFactor> cycle_factor(const BipartiteDigraph& g) {
    const auto forward = perfect_matching(g, MatchDirection::XtoY);
    if (!forward) return std::nullopt;
    const auto backward = perfect_matching(g, MatchDirection::YtoX);
    if (!backward) return std::nullopt;

    const int n = g.order();
    std::vector<int> successor(n, -1);
    for (const Arc& arc : forward->arcs) successor[g.flat(arc.from)] = g.flat(arc.to);
    for (const Arc& arc : backward->arcs) successor[g.flat(arc.from)] = g.flat(arc.to);

    CycleFactor factor;
    std::vector<bool> used(n, false);
    for (int start = 0; start < n; ++start) {
        if (used[start]) continue;
        std::vector<VertexId> cycle;
        for (int v = start; !used[v]; v = successor[v]) {
            used[v] = true;
            cycle.push_back(g.vertex(v));
        }
        factor.cycles.emplace_back(std::move(cycle));
    }
    return factor;
}

}  // namespace bbd
