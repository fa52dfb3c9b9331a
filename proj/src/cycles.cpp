#include "bbd/cycles.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <sstream>

#include "bbd/conditions.hpp"

namespace bbd {

Cycle::Cycle(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.size() < 2) throw ContractViolation("a cycle needs at least 2 vertices");
    auto sorted = vertices_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw ContractViolation("cycle repeats a vertex");
    }
    std::rotate(vertices_.begin(), std::min_element(vertices_.begin(), vertices_.end()),
                vertices_.end());
}

int Cycle::position(VertexId v) const noexcept {
    auto it = std::find(vertices_.begin(), vertices_.end(), v);
    return it == vertices_.end() ? -1 : static_cast<int>(it - vertices_.begin());
}

bool Cycle::valid_in(const BipartiteDigraph& g) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        const VertexId from = vertices_[i];
        const VertexId to = vertices_[(i + 1) % vertices_.size()];
        if (!g.has_arc(from, to)) return false;
    }
    return true;
}

FlatMask Cycle::vertex_mask(const BipartiteDigraph& g) const {
    FlatMask m = 0;
    for (VertexId v : vertices_) m |= FlatMask{1} << g.flat(v);
    return m;
}

std::string Cycle::str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (i) out << ' ';
        out << vertices_[i].str();
    }
    return out.str();
}

namespace {

/// Depth-first search for simple cycles through a fixed smallest vertex.
/// Only vertices with a larger flat index than the start may be used, so
/// each cycle is found from exactly one start.
class CycleSearch {
public:
    CycleSearch(const BipartiteDigraph& g, const SearchBudget& budget) : g_(g), budget_(budget) {}

    std::optional<Cycle> find(int length) {
        const int n = g_.order();
        const FlatMask all = all_vertices_mask(n);
        // A Hamiltonian cycle passes through flat 0, so one start suffices.
        const int last_start = length == n ? 0 : n - length;
        for (int s = 0; s <= last_start; ++s) {
            start_ = s;
            target_length_ = length;
            allowed_ = all & ~all_vertices_mask(s + 1);
            if (std::popcount(allowed_) < length - 1) break;
            path_.assign(1, s);
            if (extend(s, FlatMask{1} << s)) return to_cycle();
        }
        return std::nullopt;
    }

    void enumerate(int max_length, const std::function<bool(const Cycle&)>& visit) {
        const int n = g_.order();
        const FlatMask all = all_vertices_mask(n);
        stop_ = false;
        for (int s = 0; s < n && !stop_; ++s) {
            start_ = s;
            allowed_ = all & ~all_vertices_mask(s + 1);
            path_.assign(1, s);
            enumerate_from(s, FlatMask{1} << s, max_length, visit);
        }
    }

private:
    void tick() {
        if (++expansions_ > budget_.max_expansions) {
            throw ResourceLimit("cycle search exceeded " +
                                std::to_string(budget_.max_expansions) + " node expansions");
        }
    }

    Cycle to_cycle() const {
        std::vector<VertexId> vs;
        vs.reserve(path_.size());
        for (int f : path_) vs.push_back(g_.vertex(f));
        return Cycle(std::move(vs));
    }

    // Every vertex still to be placed must keep a possible predecessor and
    // successor. Used only for Hamiltonian searches, where every unvisited
    // vertex has to be placed.
    bool hamiltonian_feasible(int current, FlatMask visited) const {
        const FlatMask unvisited = allowed_ & ~visited;
        const FlatMask pred_pool = unvisited | (FlatMask{1} << current);
        const FlatMask succ_pool = unvisited | (FlatMask{1} << start_);
        for (FlatMask m = unvisited; m != 0; m &= m - 1) {
            const int f = std::countr_zero(m);
            if ((g_.in_flat(f) & pred_pool & ~(FlatMask{1} << f)) == 0) return false;
            if ((g_.out_flat(f) & succ_pool) == 0) return false;
        }
        return true;
    }

    bool extend(int current, FlatMask visited) {
        const int depth = static_cast<int>(path_.size());
        if (depth == target_length_) {
            return (g_.out_flat(current) >> start_) & 1U;
        }
        const FlatMask unvisited = allowed_ & ~visited;
        if (std::popcount(unvisited) < target_length_ - depth) return false;
        // The closing vertex must come back to start.
        const FlatMask closers = g_.in_flat(start_);
        if ((unvisited & closers) == 0) return false;
        const bool hamiltonian = target_length_ == g_.order();

        for (FlatMask m = g_.out_flat(current) & unvisited; m != 0; m &= m - 1) {
            const int next = std::countr_zero(m);
            tick();
            if (depth + 1 == target_length_ && !((closers >> next) & 1U)) continue;
            const FlatMask now = visited | (FlatMask{1} << next);
            if (hamiltonian && !hamiltonian_feasible(next, now)) continue;
            path_.push_back(next);
            if (extend(next, now)) return true;
            path_.pop_back();
        }
        return false;
    }

    void enumerate_from(int current, FlatMask visited, int max_length,
                        const std::function<bool(const Cycle&)>& visit) {
        const int depth = static_cast<int>(path_.size());
        if (depth >= 2 && ((g_.out_flat(current) >> start_) & 1U)) {
            if (!visit(to_cycle())) {
                stop_ = true;
                return;
            }
        }
        if (depth == max_length) return;
        for (FlatMask m = g_.out_flat(current) & allowed_ & ~visited; m != 0 && !stop_;
             m &= m - 1) {
            const int next = std::countr_zero(m);
            tick();
            path_.push_back(next);
            enumerate_from(next, visited | (FlatMask{1} << next), max_length, visit);
            path_.pop_back();
        }
    }

    const BipartiteDigraph& g_;
    SearchBudget budget_;
    std::uint64_t expansions_ = 0;
    int start_ = 0;
    int target_length_ = 0;
    FlatMask allowed_ = 0;
    std::vector<int> path_;
    bool stop_ = false;
};

void check_length(const BipartiteDigraph& g, int length) {
    if (length < 2 || length > g.order() || length % 2 != 0) {
        throw ContractViolation("cycle length must be even and in [2, " +
                                std::to_string(g.order()) + "], got " + std::to_string(length));
    }
}

}  // namespace

std::optional<Cycle> hamiltonian_cycle(const BipartiteDigraph& g, const SearchBudget& budget) {
    return CycleSearch(g, budget).find(g.order());
}

std::optional<Cycle> cycle_of_length(const BipartiteDigraph& g, int length,
                                     const SearchBudget& budget) {
    check_length(g, length);
    return CycleSearch(g, budget).find(length);
}

std::vector<int> even_spectrum(const BipartiteDigraph& g, const SearchBudget& budget) {
    std::vector<int> lengths;
    for (int len = 2; len <= g.order(); len += 2) {
        if (cycle_of_length(g, len, budget)) lengths.push_back(len);
    }
    return lengths;
}

std::optional<Cycle> longest_cycle(const BipartiteDigraph& g, const SearchBudget& budget) {
    for (int len = g.order(); len >= 2; len -= 2) {
        if (auto c = cycle_of_length(g, len, budget)) return c;
    }
    return std::nullopt;
}

std::optional<Cycle> non_hamiltonian_long_cycle(const BipartiteDigraph& g,
                                                const SearchBudget& budget) {
    for (int len = 4; len <= g.order() - 2; len += 2) {
        if (auto c = cycle_of_length(g, len, budget)) return c;
    }
    return std::nullopt;
}

std::optional<Bypass> find_bypass(const BipartiteDigraph& g, const Cycle& c) {
    for (VertexId v : c.vertices()) {
        if (!g.contains(v)) throw ContractViolation("cycle vertex " + v.str() + " not in graph");
    }
    if (!c.valid_in(g)) throw ContractViolation("cycle " + c.str() + " is not a cycle of the graph");

    const int n = g.order();
    const int len = c.length();
    const FlatMask on_cycle = c.vertex_mask(g);
    const FlatMask outside = all_vertices_mask(n) & ~on_cycle;
    if (outside == 0) return std::nullopt;

    std::optional<Bypass> best;
    std::vector<int> parent(n, -1);
    for (int i = 0; i < len; ++i) {
        const int x = g.flat(c.vertices()[i]);
        // BFS through vertices outside the cycle, starting at x's out-neighbors.
        std::fill(parent.begin(), parent.end(), -1);
        std::deque<int> queue;
        FlatMask seen = 0;
        for (FlatMask m = g.out_flat(x) & outside; m != 0; m &= m - 1) {
            const int w = std::countr_zero(m);
            parent[w] = x;
            seen |= FlatMask{1} << w;
            queue.push_back(w);
        }
        while (!queue.empty()) {
            const int w = queue.front();
            queue.pop_front();
            for (FlatMask m = g.out_flat(w) & on_cycle & ~(FlatMask{1} << x); m != 0; m &= m - 1) {
                const int y = std::countr_zero(m);
                const int gap = (c.position(g.vertex(y)) - i + len) % len;
                if (best && gap >= best->gap) continue;
                std::vector<VertexId> path{g.vertex(y)};
                for (int u = w; u != x; u = parent[u]) path.push_back(g.vertex(u));
                path.push_back(g.vertex(x));
                std::reverse(path.begin(), path.end());
                best = Bypass{std::move(path), c, gap};
            }
            for (FlatMask m = g.out_flat(w) & outside & ~seen; m != 0; m &= m - 1) {
                const int u = std::countr_zero(m);
                parent[u] = w;
                seen |= FlatMask{1} << u;
                queue.push_back(u);
            }
        }
        if (best && best->gap == 1) break;
    }
    return best;
}

void enumerate_cycles(const BipartiteDigraph& g, int max_length,
                      const std::function<bool(const Cycle&)>& visit, const SearchBudget& budget) {
    CycleSearch(g, budget).enumerate(max_length, visit);
}

}  // namespace bbd
