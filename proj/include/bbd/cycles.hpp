#pragma once

/// \file cycles.hpp
/// \brief Exact cycle search by backtracking: Hamiltonian cycles, cycles of a
/// given length, the even length spectrum, and minimum-gap bypasses.
///
/// All searches count node expansions against a SearchBudget and throw
/// ResourceLimit when it runs out. An exhausted search never reports
/// "absent".

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "bbd/core.hpp"

namespace bbd {

struct SearchBudget {
    std::uint64_t max_expansions = 100'000'000;
};

/// A directed cycle, stored rotated to start at its smallest vertex.
class Cycle {
public:
    /// Rotates `vertices` to start at the smallest one. Does not check arcs;
    /// use valid_in for that. Throws ContractViolation if fewer than 2
    /// vertices or repeated vertices.
    explicit Cycle(std::vector<VertexId> vertices);

    const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
    int length() const noexcept { return static_cast<int>(vertices_.size()); }

    /// Position of v on the cycle, or -1.
    int position(VertexId v) const noexcept;

    /// All arcs (including the closing one) exist in g and sides alternate.
    bool valid_in(const BipartiteDigraph& g) const;

    FlatMask vertex_mask(const BipartiteDigraph& g) const;

    std::string str() const;

    friend bool operator==(const Cycle&, const Cycle&) = default;

private:
    std::vector<VertexId> vertices_;
};

/// A path meeting the host cycle exactly in its two distinct endpoints, with
/// at least one interior vertex. `gap` is the arc length of the host-cycle
/// segment from the first endpoint to the last, along the cycle.
struct Bypass {
    std::vector<VertexId> path;
    Cycle host_cycle;
    int gap = 0;
};

std::optional<Cycle> hamiltonian_cycle(const BipartiteDigraph& g, const SearchBudget& budget = {});

/// Some cycle with exactly `length` vertices. `length` must be even and in
/// [2, 2a]; anything else is a ContractViolation.
std::optional<Cycle> cycle_of_length(const BipartiteDigraph& g, int length,
                                     const SearchBudget& budget = {});

/// Sorted even lengths L in [2, 2a] for which a cycle of length L exists.
std::vector<int> even_spectrum(const BipartiteDigraph& g, const SearchBudget& budget = {});

/// A cycle of maximum length, absent iff g is acyclic.
std::optional<Cycle> longest_cycle(const BipartiteDigraph& g, const SearchBudget& budget = {});

/// A cycle of even length in [4, 2a - 2]; the shortest such length is tried first.
std::optional<Cycle> non_hamiltonian_long_cycle(const BipartiteDigraph& g,
                                                const SearchBudget& budget = {});

/// Bypass of `c` with the minimum gap, or absent. Ties go to the earliest
/// start vertex along c, then BFS order. `c` invalid in g is a ContractViolation.
std::optional<Bypass> find_bypass(const BipartiteDigraph& g, const Cycle& c);

/// Calls `visit` once per directed cycle with at most `max_length` vertices.
/// Each cycle is presented starting at its smallest vertex. Returning false
/// from `visit` stops the enumeration.
void enumerate_cycles(const BipartiteDigraph& g, int max_length,
                      const std::function<bool(const Cycle&)>& visit,
                      const SearchBudget& budget = {});

}  // namespace bbd
