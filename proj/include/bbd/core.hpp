#pragma once

/// \file core.hpp
/// \brief Immutable balanced bipartite digraph value, degree queries and the
/// `bbd 1` text format.

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bbd {

/// Largest supported half-order. Vertex sets over all 2a vertices are stored
/// as 64-bit masks indexed by flat index.
inline constexpr int kMaxHalfOrder = 32;

using FlatMask = std::uint64_t;

/// Thrown when a caller breaks an operation's precondition.
class ContractViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown by parse_graph; carries the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what);
    int line() const noexcept { return line_; }

private:
    int line_;
};

/// Thrown when an exact search exceeds its node-expansion budget. Distinct
/// from "absent": a search that runs out of budget has proven nothing.
class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Side : std::uint8_t { X = 0, Y = 1 };

constexpr Side opposite(Side s) noexcept { return s == Side::X ? Side::Y : Side::X; }

struct VertexId {
    Side side = Side::X;
    int index = 0;

    friend constexpr auto operator<=>(const VertexId&, const VertexId&) = default;

    /// `x<index>` or `y<index>`.
    std::string str() const;
};

constexpr VertexId xv(int i) noexcept { return {Side::X, i}; }
constexpr VertexId yv(int i) noexcept { return {Side::Y, i}; }

/// Parses `x3` / `y0`. Throws std::invalid_argument on anything else.
VertexId parse_vertex(std::string_view token);

struct Arc {
    VertexId from;
    VertexId to;

    friend constexpr auto operator<=>(const Arc&, const Arc&) = default;
};

struct DegreeTriple {
    int out = 0;
    int in = 0;
    int total = 0;

    friend constexpr bool operator==(const DegreeTriple&, const DegreeTriple&) = default;
};

enum class Direction : std::uint8_t { Out, In };

/// A balanced bipartite digraph on X = {x0..x(a-1)}, Y = {y0..y(a-1)}.
///
/// Vertices also have a flat index: x_i -> i, y_j -> a + j. Flat order is
/// the VertexId order, so "smallest vertex" means the same thing in both.
/// Neighborhoods are masks over the indices of the opposite side.
class BipartiteDigraph {
public:
    /// Arcless graph of half-order a.
    explicit BipartiteDigraph(int a);

    /// Throws ContractViolation on an out-of-range index, a same-side arc
    /// or a duplicate arc.
    BipartiteDigraph(int a, std::span<const Arc> arcs);

    int half_order() const noexcept { return a_; }
    int order() const noexcept { return 2 * a_; }
    std::size_t arc_count() const noexcept { return arc_count_; }

    bool contains(VertexId v) const noexcept { return v.index >= 0 && v.index < a_; }
    bool has_arc(VertexId from, VertexId to) const noexcept;

    /// Out-/in-neighborhood of v as a mask over the opposite side's indices.
    std::uint64_t out_mask(VertexId v) const { return out_[flat(v)]; }
    std::uint64_t in_mask(VertexId v) const { return in_[flat(v)]; }
    std::uint64_t out_mask(int flat_index) const { return out_[flat_index]; }
    std::uint64_t in_mask(int flat_index) const { return in_[flat_index]; }

    /// Neighborhoods as flat-index masks.
    FlatMask out_flat(int flat_index) const noexcept {
        return flat_index < a_ ? out_[flat_index] << a_ : out_[flat_index];
    }
    FlatMask in_flat(int flat_index) const noexcept {
        return flat_index < a_ ? in_[flat_index] << a_ : in_[flat_index];
    }

    int flat(VertexId v) const noexcept {
        return v.side == Side::X ? v.index : a_ + v.index;
    }
    VertexId vertex(int flat_index) const noexcept {
        return flat_index < a_ ? xv(flat_index) : yv(flat_index - a_);
    }

    /// All vertices in ascending order (X first).
    std::vector<VertexId> vertices() const;

    /// Arcs in normalized order: (source side, source index, target index).
    std::vector<Arc> arcs() const;

    /// Returns a copy with `extra` added. Duplicates are a contract violation.
    BipartiteDigraph with_arcs(std::span<const Arc> extra) const;

    /// Returns the converse digraph (every arc reversed).
    BipartiteDigraph converse() const;

    /// Relabels vertices: x_i becomes x_{x_perm[i]} and y_j becomes
    /// y_{y_perm[j]}. With swap_sides, x_i becomes y_{x_perm[i]} and y_j
    /// becomes x_{y_perm[j]}.
    BipartiteDigraph relabel(std::span<const int> x_perm, std::span<const int> y_perm,
                             bool swap_sides = false) const;

    friend bool operator==(const BipartiteDigraph&, const BipartiteDigraph&) = default;

private:
    void add_arc(const Arc& arc);

    int a_;
    std::size_t arc_count_ = 0;
    std::vector<std::uint64_t> out_;
    std::vector<std::uint64_t> in_;
};

DegreeTriple degree(const BipartiteDigraph& g, VertexId v);

/// Union of out- (or in-) neighborhoods of `set`. All members must lie on
/// one side; a mixed set is a ContractViolation. Result is sorted.
std::vector<VertexId> neighbor_set(const BipartiteDigraph& g, std::span<const VertexId> set,
                                   Direction direction);

/// Parses the `bbd 1` text format. Errors are reported as ParseError with
/// the offending line number.
BipartiteDigraph parse_graph(std::string_view text);

/// Canonical serialization: header plus arcs in normalized order, LF endings.
std::string serialize(const BipartiteDigraph& g);

/// Number of arc slots, 2a^2. Slot order matches the normalized arc order.
int arc_slot_count(int a);

/// Position of `arc` in the normalized slot order.
int arc_slot(int a, const Arc& arc);

/// Builds the graph whose arc set is given by the low 2a^2 bits of `bits`
/// (bit i set means the i-th slot is present). Requires 2a^2 <= 64.
BipartiteDigraph from_slot_bits(int a, std::uint64_t bits);

/// Inverse of from_slot_bits.
std::uint64_t to_slot_bits(const BipartiteDigraph& g);

}  // namespace bbd
