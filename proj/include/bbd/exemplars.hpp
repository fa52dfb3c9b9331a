#pragma once

/// \file exemplars.hpp
/// \brief Generators for the named extremal digraphs and reference families,
/// plus isomorphism testing and canonical forms for small graphs.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bbd/core.hpp"

namespace bbd {

enum class Family {
    D8,
    D6,
    H6,
    EX4,
    EX5,
    Hprime6,
    DirectedCycle,
    CompleteBipartite,
    SymmetricCycle,
    SymmetricPath,
};

struct FamilySpec {
    Family family = Family::D8;
    /// Half-order. Fixed-size families accept only their own value; unset
    /// means the fixed size, or 4 for the parametric families.
    std::optional<int> a;
    /// EX4 only: |A|, with |B| = a - 1 - |A|.
    int size_a = 1;
};

std::string_view family_name(Family f) noexcept;

/// Accepts the names returned by family_name, case-insensitively.
std::optional<Family> parse_family(std::string_view name);

const std::vector<Family>& all_families();

/// Deterministic arc set for `spec`. Out-of-range parameters are a
/// ContractViolation naming the constraint.
///
/// Vertex layouts for the named graphs:
///  - D6: one-based labels x1..x3 / y1..y3 become x0..x2 / y0..y2.
///  - H6: X = {x, y, z} -> x0, x1, x2; Y = {u, v, w} -> y0, y1, y2.
///  - EX4: X = A (x0..) then B then z = x(a-1); Y = C (y0..y(a-3)),
///    u = y(a-2), v = y(a-1).
BipartiteDigraph generate(const FamilySpec& spec);

struct IsoResult {
    bool isomorphic = false;
    /// mapping[flat index in g1] = image vertex in g2.
    std::optional<std::vector<VertexId>> mapping;
    bool swapped_sides = false;
};

/// Arc-preserving bijection search. Side-preserving maps are tried first,
/// then maps sending X to Y.
IsoResult is_isomorphic(const BipartiteDigraph& g1, const BipartiteDigraph& g2);

/// True when `mapping` sends the arc set of g1 exactly onto the arc set of g2.
bool is_valid_isomorphism(const BipartiteDigraph& g1, const BipartiteDigraph& g2,
                          const std::vector<VertexId>& mapping);

/// Serialization of a fixed representative of g's isomorphism class
/// (side swaps allowed). Throws ResourceLimit for a > 6.
std::string canonical_form(const BipartiteDigraph& g);

}  // namespace bbd
