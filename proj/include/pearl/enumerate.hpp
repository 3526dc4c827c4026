#pragma once

#include <cstdint>
#include <vector>

#include "pearl/diagram.hpp"

namespace pearl {

/// All valid diagrams of the given genus, bidegree and kind, each exactly once
/// in canonical-key order. Deterministic; an empty list is a legal outcome
/// (d1 = 0 in particular yields none, since a balanced diagram always has an
/// edge of positive length).
std::vector<Diagram> enumerate_diagrams(int genus, std::int64_t d1, std::int64_t d2,
                                        DiagramKind kind);

/// Ordered tuples of `parts` positive integers summing to n.
std::vector<std::vector<std::int64_t>> compositions(std::int64_t n, int parts);

}  // namespace pearl
