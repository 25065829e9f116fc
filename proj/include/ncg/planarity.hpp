#pragma once

#include "ncg/graph.hpp"

namespace ncg {

/// Largest graph is_planar accepts.
inline constexpr std::size_t kMaxPlanarityVertices = 24;

/// Largest graph has_kuratowski_minor accepts; its search is exponential.
inline constexpr std::size_t kMaxMinorSearchVertices = 12;

/// Euler's bounds reject dense graphs; each biconnected block is then embedded
/// by Demoucron-Malgrange-Pertuiset path addition. Throws std::invalid_argument
/// above kMaxPlanarityVertices.
bool is_planar(const SimpleGraph& g);

/// Exhaustive search for a K5 or K3,3 minor: degree <= 2 vertices are reduced
/// away and edge contractions are explored with memoization, checking for K5
/// or K3,3 as a subgraph at each step. Throws std::invalid_argument above
/// kMaxMinorSearchVertices.
bool has_kuratowski_minor(const SimpleGraph& g);

}  // namespace ncg
