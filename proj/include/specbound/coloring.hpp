#pragma once

#include <cstddef>

#include "specbound/graph.hpp"

namespace specbound {

inline constexpr std::size_t kMaxBruteForceVertices = 14;

/// Exact chromatic number by a k-colourability loop, each decision solved
/// with DSATUR-ordered backtracking. Refuses (ArgumentError) graphs with
/// more than kMaxBruteForceVertices vertices. χ(empty vertex set) = 0.
int chromatic_number_bruteforce(const Graph& g);

}  // namespace specbound
