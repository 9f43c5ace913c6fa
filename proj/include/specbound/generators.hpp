#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "specbound/graph.hpp"

namespace specbound {

namespace family {
struct Complete { std::size_t n; };
struct Empty { std::size_t n; };
struct Cycle { std::size_t n; };
struct Path { std::size_t n; };
struct CompleteBipartite { std::size_t a; std::size_t b; };
struct Kneser { std::size_t n; std::size_t k; };
struct Gnp { std::size_t n; double p; std::uint64_t seed; };
}  // namespace family

using GraphFamily = std::variant<family::Complete, family::Empty, family::Cycle, family::Path,
                                 family::CompleteBipartite, family::Kneser, family::Gnp>;

/// Deterministic construction of a family member. Throws ArgumentError for
/// out-of-range parameters (n = 0, cycle n < 3, kneser needs n >= 2k >= 2,
/// gnp needs 0 <= p <= 1).
Graph generate(const GraphFamily& family);

/// Vertex order: the k-subsets of {0..n-1} in lexicographic order. Two
/// vertices are adjacent iff their subsets are disjoint.
Graph kneser(std::size_t n, std::size_t k);

/// Erdős–Rényi G(n, p). Pairs are visited in graph6 order (v = 1..n-1,
/// u = 0..v-1); each draws x = (splitmix64() >> 11) * 2⁻⁵³ from a SplitMix64
/// stream seeded with `seed`, and the edge is present iff x < p.
Graph gnp(std::size_t n, double p, std::uint64_t seed);

/// SplitMix64 (Steele, Lea, Flood 2014), the generator behind gnp().
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform in [0, 1) with 53 random bits.
  double next_unit();

 private:
  std::uint64_t state_;
};

/// Parses `family:param[:param...]`:
///   complete:N  empty:N  cycle:N  path:N  bipartite:A:B  kneser:N:K
///   gnp:N:P[:SEED]
/// For gnp without an explicit seed, `default_seed` is used.
GraphFamily parse_family(std::string_view spec, std::uint64_t default_seed = 0);

/// Short human-readable name, e.g. "kneser:5:2" or "gnp:20:0.5:7".
std::string family_name(const GraphFamily& family);

}  // namespace specbound
