#include "specbound/coloring.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "specbound/errors.hpp"

namespace specbound {

namespace {

class Colorer {
 public:
  Colorer(const Graph& g, int k) : g_(g), n_(g.vertex_count()), k_(k), color_(n_, -1) {}

  bool run() { return extend(0); }

 private:
  // Uncoloured vertex with the most distinct neighbour colours, ties by
  // degree then index.
  std::size_t pick() const {
    std::size_t best = n_;
    int best_sat = -1;
    std::size_t best_deg = 0;
    for (std::size_t v = 0; v < n_; ++v) {
      if (color_[v] != -1) continue;
      unsigned seen = 0;
      for (std::size_t u = 0; u < n_; ++u)
        if (color_[u] != -1 && g_.adjacent(u, v)) seen |= 1u << color_[u];
      const int sat = __builtin_popcount(seen);
      const std::size_t deg = g_.degree(v);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    return best;
  }

  bool extend(std::size_t colored) {
    if (colored == n_) return true;
    const std::size_t v = pick();
    int used = 0;
    for (std::size_t u = 0; u < n_; ++u) used = std::max(used, color_[u] + 1);
    // Colours above the first unused one are symmetric; try just one of them.
    const int limit = std::min(k_, used + 1);
    for (int c = 0; c < limit; ++c) {
      bool clash = false;
      for (std::size_t u = 0; u < n_ && !clash; ++u) clash = color_[u] == c && g_.adjacent(u, v);
      if (clash) continue;
      color_[v] = c;
      if (extend(colored + 1)) return true;
      color_[v] = -1;
    }
    return false;
  }

  const Graph& g_;
  std::size_t n_;
  int k_;
  std::vector<int> color_;
};

}  // namespace

int chromatic_number_bruteforce(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kMaxBruteForceVertices) {
    throw ArgumentError("chromatic_number_bruteforce: " + std::to_string(n) +
                        " vertices exceeds the limit of " +
                        std::to_string(kMaxBruteForceVertices));
  }
  if (n == 0) return 0;
  for (int k = 1; k <= static_cast<int>(n); ++k) {
    if (Colorer(g, k).run()) return k;
  }
  return static_cast<int>(n);
}

}  // namespace specbound
