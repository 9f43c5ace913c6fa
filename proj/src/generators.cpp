#include "specbound/generators.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <vector>

#include "specbound/errors.hpp"

namespace specbound {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_vertices(std::size_t n, std::string_view what) {
  if (n == 0) throw ArgumentError(std::string(what) + " needs at least one vertex");
}

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > 100000) throw ArgumentError("kneser graph too large");
  }
  return r;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = s.find(sep, start);
    parts.push_back(s.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return parts;
}

template <class T>
T parse_integer(std::string_view text, std::string_view spec) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ArgumentError("invalid integer '" + std::string(text) + "' in generator spec '" +
                        std::string(spec) + "'");
  }
  return value;
}

double parse_real(std::string_view text, std::string_view spec) {
  // from_chars for double is missing on older libstdc++.
  std::string copy(text);
  std::istringstream in(copy);
  double value = 0.0;
  in >> value;
  if (in.fail() || !in.eof()) {
    throw ArgumentError("invalid number '" + copy + "' in generator spec '" + std::string(spec) +
                        "'");
  }
  return value;
}

}  // namespace

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double SplitMix64::next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

Graph kneser(std::size_t n, std::size_t k) {
  if (k == 0 || n < 2 * k) throw ArgumentError("kneser(n,k) requires n >= 2k >= 2");
  const std::size_t count = binomial(n, k);

  std::vector<std::uint64_t> subsets;
  subsets.reserve(count);
  if (n > 64) throw ArgumentError("kneser ground set limited to 64 elements");
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    std::uint64_t mask = 0;
    for (std::size_t x : pick) mask |= std::uint64_t{1} << x;
    subsets.push_back(mask);
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }

  std::vector<Edge> edges;
  for (std::size_t u = 0; u < subsets.size(); ++u)
    for (std::size_t v = u + 1; v < subsets.size(); ++v)
      if ((subsets[u] & subsets[v]) == 0) edges.emplace_back(u, v);
  return Graph(subsets.size(), edges);
}

Graph gnp(std::size_t n, double p, std::uint64_t seed) {
  require_vertices(n, "gnp");
  if (!(p >= 0.0 && p <= 1.0)) throw ArgumentError("gnp probability must lie in [0,1]");
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < n; ++v)
    for (std::size_t u = 0; u < v; ++u)
      if (rng.next_unit() < p) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph generate(const GraphFamily& f) {
  return std::visit(
      Overloaded{
          [](const family::Complete& c) {
            require_vertices(c.n, "complete");
            std::vector<Edge> edges;
            for (std::size_t u = 0; u < c.n; ++u)
              for (std::size_t v = u + 1; v < c.n; ++v) edges.emplace_back(u, v);
            return Graph(c.n, edges);
          },
          [](const family::Empty& e) {
            require_vertices(e.n, "empty");
            return Graph(e.n);
          },
          [](const family::Cycle& c) {
            if (c.n < 3) throw ArgumentError("cycle needs at least 3 vertices");
            std::vector<Edge> edges;
            for (std::size_t u = 0; u < c.n; ++u) edges.emplace_back(u, (u + 1) % c.n);
            return Graph(c.n, edges);
          },
          [](const family::Path& p) {
            require_vertices(p.n, "path");
            std::vector<Edge> edges;
            for (std::size_t u = 0; u + 1 < p.n; ++u) edges.emplace_back(u, u + 1);
            return Graph(p.n, edges);
          },
          [](const family::CompleteBipartite& b) {
            if (b.a == 0 || b.b == 0) throw ArgumentError("bipartite sides must be non-empty");
            std::vector<Edge> edges;
            for (std::size_t u = 0; u < b.a; ++u)
              for (std::size_t v = 0; v < b.b; ++v) edges.emplace_back(u, b.a + v);
            return Graph(b.a + b.b, edges);
          },
          [](const family::Kneser& k) { return kneser(k.n, k.k); },
          [](const family::Gnp& g) { return gnp(g.n, g.p, g.seed); },
      },
      f);
}

GraphFamily parse_family(std::string_view spec, std::uint64_t default_seed) {
  const auto parts = split(spec, ':');
  const std::string_view name = parts[0];
  const std::size_t params = parts.size() - 1;
  auto want = [&](std::size_t lo, std::size_t hi) {
    if (params < lo || params > hi) {
      throw ArgumentError("generator spec '" + std::string(spec) + "' has the wrong number of parameters");
    }
  };
  auto size_at = [&](std::size_t i) { return parse_integer<std::size_t>(parts[i], spec); };

  if (name == "complete") { want(1, 1); return family::Complete{size_at(1)}; }
  if (name == "empty") { want(1, 1); return family::Empty{size_at(1)}; }
  if (name == "cycle") { want(1, 1); return family::Cycle{size_at(1)}; }
  if (name == "path") { want(1, 1); return family::Path{size_at(1)}; }
  if (name == "bipartite" || name == "complete_bipartite") {
    want(2, 2);
    return family::CompleteBipartite{size_at(1), size_at(2)};
  }
  if (name == "kneser") { want(2, 2); return family::Kneser{size_at(1), size_at(2)}; }
  if (name == "gnp") {
    want(2, 3);
    const double p = parse_real(parts[2], spec);
    const std::uint64_t seed =
        params == 3 ? parse_integer<std::uint64_t>(parts[3], spec) : default_seed;
    return family::Gnp{size_at(1), p, seed};
  }
  throw ArgumentError("unknown graph family '" + std::string(name) + "'");
}

std::string family_name(const GraphFamily& f) {
  return std::visit(
      Overloaded{
          [](const family::Complete& c) { return "complete:" + std::to_string(c.n); },
          [](const family::Empty& e) { return "empty:" + std::to_string(e.n); },
          [](const family::Cycle& c) { return "cycle:" + std::to_string(c.n); },
          [](const family::Path& p) { return "path:" + std::to_string(p.n); },
          [](const family::CompleteBipartite& b) {
            return "bipartite:" + std::to_string(b.a) + ":" + std::to_string(b.b);
          },
          [](const family::Kneser& k) {
            return "kneser:" + std::to_string(k.n) + ":" + std::to_string(k.k);
          },
          [](const family::Gnp& g) {
            std::ostringstream p;
            p << g.p;
            return "gnp:" + std::to_string(g.n) + ":" + p.str() + ":" + std::to_string(g.seed);
          },
      },
      f);
}

}  // namespace specbound
