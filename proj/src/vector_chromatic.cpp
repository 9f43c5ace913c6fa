#include "specbound/vector_chromatic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "specbound/errors.hpp"
#include "specbound/spectral.hpp"

namespace specbound {

SdpProblem build_sdp1(const Graph& g) {
  const std::size_t n = g.vertex_count();
  SdpProblem p;
  p.objective = SymmetricMatrix::ones(n);
  p.require_nonneg = true;
  p.constraints.push_back({SymmetricMatrix::identity(n), 1.0});
  for (auto [u, v] : g.non_adjacent_pairs()) {
    SymmetricMatrix a(n);
    a.set(u, v, 1.0);
    p.constraints.push_back({std::move(a), 0.0});
  }
  return p;
}

SdpProblem build_sdp2(const Graph& g) {
  const std::size_t n = g.vertex_count();
  SdpProblem p;
  p.objective = SymmetricMatrix::ones(n);
  p.require_nonneg = true;
  p.constraints.push_back(
      {SymmetricMatrix::identity(n) + complement_adjacency_matrix(g), 1.0});
  return p;
}

SymmetricMatrix lift(const SymmetricMatrix& z, const Graph& g, double tol) {
  const std::size_t n = g.vertex_count();
  if (z.size() != n) throw DimensionError("lift: matrix size does not match the graph");
  if (z.min_entry() < -tol) {
    throw ContractError("lift: input has an entry of " + std::to_string(z.min_entry()) +
                        ", below -" + std::to_string(tol));
  }
  SymmetricMatrix out = z.clamped_nonnegative();
  const SymmetricMatrix base = out;
  for (auto [u, v] : g.non_adjacent_pairs()) {
    const double w = base(u, v);
    if (w > 0.0) {
      out.add(u, u, w);
      out.add(v, v, w);
      out.add(u, v, -w);
    }
    out.set(u, v, 0.0);
  }
  return out;
}

Lemma1Check lemma1_oracle(const Graph& g, const SymmetricMatrix& z, double chi_vec, double tol) {
  const std::size_t n = g.vertex_count();
  if (z.size() != n) throw DimensionError("lemma1_oracle: matrix size does not match the graph");
  const double bound = tol * (1.0 + frobenius_norm(z));
  if (z.min_entry() < -bound) {
    throw ContractError("lemma1_oracle: Z has a negative entry " + std::to_string(z.min_entry()));
  }
  const double lambda_min = min_eigenvalue(z);
  if (lambda_min < -bound) {
    throw ContractError("lemma1_oracle: Z has a negative eigenvalue " + std::to_string(lambda_min));
  }
  Lemma1Check out;
  out.lhs = z.sum();
  out.rhs = chi_vec * (z.sum() - inner(adjacency_matrix(g), z));
  out.slack = out.rhs - out.lhs;
  return out;
}

ChiVecResult chi_vec(const Graph& g, const SdpSettings& settings) {
  if (g.vertex_count() == 0) throw ArgumentError("chi_vec: graph has no vertices");
  const SdpProblem sdp1 = build_sdp1(g);
  const SdpProblem sdp2 = build_sdp2(g);
  SdpSolution s1 = solve(sdp1, settings);
  SdpSolution s2 = solve(sdp2, settings);

  ChiVecResult r;
  r.value_sdp1 = s1.value;
  r.value_sdp2 = s2.value;
  r.converged_sdp1 = s1.converged;
  r.converged_sdp2 = s2.converged;
  r.residuals_sdp1 = s1.residuals;
  r.residuals_sdp2 = s2.residuals;
  r.iterations_sdp1 = s1.iterations;
  r.iterations_sdp2 = s2.iterations;
  r.agreement_gap = std::abs(s1.value - s2.value);
  r.lifted = lift(s2.z, g, std::max(settings.tol, 1e-12));
  r.lifted_residuals = compute_residuals(sdp1, r.lifted);
  r.z1 = std::move(s1.z);
  r.z2 = std::move(s2.z);
  return r;
}

}  // namespace specbound
