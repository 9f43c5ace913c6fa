#pragma once

#include "specbound/graph.hpp"
#include "specbound/matrix.hpp"
#include "specbound/sdp.hpp"

namespace specbound {

/// maximize ⟨J, Z⟩ s.t. ⟨I, Z⟩ = 1, Z_uv = 0 for every unordered
/// non-adjacent pair, Z ≥ 0, Z ⪰ 0. One affine constraint per
/// non-adjacent pair, each with matrix e_u e_vᵀ + e_v e_uᵀ and b = 0.
SdpProblem build_sdp1(const Graph& g);

/// maximize ⟨J, Z⟩ s.t. ⟨I + Ā, Z⟩ = 1, Z ≥ 0, Z ⪰ 0.
SdpProblem build_sdp2(const Graph& g);

/// Turns a feasible point of the single-constraint program into a feasible
/// point of the support-constrained one with the same ⟨J, ·⟩:
///
///   Z̃ = Z + Σ_{u<v non-adjacent, Z_uv > 0} Z_uv (e_u − e_v)(e_u − e_v)ᵀ
///
/// The pairs are unordered, so each correction moves 2·Z_uv onto the
/// diagonal and ⟨I, Z̃⟩ = ⟨I + Ā, Z⟩. Entries of z in [−tol, 0) are treated
/// as 0; anything more negative throws ContractError. Non-adjacent entries
/// of the result are set to exactly 0.
SymmetricMatrix lift(const SymmetricMatrix& z, const Graph& g, double tol = 1e-7);

struct Lemma1Check {
  double lhs = 0.0;    // ⟨J, Z⟩
  double rhs = 0.0;    // χ_vec · ⟨J − A, Z⟩
  double slack = 0.0;  // rhs − lhs
};

/// Evaluates ⟨J, Z⟩ <= χ_vec ⟨J − A, Z⟩. The inequality is only claimed for
/// Z ≥ 0, Z ⪰ 0: an entry below −tol·(1 + ‖Z‖_F) or an eigenvalue below that
/// bound throws ContractError.
Lemma1Check lemma1_oracle(const Graph& g, const SymmetricMatrix& z, double chi_vec,
                          double tol = 1e-8);

struct ChiVecResult {
  double value_sdp1 = 0.0;
  double value_sdp2 = 0.0;
  SymmetricMatrix z1;
  SymmetricMatrix z2;
  SymmetricMatrix lifted;  // lift(z2)
  double agreement_gap = 0.0;
  bool converged_sdp1 = false;
  bool converged_sdp2 = false;
  SdpResiduals residuals_sdp1;
  SdpResiduals residuals_sdp2;
  /// Feasibility of `lifted` for the support-constrained program.
  SdpResiduals lifted_residuals;
  long iterations_sdp1 = 0;
  long iterations_sdp2 = 0;

  bool converged() const noexcept { return converged_sdp1 && converged_sdp2; }
  /// The reported χ_vec, taken from the single-constraint program.
  double value() const noexcept { return value_sdp2; }
};

/// Solves both programs, lifts the second solution and records agreement.
/// Throws ArgumentError for the empty vertex set.
ChiVecResult chi_vec(const Graph& g, const SdpSettings& settings = {});

}  // namespace specbound
