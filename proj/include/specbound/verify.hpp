#pragma once

#include <string>
#include <vector>

#include "specbound/graph.hpp"
#include "specbound/matrix.hpp"
#include "specbound/sdp.hpp"
#include "specbound/vector_chromatic.hpp"

namespace specbound {

/// Every quantity in the orthogonal-split argument for one (X, Y)
/// orientation, each computed from its definition. Sums over "non-edges" run over ordered
/// non-adjacent pairs including the diagonal.
struct Lemma2Report {
  double xy_product_norm = 0.0;    // ‖XY‖_F
  double offedge_agreement = 0.0;  // max |X_uv − Y_uv| over non-edges
  double d_from_nonedges = 0.0;    // Σ_{uv∉E} X_uv²
  double d_from_edges = 0.0;       // −Σ_{uv∈E} X_uv Y_uv
  double norm_x_sq = 0.0;
  double norm_y_sq = 0.0;
  double cauchy_lhs = 0.0;         // d²
  double cauchy_rhs = 0.0;         // (‖X‖² − d)(‖Y‖² − d)
  double cauchy_sum_lhs = 0.0;     // (‖X‖² + ‖Y‖²) d
  double cauchy_sum_rhs = 0.0;     // ‖X‖² ‖Y‖²
  double mu = 0.0;
  double hypothesis_lhs = 0.0;     // ‖X‖²
  double hypothesis_rhs = 0.0;     // (1 + μ) d
  double conclusion_lhs = 0.0;     // ‖X‖²
  double conclusion_rhs = 0.0;     // μ ‖Y‖²

  bool d_identity_holds = false;
  bool cauchy_holds = false;       // both forms
  bool hypothesis_holds = false;
  bool conclusion_holds = false;

  /// hypothesis ⇒ conclusion, together with the d-identity and
  /// Cauchy–Schwarz checks.
  bool invariants_hold() const noexcept {
    return d_identity_holds && cauchy_holds && (!hypothesis_holds || conclusion_holds);
  }
};

struct Lemma2Tolerances {
  /// d-identity: |d_nonedges − d_edges| <= identity · (1 + ‖X‖² + ‖Y‖²).
  /// Cauchy–Schwarz forms: lhs <= rhs + identity.
  double identity = 1e-8;
  /// Hypothesis: ‖X‖² <= (1 + μ)d + ε with ε = inequality · (1 + ‖X‖² + ‖Y‖²).
  /// The conclusion is then checked against ε · (‖X‖² + ‖Y‖²)/‖X‖², the
  /// slack the algebra propagates.
  double inequality = 1e-8;
  /// PSD hypothesis: λ_min >= −psd · (1 + ‖·‖_F).
  double psd = 1e-8;
};

/// Throws ContractError if X or Y is not PSD within tolerance and
/// DimensionError on size mismatch.
Lemma2Report check_lemma2(const SymmetricMatrix& x, const SymmetricMatrix& y, const Graph& g,
                          double mu, const Lemma2Tolerances& tol = {});

struct ToleranceProfile {
  SdpSettings sdp;
  /// |value_sdp1 − value_sdp2| allowed for certification.
  double agreement = 1e-5;
  /// Certification needs min{s⁺,s⁻} − 2m/χ_vec >= −slack and
  /// min{s⁺,s⁻}·χ_vec − 2m >= −slack·(1 + 2m).
  double slack = 1e-5;
  /// equality_case: |min{s⁺,s⁻} − 2m/χ_vec| <= equality · max(1, 2m/χ_vec).
  double equality = 1e-4;
  /// Lift feasibility per constraint family.
  double lift = 1e-7;
  /// The hypothesis uses the solved χ_vec, so its inequality tolerance is
  /// looser than the purely algebraic identity checks.
  Lemma2Tolerances lemma2{.identity = 1e-8, .inequality = 1e-6, .psd = 1e-8};
};

struct VerificationReport {
  std::string id;
  std::string graph6;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<double> eigenvalues;
  double s_plus = 0.0;
  double s_minus = 0.0;
  double chi_vec = 0.0;       // single-constraint program value
  double chi_vec_sdp1 = 0.0;
  double agreement_gap = 0.0;
  bool sdp_converged = false;
  long sdp_iterations = 0;    // both programs together
  double bound = 0.0;         // 2m / χ_vec
  double slack_main = 0.0;    // min{s⁺,s⁻} − bound
  double scaled_slack = 0.0;  // min{s⁺,s⁻}·χ_vec − 2m
  /// (χ_vec − 1)s⁻ − s⁺ and (χ_vec − 1)s⁺ − s⁻.
  double intermediate_slack = 0.0;
  double intermediate_slack_swapped = 0.0;
  Lemma1Check lemma1_forward;  // Z = A⁺ ∘ A⁺
  Lemma1Check lemma1_swapped;  // Z = A⁻ ∘ A⁻
  SdpResiduals lift_residuals;
  Lemma2Report lemma2_forward;  // X = A⁺, Y = A⁻
  Lemma2Report lemma2_swapped;  // X = A⁻, Y = A⁺
  bool equality_case = false;
  bool certified = false;
  /// Why certification failed; empty when certified.
  std::vector<std::string> failures;
};

/// Runs the full chain of checks on one graph. Non-convergence and failed
/// inequalities produce certified = false with reasons, never an exception;
/// the empty vertex set throws ArgumentError.
VerificationReport check_theorem(const Graph& g, const ToleranceProfile& tol = {},
                                 std::string id = {});

struct NamedGraph {
  std::string id;
  Graph graph;
};

struct SweepSummary {
  std::size_t count = 0;
  std::size_t certified = 0;
  std::size_t equality_cases = 0;
  double min_slack = 0.0;           // over all reports
  double min_relative_slack = 0.0;  // min of scaled_slack / (1 + 2m)
  std::vector<std::size_t> failures;  // input indices, ascending
};

struct SweepResult {
  std::vector<VerificationReport> reports;  // input order
  SweepSummary summary;
};

/// check_theorem over a corpus. With `threads` > 1 graphs are evaluated
/// concurrently; reports are always stored by input index, so the result
/// does not depend on the thread count. Exceptions from a single graph are
/// recorded as a failed report.
SweepResult sweep(const std::vector<NamedGraph>& corpus, const ToleranceProfile& tol = {},
                  unsigned threads = 1);

SweepSummary summarize(const std::vector<VerificationReport>& reports);

}  // namespace specbound
