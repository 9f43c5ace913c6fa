#pragma once

#include <cstddef>
#include <vector>

#include "specbound/matrix.hpp"

namespace specbound {

struct AffineConstraint {
  SymmetricMatrix a;
  double b = 0.0;
};

/// maximize ⟨C, Z⟩  s.t.  ⟨A_i, Z⟩ = b_i,  Z ⪰ 0,  and Z ≥ 0 entrywise when
/// require_nonneg is set.
struct SdpProblem {
  SymmetricMatrix objective;
  std::vector<AffineConstraint> constraints;
  bool require_nonneg = false;

  std::size_t dimension() const noexcept { return objective.size(); }
};

/// Throws ArgumentError/DimensionError when the problem is malformed:
/// n = 0, no constraints, mismatched sizes, non-finite data.
void validate(const SdpProblem& p);

/// Feasibility measures of a candidate Z.
struct SdpResiduals {
  double affine = 0.0;  // max_i |⟨A_i, Z⟩ − b_i|
  double psd = 0.0;     // max(0, −λ_min(Z))
  double nonneg = 0.0;  // max(0, −min_uv Z_uv); 0 when nonnegativity is not required
};

SdpResiduals compute_residuals(const SdpProblem& p, const SymmetricMatrix& z);

enum class SdpMethod {
  /// two_set when the problem qualifies, consensus otherwise.
  automatic,
  /// Douglas–Rachford between the PSD cone and a polyhedral set with a
  /// closed-form projection. Requires require_nonneg and constraints that
  /// are either single-entry zero constraints or one constraint ⟨B, Z⟩ = b
  /// with B ≥ 0 entrywise, b > 0.
  two_set,
  /// Consensus over the affine set, the nonnegative orthant and the PSD
  /// cone. Works for any constraint list.
  consensus,
};

struct SdpSettings {
  double tol = 1e-7;
  long max_iter = 200000;
  /// Augmented-Lagrangian penalty ρ, applied after scaling the objective to
  /// unit Frobenius norm.
  double penalty = 10.0;
  /// Over-relaxation factor of the consensus step, in (0, 2).
  double relaxation = 1.6;
  /// Iterations between convergence checks.
  int check_every = 10;
  /// Objective plateau test: accept once ⟨C, z⟩ moved by at most
  /// plateau_factor · tol · (1 + |value|) over plateau_window iterations
  /// (residuals must still be within tol). plateau_factor = 0 disables it.
  long plateau_window = 1000;
  double plateau_factor = 0.01;
  SdpMethod method = SdpMethod::automatic;
};

struct SdpSolution {
  SymmetricMatrix z;
  double value = 0.0;  // ⟨C, z⟩
  SdpResiduals residuals;
  /// ρ·‖Z̄_k − Z̄_{k−1}‖_F at the last check, in scaled units.
  double dual_residual = 0.0;
  long iterations = 0;
  bool converged = false;
  SdpMethod method = SdpMethod::automatic;  // splitting actually used
};

/// Operator-splitting solver (see SdpMethod).
///
/// In the consensus form the objective is handled together with the affine
/// set, and the PSD cone and (optionally) the nonnegative orthant each get
/// a separate copy of Z. Every iteration projects each copy onto its set
/// (project_affine, entrywise clamp, project_psd), averages into the
/// consensus iterate and takes a dual step. The two-set form merges the
/// affine and orthant projections into one closed-form step, which is much
/// faster on the vector chromatic number programs.
///
/// The reported z is the PSD iterate with negative entries clamped to zero
/// when nonnegativity is required. It is declared converged once every
/// residual of z is at most tol and the iterate has stopped moving (dual
/// residual at most tol) or its objective has plateaued (see SdpSettings).
///
/// Starts from Z = I/n; there is no randomness, so identical inputs produce
/// bitwise identical runs. Non-convergence is reported through
/// `converged = false` together with the last iterate.
SdpSolution solve(const SdpProblem& p, const SdpSettings& settings = {});

/// Nearest PSD matrix in Frobenius norm: negative eigenvalues set to zero.
SymmetricMatrix project_psd(const SymmetricMatrix& m);

/// Orthogonal projection onto {Z : ⟨A_i, Z⟩ = b_i}.
///
/// Construction prunes zero and duplicated constraints and factorizes the
/// Gram matrix G_ij = ⟨A_i, A_j⟩ once. Throws ArgumentError when a pruned
/// constraint contradicts a kept one or the Gram matrix is singular.
class AffineProjector {
 public:
  AffineProjector(std::size_t n, const std::vector<AffineConstraint>& constraints);

  SymmetricMatrix project(const SymmetricMatrix& m) const;

  /// Constraints left after pruning.
  std::size_t rank() const noexcept { return rows_.size(); }

  /// max_i |⟨A_i, m⟩ − b_i| over the kept constraints.
  double max_violation(const SymmetricMatrix& m) const;

 private:
  struct Term {
    std::size_t u;
    std::size_t v;
    double weight;  // coefficient of Z_uv, u <= v, in ⟨A, Z⟩
  };
  struct Row {
    std::vector<Term> terms;
    double b;
  };

  double apply(const Row& row, const SymmetricMatrix& m) const;

  std::size_t n_;
  std::vector<Row> rows_;
  std::vector<double> cholesky_;  // lower factor of the Gram matrix, row-major
};

SymmetricMatrix project_affine(const SymmetricMatrix& m,
                               const std::vector<AffineConstraint>& constraints);

}  // namespace specbound
