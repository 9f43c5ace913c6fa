#pragma once

#include <optional>
#include <vector>

#include "specbound/matrix.hpp"

namespace specbound {

/// Eigenpairs of a symmetric matrix. `values` are sorted in descending
/// order and `vectors` holds the matching orthonormal eigenvectors as
/// columns. Within a repeated eigenvalue the individual vectors are only
/// determined up to a rotation of that eigenspace.
struct Eigensystem {
  std::vector<double> values;
  DenseMatrix vectors;
  int sweeps = 0;
};

/// Jacobi sweeps allowed before eigendecompose() gives up.
inline constexpr int kMaxJacobiSweeps = 30;

/// Full eigendecomposition by cyclic Jacobi rotations.
///
/// Rotations continue until the off-diagonal mass is at rounding level. If
/// that does not happen within kMaxJacobiSweeps sweeps, the result is still
/// accepted when the off-diagonal norm is at most tol·‖m‖_F; otherwise a
/// NumericalError carrying the final off-diagonal norm is thrown. The
/// rotation order is fixed, so identical input gives bitwise identical
/// output.
Eigensystem eigendecompose(const SymmetricMatrix& m, double tol = 1e-9);

/// Same contract, but rotations start from mᵀ-conjugation by `guess` (an
/// orthogonal basis, typically the eigenvectors of a nearby matrix). Near a
/// previous solution this needs far fewer sweeps.
Eigensystem eigendecompose(const SymmetricMatrix& m, const DenseMatrix& guess,
                           double tol = 1e-9);

/// V · diag(values) · Vᵀ
SymmetricMatrix reconstruct(const Eigensystem& es);

/// Σ_k weights[k] · v_k v_kᵀ
SymmetricMatrix assemble(const Eigensystem& es, const std::vector<double>& weights);

double min_eigenvalue(const SymmetricMatrix& m);

/// Positive and negative spectral parts of a symmetric matrix, A = A⁺ − A⁻.
struct SpectralSplit {
  std::vector<double> eigenvalues;  // descending
  DenseMatrix eigenvectors;
  SymmetricMatrix a_plus;
  SymmetricMatrix a_minus;
  double s_plus = 0.0;   // Σ λ² over λ > zero_threshold
  double s_minus = 0.0;  // Σ λ² over λ < −zero_threshold
  double zero_threshold = 0.0;
};

/// 1e-9 · n
double default_zero_threshold(std::size_t n);

/// Eigenvalues with |λ| <= zero_threshold belong to neither part. When no
/// threshold is given, default_zero_threshold(n) is used. Throws
/// ArgumentError for a non-positive threshold.
SpectralSplit split(const SymmetricMatrix& a, std::optional<double> zero_threshold = std::nullopt);

}  // namespace specbound
