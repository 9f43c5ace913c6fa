#include "specbound/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "specbound/errors.hpp"

namespace specbound {

namespace {

// Working state: full symmetric array `a` (row-major) and accumulated
// rotations `v`.
struct Jacobi {
  std::size_t n;
  std::vector<double> a;
  DenseMatrix v;

  double off_norm() const {
    double s = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) s += a[p * n + q] * a[p * n + q];
    return std::sqrt(2.0 * s);
  }

  void rotate(std::size_t p, std::size_t q) {
    const double apq = a[p * n + q];
    const double app = a[p * n + p];
    const double aqq = a[q * n + q];
    const double tau = (aqq - app) / (2.0 * apq);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    for (std::size_t k = 0; k < n; ++k) {
      if (k == p || k == q) continue;
      const double akp = a[k * n + p];
      const double akq = a[k * n + q];
      const double np = c * akp - s * akq;
      const double nq = s * akp + c * akq;
      a[k * n + p] = np;
      a[p * n + k] = np;
      a[k * n + q] = nq;
      a[q * n + k] = nq;
    }
    a[p * n + p] = app - t * apq;
    a[q * n + q] = aqq + t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;

    auto vd = v.data();
    for (std::size_t k = 0; k < n; ++k) {
      const double vkp = vd[k * n + p];
      const double vkq = vd[k * n + q];
      vd[k * n + p] = c * vkp - s * vkq;
      vd[k * n + q] = s * vkp + c * vkq;
    }
  }

  // One cyclic sweep. Returns the number of rotations applied.
  std::size_t sweep() {
    std::size_t rotations = 0;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double app = std::abs(a[p * n + p]);
        const double aqq = std::abs(a[q * n + q]);
        // Negligible relative to both diagonal entries: drop it.
        const double g = 100.0 * std::abs(apq);
        if (app + g == app && aqq + g == aqq) {
          a[p * n + q] = 0.0;
          a[q * n + p] = 0.0;
          continue;
        }
        rotate(p, q);
        ++rotations;
      }
    }
    return rotations;
  }
};

Eigensystem run_jacobi(Jacobi& j, double scale, double tol) {
  if (!(tol > 0.0)) throw ArgumentError("eigendecompose tolerance must be positive");
  const double stop = 1e-15 * scale;
  int sweeps = 0;
  while (sweeps < kMaxJacobiSweeps) {
    if (j.off_norm() <= stop) break;
    ++sweeps;
    if (j.sweep() == 0) break;
  }
  const double off = j.off_norm();
  if (off > stop && off > tol * scale) {
    throw NumericalError("Jacobi eigensolver did not converge after " +
                             std::to_string(kMaxJacobiSweeps) +
                             " sweeps; off-diagonal norm " + std::to_string(off),
                         off);
  }

  const std::size_t n = j.n;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return j.a[x * n + x] > j.a[y * n + y];
  });

  Eigensystem es;
  es.sweeps = sweeps;
  es.values.resize(n);
  es.vectors = DenseMatrix(n);
  for (std::size_t c = 0; c < n; ++c) {
    es.values[c] = j.a[order[c] * n + order[c]];
    for (std::size_t r = 0; r < n; ++r) es.vectors(r, c) = j.v(r, order[c]);
  }
  return es;
}

}  // namespace

Eigensystem eigendecompose(const SymmetricMatrix& m, double tol) {
  if (!m.all_finite()) throw ArgumentError("eigendecompose: non-finite entry");
  Jacobi j{m.size(), std::vector<double>(m.data().begin(), m.data().end()),
           DenseMatrix::identity(m.size())};
  return run_jacobi(j, frobenius_norm(m), tol);
}

Eigensystem eigendecompose(const SymmetricMatrix& m, const DenseMatrix& guess, double tol) {
  if (guess.size() != m.size()) throw DimensionError("eigendecompose: guess basis size mismatch");
  if (!m.all_finite()) throw ArgumentError("eigendecompose: non-finite entry");
  const std::size_t n = m.size();

  // B = Gᵀ M G, symmetrized so the Jacobi array is exactly symmetric.
  DenseMatrix mg(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const double mik = m(i, k);
      if (mik == 0.0) continue;
      for (std::size_t c = 0; c < n; ++c) mg(i, c) += mik * guess(k, c);
    }
  }
  Jacobi j{n, std::vector<double>(n * n, 0.0), guess};
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r; c < n; ++c) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += guess(k, r) * mg(k, c);
      j.a[r * n + c] = s;
      j.a[c * n + r] = s;
    }
  }
  return run_jacobi(j, frobenius_norm(m), tol);
}

SymmetricMatrix assemble(const Eigensystem& es, const std::vector<double>& weights) {
  const std::size_t n = es.vectors.size();
  if (weights.size() != n) throw DimensionError("assemble: one weight per eigenpair required");
  std::vector<std::size_t> active;
  for (std::size_t k = 0; k < n; ++k)
    if (weights[k] != 0.0) active.push_back(k);

  DenseMatrix out(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u; v < n; ++v) {
      double s = 0.0;
      for (std::size_t k : active) s += weights[k] * es.vectors(u, k) * es.vectors(v, k);
      out(u, v) = s;
      out(v, u) = s;
    }
  }
  return SymmetricMatrix::symmetrized(out);
}

SymmetricMatrix reconstruct(const Eigensystem& es) { return assemble(es, es.values); }

double min_eigenvalue(const SymmetricMatrix& m) {
  if (m.size() == 0) return 0.0;
  return eigendecompose(m).values.back();
}

double default_zero_threshold(std::size_t n) { return 1e-9 * static_cast<double>(n); }

SpectralSplit split(const SymmetricMatrix& a, std::optional<double> zero_threshold) {
  const double threshold = zero_threshold.value_or(default_zero_threshold(a.size()));
  if (!(threshold > 0.0)) throw ArgumentError("split: zero threshold must be positive");

  Eigensystem es = eigendecompose(a);
  const std::size_t n = a.size();
  std::vector<double> plus(n, 0.0);
  std::vector<double> minus(n, 0.0);
  SpectralSplit out;
  for (std::size_t k = 0; k < n; ++k) {
    const double lambda = es.values[k];
    if (lambda > threshold) {
      plus[k] = lambda;
      out.s_plus += lambda * lambda;
    } else if (lambda < -threshold) {
      minus[k] = -lambda;
      out.s_minus += lambda * lambda;
    }
  }
  out.a_plus = assemble(es, plus);
  out.a_minus = assemble(es, minus);
  out.zero_threshold = threshold;
  out.eigenvalues = std::move(es.values);
  out.eigenvectors = std::move(es.vectors);
  return out;
}

}  // namespace specbound
