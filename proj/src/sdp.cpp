#include "specbound/sdp.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "specbound/errors.hpp"
#include "specbound/spectral.hpp"

namespace specbound {

namespace {

// Cold eigendecompositions are interleaved with warm-started ones so that
// rounding drift in the carried basis never accumulates.
constexpr long kColdRestartPeriod = 64;

SymmetricMatrix clip_negative_eigenvalues(const Eigensystem& es) {
  std::vector<double> kept(es.values.size());
  for (std::size_t k = 0; k < kept.size(); ++k) kept[k] = std::max(es.values[k], 0.0);
  return assemble(es, kept);
}

// Projection onto {Z ≥ 0, Z_uv = 0 on a fixed set of positions, ⟨B, Z⟩ = b}
// with B ≥ 0 and b > 0. Entries decouple except through the single
// multiplier τ of the coupling constraint: Z_uv = max(V_uv − τ B_uv, 0),
// where τ is the root of the piecewise-linear, nonincreasing
// φ(τ) = ⟨B, max(V − τB, 0)⟩ − b.
class SeparableProjector {
 public:
  static std::optional<SeparableProjector> detect(const SdpProblem& p) {
    if (!p.require_nonneg) return std::nullopt;
    const std::size_t n = p.dimension();
    SeparableProjector s(n);
    for (const auto& c : p.constraints) {
      std::size_t nonzeros = 0;
      std::size_t at_u = 0;
      std::size_t at_v = 0;
      bool nonnegative = true;
      for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u; v < n; ++v) {
          const double x = c.a(u, v);
          if (x != 0.0) {
            ++nonzeros;
            at_u = u;
            at_v = v;
          }
          if (x < 0.0) nonnegative = false;
        }
      }
      if (nonzeros == 0) {
        if (c.b != 0.0) return std::nullopt;
        continue;
      }
      if (nonzeros == 1 && c.b == 0.0) {
        s.forced_zero_[at_u * n + at_v] = true;
        s.forced_zero_[at_v * n + at_u] = true;
        continue;
      }
      if (s.coupling_ || !nonnegative || !(c.b > 0.0)) return std::nullopt;
      s.coupling_ = &c;
    }
    if (!s.coupling_) return std::nullopt;
    // The coupling constraint must reach at least one free position.
    bool reachable = false;
    for (std::size_t u = 0; u < n && !reachable; ++u)
      for (std::size_t v = u; v < n && !reachable; ++v)
        reachable = !s.forced_zero_[u * n + v] && s.coupling_->a(u, v) > 0.0;
    if (!reachable) return std::nullopt;
    return s;
  }

  SymmetricMatrix project(const SymmetricMatrix& m) const {
    const SymmetricMatrix& b = coupling_->a;
    SymmetricMatrix out(n_);
    struct Breakpoint {
      double tau;     // m_uv / b_uv
      double weight;  // multiplicity · b_uv
      double value;   // m_uv
      double coeff;   // b_uv
    };
    std::vector<Breakpoint> points;
    for (std::size_t u = 0; u < n_; ++u) {
      for (std::size_t v = u; v < n_; ++v) {
        if (forced_zero_[u * n_ + v]) continue;
        const double buv = b(u, v);
        if (buv == 0.0) {
          out.set(u, v, std::max(m(u, v), 0.0));
          continue;
        }
        const double multiplicity = u == v ? 1.0 : 2.0;
        points.push_back({m(u, v) / buv, multiplicity * buv, m(u, v), buv});
      }
    }
    std::sort(points.begin(), points.end(),
              [](const Breakpoint& x, const Breakpoint& y) { return x.tau > y.tau; });
    double linear = 0.0;
    double quadratic = 0.0;
    double tau = 0.0;
    for (std::size_t k = 0; k < points.size(); ++k) {
      linear += points[k].weight * points[k].value;
      quadratic += points[k].weight * points[k].coeff;
      tau = (linear - coupling_->b) / quadratic;
      if (k + 1 == points.size() || tau >= points[k + 1].tau) break;
    }
    for (std::size_t u = 0; u < n_; ++u) {
      for (std::size_t v = u; v < n_; ++v) {
        if (forced_zero_[u * n_ + v] || b(u, v) == 0.0) continue;
        out.set(u, v, std::max(m(u, v) - tau * b(u, v), 0.0));
      }
    }
    return out;
  }

 private:
  explicit SeparableProjector(std::size_t n) : n_(n), forced_zero_(n * n, false) {}

  std::size_t n_;
  std::vector<bool> forced_zero_;
  const AffineConstraint* coupling_ = nullptr;
};

class PsdProjector {
 public:
  SymmetricMatrix operator()(const SymmetricMatrix& m) {
    ++calls_;
    Eigensystem es = (basis_ && calls_ % kColdRestartPeriod != 0) ? eigendecompose(m, *basis_)
                                                                   : eigendecompose(m);
    SymmetricMatrix out = clip_negative_eigenvalues(es);
    basis_ = std::move(es.vectors);
    return out;
  }

 private:
  std::optional<DenseMatrix> basis_;
  long calls_ = 0;
};

void relax(SymmetricMatrix& x, const SymmetricMatrix& anchor, double alpha) {
  x *= alpha;
  x.axpy(1.0 - alpha, anchor);
}

SymmetricMatrix objective_step(const SdpProblem& p, const SdpSettings& settings) {
  SymmetricMatrix step = p.objective;
  const double c_norm = frobenius_norm(p.objective);
  if (c_norm > 0.0) step *= 1.0 / (c_norm * settings.penalty);
  return step;
}

// Convergence bookkeeping shared by both splittings. A run is accepted when
// every residual of the candidate is within tol and either the iterate has
// stopped moving (dual residual <= tol) or the objective has plateaued: it
// moved by at most plateau_factor·tol·(1 + |value|) over the last
// plateau_window iterations. The plateau test covers degenerate instances
// where the iterate keeps sliding along a nearly flat face of the feasible
// set long after the objective has settled.
class ConvergenceMonitor {
 public:
  ConvergenceMonitor(const SdpProblem& p, const SdpSettings& settings)
      : p_(p), settings_(settings) {}

  bool due(long it) const { return it % settings_.check_every == 0 || it == settings_.max_iter; }

  bool check(const SymmetricMatrix& z_next, const SymmetricMatrix& z_prev,
             const SymmetricMatrix& psd_iterate, SdpSolution& sol) {
    sol.dual_residual = settings_.penalty * frobenius_distance(z_next, z_prev);
    SymmetricMatrix candidate = candidate_from(psd_iterate);
    const double value = inner(p_.objective, candidate);
    history_.push_back(value);

    const std::size_t lag = static_cast<std::size_t>(
        std::max<long>(1, settings_.plateau_window / settings_.check_every));
    bool settled = sol.dual_residual <= settings_.tol;
    if (!settled && history_.size() > lag) {
      const double past = history_[history_.size() - 1 - lag];
      settled = std::abs(value - past) <=
                settings_.plateau_factor * settings_.tol * (1.0 + std::abs(value));
    }
    if (!settled) return false;

    const SdpResiduals r = compute_residuals(p_, candidate);
    if (r.affine > settings_.tol || r.psd > settings_.tol || r.nonneg > settings_.tol) return false;
    sol.z = std::move(candidate);
    sol.residuals = r;
    sol.value = value;
    sol.converged = true;
    return true;
  }

  void finish_unconverged(const SymmetricMatrix& psd_iterate, SdpSolution& sol) const {
    sol.z = candidate_from(psd_iterate);
    sol.residuals = compute_residuals(p_, sol.z);
    sol.value = inner(p_.objective, sol.z);
    sol.converged = false;
  }

 private:
  SymmetricMatrix candidate_from(const SymmetricMatrix& psd_iterate) const {
    return p_.require_nonneg ? psd_iterate.clamped_nonnegative() : psd_iterate;
  }

  const SdpProblem& p_;
  const SdpSettings& settings_;
  std::vector<double> history_;
};

// Douglas–Rachford between the PSD cone and the separable polyhedral set
// (objective folded into the polyhedral prox).
SdpSolution solve_two_set(const SdpProblem& p, const SdpSettings& settings,
                          const SeparableProjector& polyhedral) {
  const std::size_t n = p.dimension();
  const SymmetricMatrix step = objective_step(p, settings);
  PsdProjector psd;
  ConvergenceMonitor monitor(p, settings);

  SymmetricMatrix z = SymmetricMatrix::identity(n);
  z *= 1.0 / static_cast<double>(n);
  SymmetricMatrix u(n);

  SdpSolution sol;
  sol.method = SdpMethod::two_set;
  for (long it = 1; it <= settings.max_iter; ++it) {
    SymmetricMatrix x = polyhedral.project(z - u + step);
    relax(x, z, settings.relaxation);
    SymmetricMatrix z_next = psd(x + u);
    u += x;
    u -= z_next;

    sol.iterations = it;
    const bool done = monitor.due(it) && monitor.check(z_next, z, z_next, sol);
    z = std::move(z_next);
    if (done) return sol;
  }
  monitor.finish_unconverged(z, sol);
  return sol;
}

// Consensus over copies of Z constrained to the affine set (with the
// objective), the nonnegative orthant (when required) and the PSD cone.
SdpSolution solve_consensus(const SdpProblem& p, const SdpSettings& settings) {
  const std::size_t n = p.dimension();
  const AffineProjector affine(n, p.constraints);
  const SymmetricMatrix step = objective_step(p, settings);
  const double alpha = settings.relaxation;
  const double blocks = p.require_nonneg ? 3.0 : 2.0;
  PsdProjector psd;
  ConvergenceMonitor monitor(p, settings);

  SymmetricMatrix z = SymmetricMatrix::identity(n);
  z *= 1.0 / static_cast<double>(n);
  SymmetricMatrix u_aff(n), u_nonneg(n), u_psd(n);
  SymmetricMatrix x_psd = z;

  SdpSolution sol;
  sol.method = SdpMethod::consensus;
  for (long it = 1; it <= settings.max_iter; ++it) {
    SymmetricMatrix x_aff = affine.project(z - u_aff + step);
    x_psd = psd(z - u_psd);
    SymmetricMatrix x_nonneg;
    if (p.require_nonneg) x_nonneg = (z - u_nonneg).clamped_nonnegative();

    relax(x_aff, z, alpha);
    SymmetricMatrix x_psd_relaxed = x_psd;
    relax(x_psd_relaxed, z, alpha);
    if (p.require_nonneg) relax(x_nonneg, z, alpha);

    SymmetricMatrix z_next = x_aff + u_aff;
    z_next += x_psd_relaxed;
    z_next += u_psd;
    if (p.require_nonneg) {
      z_next += x_nonneg;
      z_next += u_nonneg;
    }
    z_next *= 1.0 / blocks;

    u_aff += x_aff;
    u_aff -= z_next;
    u_psd += x_psd_relaxed;
    u_psd -= z_next;
    if (p.require_nonneg) {
      u_nonneg += x_nonneg;
      u_nonneg -= z_next;
    }

    sol.iterations = it;
    const bool done = monitor.due(it) && monitor.check(z_next, z, x_psd, sol);
    z = std::move(z_next);
    if (done) return sol;
  }
  monitor.finish_unconverged(x_psd, sol);
  return sol;
}

}  // namespace

void validate(const SdpProblem& p) {
  const std::size_t n = p.dimension();
  if (n == 0) throw ArgumentError("SDP dimension must be at least 1");
  if (p.constraints.empty()) throw ArgumentError("SDP needs at least one affine constraint");
  if (!p.objective.all_finite()) throw ArgumentError("SDP objective has a non-finite entry");
  for (const auto& c : p.constraints) {
    if (c.a.size() != n) throw DimensionError("constraint matrix size differs from objective");
    if (!c.a.all_finite() || !std::isfinite(c.b)) {
      throw ArgumentError("SDP constraint has a non-finite entry");
    }
  }
}

SdpResiduals compute_residuals(const SdpProblem& p, const SymmetricMatrix& z) {
  SdpResiduals r;
  for (const auto& c : p.constraints) r.affine = std::max(r.affine, std::abs(inner(c.a, z) - c.b));
  r.psd = std::max(0.0, -min_eigenvalue(z));
  if (p.require_nonneg) r.nonneg = std::max(0.0, -z.min_entry());
  return r;
}

SymmetricMatrix project_psd(const SymmetricMatrix& m) {
  return clip_negative_eigenvalues(eigendecompose(m));
}

AffineProjector::AffineProjector(std::size_t n, const std::vector<AffineConstraint>& constraints)
    : n_(n) {
  std::vector<const AffineConstraint*> kept;
  for (const auto& c : constraints) {
    if (c.a.size() != n) throw DimensionError("constraint matrix size mismatch");
    if (frobenius_sq(c.a) == 0.0) {
      if (c.b != 0.0) throw ArgumentError("zero constraint matrix with non-zero right-hand side");
      continue;
    }
    const auto same = std::find_if(kept.begin(), kept.end(),
                                   [&](const AffineConstraint* k) { return k->a == c.a; });
    if (same != kept.end()) {
      if ((*same)->b != c.b) throw ArgumentError("duplicate constraint with conflicting right-hand side");
      continue;
    }
    kept.push_back(&c);
  }

  for (const AffineConstraint* c : kept) {
    Row row;
    const double norm = frobenius_norm(c->a);
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u; v < n; ++v) {
        const double x = c->a(u, v);
        if (x != 0.0) row.terms.push_back({u, v, (u == v ? x : 2.0 * x) / norm});
      }
    }
    row.b = c->b / norm;
    rows_.push_back(std::move(row));
  }

  // Gram matrix of the normalized rows: ⟨A_i, A_j⟩ / (‖A_i‖‖A_j‖).
  const std::size_t k = rows_.size();
  std::vector<double> gram(k * k, 0.0);
  std::vector<SymmetricMatrix> dense;
  dense.reserve(k);
  for (const Row& row : rows_) {
    SymmetricMatrix a(n);
    for (const Term& t : row.terms) a.set(t.u, t.v, t.u == t.v ? t.weight : 0.5 * t.weight);
    dense.push_back(std::move(a));
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double g = 0.0;
      // Sparse dot: iterate the shorter row against the other's dense form.
      const Row& r = rows_[i].terms.size() <= rows_[j].terms.size() ? rows_[i] : rows_[j];
      const SymmetricMatrix& other = rows_[i].terms.size() <= rows_[j].terms.size() ? dense[j] : dense[i];
      for (const Term& t : r.terms) g += t.weight * other(t.u, t.v);
      gram[i * k + j] = g;
      gram[j * k + i] = g;
    }
  }

  cholesky_.assign(k * k, 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double s = gram[i * k + j];
      for (std::size_t l = 0; l < j; ++l) s -= cholesky_[i * k + l] * cholesky_[j * k + l];
      if (i == j) {
        if (s <= 1e-12) {
          throw ArgumentError("affine constraints are linearly dependent (Gram pivot " +
                              std::to_string(s) + ")");
        }
        cholesky_[i * k + i] = std::sqrt(s);
      } else {
        cholesky_[i * k + j] = s / cholesky_[j * k + j];
      }
    }
  }
}

double AffineProjector::apply(const Row& row, const SymmetricMatrix& m) const {
  double s = 0.0;
  for (const Term& t : row.terms) s += t.weight * m(t.u, t.v);
  return s;
}

double AffineProjector::max_violation(const SymmetricMatrix& m) const {
  double worst = 0.0;
  for (const Row& row : rows_) worst = std::max(worst, std::abs(apply(row, m) - row.b));
  return worst;
}

SymmetricMatrix AffineProjector::project(const SymmetricMatrix& m) const {
  if (m.size() != n_) throw DimensionError("project_affine: matrix size mismatch");
  const std::size_t k = rows_.size();
  std::vector<double> y(k);
  for (std::size_t i = 0; i < k; ++i) y[i] = rows_[i].b - apply(rows_[i], m);
  for (std::size_t i = 0; i < k; ++i) {
    double s = y[i];
    for (std::size_t l = 0; l < i; ++l) s -= cholesky_[i * k + l] * y[l];
    y[i] = s / cholesky_[i * k + i];
  }
  for (std::size_t i = k; i-- > 0;) {
    double s = y[i];
    for (std::size_t l = i + 1; l < k; ++l) s -= cholesky_[l * k + i] * y[l];
    y[i] = s / cholesky_[i * k + i];
  }

  // m + Σ y_i A_i, where A_i has entry weight at the diagonal and weight/2
  // at each off-diagonal position.
  SymmetricMatrix out = m;
  for (std::size_t i = 0; i < k; ++i) {
    if (y[i] == 0.0) continue;
    for (const Term& t : rows_[i].terms) {
      out.add(t.u, t.v, y[i] * (t.u == t.v ? t.weight : 0.5 * t.weight));
    }
  }
  return out;
}

SymmetricMatrix project_affine(const SymmetricMatrix& m,
                               const std::vector<AffineConstraint>& constraints) {
  return AffineProjector(m.size(), constraints).project(m);
}

SdpSolution solve(const SdpProblem& p, const SdpSettings& settings) {
  validate(p);
  if (!(settings.tol > 0.0)) throw ArgumentError("solve: tol must be positive");
  if (settings.max_iter < 1) throw ArgumentError("solve: max_iter must be at least 1");
  if (!(settings.penalty > 0.0)) throw ArgumentError("solve: penalty must be positive");
  if (!(settings.relaxation > 0.0 && settings.relaxation < 2.0)) {
    throw ArgumentError("solve: relaxation must lie in (0, 2)");
  }
  if (settings.check_every < 1) throw ArgumentError("solve: check_every must be at least 1");
  if (settings.plateau_window < 1 || !(settings.plateau_factor >= 0.0)) {
    throw ArgumentError("solve: invalid plateau settings");
  }

  if (settings.method != SdpMethod::consensus) {
    if (auto separable = SeparableProjector::detect(p)) {
      return solve_two_set(p, settings, *separable);
    }
    if (settings.method == SdpMethod::two_set) {
      throw ArgumentError("solve: problem does not have the separable structure two_set needs");
    }
  }
  return solve_consensus(p, settings);
}

}  // namespace specbound
