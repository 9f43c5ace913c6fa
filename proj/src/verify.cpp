#include "specbound/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cmath>
#include <exception>
#include <limits>
#include <thread>

#include "specbound/errors.hpp"
#include "specbound/graph6.hpp"
#include "specbound/spectral.hpp"

namespace specbound {

namespace {

void require_psd(const SymmetricMatrix& m, double tol, const char* name) {
  const double lambda_min = min_eigenvalue(m);
  if (lambda_min < -tol * (1.0 + frobenius_norm(m))) {
    throw ContractError(std::string("check_lemma2: ") + name +
                        " is not positive semidefinite (min eigenvalue " +
                        std::to_string(lambda_min) + ")");
  }
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

}  // namespace

Lemma2Report check_lemma2(const SymmetricMatrix& x, const SymmetricMatrix& y, const Graph& g,
                          double mu, const Lemma2Tolerances& tol) {
  const std::size_t n = g.vertex_count();
  if (x.size() != n || y.size() != n) {
    throw DimensionError("check_lemma2: matrix size does not match the graph");
  }
  require_psd(x, tol.psd, "X");
  require_psd(y, tol.psd, "Y");

  Lemma2Report r;
  r.xy_product_norm = frobenius_norm(multiply(x, y));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u != v && g.adjacent(u, v)) continue;
      r.offedge_agreement = std::max(r.offedge_agreement, std::abs(x(u, v) - y(u, v)));
    }
  }
  r.d_from_nonedges = nonedge_sum_sq(x, g);
  r.d_from_edges = -edge_inner(x, y, g);
  r.norm_x_sq = frobenius_sq(x);
  r.norm_y_sq = frobenius_sq(y);

  const double a = r.norm_x_sq;
  const double b = r.norm_y_sq;
  const double d = r.d_from_nonedges;
  r.cauchy_lhs = d * d;
  r.cauchy_rhs = (a - d) * (b - d);
  r.cauchy_sum_lhs = (a + b) * d;
  r.cauchy_sum_rhs = a * b;
  r.mu = mu;
  r.hypothesis_lhs = a;
  r.hypothesis_rhs = (1.0 + mu) * d;
  r.conclusion_lhs = a;
  r.conclusion_rhs = mu * b;

  const double scale = 1.0 + a + b;
  r.d_identity_holds = std::abs(r.d_from_nonedges - r.d_from_edges) <= tol.identity * scale;
  r.cauchy_holds = r.cauchy_lhs <= r.cauchy_rhs + tol.identity &&
                   r.cauchy_sum_lhs <= r.cauchy_sum_rhs + tol.identity;

  const double eps = tol.inequality * scale;
  r.hypothesis_holds = r.hypothesis_lhs <= r.hypothesis_rhs + eps;
  const double propagated = a > 0.0 ? eps * (a + b) / a : eps;
  r.conclusion_holds = r.conclusion_lhs <= r.conclusion_rhs + propagated;
  return r;
}

VerificationReport check_theorem(const Graph& g, const ToleranceProfile& tol, std::string id) {
  if (g.vertex_count() == 0) throw ArgumentError("check_theorem: graph has no vertices");

  VerificationReport r;
  r.id = std::move(id);
  r.graph6 = write_graph6(g);
  r.n = g.vertex_count();
  r.m = g.edge_count();
  const double two_m = 2.0 * static_cast<double>(r.m);
  const double scale = 1.0 + two_m;

  const SpectralSplit sp = split(adjacency_matrix(g));
  r.eigenvalues = sp.eigenvalues;
  r.s_plus = sp.s_plus;
  r.s_minus = sp.s_minus;

  const ChiVecResult chi = chi_vec(g, tol.sdp);
  r.chi_vec = chi.value();
  r.chi_vec_sdp1 = chi.value_sdp1;
  r.agreement_gap = chi.agreement_gap;
  r.sdp_converged = chi.converged();
  r.sdp_iterations = chi.iterations_sdp1 + chi.iterations_sdp2;
  r.lift_residuals = chi.lifted_residuals;

  const double chi_value = r.chi_vec;
  const double smaller = std::min(r.s_plus, r.s_minus);
  r.bound = two_m / chi_value;
  r.slack_main = smaller - r.bound;
  r.scaled_slack = smaller * chi_value - two_m;
  r.intermediate_slack = (chi_value - 1.0) * r.s_minus - r.s_plus;
  r.intermediate_slack_swapped = (chi_value - 1.0) * r.s_plus - r.s_minus;

  r.lemma1_forward = lemma1_oracle(g, hadamard(sp.a_plus, sp.a_plus), chi_value, tol.lemma2.psd);
  r.lemma1_swapped = lemma1_oracle(g, hadamard(sp.a_minus, sp.a_minus), chi_value, tol.lemma2.psd);
  r.lemma2_forward = check_lemma2(sp.a_plus, sp.a_minus, g, chi_value - 1.0, tol.lemma2);
  r.lemma2_swapped = check_lemma2(sp.a_minus, sp.a_plus, g, chi_value - 1.0, tol.lemma2);

  r.equality_case = std::abs(r.slack_main) <= tol.equality * std::max(1.0, r.bound);

  auto& why = r.failures;
  if (!chi.converged_sdp1) why.push_back("SDP (support-constrained) did not converge");
  if (!chi.converged_sdp2) why.push_back("SDP (single-constraint) did not converge");
  if (r.agreement_gap > tol.agreement) {
    why.push_back("formulations disagree by " + fmt(r.agreement_gap));
  }
  if (r.slack_main < -tol.slack) why.push_back("main bound slack " + fmt(r.slack_main));
  if (r.scaled_slack < -tol.slack * scale) {
    why.push_back("cross-multiplied slack " + fmt(r.scaled_slack));
  }
  if (r.intermediate_slack < -tol.slack * scale) {
    why.push_back("s+ <= (chi_vec-1) s- fails by " + fmt(r.intermediate_slack));
  }
  if (r.intermediate_slack_swapped < -tol.slack * scale) {
    why.push_back("s- <= (chi_vec-1) s+ fails by " + fmt(r.intermediate_slack_swapped));
  }
  if (r.lemma1_forward.slack < -tol.slack * scale) {
    why.push_back("inequality <J,Z> <= chi_vec <J-A,Z> fails for Z = A+ o A+");
  }
  if (r.lemma1_swapped.slack < -tol.slack * scale) {
    why.push_back("inequality <J,Z> <= chi_vec <J-A,Z> fails for Z = A- o A-");
  }
  if (!r.lemma2_forward.invariants_hold()) why.push_back("orthogonal-split chain fails for X = A+, Y = A-");
  if (!r.lemma2_swapped.invariants_hold()) why.push_back("orthogonal-split chain fails for X = A-, Y = A+");
  const SdpResiduals& lr = r.lift_residuals;
  if (lr.affine > tol.lift || lr.nonneg > tol.lift || lr.psd > tol.lift) {
    why.push_back("lifted solution infeasible (affine " + fmt(lr.affine) + ", psd " + fmt(lr.psd) +
                  ")");
  }
  r.certified = why.empty();
  return r;
}

SweepSummary summarize(const std::vector<VerificationReport>& reports) {
  SweepSummary s;
  s.count = reports.size();
  s.min_slack = std::numeric_limits<double>::infinity();
  s.min_relative_slack = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    if (r.certified) {
      ++s.certified;
    } else {
      s.failures.push_back(i);
    }
    if (r.equality_case) ++s.equality_cases;
    s.min_slack = std::min(s.min_slack, r.slack_main);
    s.min_relative_slack =
        std::min(s.min_relative_slack, r.scaled_slack / (1.0 + 2.0 * static_cast<double>(r.m)));
  }
  if (reports.empty()) {
    s.min_slack = 0.0;
    s.min_relative_slack = 0.0;
  }
  return s;
}

SweepResult sweep(const std::vector<NamedGraph>& corpus, const ToleranceProfile& tol,
                  unsigned threads) {
  SweepResult out;
  out.reports.resize(corpus.size());

  auto evaluate = [&](std::size_t i) {
    const NamedGraph& item = corpus[i];
    try {
      out.reports[i] = check_theorem(item.graph, tol, item.id);
    } catch (const std::exception& e) {
      VerificationReport failed;
      failed.id = item.id;
      failed.graph6 = write_graph6(item.graph);
      failed.n = item.graph.vertex_count();
      failed.m = item.graph.edge_count();
      failed.failures.push_back(e.what());
      out.reports[i] = std::move(failed);
    }
  };

  if (threads <= 1 || corpus.size() <= 1) {
    for (std::size_t i = 0; i < corpus.size(); ++i) evaluate(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    const unsigned count = std::min<unsigned>(threads, static_cast<unsigned>(corpus.size()));
    for (unsigned t = 0; t < count; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < corpus.size(); i = next++) evaluate(i);
      });
    }
  }
  out.summary = summarize(out.reports);
  return out;
}

}  // namespace specbound
