// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Every check runs at its stated tolerance on the full corpus.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "specbound/cli.hpp"
#include "specbound/coloring.hpp"
#include "specbound/generators.hpp"
#include "specbound/graph6.hpp"
#include "specbound/spectral.hpp"
#include "specbound/vector_chromatic.hpp"
#include "specbound/verify.hpp"
#include "test_support.hpp"

using namespace specbound;

namespace {

// χ_vec(C5), recorded once both formulations and both splittings agreed.
constexpr double kChiVecC5 = 2.236067971;

struct Criterion {
  int number;
  std::string title;
  bool pass = true;
  std::string detail;
  std::vector<std::string> problems;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (problems.size() < 5) problems.push_back(what);
  }
};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

std::vector<NamedGraph> build_corpus() {
  std::vector<NamedGraph> out;
  auto add = [&](const GraphFamily& f) { out.push_back({family_name(f), generate(f)}); };
  for (std::size_t n = 2; n <= 10; ++n) add(family::Complete{n});
  for (std::size_t a = 1; a <= 5; ++a)
    for (std::size_t b = a; b <= 5; ++b) add(family::CompleteBipartite{a, b});
  for (std::size_t n = 1; n <= 12; ++n) add(family::Path{n});
  for (std::size_t n = 3; n <= 12; ++n) add(family::Cycle{n});
  add(family::Kneser{5, 2});
  add(family::Kneser{7, 3});
  for (std::uint64_t s = 0; s < 100; ++s) add(family::Gnp{20, 0.5, s});
  for (std::uint64_t s = 0; s < 50; ++s) add(family::Gnp{30, 0.2, s});
  return out;
}

bool starts_with(const std::string& s, const char* prefix) { return s.rfind(prefix, 0) == 0; }

std::string cli_output(const std::vector<const char*>& args) {
  std::vector<const char*> argv{"specbound"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream parse_out, parse_err;
  const cli::ParsedArgs parsed =
      cli::parse_args(static_cast<int>(argv.size()), argv.data(), parse_out, parse_err);
  if (!parsed.config) return "parse failure: " + parse_err.str();
  std::istringstream in;
  std::ostringstream out, err;
  const int code = cli::run(*parsed.config, in, out, err);
  return "exit=" + std::to_string(code) + "\n" + out.str() + "\n--stderr--\n" + err.str();
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<NamedGraph> corpus = build_corpus();
  std::printf("corpus: %zu graphs\n", corpus.size());
  std::fflush(stdout);

  const SweepResult swept = sweep(corpus);
  std::vector<ChiVecResult> chis;
  chis.reserve(corpus.size());
  for (const auto& item : corpus) chis.push_back(chi_vec(item.graph));

  std::vector<Criterion> results;

  {
    Criterion c{1, "bound min{s+,s-} chi_vec - 2m >= -1e-4 (1+2m) on the corpus"};
    double worst = INFINITY;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const VerificationReport& r = swept.reports[i];
      const double two_m = 2.0 * static_cast<double>(corpus[i].graph.edge_count());
      const double value = std::min(r.s_plus, r.s_minus) * r.chi_vec - two_m;
      const double relative = value / (1.0 + two_m);
      worst = std::min(worst, relative);
      c.require(r.sdp_converged, r.id + ": solver did not converge");
      c.require(value >= -1e-4 * (1.0 + two_m), r.id + ": relative slack " + num(relative));
      c.require(r.certified, r.id + ": not certified");
    }
    c.detail = std::to_string(swept.summary.certified) + "/" + std::to_string(corpus.size()) +
               " certified, worst relative slack " + num(worst);
    results.push_back(c);
  }

  {
    Criterion c{2, "slack 0 within 1e-4 for K_n (n=2..10) and K_{a,b}"};
    std::size_t checked = 0;
    double worst = 0.0;
    for (const auto& r : swept.reports) {
      if (!starts_with(r.id, "complete:") && !starts_with(r.id, "bipartite:")) continue;
      ++checked;
      worst = std::max(worst, std::abs(r.slack_main));
      c.require(std::abs(r.slack_main) <= 1e-4, r.id + ": slack " + num(r.slack_main));
    }
    c.detail = std::to_string(checked) + " graphs, max |slack| " + num(worst);
    results.push_back(c);
  }

  {
    Criterion c{3, "formulations agree within 1e-5; lift feasible within 1e-7, objective within 1e-9"};
    double gap = 0.0, feas = 0.0, obj = 0.0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const ChiVecResult& r = chis[i];
      const std::string& id = corpus[i].id;
      const SdpResiduals lifted = compute_residuals(build_sdp1(corpus[i].graph), r.lifted);
      const double f = std::max({lifted.affine, lifted.psd, lifted.nonneg});
      const double o = std::abs(r.lifted.sum() - r.z2.sum());
      gap = std::max(gap, r.agreement_gap);
      feas = std::max(feas, f);
      obj = std::max(obj, o);
      c.require(r.converged(), id + ": not converged");
      c.require(std::abs(r.value_sdp1 - r.value_sdp2) <= 1e-5, id + ": gap " + num(r.agreement_gap));
      c.require(f <= 1e-7, id + ": lift residual " + num(f));
      c.require(o <= 1e-9, id + ": lift objective drift " + num(o));
    }
    c.detail = "max gap " + num(gap) + ", max lift residual " + num(feas) + ", max objective drift " +
               num(obj);
    results.push_back(c);
  }

  {
    Criterion c{4, "known values: empty 1 +-1e-6, K_n n +-1e-4, C5 pinned"};
    for (std::size_t n = 1; n <= 12; ++n) {
      const double v = chi_vec(generate(family::Empty{n})).value();
      c.require(std::abs(v - 1.0) <= 1e-6, "empty:" + std::to_string(n) + " gives " + num(v));
    }
    for (std::size_t n = 1; n <= 8; ++n) {
      const double v = chi_vec(generate(family::Complete{n})).value();
      c.require(std::abs(v - static_cast<double>(n)) <= 1e-4,
                "complete:" + std::to_string(n) + " gives " + num(v));
    }
    const Graph c5 = generate(family::Cycle{5});
    const ChiVecResult r = chi_vec(c5);
    SdpSettings consensus;
    consensus.method = SdpMethod::consensus;
    const ChiVecResult other = chi_vec(c5, consensus);
    c.require(r.converged() && other.converged(), "C5 solves did not converge");
    c.require(std::abs(r.value_sdp1 - r.value_sdp2) <= 1e-6, "C5 formulations disagree");
    c.require(std::abs(other.value_sdp1 - r.value_sdp2) <= 1e-6 &&
                  std::abs(other.value_sdp2 - r.value_sdp2) <= 1e-6,
              "C5 splittings disagree");
    c.require(std::abs(r.value() - kChiVecC5) <= 1e-6, "C5 drifted from the pinned value");
    char buf[96];
    std::snprintf(buf, sizeof buf, "C5 = %.10f (sdp1 %.10f, pinned %.9f)", r.value(), r.value_sdp1,
                  kChiVecC5);
    c.detail = buf;
    results.push_back(c);
  }

  {
    Criterion c{5, "d-identity within 1e-8 (1+|A|^2) and both Cauchy-Schwarz forms, both orientations"};
    double worst_identity = 0.0, worst_cauchy = -INFINITY;
    for (const auto& r : swept.reports) {
      const double scale = 1.0 + 2.0 * static_cast<double>(r.m);
      for (const Lemma2Report* l : {&r.lemma2_forward, &r.lemma2_swapped}) {
        const double identity = std::abs(l->d_from_nonedges - l->d_from_edges);
        worst_identity = std::max(worst_identity, identity / scale);
        worst_cauchy = std::max({worst_cauchy, l->cauchy_lhs - l->cauchy_rhs,
                                 l->cauchy_sum_lhs - l->cauchy_sum_rhs});
        c.require(identity <= 1e-8 * scale, r.id + ": d-identity off by " + num(identity));
        c.require(l->cauchy_lhs <= l->cauchy_rhs + 1e-8, r.id + ": product form fails");
        c.require(l->cauchy_sum_lhs <= l->cauchy_sum_rhs + 1e-8, r.id + ": sum form fails");
      }
    }
    c.detail = "worst scaled identity error " + num(worst_identity) + ", worst Cauchy-Schwarz excess " +
               num(worst_cauchy);
    results.push_back(c);
  }

  {
    Criterion c{6, "reconstruction <= 1e-9 n |A|, s+ + s- = 2m, |A+ A-| <= 1e-8"};
    double recon = 0.0, sums = 0.0, cross = 0.0;
    for (const auto& item : corpus) {
      const SymmetricMatrix a = adjacency_matrix(item.graph);
      const std::size_t n = a.size();
      const Eigensystem es = eigendecompose(a);
      const SpectralSplit sp = split(a);
      const double two_m = 2.0 * static_cast<double>(item.graph.edge_count());
      const double e = frobenius_distance(reconstruct(es), a);
      const double s = std::abs(sp.s_plus + sp.s_minus - two_m);
      const double x = frobenius_norm(multiply(sp.a_plus, sp.a_minus));
      recon = std::max(recon, e / (n * std::max(frobenius_norm(a), 1e-300)));
      sums = std::max(sums, s / (1.0 + two_m));
      cross = std::max(cross, x);
      c.require(e <= 1e-9 * n * frobenius_norm(a), item.id + ": reconstruction " + num(e));
      c.require(s <= 1e-8 * (1.0 + two_m), item.id + ": s+ + s- off by " + num(s));
      c.require(x <= 1e-8, item.id + ": |A+ A-| = " + num(x));
    }
    c.detail = "max scaled reconstruction " + num(recon) + ", max scaled sum error " + num(sums) +
               ", max |A+A-| " + num(cross);
    results.push_back(c);
  }

  {
    Criterion c{7, "chi_vec <= chi + 1e-5 for corpus graphs with n <= 12"};
    std::size_t checked = 0;
    double worst = -INFINITY;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      if (corpus[i].graph.vertex_count() > 12) continue;
      ++checked;
      const int chi = chromatic_number_bruteforce(corpus[i].graph);
      const double excess = chis[i].value() - chi;
      worst = std::max(worst, excess);
      c.require(excess <= 1e-5, corpus[i].id + ": chi_vec exceeds chi by " + num(excess));
    }
    c.detail = std::to_string(checked) + " graphs, max chi_vec - chi " + num(worst);
    results.push_back(c);
  }

  {
    Criterion c{8, "graph6 round-trip on 1000 random graphs; repeated CLI runs byte-identical"};
    std::mt19937_64 rng(20261014);
    std::uniform_int_distribution<std::size_t> size(0, 90);
    std::uniform_real_distribution<double> density(0.0, 1.0);
    for (int trial = 0; trial < 1000; ++trial) {
      const Graph g = testing::random_graph(size(rng), density(rng), rng);
      const std::string text = write_graph6(g);
      c.require(parse_graph6(text) == g, "decode(encode(g)) != g for " + text);
      c.require(write_graph6(parse_graph6(text)) == text, "encode(decode(s)) != s for " + text);
      if (g.vertex_count() <= 62) c.require(text == testing::naive_graph6(g), "encoder mismatch");
    }
    const std::vector<std::vector<const char*>> runs{
        {"sweep", "--gen", "gnp:20:0.5", "--count", "5", "--no-meta"},
        {"verify", "--gen", "kneser:5:2", "--format", "json", "--no-meta"},
        {"chivec", "--gen", "cycle:7", "--format", "csv", "--no-meta"},
        {"spectrum", "--gen", "bipartite:2:3", "--no-meta"},
        {"sweep", "--gen", "gnp:12:0.3", "--count", "4", "--parallel", "--threads", "2", "--no-meta"},
    };
    for (const auto& args : runs) {
      const std::string first = cli_output(args);
      c.require(first == cli_output(args), std::string(args[0]) + " output differs between runs");
      c.require(starts_with(first, "exit=0"), std::string(args[0]) + " exited nonzero");
    }
    c.detail = "1000 graphs with n in [0, 90], " + std::to_string(runs.size()) + " CLI runs";
    results.push_back(c);
  }

  bool all = true;
  for (const auto& c : results) {
    all = all && c.pass;
    std::printf("%s criterion %d: %s [%s]\n", c.pass ? "PASS" : "FAIL", c.number, c.title.c_str(),
                c.detail.c_str());
    for (const auto& p : c.problems) std::printf("    %s\n", p.c_str());
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s: %zu/%zu criteria passed in %.1f s\n", all ? "ACCEPTED" : "REJECTED",
              static_cast<std::size_t>(std::count_if(results.begin(), results.end(),
                                                     [](const Criterion& c) { return c.pass; })),
              results.size(), seconds);
  return all ? 0 : 1;
}
