#include <doctest.h>

#include <cmath>
#include <random>

#include "specbound/errors.hpp"
#include "specbound/generators.hpp"
#include "specbound/spectral.hpp"
#include "specbound/vector_chromatic.hpp"
#include "test_support.hpp"

using namespace specbound;
using doctest::Approx;

TEST_CASE("program builders") {
  const Graph p3 = generate(family::Path{3});
  const SdpProblem one = build_sdp1(p3);
  CHECK(one.require_nonneg);
  CHECK(one.objective == SymmetricMatrix::ones(3));
  REQUIRE(one.constraints.size() == 2);  // trace, plus the single non-edge {0,2}
  CHECK(one.constraints[0].a == SymmetricMatrix::identity(3));
  CHECK(one.constraints[0].b == 1.0);
  CHECK(one.constraints[1].a(0, 2) == 1.0);
  CHECK(one.constraints[1].a(2, 0) == 1.0);
  CHECK(one.constraints[1].b == 0.0);
  CHECK(frobenius_sq(one.constraints[1].a) == 2.0);

  const SdpProblem two = build_sdp2(p3);
  REQUIRE(two.constraints.size() == 1);
  CHECK(two.constraints[0].a ==
        SymmetricMatrix::identity(3) + complement_adjacency_matrix(p3));
  CHECK(two.constraints[0].b == 1.0);

  // Without non-edges both programs coincide.
  const Graph k3 = generate(family::Complete{3});
  CHECK(build_sdp1(k3).constraints.size() == 1);
  CHECK(build_sdp1(k3).constraints[0].a == build_sdp2(k3).constraints[0].a);

  const Graph e5 = generate(family::Empty{5});
  CHECK(build_sdp1(e5).constraints.size() == 1 + 10);
}

TEST_CASE("lift: path on three vertices") {
  const Graph p3 = generate(family::Path{3});
  SymmetricMatrix z0 = SymmetricMatrix::ones(3);
  z0 *= 0.2;
  const SymmetricMatrix z = lift(z0, p3);
  const SymmetricMatrix expected{{0.4, 0.2, 0.0}, {0.2, 0.2, 0.2}, {0.0, 0.2, 0.4}};
  CHECK(frobenius_distance(z, expected) < 1e-15);
  CHECK(z(0, 2) == 0.0);
  CHECK(z.sum() == Approx(z0.sum()).epsilon(1e-15));
  CHECK(z.trace() == Approx(1.0));
}

TEST_CASE("lift: identities and contract") {
  const Graph k4 = generate(family::Complete{4});
  std::mt19937_64 rng(4);
  const SymmetricMatrix w = testing::random_psd_nonnegative(4, rng);
  CHECK(lift(w, k4) == w);  // no non-edges

  const Graph e3 = generate(family::Empty{3});
  const SymmetricMatrix d = SymmetricMatrix::identity(3);
  CHECK(lift(d, e3) == d);  // zero off-diagonal entries

  SymmetricMatrix bad = SymmetricMatrix::ones(3);
  bad.set(0, 2, -1e-3);
  CHECK_THROWS_AS(lift(bad, generate(family::Path{3})), ContractError);
  bad.set(0, 2, -1e-9);  // within tolerance: treated as zero
  const SymmetricMatrix ok = lift(bad, generate(family::Path{3}));
  CHECK(ok(0, 2) == 0.0);
  CHECK(ok(0, 0) == 1.0);
  CHECK_THROWS_AS(lift(SymmetricMatrix(2), k4), DimensionError);
}

TEST_CASE("lift: feasibility and objective on random inputs (property)") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 11;
    const Graph g = testing::random_graph(n, 0.4, rng);
    SymmetricMatrix z0 = testing::random_psd_nonnegative(n, rng);
    const SdpProblem two = build_sdp2(g);
    z0 *= 1.0 / inner(two.constraints[0].a, z0);  // feasible for the single-constraint program
    const SymmetricMatrix z = lift(z0, g);
    const SdpResiduals r = compute_residuals(build_sdp1(g), z);
    CHECK(r.affine <= 1e-7);
    CHECK(r.nonneg == 0.0);
    CHECK(r.psd <= 1e-7);
    CHECK(std::abs(z.sum() - z0.sum()) <= 1e-9);
  }
}

TEST_CASE("inequality oracle examples") {
  const Graph k2 = generate(family::Complete{2});
  SymmetricMatrix quarter = SymmetricMatrix::ones(2);
  quarter *= 0.25;  // A⁺ ∘ A⁺ for K2
  const Lemma1Check tight = lemma1_oracle(k2, quarter, 2.0);
  CHECK(tight.lhs == Approx(1.0));
  CHECK(tight.rhs == Approx(1.0));
  CHECK(std::abs(tight.slack) < 1e-15);

  const Graph c5 = generate(family::Cycle{5});
  SymmetricMatrix fifth = SymmetricMatrix::identity(5);
  fifth *= 0.2;
  const Lemma1Check diag = lemma1_oracle(c5, fifth, 2.5);
  CHECK(diag.lhs == Approx(1.0));
  CHECK(diag.slack == Approx(1.5));

  const Lemma1Check zero = lemma1_oracle(c5, SymmetricMatrix(5), 2.5);
  CHECK(zero.lhs == 0.0);
  CHECK(zero.slack == 0.0);

  SymmetricMatrix negative = SymmetricMatrix::identity(2);
  negative.set(0, 1, -0.5);
  CHECK_THROWS_AS(lemma1_oracle(k2, negative, 2.0), ContractError);
  CHECK_THROWS_AS(lemma1_oracle(k2, SymmetricMatrix::ones(2) - 2.0 * SymmetricMatrix::identity(2)
                                        + SymmetricMatrix::ones(2),
                                2.0),
                  ContractError);  // [[0,2],[2,0]] is nonnegative but indefinite
}

TEST_CASE("chi_vec: known values") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const ChiVecResult r = chi_vec(generate(family::Empty{n}));
    CHECK(r.converged());
    CHECK(r.value() == Approx(1.0).epsilon(1e-6));
  }
  for (std::size_t n = 2; n <= 8; ++n) {
    const ChiVecResult r = chi_vec(generate(family::Complete{n}));
    CHECK(r.converged());
    CHECK(std::abs(r.value() - static_cast<double>(n)) <= 1e-4);
    CHECK(std::abs(r.value_sdp1 - static_cast<double>(n)) <= 1e-4);
  }
  for (std::size_t a = 1; a <= 4; ++a)
    for (std::size_t b = a; b <= 4; ++b) {
      const ChiVecResult r = chi_vec(generate(family::CompleteBipartite{a, b}));
      CHECK(r.value() == Approx(2.0).epsilon(1e-6));
    }
  // Odd cycle C5: √5, and Petersen: 5/2.
  CHECK(chi_vec(generate(family::Cycle{5})).value() == Approx(std::sqrt(5.0)).epsilon(1e-6));
  CHECK(chi_vec(generate(family::Kneser{5, 2})).value() == Approx(2.5).epsilon(1e-6));
  CHECK_THROWS_AS(chi_vec(Graph(0)), ArgumentError);
}

TEST_CASE("chi_vec: result invariants on the corpus (property)") {
  for (const auto& item : testing::small_corpus()) {
    CAPTURE(item.id);
    const Graph& g = item.graph;
    const ChiVecResult r = chi_vec(g);
    REQUIRE(r.converged());
    CHECK(r.agreement_gap == Approx(std::abs(r.value_sdp1 - r.value_sdp2)));
    CHECK(r.agreement_gap <= 1e-5);
    CHECK(r.value_sdp1 >= 1.0 - 1e-7);
    if (g.edge_count() > 0) CHECK(r.value_sdp1 >= 2.0 - 1e-7);
    CHECK(r.lifted_residuals.affine <= 1e-7);
    CHECK(r.lifted_residuals.psd <= 1e-7);
    CHECK(r.lifted_residuals.nonneg <= 1e-7);
    CHECK(std::abs(r.lifted.sum() - r.z2.sum()) <= 1e-9);
    for (const auto& [u, v] : g.non_adjacent_pairs()) CHECK(r.lifted(u, v) == 0.0);
  }
}

TEST_CASE("chi_vec: support-constrained optimum never exceeds the relaxed one (property)") {
  // At the default tolerance each value carries an error near 1e-7, the same
  // size as the margin, so both programs are solved more tightly here.
  SdpSettings tight;
  tight.tol = 1e-9;
  for (const auto& item : testing::small_corpus()) {
    CAPTURE(item.id);
    const ChiVecResult r = chi_vec(item.graph, tight);
    REQUIRE(r.converged());
    CHECK(r.value_sdp1 <= r.value_sdp2 + 1e-7);
  }
}

TEST_CASE("chi_vec: monotone under adding edges (property)") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 6; ++trial) {
    const Graph g = testing::random_graph(9, 0.35, rng);
    std::vector<Edge> more = g.edges();
    for (const auto& e : g.non_adjacent_pairs()) {
      if (more.size() >= g.edges().size() + 4) break;
      more.push_back(e);
    }
    const Graph h(9, more);
    CHECK(chi_vec(g).value() <= chi_vec(h).value() + 1e-6);
  }
}

TEST_CASE("inequality oracle battery against solved values (property)") {
  std::mt19937_64 rng(13);
  for (const auto& item : testing::small_corpus()) {
    CAPTURE(item.id);
    const std::size_t n = item.graph.vertex_count();
    const double chi = chi_vec(item.graph).value();
    for (int trial = 0; trial < 20; ++trial) {
      SymmetricMatrix z = testing::random_psd_nonnegative(n, rng);
      z *= 1.0 / z.sum();  // the inequality is homogeneous in Z
      CHECK(lemma1_oracle(item.graph, z, chi).slack >= -1e-6);
    }
    // The optimal point itself makes the inequality tight.
    const ChiVecResult r = chi_vec(item.graph);
    CHECK(std::abs(lemma1_oracle(item.graph, r.lifted, chi).slack) <= 1e-5);
  }
}
