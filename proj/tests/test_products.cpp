#include <doctest.h>

#include "lapsep/graph_products.hpp"
#include "test_util.hpp"

using namespace lapsep;

namespace {

// Direct evaluation of the defining conditions for one vertex pair.
bool product_edge_oracle(ProductMask mask, const Graph& g, const Graph& h, int u, int v,
                         int w, int y) {
  if (u == w && v == y) return false;
  const bool uw_adj = g.adjacent(u, w), uw_eq = u == w;
  const bool vy_adj = h.adjacent(v, y), vy_eq = v == y;
  const bool uw_non = !uw_adj && !uw_eq, vy_non = !vy_adj && !vy_eq;
  const bool conditions[8] = {
      uw_adj && vy_adj, uw_adj && vy_eq, uw_adj && vy_non, uw_eq && vy_adj,
      uw_eq && vy_non,  uw_non && vy_adj, uw_non && vy_eq, uw_non && vy_non,
  };
  for (int r = 1; r <= 8; ++r)
    if (mask.contains(r) && conditions[r - 1]) return true;
  return false;
}

}  // namespace

TEST_CASE("named masks") {
  CHECK(ProductMask::named("tensor").bits() == 0b00000001);
  CHECK(ProductMask::named("strong").bits() == 0b00001011);
  CHECK(ProductMask::named("cartesian").bits() == 0b00001010);
  CHECK(ProductMask::named("lexicographic").bits() == 0b00001111);
  CHECK_THROWS_AS(ProductMask::named("modular"), UnknownNameError);
}

TEST_CASE("mask parsing") {
  CHECK(ProductMask::parse("strong") == ProductMask::named("strong"));
  CHECK(ProductMask::parse("R1,R2,R4") == ProductMask::named("strong"));
  CHECK(ProductMask::parse("11") == ProductMask::named("strong"));
  CHECK(ProductMask::parse("255").bits() == 255);
  CHECK(ProductMask::parse("0").bits() == 0);
  CHECK_THROWS_AS(ProductMask::parse("R9"), UnknownNameError);
  CHECK_THROWS_AS(ProductMask::parse("256"), UnknownNameError);
  CHECK(ProductMask::named("strong").to_string() == "R1,R2,R4");
}

TEST_CASE("strong product of complete graphs is complete") {
  CHECK(product_adjacency(ProductMask::named("strong"), complete_graph(2),
                          complete_graph(3)) == complete_graph(6));
}

TEST_CASE("tensor product adjacency is the Kronecker product") {
  std::mt19937_64 rng(71);
  const Graph g = testing::random_graph(3, 0.5, rng);
  const Graph h = testing::random_graph(4, 0.5, rng);
  CHECK(product_adjacency(ProductMask::named("tensor"), g, h).adjacency() ==
        kron(g.adjacency(), h.adjacency()));
}

TEST_CASE("cartesian product of two edges is the 4-cycle") {
  const Graph prod = product_adjacency(ProductMask::named("cartesian"),
                                       complete_graph(2), complete_graph(2));
  for (int u = 0; u < 2; ++u)
    for (int v = 0; v < 2; ++v)
      for (int w = 0; w < 2; ++w)
        for (int y = 0; y < 2; ++y)
          CHECK(prod.adjacent(u * 2 + v, w * 2 + y) ==
                product_edge_oracle(ProductMask::named("cartesian"), complete_graph(2),
                                    complete_graph(2), u, v, w, y));
  CHECK(prod.edge_count() == 4);
  CHECK(prod.degree(0) == 2);
}

TEST_CASE("products match the condition oracle for every mask") {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 8; ++trial) {
    const Graph g = testing::random_graph(3, 0.5, rng);
    const Graph h = testing::random_graph(3, 0.5, rng);
    const ProductMask mask(static_cast<unsigned>(rng() % 256));
    const Graph prod = product_adjacency(mask, g, h);
    for (int u = 0; u < 3; ++u)
      for (int v = 0; v < 3; ++v)
        for (int w = 0; w < 3; ++w)
          for (int y = 0; y < 3; ++y)
            CHECK(prod.adjacent(u * 3 + v, w * 3 + y) ==
                  product_edge_oracle(mask, g, h, u, v, w, y));
  }
}

TEST_CASE("chains") {
  const std::vector<Graph> edges{complete_graph(2), complete_graph(2), complete_graph(2)};
  CHECK(product_chain(ProductMask::named("strong"), edges) == complete_graph(8));

  std::mt19937_64 rng(79);
  const std::vector<Graph> gs{testing::random_graph(2, 0.5, rng),
                              testing::random_graph(3, 0.5, rng),
                              testing::random_graph(2, 0.5, rng)};
  CHECK(product_chain(ProductMask::named("tensor"), gs).adjacency() ==
        kron(kron(gs[0].adjacency(), gs[1].adjacency()), gs[2].adjacency()));

  const std::vector<Graph> pair{gs[0], gs[1]};
  CHECK(product_chain(ProductMask::named("cartesian"), pair) ==
        product_adjacency(ProductMask::named("cartesian"), gs[0], gs[1]));
}

TEST_CASE("complement mask") {
  CHECK(complement_mask(ProductMask::named("strong")).to_string() == "R3,R5,R6,R7,R8");
  CHECK(complement_mask(ProductMask(255)).bits() == 0);

  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 5; ++trial) {
    const Graph g = testing::random_graph(2 + static_cast<int>(rng() % 3), 0.5, rng);
    const Graph h = testing::random_graph(2 + static_cast<int>(rng() % 3), 0.5, rng);
    for (unsigned bits = 0; bits < 256; ++bits) {
      const ProductMask mask(bits);
      CHECK(complement(product_adjacency(mask, g, h)) ==
            product_adjacency(complement_mask(mask), g, h));
    }
  }
}

TEST_CASE("full mask yields the complete graph") {
  CHECK(product_adjacency(ProductMask(255), complete_graph(2), complete_graph(2)) ==
        complete_graph(4));
  std::mt19937_64 rng(89);
  const Graph g = testing::random_graph(3, 0.5, rng);
  const Graph h = testing::random_graph(3, 0.5, rng);
  CHECK(product_adjacency(ProductMask(255), g, h) == complete_graph(9));
}

TEST_CASE("mask linearity over disjoint masks") {
  std::mt19937_64 rng(97);
  const Graph g = testing::random_graph(3, 0.5, rng);
  const Graph h = testing::random_graph(4, 0.5, rng);
  const ProductMask m1(0b00100101), m2(0b01011010);
  const Eigen::MatrixXd sum = product_adjacency(m1, g, h).adjacency() +
                              product_adjacency(m2, g, h).adjacency();
  CHECK(product_adjacency(ProductMask(m1.bits() | m2.bits()), g, h).adjacency() == sum);
}

TEST_CASE("row-sum lemma with absolute values") {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> entry(-1.0, 1.0);
  Eigen::MatrixXd a(3, 3), b(4, 4);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a(i, j) = entry(rng);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) b(i, j) = entry(rng);
  const Eigen::MatrixXd left = row_sum_diag(kron(a, b).cwiseAbs());
  const Eigen::MatrixXd right = kron(row_sum_diag(a.cwiseAbs()), row_sum_diag(b.cwiseAbs()));
  CHECK((left - right).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("certificates for the common products") {
  const SeparableCertificate strong = product_laplacian_certificate(
      ProductMask::named("strong"), {complete_graph(2), complete_graph(3)});
  CHECK(strong.residual < 1e-10);
  CHECK(verify_certificate(strong, laplacian_density(complete_graph(6))).residual <
        1e-10);

  const SeparableCertificate tensor = product_laplacian_certificate(
      ProductMask::named("tensor"), {complete_graph(2), complete_graph(2)});
  CHECK(tensor.residual < 1e-10);

  const SeparableCertificate mixed = product_laplacian_certificate(
      ProductMask::named("tensor"), {complete_graph(2), path_graph(3)});
  CHECK(mixed.residual < 1e-10);
}

TEST_CASE("certificates across a mask sweep") {
  const std::vector<Graph> factors{path_graph(3), complete_graph(2)};
  for (unsigned bits = 0; bits < 256; bits += 7) {  // sampled sweep; full in acceptance
    const ProductMask mask(bits);
    try {
      const SeparableCertificate cert = product_laplacian_certificate(mask, factors);
      CHECK(cert.residual < 1e-10);
      const CertificateCheck check = verify_certificate(
          cert, laplacian_density(product_chain(mask, factors)));
      CHECK(check.min_weight >= -1e-12);
      CHECK(check.weight_sum == doctest::Approx(1.0).epsilon(1e-9));
    } catch (const ZeroTraceError&) {
      CHECK(product_chain(mask, factors).is_trivial());
    }
  }
}

TEST_CASE("three-factor certificate") {
  const std::vector<Graph> factors{complete_graph(2), complete_graph(2),
                                   complete_graph(2)};
  const SeparableCertificate cert =
      product_laplacian_certificate(ProductMask::named("strong"), factors);
  CHECK(cert.residual < 1e-10);
  CHECK(verify_certificate(cert, laplacian_density(complete_graph(8))).residual < 1e-10);
}

TEST_CASE("weighted factors are rejected") {
  Graph weighted(2);
  weighted.add_edge(0, 1, 0.5);
  CHECK_THROWS_AS(
      product_adjacency(ProductMask::named("strong"), weighted, complete_graph(2)),
      NonBinaryWeightsError);
}
