#include <doctest.h>

#include "lapsep/canonical.hpp"
#include "lapsep/entanglement.hpp"
#include "lapsep/graph_products.hpp"
#include "test_util.hpp"

using namespace lapsep;

TEST_CASE("degree criterion on complete graphs and stars") {
  const DimVector dims{2, 2};
  for (const auto& lab : reduced_labelings(dims)) {
    CHECK_FALSE(degree_criterion_multipartite(
        apply_labeling(complete_graph(4), lab, dims), dims));
    CHECK(degree_criterion_multipartite(apply_labeling(star_graph(4), lab, dims), dims));
  }
}

TEST_CASE("an edge fixed by the partial transpose passes") {
  Graph g(4);
  g.add_edge(0, 1);  // {(1,1),(1,2)}
  CHECK_FALSE(degree_criterion(g, DimVector{2, 2}, Bipartition::factor_vs_rest(0, 2)));
}

TEST_CASE("multipartite degree criterion") {
  const DimVector dims{2, 2, 2};
  CHECK_FALSE(degree_criterion_multipartite(complete_graph(8), dims));
  const auto witness = degree_criterion_multipartite(star_graph(8), dims);
  REQUIRE(witness);
  CHECK(witness->deg_g != witness->deg_pt);
  CHECK_FALSE(degree_criterion_multipartite(Graph(8), dims));  // vacuous pass
}

TEST_CASE("ppt eigenvalue of a product state") {
  const Eigen::MatrixXd rho = Eigen::MatrixXd::Identity(4, 4) / 4.0;
  const double e = ppt_min_eigenvalue(DensityMatrix::from_matrix(rho), DimVector{2, 2},
                                      Bipartition::factor_vs_rest(0, 2));
  CHECK(e == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("ppt eigenvalue of the star matches a direct eigensolve") {
  const DimVector dims{2, 2};
  const DensityMatrix rho = laplacian_density(star_graph(4));
  const double lib =
      ppt_min_eigenvalue(rho, dims, Bipartition::factor_vs_rest(0, 2));

  // Independent route: for C^2 x C^2 the partial transpose swaps exactly the
  // antidiagonal off-block entries (0,3)<->(1,2) and (3,0)<->(2,1).
  Eigen::MatrixXd pt = rho.matrix();
  std::swap(pt(0, 3), pt(1, 2));
  std::swap(pt(3, 0), pt(2, 1));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(pt, Eigen::EigenvaluesOnly);
  CHECK(lib == doctest::Approx(eig.eigenvalues()(0)).epsilon(1e-12));
  CHECK(lib < -1e-10);
}

TEST_CASE("certified product states pass ppt") {
  const std::vector<Graph> factors{complete_graph(2), path_graph(3)};
  const SeparableCertificate cert =
      product_laplacian_certificate(ProductMask::named("strong"), factors);
  const Graph prod = product_chain(ProductMask::named("strong"), factors);
  const DensityMatrix rho = laplacian_density(prod);
  const DimVector dims{2, 3};
  for (int i = 0; i < 2; ++i)
    CHECK(ppt_min_eigenvalue(rho, dims, Bipartition::factor_vs_rest(i, 2)) > -1e-10);
}

TEST_CASE("edge-count sufficiency") {
  CHECK(edge_count_sufficient(complete_graph(6), DimVector{2, 3}));
  const Graph c4 = product_adjacency(ProductMask::named("cartesian"), complete_graph(2),
                                     complete_graph(2));
  CHECK(edge_count_sufficient(c4, DimVector{2, 2}));
  CHECK_FALSE(edge_count_sufficient(star_graph(4), DimVector{2, 2}));
  CHECK_THROWS_AS(edge_count_sufficient(complete_graph(8), DimVector{2, 2, 2}),
                  NotBipartiteDimsError);
}

TEST_CASE("verdict ladder outcomes") {
  CHECK(verdict(complete_graph(4), DimVector{2, 2}).status == Status::Separable);

  const Verdict star = verdict(star_graph(6), DimVector{2, 3});
  CHECK(star.status == Status::Entangled);
  REQUIRE(star.witness);
  CHECK(star.witness->deg_g != star.witness->deg_pt);

  CHECK_THROWS_AS(verdict(Graph(4), DimVector{2, 2}), ZeroTraceError);
}

TEST_CASE("undecided is reachable for two odd factors") {
  // 4-regular circulant on 9 vertices; some labeling passes the degree
  // criterion and PPT but fails the edge-count rule.
  Graph g(9);
  for (int v = 0; v < 9; ++v) {
    g.add_edge(v, (v + 1) % 9);
    g.add_edge(v, (v + 2) % 9);
  }
  const DimVector dims{3, 3};
  bool undecided_found = false;
  for_each_labeling(dims, true, [&](const VertexLabeling& lab) {
    if (verdict(g, dims, lab).status == Status::Undecided) {
      undecided_found = true;
      return false;
    }
    return true;
  });
  CHECK(undecided_found);
}

TEST_CASE("degree failure implies a ppt violation on n=4") {
  const DimVector dims{2, 2};
  for (std::uint64_t bits = 1; bits < 64; ++bits) {
    const Graph g = graph_from_bits(bits, 4);
    const DensityMatrix rho = laplacian_density(g);
    for (int i = 0; i < 2; ++i) {
      const auto split = Bipartition::factor_vs_rest(i, 2);
      if (degree_criterion(g, dims, split))
        CHECK(ppt_min_eigenvalue(rho, dims, split) < 1e-10);
    }
  }
}

TEST_CASE("entangled verdicts never hit certified product graphs") {
  const std::vector<std::pair<std::string, std::vector<Graph>>> cases{
      {"strong", {complete_graph(2), complete_graph(3)}},
      {"cartesian", {complete_graph(2), path_graph(3)}},
      {"tensor", {complete_graph(2), complete_graph(2)}},
  };
  for (const auto& [name, factors] : cases) {
    const ProductMask mask = ProductMask::named(name);
    CHECK_NOTHROW(product_laplacian_certificate(mask, factors));
    std::vector<int> sizes;
    for (const auto& f : factors) sizes.push_back(f.size());
    const Verdict v = verdict(product_chain(mask, factors), DimVector(sizes));
    CHECK(v.status != Status::Entangled);
  }
}
