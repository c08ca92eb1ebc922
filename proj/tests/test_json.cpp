#include <doctest.h>

#include "lapsep/constructions.hpp"
#include "lapsep/graph_products.hpp"
#include "lapsep/json_io.hpp"

using namespace lapsep;

TEST_CASE("labeling json round trip") {
  const DimVector dims{2, 3};
  std::mt19937_64 rng(131);
  const VertexLabeling lab = random_labeling(dims, rng);
  const nlohmann::json j = labeling_to_json(lab, dims);
  CHECK(j.at("dims") == std::vector<int>{2, 3});
  const auto [dims2, lab2] = labeling_from_json(j);
  CHECK(dims2 == dims);
  CHECK(lab2 == lab);

  nlohmann::json bad = j;
  bad["labeling"][0] = bad["labeling"][1];
  CHECK_THROWS_AS(labeling_from_json(bad), DimensionMismatchError);
  CHECK_THROWS_AS(labeling_from_json(nlohmann::json::object()), Error);
}

TEST_CASE("verdict json shape") {
  const nlohmann::json sep = verdict_to_json(verdict(complete_graph(4), DimVector{2, 2}));
  CHECK(sep.at("status") == "Separable");
  CHECK(!sep.contains("witness"));
  CHECK(sep.at("tests").is_array());

  const nlohmann::json ent = verdict_to_json(verdict(star_graph(6), DimVector{2, 3}));
  CHECK(ent.at("status") == "Entangled");
  REQUIRE(ent.contains("witness"));
  for (const char* key : {"vertex", "split", "deg_g", "deg_pt"})
    CHECK(ent.at("witness").contains(key));
  CHECK(ent.at("witness").at("split").contains("left"));
}

TEST_CASE("certificate json shape") {
  const SeparableCertificate cert = product_laplacian_certificate(
      ProductMask::named("strong"), {complete_graph(2), complete_graph(2)});
  const nlohmann::json j = certificate_to_json(cert);
  CHECK(j.at("dims") == std::vector<int>{2, 2});
  CHECK(j.at("terms").is_array());
  CHECK(j.at("terms").size() == cert.terms.size());
  CHECK(j.at("terms")[0].contains("weight"));
  CHECK(j.at("terms")[0].at("factors").size() == 2);
  CHECK(j.at("residual").get<double>() < 1e-10);
  CHECK(j.at("meta").at("mask") == "R1,R2,R4");
}
