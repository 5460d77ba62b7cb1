#include <catch_amalgamated.hpp>

#include "fourcolor/families.hpp"
#include "oracles.hpp"

using namespace fourcolor;

namespace {

std::array<Color, 4> order_of(const CyclicPermutation& e) { return {e.at(0), e.at(1), e.at(2), e.at(3)}; }

}  // namespace

TEST_CASE("cyclic permutations", "[embeddings]") {
  const auto& all = CyclicPermutation::all();
  CHECK(all[0].to_string() == "(0 1 2 3)");
  CHECK(all[1].to_string() == "(0 2 1 3)");
  CHECK(all[2].to_string() == "(0 1 3 2)");
  CHECK(CyclicPermutation(0, 1, 2, 3) == CyclicPermutation(3, 2, 1, 0));
  CHECK(CyclicPermutation(0, 1, 2, 3).opposite(0) == 2);
  CHECK(CyclicPermutation(0, 1, 2, 3).consecutive(3, 0));
  CHECK_FALSE(CyclicPermutation(0, 1, 2, 3).consecutive(1, 3));
}

TEST_CASE("embedding surfaces", "[embeddings]") {
  const auto o2 = embedding_surface(ColoredGraph::order_two(), CyclicPermutation(0, 1, 2, 3));
  CHECK(o2.surface.is_sphere());

  const auto g2 = parse_paper_code(oracle::kGamma2, 4);
  const auto e = embedding_surface(g2, CyclicPermutation(0, 1, 2, 3));
  CHECK(e.surface == SurfaceType::orientable_genus(2));
  CHECK(e.surface.euler == -2);
  for (int g = 1; g <= 4; ++g)
    CHECK(embedding_surface(surface_times_interval_graph(g, true), CyclicPermutation(0, 1, 2, 3)).surface ==
          SurfaceType::orientable_genus(g));
}

TEST_CASE("regular genus", "[embeddings]") {
  CHECK(regular_genus_rho(ColoredGraph::order_two()).genus == 0);
  const auto g2 = parse_paper_code(oracle::kGamma2, 4);
  const auto r = regular_genus_rho(g2);
  CHECK(r.genus == 2);
  CHECK(r.minimizers.size() == 3);
  for (int g = 1; g <= 4; ++g) CHECK(regular_genus_rho(surface_times_interval_graph(g, true)).genus == g);
}

TEST_CASE("boundary genus lower bound", "[embeddings]") {
  CHECK(boundary_genus_lower_bound(ColoredGraph::order_two()) == 0);
  for (int g = 1; g <= 4; ++g) CHECK(boundary_genus_lower_bound(surface_times_interval_graph(g, true)) == g);
  CHECK(boundary_genus_lower_bound(parse_paper_code(oracle::kGamma2, 4)) == 2);
}

TEST_CASE("heegaard flag", "[embeddings]") {
  // S_g x I: singular colors 0 and 3; 1 and 2 are opposite only in (0 1 3 2)
  const auto t = surface_times_interval_graph(2, true);
  for (const auto& info : all_embeddings(t)) {
    const auto& p = info.permutation;
    CHECK(info.is_heegaard == !p.consecutive(1, 2));
  }
}

TEST_CASE("formula agrees with face tracing", "[embeddings][property]") {
  std::mt19937 rng(41);
  for (int k = 0; k < 300; ++k) {
    const auto g = oracle::random_graph(2 * (1 + k % 7), rng);
    for (const auto& info : all_embeddings(g)) {
      REQUIRE(info.surface.euler == oracle::face_traced_euler(g, order_of(info.permutation)));
      REQUIRE(info.surface.orientable == is_bipartite(g, ColorSet::all()));
    }
    REQUIRE(regular_genus_rho(g).genus >= boundary_genus_lower_bound(g));
  }
}
