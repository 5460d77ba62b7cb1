#include <catch_amalgamated.hpp>

#include "fourcolor/families.hpp"
#include "oracles.hpp"

using namespace fourcolor;

TEST_CASE("handlebodies", "[families]") {
  const auto h1 = handlebody_graph(1, true);
  CHECK(h1.order() == 6);
  CHECK(boundary_surfaces(h1).components == std::vector<SurfaceType>{SurfaceType::orientable_genus(1)});
  CHECK(singular_colors(h1) == ColorSet{3});
  CHECK(boundary_surfaces(handlebody_graph(1, false)).components ==
        std::vector<SurfaceType>{SurfaceType::nonorientable_genus(2)});
  CHECK_THROWS_AS(handlebody_graph(0, true), Error);

  for (int g = 1; g <= 6; ++g)
    for (bool orientable : {true, false}) {
      const auto h = handlebody_graph(g, orientable);
      CAPTURE(g, orientable);
      CHECK(h.order() == 4 * g + 2);
      CHECK(is_contracted(h));
      CHECK(is_orientable(h) == orientable);
      CHECK(manifold_euler_characteristic(h) == 1 - g);
      const auto b = boundary_surfaces(h);
      REQUIRE(b.components.size() == 1);
      CHECK(b.components.front().euler == 2 - 2 * g);
      CHECK(b.components.front().orientable == orientable);
      CHECK(abelianization(simplify(fundamental_group(h))) == AbelianInvariants{g, {}});
    }
}

TEST_CASE("iterated boundary connected sums of solid tori", "[families]") {
  for (bool orientable : {true, false}) {
    const auto h1 = handlebody_graph(1, orientable);
    auto acc = h1;
    for (int g = 2; g <= 6; ++g) {
      const auto s = connected_sum(acc, 0, h1, 0);
      CHECK(s.kind == SumKind::Boundary);
      acc = s.graph;
      const auto h = handlebody_graph(g, orientable);
      if (g == 2) CHECK(are_isomorphic(acc, h));
      CHECK(boundary_surfaces(acc).components == boundary_surfaces(h).components);
      CHECK(abelianization(fundamental_group(acc)) == abelianization(fundamental_group(h)));
    }
  }
}

TEST_CASE("surface times interval", "[families]") {
  const auto t = surface_times_interval_graph(1, true);
  CHECK(t.order() == 6);
  CHECK(boundary_surfaces(t).components == std::vector<SurfaceType>(2, SurfaceType::orientable_genus(1)));
  CHECK(manifold_euler_characteristic(t) == 0);
  CHECK_THROWS_AS(surface_times_interval_graph(0, false), Error);

  for (int g = 1; g <= 6; ++g)
    for (bool orientable : {true, false}) {
      const auto m = surface_times_interval_graph(g, orientable);
      CAPTURE(g, orientable);
      CHECK(m.order() == (orientable ? 2 * (2 * g + 1) : 2 * (g + 1)));
      CHECK(is_contracted(m));
      CHECK(singular_colors(m) == ColorSet{0, 3});
      const auto s = orientable ? SurfaceType::orientable_genus(g) : SurfaceType::nonorientable_genus(g);
      CHECK(boundary_surfaces(m).components == std::vector<SurfaceType>(2, s));
      CHECK(manifold_euler_characteristic(m) == s.euler);
      CHECK(regular_genus_rho(m).genus == g);
      CHECK(embedding_surface(m, CyclicPermutation(0, 1, 2, 3)).surface.euler == 3 - m.order() / 2);
      const auto ab = abelianization(simplify(fundamental_group(m)));
      if (orientable)
        CHECK(ab == AbelianInvariants{2 * g, {}});
      else
        CHECK(ab == AbelianInvariants{g - 1, {2}});
    }
}

TEST_CASE("base surface graphs", "[families]") {
  for (int g = 1; g <= 6; ++g)
    for (bool orientable : {true, false}) {
      const auto rows = surface_base_graph(g, orientable);
      for (std::size_t v = 0; v < rows.size(); ++v) {
        CHECK(rows[v][3] == -1);
        for (Color c = 0; c < 3; ++c) {
          const Vertex w = rows[v][c];
          REQUIRE(w != static_cast<Vertex>(v));
          CHECK(rows[w][c] == static_cast<Vertex>(v));
        }
      }
    }
}

TEST_CASE("small families in the census", "[families]") {
  const auto cat = build_catalogue(4);
  REQUIRE(cat.entries.size() == 1);
  CHECK(cat.entries.front().code == canonical_code(surface_times_interval_graph(1, false)));
  const auto six = build_catalogue(6);
  for (const auto& m : {handlebody_graph(1, true), handlebody_graph(1, false), surface_times_interval_graph(1, true),
                        surface_times_interval_graph(2, false)}) {
    const auto code = canonical_code(m);
    CHECK(std::any_of(six.entries.begin(), six.entries.end(), [&](const CatalogueEntry& e) { return e.code == code; }));
  }
}
