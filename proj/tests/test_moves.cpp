#include <catch_amalgamated.hpp>

#include "fourcolor/families.hpp"
#include "oracles.hpp"

using namespace fourcolor;

namespace {

ColoredGraph gamma2() { return parse_paper_code(oracle::kGamma2, 4); }

int singular_count(const ColoredGraph& g, Color c) {
  const auto s = three_residue_surfaces(g);
  int n = 0;
  for (std::size_t i = 0; i < s.surfaces[c].size(); ++i) n += s.singular(c, static_cast<int>(i));
  return n;
}

}  // namespace

TEST_CASE("dipoles of small graphs", "[moves]") {
  const auto o2 = ColoredGraph::order_two();
  CHECK(find_dipoles(o2, 1).empty());
  CHECK(find_dipoles(o2, 2).empty());
  CHECK(find_dipoles(o2, 3).empty());

  const auto g = add_dipole(o2, 0, 0, {1, 2, 3});
  CHECK(g.order() == 4);
  CHECK(is_closed(g));
  CHECK(manifold_euler_characteristic(g) == 0);
  // the old and the new pair are both 3-dipoles
  const auto d3 = find_dipoles(g, 3);
  REQUIRE(d3.size() == 2);
  for (const auto& d : d3) {
    CHECK(d.proper);
    CHECK(are_isomorphic(cancel_dipole(g, d).graph, o2));
  }
  CHECK_THROWS_AS(add_dipole(o2, 0, 1, {1, 2}), Error);
}

TEST_CASE("cancel errors", "[moves]") {
  const auto g = gamma2();
  try {
    cancel_dipole(g, Dipole{0, 1, {2}, true});
    FAIL("expected NotADipole");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotADipole);
  }
  CHECK_FALSE(dipole_at(g, 0, 1).has_value());
}

TEST_CASE("proper 1-dipole keeps the boundary", "[moves]") {
  const auto g = gamma2();
  const auto bigger = add_dipole(g, 2, 1, {0});
  const auto d = dipole_at(bigger, g.order(), g.order() + 1);
  REQUIRE(d.has_value());
  CHECK(d->h() == 1);
  CHECK(d->proper);
  const auto back = cancel_dipole(bigger, *d);
  CHECK_FALSE(back.manifold_changed);
  CHECK(boundary_surfaces(back.graph) == boundary_surfaces(g));
  CHECK(boundary_surfaces(bigger) == boundary_surfaces(g));
  CHECK(canonical_code(back.graph) == canonical_code(g));
}

TEST_CASE("improper 1-dipole drills a tunnel", "[moves]") {
  const auto t = surface_times_interval_graph(1, true);
  // the switched 0-edges join the two copies' tori
  const auto sw = edge_switch(t, {0, 0}, t, {0, 0});
  const auto before = boundary_surfaces(sw.graph);
  std::optional<Dipole> improper;
  for (const auto& d : find_dipoles(sw.graph, 1))
    if (!d.proper && d.colors == ColorSet{0}) improper = d;
  REQUIRE(improper.has_value());
  const auto r = cancel_dipole(sw.graph, *improper);
  CHECK(r.manifold_changed);
  const auto after = boundary_surfaces(r.graph);
  CHECK(after.components.size() + 1 == before.components.size());
  int genus_before = 0, genus_after = 0;
  for (const auto& s : before.components) genus_before += s.genus;
  for (const auto& s : after.components) genus_after += s.genus;
  CHECK(genus_after == genus_before);
}

TEST_CASE("adding 3-dipoles lowers the boundary order", "[moves]") {
  const auto g = gamma2();
  REQUIRE(vertex_boundary_order(g, 0) == 3);
  const auto s = three_residue_surfaces(g);
  const Color c = vertex_singular_colors(s, 0).colors().front();
  const auto h = add_dipole(g, 0, c, ColorSet::hat(c));
  CHECK(vertex_boundary_order(h, g.order()) == 2);
  CHECK(vertex_boundary_order(h, g.order() + 1) == 2);
  const auto s2 = three_residue_surfaces(h);
  const Color c2 = vertex_singular_colors(s2, g.order()).colors().front();
  const auto h2 = add_dipole(h, g.order(), c2, ColorSet::hat(c2));
  CHECK(vertex_boundary_order(h2, h.order()) == 1);
  CHECK(boundary_surfaces(h2) == boundary_surfaces(g));
}

TEST_CASE("connected sums", "[moves]") {
  const auto o2 = ColoredGraph::order_two();
  const auto s = connected_sum(o2, 0, o2, 1);
  CHECK(s.kind == SumKind::Sphere);
  CHECK(are_isomorphic(s.graph, o2));

  const auto h1 = handlebody_graph(1, true);
  const auto hs = connected_sum(h1, 0, h1, 0);
  CHECK(hs.kind == SumKind::Boundary);
  CHECK(are_isomorphic(hs.graph, handlebody_graph(2, true)));

  const auto t = surface_times_interval_graph(1, true);
  const auto ts = connected_sum(t, 0, t, 0);
  CHECK(ts.kind == SumKind::DoubleBoundary);
  CHECK(boundary_surfaces(ts.graph).components == std::vector<SurfaceType>(2, SurfaceType::orientable_genus(2)));
}

TEST_CASE("edge switching", "[moves]") {
  const auto h1 = handlebody_graph(1, true);
  const auto sw = edge_switch(h1, {0, 0}, h1, {0, 0});
  CHECK(sw.boundary_sum_color == std::optional<Color>(3));
  CHECK(boundary_surfaces(sw.graph).components == std::vector<SurfaceType>{SurfaceType::orientable_genus(2)});

  const auto g = gamma2();
  const Vertex u1 = 0, w1 = g.neighbor(0, 1);
  Vertex u2 = 1;
  while (u2 == u1 || u2 == w1) ++u2;
  const Vertex w2 = g.neighbor(u2, 1);
  try {
    const auto once = edge_switch(g, {u1, 1}, {u2, 1});
    CHECK(once.graph.neighbor(u1, 1) == u2);
    const auto twice = edge_switch(once.graph, {u1, 1}, {w1, 1});
    CHECK(twice.graph == g);
    CHECK(twice.graph.neighbor(u2, 1) == w2);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::WouldDisconnect);
  }
  CHECK_THROWS_AS(edge_switch(g, {0, 1}, {1, 2}), Error);
}

TEST_CASE("bisection", "[moves]") {
  const auto g = gamma2();
  const auto x = residues(g, {0, 1, 2}).front();
  REQUIRE_FALSE(classify_residue_surface(g, x).is_sphere());
  const auto b = bisection(g, x, 3, 1);
  CHECK(singular_count(b, 3) == singular_count(g, 3) - 1);
  CHECK(singular_count(b, 1) == singular_count(g, 1) + 1);
  // colors 3 and 1 are opposite in (0 3 2 1), so that surface is unchanged
  const CyclicPermutation eps(0, 3, 2, 1);
  CHECK(embedding_surface(b, eps).surface == embedding_surface(g, eps).surface);

  const auto o2 = ColoredGraph::order_two();
  try {
    bisection(o2, residues(o2, {0, 1, 2}).front(), 3, 1);
    FAIL("expected NotSingular");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSingular);
  }
}

TEST_CASE("reducing to two singular colors keeps the regular genus", "[moves]") {
  for (const char* code : {oracle::kGamma1, oracle::kGamma2, oracle::kGamma3, oracle::kGamma4}) {
    const auto g = parse_paper_code(code, 4);
    REQUIRE(singular_colors(g).size() >= 3);
    const auto r = reduce_singular_colors(g);
    CHECK(singular_colors(r).size() <= 2);
    CHECK(regular_genus_rho(r).genus == regular_genus_rho(g).genus);
  }
}

TEST_CASE("dipole round trips on random graphs", "[moves][property]") {
  std::mt19937 rng(17);
  for (int k = 0; k < 60; ++k) {
    const auto g = oracle::random_graph(6, rng);
    const auto code = canonical_code(g);
    for (unsigned mask = 1; mask < 15; ++mask) {
      const ColorSet colors = ColorSet::from_mask(mask);
      const Color outside = colors.complement().colors().front();
      const Vertex v = static_cast<Vertex>(rng() % g.order());
      const auto h = add_dipole(g, v, outside, colors);
      const auto d = dipole_at(h, g.order(), g.order() + 1);
      REQUIRE(d.has_value());
      REQUIRE(d->colors == colors);
      const auto back = cancel_dipole(h, *d);
      REQUIRE(canonical_code(back.graph) == code);
      if (d->proper) {
        REQUIRE(boundary_surfaces(h) == boundary_surfaces(g));
        REQUIRE(manifold_euler_characteristic(h) == manifold_euler_characteristic(g));
        REQUIRE(bipartiteness_class(h) == bipartiteness_class(g));
      }
    }
  }
}

TEST_CASE("connected sum at internal vertices adds euler characteristics", "[moves][property]") {
  std::mt19937 rng(23);
  int checked = 0;
  for (int k = 0; k < 200 && checked < 30; ++k) {
    const auto a = oracle::random_graph(6, rng);
    const auto b = oracle::random_graph(4, rng);
    const auto sa = three_residue_surfaces(a), sb = three_residue_surfaces(b);
    for (Vertex v = 0; v < a.order(); ++v) {
      if (vertex_boundary_order(sa, v) != 0) continue;
      for (Vertex w = 0; w < b.order(); ++w) {
        if (vertex_boundary_order(sb, w) != 0) continue;
        const auto s = connected_sum(a, v, b, w);
        CHECK(s.kind == SumKind::Sphere);
        CHECK(manifold_euler_characteristic(s.graph) ==
              manifold_euler_characteristic(a) + manifold_euler_characteristic(b));
        ++checked;
        break;
      }
      break;
    }
  }
  CHECK(checked > 0);
}
