#include <catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace fourcolor;

namespace {

ColoredGraph gamma2() { return parse_paper_code(oracle::kGamma2, 4); }

template <typename Fn>
ErrorKind kind_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::BadCode;
}

}  // namespace

TEST_CASE("order-two graph", "[graph]") {
  const auto g = ColoredGraph::from_involutions({std::vector<Vertex>{1, 0}, {1, 0}, {1, 0}, {1, 0}});
  CHECK(g == ColoredGraph::order_two());
  CHECK(g.order() == 2);
}

TEST_CASE("construction errors", "[graph]") {
  CHECK(kind_of([] { ColoredGraph::from_involutions({std::vector<Vertex>{1, 0}, {1, 0}, {1, 0}, {0, 1}}); }) ==
        ErrorKind::FixedPoint);
  CHECK(kind_of([] {
          ColoredGraph::from_rows({{1, 2, 1, 1}, {0, 3, 0, 0}, {3, 0, 3, 3}, {2, 2, 2, 2}});
        }) == ErrorKind::NotInvolution);
  // two copies of the order-two graph
  CHECK(kind_of([] { ColoredGraph::from_rows({{1, 1, 1, 1}, {0, 0, 0, 0}, {3, 3, 3, 3}, {2, 2, 2, 2}}); }) ==
        ErrorKind::Disconnected);
  CHECK(kind_of([] { parse_paper_code("AB", 1); }) == ErrorKind::BadLength);
  CHECK(kind_of([] { parse_paper_code("AAA", 2); }) == ErrorKind::BadLength);
  CHECK(kind_of([] { parse_paper_code("AAB", 1); }) == ErrorKind::NotAPermutation);
}

TEST_CASE("paper codes decode", "[graph]") {
  const auto g = gamma2();
  REQUIRE(g.order() == 8);
  // vertex a is 0; uppercase letters start at 4
  CHECK(g.neighbor(0, 0) == 4);
  CHECK(g.neighbor(0, 1) == 4 + 3);  // D
  CHECK(g.neighbor(0, 2) == 4 + 3);  // D
  CHECK(g.neighbor(0, 3) == 4 + 2);  // C
  CHECK(parse_paper_code(oracle::kGamma1, 4).order() == 8);
}

TEST_CASE("residues against the orbit oracle", "[graph]") {
  const auto o2 = ColoredGraph::order_two();
  const auto r = residues(o2, {0, 1});
  REQUIRE(r.size() == 1);
  CHECK(r.front().size() == 2);

  const auto g = gamma2();
  std::vector<int> sizes;
  for (const auto& x : residues(g, {1, 2})) sizes.push_back(x.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == oracle::orbit_sizes(g, {1, 2}));
  CHECK(sizes == std::vector<int>{2, 6});
  CHECK(residues(g, {1, 2, 3}).size() == 1);
  CHECK(residues(g, {1, 2, 3}).front().size() == 8);
}

TEST_CASE("residue counts", "[graph]") {
  const auto o = residue_counts(ColoredGraph::order_two());
  for (Color i = 0; i < 4; ++i) {
    CHECK(o.hat[i] == 1);
    for (Color j = 0; j < 4; ++j)
      if (i != j) CHECK(o.g(i, j) == 1);
  }
  const auto g = gamma2();
  const auto rc = residue_counts(g);
  CHECK(rc.g(0, 1) == 1);
  CHECK(rc.g(0, 2) == 1);
  CHECK(rc.g(0, 3) == 1);
  CHECK(rc.g(1, 2) == 2);
  CHECK(rc.g(1, 3) == 2);
  CHECK(rc.g(2, 3) == 2);
  for (Color c = 0; c < 4; ++c) CHECK(rc.hat[c] == 1);
  for (Color i = 0; i < 4; ++i)
    for (Color j = i + 1; j < 4; ++j) CHECK(rc.g(i, j) == oracle::orbit_count(g, {i, j}));
}

TEST_CASE("bipartiteness", "[graph]") {
  const auto g = gamma2();
  CHECK(is_bipartite(g, ColorSet::all()));
  CHECK(is_bipartite(g, {1, 3}));
  std::mt19937 rng(7);
  for (int k = 0; k < 20; ++k) {
    const auto r = oracle::random_graph(8, rng);
    for (Color i = 0; i < 4; ++i)
      for (Color j = i + 1; j < 4; ++j) CHECK(is_bipartite(r, {i, j}));
  }
}

TEST_CASE("paper code round trip", "[graph]") {
  for (const char* code : {oracle::kGamma1, oracle::kGamma2, oracle::kGamma3, oracle::kGamma4}) {
    const auto g = parse_paper_code(code, 4);
    const auto text = emit_paper_code(g);
    CHECK(are_isomorphic(parse_paper_code(text, 4), g));
  }
  // vertices 0, 1, 3 span a triangle
  const auto odd = ColoredGraph::from_rows({{1, 1, 2, 3}, {0, 0, 3, 2}, {3, 3, 0, 1}, {2, 2, 1, 0}});
  CHECK_FALSE(is_bipartite(odd, ColorSet::all()));
  CHECK(kind_of([&] { emit_paper_code(odd); }) == ErrorKind::NotBipartite);
}

TEST_CASE("canonical code invariance", "[graph]") {
  std::mt19937 rng(2024);
  for (int order : {4, 6, 8}) {
    for (int k = 0; k < 100; ++k) {
      const auto g = oracle::random_graph(order, rng);
      const auto code = canonical_code(g);
      for (int t = 0; t < 10; ++t) {
        const auto h = oracle::random_recolor(oracle::random_relabel(g, rng), rng);
        REQUIRE(canonical_code(h).text == code.text);
      }
    }
  }
  const auto g = gamma2();
  CHECK(canonical_code(g.recolored({1, 0, 3, 2})) == canonical_code(g));
}

TEST_CASE("canonical code separates and agrees with brute-force isomorphism", "[graph]") {
  const auto g1 = parse_paper_code(oracle::kGamma1, 4);
  const auto g2 = gamma2();
  const auto g3 = parse_paper_code(oracle::kGamma3, 4);
  const auto g4 = parse_paper_code(oracle::kGamma4, 4);
  CHECK(canonical_code(g2) != canonical_code(g4));
  CHECK_FALSE(are_isomorphic(g1, g3));
  CHECK(are_isomorphic(g2, g2.recolored({0, 2, 1, 3})));
  CHECK(are_isomorphic(ColoredGraph::order_two(), ColoredGraph::order_two().relabeled({1, 0})));

  std::mt19937 rng(99);
  for (int k = 0; k < 200; ++k) {
    const auto a = oracle::random_graph(6, rng);
    const auto b = oracle::random_graph(6, rng);
    REQUIRE(are_isomorphic(a, b) == oracle::brute_isomorphic(a, b));
  }
}

TEST_CASE("canonical code text parses back", "[graph]") {
  std::mt19937 rng(5);
  for (int k = 0; k < 50; ++k) {
    const auto g = oracle::random_graph(10, rng);
    const auto code = canonical_code(g);
    const auto h = parse_canonical_code(code.text);
    CHECK(are_isomorphic(g, h));
    CHECK(canonical_code(h).text == code.text);
  }
  CHECK(kind_of([] { parse_canonical_code("4:0#"); }) == ErrorKind::BadCode);
  CHECK(kind_of([] { parse_canonical_code("4:0123"); }) == ErrorKind::BadLength);
}

TEST_CASE("graph text format", "[graph]") {
  const auto g = gamma2();
  CHECK(parse_graph_text(format_graph_text(g)) == g);
  CHECK(format_graph_text(ColoredGraph::order_two()) == "2\n2 1\n2 1\n2 1\n2 1\n");
  CHECK(kind_of([] { parse_graph_text("2\n2 1\n2 1\n"); }) == ErrorKind::CorruptFile);
  CHECK(kind_of([] { parse_graph_text("2\n2 1\n2 1\n2 1\n2 x\n"); }) == ErrorKind::CorruptFile);
  CHECK(kind_of([] { parse_graph_text("2\n2 1\n2 1\n2 1\n1 2\n"); }) == ErrorKind::FixedPoint);
}

TEST_CASE("residues partition the vertices", "[graph][property]") {
  std::mt19937 rng(11);
  for (int k = 0; k < 30; ++k) {
    const auto g = oracle::random_graph(10, rng);
    for (unsigned mask = 1; mask < 16; ++mask) {
      std::vector<int> hits(g.order(), 0);
      for (const auto& r : residues(g, ColorSet::from_mask(mask)))
        for (Vertex v : r.vertices) ++hits[v];
      CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
    }
    for (Color i = 0; i < 4; ++i)
      for (Color j = i + 1; j < 4; ++j)
        for (const auto& r : residues(g, {i, j})) CHECK(r.size() % 2 == 0);
  }
}
