// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <chrono>
#include <iostream>
#include <map>
#include <sstream>

#include "fourcolor/families.hpp"
#include "fourcolor/heegaard.hpp"
#include "oracles.hpp"

using namespace fourcolor;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream notes;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) notes << "; first failure: ";
      else notes << ", ";
      notes << what;
      ok = false;
    }
  }
};

int failures = 0;

void report(int n, const std::string& title, const Check& c) {
  std::cout << (c.ok ? "[PASS]" : "[FAIL]") << " criterion " << n << ": " << title << c.notes.str() << "\n"
            << std::flush;
  if (!c.ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::map<int, Catalogue> catalogues;

void criterion_table() {
  Check c;
  const std::map<int, std::pair<int, int>> expected = {{2, {0, 0}}, {4, {0, 1}}, {6, {2, 6}}, {8, {4, 90}}, {10, {57, 3967}}};
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& [order, counts] : expected) {
    catalogues[order] = build_catalogue(order);
    const auto& s = catalogues[order].stats;
    c.expect(s.bipartite().total == counts.first, "bipartite count at " + std::to_string(order));
    c.expect(s.two_bipartite().total == counts.second, "2-bipartite count at " + std::to_string(order));
    c.expect(s.three_bipartite().total == 0, "3-bipartite graphs at " + std::to_string(order));
  }
  const auto& s6 = catalogues[6].stats;
  c.expect(s6.bipartite().toric_boundary == 1 && s6.bipartite().connected_boundary == 1, "sub-counts at 6");
  const double t = seconds_since(t0);
  c.expect(t <= 600, "runtime above 10 minutes");
  std::ostringstream title;
  title << "census counts for 2p <= 10 (" << std::fixed;
  title.precision(2);
  title << t << " s)";
  report(1, title.str(), c);
}

void criterion_eight_vertices() {
  Check c;
  std::vector<CanonicalCode> bip;
  for (const auto& e : catalogues[8].entries)
    if (e.class_m == 4) bip.push_back(e.code);
  c.expect(bip.size() == 4, "four bipartite entries");
  const std::array<const char*, 4> codes{oracle::kGamma1, oracle::kGamma2, oracle::kGamma3, oracle::kGamma4};
  const std::array<int, 4> tori{4, 3, 4, 3};
  for (int k = 0; k < 4; ++k) {
    const auto g = parse_paper_code(codes[k], 4);
    const auto code = canonical_code(g);
    c.expect(std::count(bip.begin(), bip.end(), code) == 1, std::string("entry for ") + codes[k]);
    c.expect(boundary_surfaces(g).components == std::vector<SurfaceType>(tori[k], SurfaceType::orientable_genus(1)),
             std::string("boundary of ") + codes[k]);
  }
  const auto s = simplify(fundamental_group(parse_paper_code(oracle::kGamma2, 4)));
  c.expect(s.rank() == 3 && s.relators.size() == 2, "presentation size");
  for (const auto& r : s.relators)
    c.expect(r.size() == 4 && r[0] == -r[2] && r[1] == -r[3] && std::abs(r[0]) != std::abs(r[1]), "commutator relator");
  c.expect(abelianization(s).to_string() == "Z^3", "abelianization Z^3");
  report(2, "eight-vertex bipartite graphs and the three-torus-boundary group", c);
}

void criterion_nonorientable() {
  Check c;
  using Profile = std::vector<SurfaceType>;
  const auto rp2 = SurfaceType::nonorientable_genus(1), klein = SurfaceType::nonorientable_genus(2),
             torus = SurfaceType::orientable_genus(1);
  auto sorted = [](Profile p) {
    std::sort(p.begin(), p.end());
    return p;
  };
  std::multiset<Profile> expected = {
      sorted({rp2, rp2}),       sorted({klein}),
      sorted({klein, klein, klein, klein}), sorted({klein, klein}),
      sorted({klein, rp2, rp2}), sorted({torus, klein, rp2, rp2}),
      sorted({rp2, rp2, rp2, rp2}),
  };
  std::multiset<Profile> found;
  for (int order : {2, 4, 6})
    for (const auto& e : catalogues[order].entries)
      if (!is_orientable(parse_canonical_code(e.code.text))) found.insert(sorted(e.boundary.components));
  c.expect(found.size() == 7, "seven non-orientable entries");
  c.expect(found == expected, "boundary profiles");
  report(3, "non-orientable entries with at most 6 vertices", c);
}

void criterion_families() {
  Check c;
  for (int g = 1; g <= 6; ++g)
    for (bool orientable : {true, false}) {
      const std::string tag = " (g=" + std::to_string(g) + (orientable ? ")" : ", non-orientable)");
      const auto m = surface_times_interval_graph(g, orientable);
      const auto s = orientable ? SurfaceType::orientable_genus(g) : SurfaceType::nonorientable_genus(g);
      c.expect(singular_colors(m) == ColorSet{0, 3}, "product singular colors" + tag);
      c.expect(boundary_surfaces(m).components == std::vector<SurfaceType>(2, s), "product boundary" + tag);
      c.expect(regular_genus_rho(m).genus == g, "product regular genus" + tag);
      c.expect(embedding_surface(m, CyclicPermutation(0, 1, 2, 3)).surface.euler == 3 - m.order() / 2,
               "product embedding euler" + tag);

      const auto h = handlebody_graph(g, orientable);
      const auto hs = orientable ? SurfaceType::orientable_genus(g) : SurfaceType::nonorientable_genus(2 * g);
      c.expect(singular_colors(h).size() == 1, "handlebody singular colors" + tag);
      c.expect(boundary_surfaces(h).components == std::vector<SurfaceType>{hs}, "handlebody boundary" + tag);
    }
  for (bool orientable : {true, false}) {
    const auto h1 = handlebody_graph(1, orientable);
    c.expect(are_isomorphic(connected_sum(h1, 0, h1, 0).graph, handlebody_graph(2, orientable)),
             "connected sum of two solid tori");
  }
  report(4, "handlebody and product families for g <= 6", c);
}

void criterion_properties() {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937 rng(20240601);
  std::size_t graphs = 0;
  for (const auto& [order, cat] : catalogues)
    for (const auto& e : cat.entries) {
      ++graphs;
      const auto g = parse_canonical_code(e.code.text);
      const std::string tag = " for " + e.code.text;
      c.expect(2 * manifold_euler_characteristic(g) == boundary_surfaces(g).euler(), "euler relation" + tag);
      for (const auto& info : all_embeddings(g)) {
        const std::array<Color, 4> eps{info.permutation.at(0), info.permutation.at(1), info.permutation.at(2),
                                       info.permutation.at(3)};
        c.expect(info.surface.euler == oracle::face_traced_euler(g, eps), "face tracing" + tag);
      }
      for (int t = 0; t < 10; ++t) {
        const auto h = oracle::random_recolor(oracle::random_relabel(g, rng), rng);
        c.expect(canonical_code(h) == e.code, "code invariance" + tag);
      }
      for (unsigned mask = 1; mask < 15; ++mask) {
        const auto colors = ColorSet::from_mask(mask);
        const Color outside = colors.complement().colors().front();
        const auto bigger = add_dipole(g, static_cast<Vertex>(rng() % g.order()), outside, colors);
        const auto d = dipole_at(bigger, g.order(), g.order() + 1);
        if (!d) {
          c.expect(false, "dipole not found" + tag);
          continue;
        }
        const auto back = cancel_dipole(bigger, *d);
        c.expect(canonical_code(back.graph) == e.code, "dipole round trip" + tag);
        if (d->proper) {
          c.expect(boundary_surfaces(bigger) == e.boundary, "proper dipole boundary" + tag);
          c.expect(abelianization(fundamental_group(bigger)) == e.abelian, "proper dipole abelianization" + tag);
        }
      }
      if (!c.ok) break;
    }
  const double t = seconds_since(t0);
  c.expect(t <= 1800, "runtime above 30 minutes");
  std::ostringstream title;
  title << "property sweep over " << graphs << " catalogue graphs (" << std::fixed;
  title.precision(2);
  title << t << " s)";
  report(5, title.str(), c);
}

void check_exhaustive_flag(Check& c, const ColoredGraph& g, std::int64_t budget, const std::string& tag) {
  const auto b = modified_complexity_upper_bound(g, budget);
  c.expect(b.value >= 0 && b.value <= g.order(), "bound range" + tag);
  const auto diagrams = all_diagrams(g);
  bool all = true;
  for (int p = 0; p < 3; ++p) {
    const auto ra = enumerate_reductions(diagrams[p], Side::A);
    const auto rb = enumerate_reductions(diagrams[p], Side::B);
    const auto total = static_cast<std::int64_t>(ra.removal_sets.size() * rb.removal_sets.size());
    const bool expected = total <= budget;
    c.expect(b.pairs[p].exhaustive == expected, "exhaustive flag" + tag);
    if (expected) c.expect(b.pairs[p].evaluated == total, "pairs evaluated" + tag);
    all = all && expected;
  }
  c.expect(b.exhaustive == all, "overall exhaustive flag" + tag);
}

void criterion_complexity() {
  Check c;
  c.expect(modified_complexity_upper_bound(ColoredGraph::order_two()).value == 0, "order-two graph");
  for (int g = 1; g <= 4; ++g)
    for (bool orientable : {true, false}) {
      const std::string tag = " (g=" + std::to_string(g) + (orientable ? ")" : ", non-orientable)");
      const auto m = modified_complexity_upper_bound(surface_times_interval_graph(g, orientable));
      c.expect(m.value == 0 && m.exhaustive, "product" + tag);
      const auto h = modified_complexity_upper_bound(handlebody_graph(g, orientable));
      c.expect(h.value == 0 && h.exhaustive, "handlebody" + tag);
    }
  std::size_t graphs = 0;
  for (const auto& [order, cat] : catalogues)
    for (const auto& e : cat.entries) {
      ++graphs;
      check_exhaustive_flag(c, parse_canonical_code(e.code.text), 1000000, " for " + e.code.text);
    }
  // small budgets force sampling on graphs with several reduction pairs
  for (const auto& e : catalogues[8].entries) check_exhaustive_flag(c, parse_canonical_code(e.code.text), 1, " budget 1");
  report(6, "complexity bounds (" + std::to_string(graphs) + " catalogue graphs)", c);
}

}  // namespace

int main() {
  try {
    criterion_table();
    criterion_eight_vertices();
    criterion_nonorientable();
    criterion_families();
    criterion_properties();
    criterion_complexity();
  } catch (const std::exception& e) {
    std::cout << "[FAIL] aborted: " << e.what() << "\n";
    return 1;
  }
  std::cout << (failures ? "acceptance: FAILED\n" : "acceptance: all criteria passed\n");
  return failures ? 1 : 0;
}
