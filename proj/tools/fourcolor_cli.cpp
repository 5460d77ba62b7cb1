// fourcolor: command-line front end for the 4-colored graph library.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fourcolor/census.hpp"
#include "fourcolor/embeddings.hpp"
#include "fourcolor/families.hpp"
#include "fourcolor/graph.hpp"
#include "fourcolor/heegaard.hpp"
#include "fourcolor/moves.hpp"
#include "fourcolor/pi1.hpp"
#include "fourcolor/surfaces.hpp"

using namespace fourcolor;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputSpec {
  std::string text;
  int paper_p = 0;
};

bool looks_canonical(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos || colon == 0) return false;
  for (std::size_t i = 0; i < colon; ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

ColoredGraph load_graph(const InputSpec& in) {
  if (in.paper_p > 0) return parse_paper_code(in.text, in.paper_p);
  if (looks_canonical(in.text)) return parse_canonical_code(in.text);
  if (std::filesystem::is_regular_file(in.text)) {
    std::ifstream f(in.text);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_graph_text(ss.str());
  }
  throw UsageError("input '" + in.text +
                   "' is not a canonical code or a readable graph file (use --paper-code P for letter codes)");
}

int default_jobs() {
  if (const char* env = std::getenv("FOURCOLOR_JOBS")) {
    const int j = std::atoi(env);
    if (j > 0) return j;
  }
  return 1;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_graph(const ColoredGraph& g) {
  std::cout << "code: " << canonical_text(g) << '\n';
  if (g.order() <= 52 && is_bipartite(g, ColorSet::all()))
    std::cout << "paper code: " << emit_paper_code(g) << " (p=" << g.order() / 2 << ")\n";
  std::cout << format_graph_text(g);
}

void add_input(CLI::App* cmd, InputSpec& in) {
  cmd->add_option("input", in.text, "canonical code, graph file, or letter code with --paper-code")->required();
  cmd->add_option("--paper-code", in.paper_p, "read the input as a bipartite letter code with p letters per color")
      ->check(CLI::Range(1, 26));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants, moves and census of 4-colored graphs representing 3-manifolds"};
  app.require_subcommand(1);

  InputSpec in;

  auto* analyze = app.add_subcommand("analyze", "print the invariant report");
  add_input(analyze, in);

  int vertices = 0;
  std::string cls = "all";
  std::string out_path, resume_path;
  int jobs = default_jobs();
  bool all_orders = false, list_entries = false;
  auto* census = app.add_subcommand("census", "generate the catalogue of contracted graphs without 2-dipoles");
  census->add_option("--vertices", vertices, "number of vertices 2p")->required()->check(CLI::PositiveNumber);
  census->add_option("--class", cls, "which catalogue to list or write")
      ->check(CLI::IsMember({"bipartite", "2bipartite", "3bipartite", "all"}));
  census->add_option("--out", out_path, "write the catalogue file");
  census->add_option("--resume", resume_path, "checkpoint file, resumed when it exists");
  census->add_option("--jobs", jobs, "worker threads (default $FOURCOLOR_JOBS or 1)")->check(CLI::PositiveNumber);
  census->add_flag("--all-orders", all_orders, "tabulate every even order up to --vertices");
  census->add_flag("--list", list_entries, "print the catalogue entries");

  std::string format = "plain";
  bool raw = false;
  int pi_color = -1;
  auto* pi1 = app.add_subcommand("pi1", "presentation and abelianization of the fundamental group");
  add_input(pi1, in);
  bool abelian_only = false;
  pi1->add_option("--format,--export", format, "gap or plain")->check(CLI::IsMember({"gap", "plain"}));
  pi1->add_flag("--abelianize", abelian_only, "print only the abelianization");
  pi1->add_flag("--raw", raw, "skip simplification");
  pi1->add_option("--color", pi_color, "use the c-group of this color")->check(CLI::Range(0, 3));

  auto* genus = app.add_subcommand("genus", "regular embeddings and regular genus");
  add_input(genus, in);

  std::int64_t budget = 1000000;
  auto* complexity = app.add_subcommand("complexity", "modified Heegaard complexity upper bound");
  add_input(complexity, in);
  complexity->add_option("--budget", budget, "maximum reduction pairs per diagram")->check(CLI::PositiveNumber);

  std::vector<int> cancel, add;
  std::string add_colors;
  bool reduce = false;
  auto* moves = app.add_subcommand("moves", "list dipoles or apply a move (vertices are 1-based)");
  add_input(moves, in);
  moves->add_option("--cancel", cancel, "cancel the dipole between two vertices")->expected(2);
  moves->add_option("--add", add, "add a dipole at vertex V whose new edge has color C")->expected(2);
  moves->add_option("--colors", add_colors, "dipole colors for --add, e.g. 12");
  moves->add_flag("--reduce-singular", reduce, "apply bisections until at most two colors are singular");

  std::string kind;
  int fam_genus = 1;
  bool nonorientable = false;
  auto* families = app.add_subcommand("families", "standard graphs of handlebodies and S_g x I");
  families->add_option("--kind", kind, "handlebody or sxi")->required()->check(CLI::IsMember({"handlebody", "sxi"}));
  families->add_option("--genus", fam_genus, "genus g >= 1")->check(CLI::PositiveNumber);
  families->add_flag("--nonorientable", nonorientable, "non-orientable version");

  InputSpec other;
  auto* iso = app.add_subcommand("iso", "test two graphs for color-isomorphism");
  iso->add_option("first", in.text, "first graph")->required();
  iso->add_option("second", other.text, "second graph")->required();
  iso->add_option("--paper-code", in.paper_p, "read both inputs as letter codes with p letters per color")
      ->check(CLI::Range(1, 26));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*analyze) {
      std::cout << invariant_report(load_graph(in));
    } else if (*census) {
      if (vertices % 2 != 0) throw UsageError("--vertices must be even");
      std::vector<CensusStats> table;
      Catalogue last;
      for (int o = all_orders ? 2 : vertices; o <= vertices; o += 2) {
        CensusOptions opt;
        opt.jobs = jobs;
        opt.max_order = std::max(12, vertices);
        if (o == vertices) opt.checkpoint_path = resume_path;
        last = build_catalogue(o, opt);
        table.push_back(last.stats);
      }
      std::vector<CatalogueEntry> selected;
      for (const auto& e : last.entries) {
        const bool keep = cls == "all" || (cls == "bipartite" && e.class_m == 4) ||
                          (cls == "2bipartite" && e.class_m == 2) || (cls == "3bipartite" && e.class_m == 3);
        if (keep) selected.push_back(e);
      }
      std::cout << format_stats_table(table);
      if (list_entries)
        for (const auto& e : selected) std::cout << format_entry(e) << '\n';
      if (!out_path.empty()) write_catalogue(selected, vertices, out_path);
    } else if (*pi1) {
      const auto g = load_graph(in);
      auto p = pi_color >= 0 ? fundamental_group(g, pi_color) : fundamental_group(g);
      if (!raw) p = simplify(p);
      if (!abelian_only) std::cout << export_presentation(p, format == "gap" ? ExportFormat::Gap : ExportFormat::Plain);
      std::cout << "abelianization: " << abelianization(p).to_string() << '\n';
    } else if (*genus) {
      const auto g = load_graph(in);
      for (const auto& e : all_embeddings(g))
        std::cout << e.permutation.to_string() << ": " << e.surface.name() << ", heegaard " << yes_no(e.is_heegaard)
                  << '\n';
      const auto rho = regular_genus_rho(g);
      std::cout << "regular genus: " << rho.genus << '\n';
      std::cout << "boundary genus lower bound: " << boundary_genus_lower_bound(g) << '\n';
    } else if (*complexity) {
      const auto b = modified_complexity_upper_bound(load_graph(in), budget);
      for (const auto& pc : b.pairs)
        std::cout << "pair " << pc.pair.to_string() << "|" << pc.pair.complement().to_string() << ": " << pc.value
                  << " (" << (pc.exhaustive ? "exhaustive" : "sampled") << ", " << pc.evaluated << " reductions)\n";
      std::cout << "upper bound: " << b.value << '\n';
      std::cout << "exhaustive: " << yes_no(b.exhaustive) << '\n';
    } else if (*moves) {
      const auto g = load_graph(in);
      if (!cancel.empty()) {
        const auto d = dipole_at(g, cancel[0] - 1, cancel[1] - 1);
        if (!d) throw Error(ErrorKind::NotADipole, "vertices do not form a dipole");
        const auto r = cancel_dipole(g, *d);
        if (r.manifold_changed) std::cout << "note: improper dipole, the manifold changes\n";
        print_graph(r.graph);
      } else if (!add.empty()) {
        ColorSet colors;
        for (char ch : add_colors) {
          if (ch < '0' || ch > '3') throw UsageError("--colors takes digits 0..3");
          colors = colors.with(ch - '0');
        }
        if (colors.empty()) throw UsageError("--add needs --colors");
        print_graph(add_dipole(g, add[0] - 1, add[1], colors));
      } else if (reduce) {
        print_graph(reduce_singular_colors(g));
      } else {
        for (int h = 1; h <= 3; ++h)
          for (const auto& d : find_dipoles(g, h))
            std::cout << h << "-dipole " << d.v1 + 1 << " " << d.v2 + 1 << " colors " << d.colors.to_string()
                      << (d.proper ? " proper" : " improper") << '\n';
      }
    } else if (*families) {
      const auto g = kind == "handlebody" ? handlebody_graph(fam_genus, !nonorientable)
                                          : surface_times_interval_graph(fam_genus, !nonorientable);
      print_graph(g);
    } else if (*iso) {
      other.paper_p = in.paper_p;
      std::cout << (are_isomorphic(load_graph(in), load_graph(other)) ? "isomorphic" : "non-isomorphic") << '\n';
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
