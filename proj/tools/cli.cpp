#include "cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "bergfan/catalog.hpp"
#include "bergfan/error.hpp"
#include "bergfan/fan.hpp"
#include "bergfan/io.hpp"
#include "bergfan/matroid.hpp"
#include "bergfan/moduli.hpp"
#include "suites.hpp"

namespace bergfan::cli {

namespace {

struct GraphInput {
  std::string name;
  std::string edges;
  std::string file;
  int complete = 0;

  void attach(CLI::App* app) {
    auto* g = app->add_option("--graph", name, "Built-in graph name (k4, k4-minus-e25, ..., k<m>)");
    auto* e = app->add_option("--edges", edges, "Inline edge list, e.g. 2-3,2-4,3-4");
    auto* f = app->add_option("--file", file, "Edge-list file");
    auto* c = app->add_option("--complete", complete, "Complete graph on labels 2..m+1")->check(CLI::Range(1, 11));
    g->excludes(e, f, c);
    e->excludes(f, c);
    f->excludes(c);
  }

  [[nodiscard]] bool given() const { return !name.empty() || !edges.empty() || !file.empty() || complete > 0; }

  [[nodiscard]] Graph load() const {
    if (!name.empty()) return named_graph(name);
    if (complete > 0) return Graph::complete_range(2, complete + 1);
    if (!edges.empty()) {
      std::string text = edges;
      for (auto& ch : text) {
        if (ch == ',' || ch == ';') ch = '\n';
      }
      return parse_graph(text);
    }
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw ParseError("cannot read graph file '" + file + "'");
      std::ostringstream buffer;
      buffer << in.rdbuf();
      return parse_graph(buffer.str());
    }
    throw ParseError("a graph is required (--graph, --edges, --file or --complete)");
  }
};

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

std::string edge_names(const Graph& g, EdgeSet s) {
  std::string out = "{";
  bool first = true;
  for (auto i : s.indices()) {
    if (!first) out += ",";
    out += "e" + std::to_string(g.edges()[i].u) + std::to_string(g.edges()[i].v);
    first = false;
  }
  return out + "}";
}

std::vector<std::size_t> flat_census(const std::vector<Flat>& flats) {
  std::vector<std::size_t> out;
  for (const auto& f : flats) {
    if (out.size() <= f.rank()) out.resize(f.rank() + 1, 0);
    ++out[f.rank()];
  }
  return out;
}

std::string fan_text(const Fan& fan) {
  std::ostringstream out;
  out << "rays: " << fan.rays().size() << "\n";
  out << "cones by dimension: " << join(fan.census()) << "\n";
  out << "maximal cones: " << fan.maximal_cones().size() << "\n";
  out << "pure: " << (fan.is_pure() ? "yes" : "no") << "\n";
  return out.str();
}

std::string flats_text(const Graph& g, const std::vector<Flat>& flats) {
  std::ostringstream out;
  for (std::size_t i = 0; i < flats.size(); ++i) {
    out << i << " rank " << flats[i].rank() << " " << edge_names(g, flats[i].base) << "\n";
  }
  return out.str();
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed,
                    const std::string& command) {
  for (const auto* a : allowed) {
    if (format == a) return;
  }
  throw ParseError("format '" + format + "' is not supported by " + command);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graphic matroids, Bergman fans and moduli of tropical curves"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  std::string output;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "dot", "text"}))
      ->capture_default_str();
  app.add_option("-o,--output", output, "Write the document to this file");

  GraphInput input;
  int n = 0;
  int max_vertices = 0;
  int min_vertices = 4;
  int max_n = 7;
  std::string suite;

  auto* flats_cmd = app.add_subcommand("flats", "Flats of the cycle matroid, by rank");
  input.attach(flats_cmd);
  auto* lattice_cmd = app.add_subcommand("lattice", "Lattice of flats (covering relation)");
  input.attach(lattice_cmd);
  auto* fan_cmd = app.add_subcommand("fan", "Bergman fan in the chains-of-flats structure, with balancing");
  input.attach(fan_cmd);
  auto* moduli_cmd = app.add_subcommand("moduli", "Radially aligned moduli fan stable for a graph");
  moduli_cmd->add_option("--n", n, "Number of marked ends")->required()->check(CLI::Range(4, 7));
  input.attach(moduli_cmd);
  auto* project_cmd = app.add_subcommand("project", "Project the Bergman fan of the complete graph onto a subgraph");
  input.attach(project_cmd);
  auto* verify_cmd = app.add_subcommand("verify", "Run an exhaustive verification suite");
  verify_cmd->add_option("suite", suite, "axioms | psi | balancing | theorem")
      ->required()
      ->check(CLI::IsMember({"axioms", "psi", "balancing", "theorem"}));
  verify_cmd->add_option("--max-vertices", max_vertices, "Largest graph size to enumerate");
  verify_cmd->add_option("--min-vertices", min_vertices, "Smallest graph size (theorem suite)")
      ->capture_default_str();
  verify_cmd->add_option("--max-n", max_n, "Largest number of ends (psi suite)")->capture_default_str();
  auto* counts_cmd = app.add_subcommand("counts", "Flat counts by rank and cone counts by dimension");
  input.attach(counts_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }

  std::ostringstream doc;
  int status = kExitOk;
  try {
    if (flats_cmd->parsed()) {
      require_format(format, {"json", "text"}, "flats");
      const Graph g = input.load();
      const auto flats = enumerate_flats(g);
      doc << (format == "json" ? flats_to_json(g, flats) : flats_text(g, flats));
    } else if (lattice_cmd->parsed()) {
      const Graph g = input.load();
      const auto lattice = flats_lattice(g);
      if (format == "json") {
        doc << lattice_to_json(g, lattice);
      } else if (format == "dot") {
        doc << lattice_to_dot(g, lattice);
      } else {
        doc << flats_text(g, lattice.flats);
        for (const auto& [lo, hi] : lattice.covers) doc << lo << " < " << hi << "\n";
      }
    } else if (fan_cmd->parsed()) {
      require_format(format, {"json", "text"}, "fan");
      const Graph g = input.load();
      const Fan fan = bergman_fan(g);
      const auto balance = is_balanced(fan);
      if (format == "json") {
        doc << fan_to_json(fan, balance);
      } else {
        doc << fan_text(fan) << "balanced: " << (balance.balanced ? "yes" : "no") << "\n";
      }
    } else if (moduli_cmd->parsed()) {
      require_format(format, {"json", "text"}, "moduli");
      std::optional<Graph> gamma;
      if (input.given()) gamma = input.load();
      const auto m = moduli_fan_rad(n, gamma);
      if (format == "json") {
        doc << moduli_to_json(m);
      } else {
        doc << "radial types: " << m.radial_types.size() << "\n";
        doc << "complex cones by dimension: " << join(m.complex.census()) << "\n";
        doc << "image cones by dimension: " << join(m.image.census()) << "\n";
        doc << "bijective: " << (m.bijective() ? "yes" : "no") << "\n";
        doc << "identified with B'(Gamma): " << (m.identified() ? "yes" : "no") << "\n";
      }
    } else if (project_cmd->parsed()) {
      require_format(format, {"json", "text"}, "project");
      const Graph gamma = input.load();
      const Fan image = project_fan(bergman_fan(Graph::complete(gamma.labels())), gamma);
      if (format == "json") {
        doc << fan_to_json(image);
      } else {
        doc << fan_text(image) << "equals B'(Gamma): " << (fans_equal(image, bergman_fan(gamma)) ? "yes" : "no")
            << "\n";
      }
    } else if (verify_cmd->parsed()) {
      require_format(format, {"text"}, "verify");
      SuiteResult result;
      if (suite == "axioms") {
        result = verify_axioms(max_vertices == 0 ? 5 : max_vertices);
      } else if (suite == "psi") {
        result = verify_psi(max_n);
      } else if (suite == "balancing") {
        result = verify_balancing(max_vertices == 0 ? 5 : max_vertices);
      } else {
        result = verify_theorem(min_vertices, max_vertices == 0 ? 5 : max_vertices);
      }
      for (const auto& line : result.lines) doc << line << "\n";
      doc << suite << ": " << (result.ok ? "ok" : "FAILED") << "\n";
      if (!result.ok) status = kExitVerificationFailed;
    } else if (counts_cmd->parsed()) {
      require_format(format, {"text"}, "counts");
      const Graph g = input.load();
      doc << "flats: " << join(flat_census(enumerate_flats(g))) << "\n";
      doc << "cones: " << join(bergman_fan(g).census()) << "\n";
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }

  if (output.empty()) {
    out << doc.str();
  } else {
    std::ofstream file(output);
    if (!file) {
      err << "error: cannot write '" << output << "'\n";
      return kExitBadInput;
    }
    file << doc.str();
  }
  return status;
}

}  // namespace bergfan::cli
