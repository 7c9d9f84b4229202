#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <sstream>

#include "sphereint/errors.hpp"
#include "sphereint/model_graph.hpp"
#include "sphereint/normal_sphere.hpp"
#include "sphereint/sides.hpp"
#include "sphereint/sphere_complex.hpp"

namespace sphereint::cli {

namespace {

struct Options {
  std::string graph;
  std::string sphere_a;
  std::string sphere_b;
  std::string translate;
  std::string edge;
  std::string out;
  std::string format = "json";
  std::string style = "theta-chain";
  int rank = 2;
  int max_circles = 2;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string graph_dot(const ModelGraph& g) {
  std::ostringstream out;
  out << "graph model {\n";
  for (int p = 0; p < g.pants_count(); ++p) out << "  \"" << g.pants_name(p) << "\";\n";
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.edge_darts(e);
    out << "  \"" << g.pants_name(g.vertex_of(a)) << "\" -- \"" << g.pants_name(g.vertex_of(b))
        << "\" [label=\"" << g.dart_name(a) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string document(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

class Runner {
 public:
  explicit Runner(const Options& o) : o_(o) {}

  std::string graph_gen() const {
    auto style = parse_style(o_.style);
    if (!style) throw UsageError("unknown style '" + o_.style + "'");
    const ModelGraph g = ModelGraph::standard(o_.rank, *style);
    return o_.format == "dot" ? graph_dot(g) : serialize(g);
  }

  std::string graph_check() const {
    const ModelGraph g = graph();
    if (o_.format == "dot") return graph_dot(g);
    return document({{"valid", true},
                     {"rank", g.rank()},
                     {"pants", g.pants_count()},
                     {"spheres", g.edge_count()}});
  }

  std::string sphere_check() const {
    const ModelGraph g = graph();
    const NormalSphere s = sphere(g, o_.sphere_a);
    return document({{"valid", true},
                     {"system", s.is_system()},
                     {"circles", s.circles().size()},
                     {"disks", s.disk_count()},
                     {"cylinders", s.cylinder_count()},
                     {"pants_pieces", s.pants_piece_count()},
                     {"embedded", is_self_disjoint(g, s)},
                     {"canonical", to_json(g, canonical_rep(g, s))}});
  }

  std::string cross() const {
    const ModelGraph g = graph();
    const NormalSphere a = sphere(g, o_.sphere_a);
    NormalSphere b = sphere(g, o_.sphere_b);
    if (!o_.translate.empty()) b = translate(g, b, parse_deck_word(g, o_.translate));
    return document(to_json(g, crossing(g, a, b)));
  }

  std::string intersect() const {
    const ModelGraph g = graph();
    const NormalSphere a = sphere(g, o_.sphere_a);
    const NormalSphere b = sphere(g, o_.sphere_b);
    return document(to_json(g, algebraic_intersection(g, a, b)));
  }

  std::string theorem() const {
    const ModelGraph g = graph();
    const SphereClass a = SphereClass::of(g, sphere(g, o_.sphere_a));
    std::vector<EdgeIndex> edges;
    if (!o_.edge.empty()) {
      auto e = g.find_edge(o_.edge);
      if (!e) throw Error(ErrorKind::ForeignVertex, "unknown edge '" + o_.edge + "'");
      edges.push_back(*e);
    } else {
      for (EdgeIndex e = 0; e < g.edge_count(); ++e) edges.push_back(e);
    }
    nlohmann::json rows = nlohmann::json::array();
    bool all = true;
    for (EdgeIndex e : edges) {
      const EdgeCheck row = theorem_row(g, a, e);
      all = all && row.equal();
      rows.push_back({{"edge", g.edge_name(e)},
                      {"circles", row.circles},
                      {"algebraic", row.algebraic},
                      {"equal", row.equal()}});
    }
    return document({{"rows", rows}, {"all_equal", all}});
  }

  std::string enumerate_classes() const {
    const ModelGraph g = graph();
    EnumerationStats stats;
    const auto classes = enumerate(g, o_.max_circles, {}, &stats);
    nlohmann::json list = nlohmann::json::array();
    for (const auto& c : classes) list.push_back(to_json(g, c.rep()));
    return document({{"max_circles", o_.max_circles},
                     {"count", classes.size()},
                     {"immersed_dropped", stats.immersed_dropped},
                     {"classes", list}});
  }

  std::string complex() const {
    const ModelGraph g = graph();
    const SphereComplex c = build_complex(g, o_.max_circles);
    return o_.format == "dot" ? to_dot(g, c) : document(to_json(g, c));
  }

 private:
  ModelGraph graph() const {
    if (o_.graph.empty()) throw UsageError("--graph is required");
    return parse_graph(read_file(o_.graph));
  }

  NormalSphere sphere(const ModelGraph& g, const std::string& path) const {
    if (path.empty()) throw UsageError("missing sphere file option");
    return parse_sphere(g, read_file(path));
  }

  const Options& o_;
};

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Normal spheres in connected sums of S2xS1: crossing and intersection numbers", "spheres"};
  app.require_subcommand(1);
  Options o;
  Runner runner(o);
  std::function<std::string()> action;

  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "Write output to FILE instead of standard output");
  };
  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("--graph", o.graph, "Graph document")->required()->check(CLI::ExistingFile);
  };
  auto add_sphere = [&](CLI::App* sub, const char* flag, std::string& target) {
    sub->add_option(flag, target, "Sphere document")->required()->check(CLI::ExistingFile);
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "dot"}));
  };

  auto* gen = app.add_subcommand("graph-gen", "Emit a standard model graph");
  gen->add_option("--rank", o.rank, "Rank n >= 2")->required();
  gen->add_option("--style", o.style, "theta-chain or dumbbell-chain");
  add_format(gen);
  add_out(gen);
  gen->callback([&] { action = [&] { return runner.graph_gen(); }; });

  auto* gcheck = app.add_subcommand("graph-check", "Validate a graph document");
  add_graph(gcheck);
  add_format(gcheck);
  add_out(gcheck);
  gcheck->callback([&] { action = [&] { return runner.graph_check(); }; });

  auto* scheck = app.add_subcommand("sphere-check", "Validate a sphere document");
  add_graph(scheck);
  add_sphere(scheck, "--sphere-a", o.sphere_a);
  add_out(scheck);
  scheck->callback([&] { action = [&] { return runner.sphere_check(); }; });

  auto* cross = app.add_subcommand("cross", "Crossing test of A against (a translate of) B");
  add_graph(cross);
  add_sphere(cross, "--sphere-a", o.sphere_a);
  add_sphere(cross, "--sphere-b", o.sphere_b);
  cross->add_option("--translate", o.translate, "Deck word applied to B: comma-separated dart ids");
  add_out(cross);
  cross->callback([&] { action = [&] { return runner.cross(); }; });

  auto* inter = app.add_subcommand("intersect", "Algebraic intersection number with witnesses");
  add_graph(inter);
  add_sphere(inter, "--sphere-a", o.sphere_a);
  add_sphere(inter, "--sphere-b", o.sphere_b);
  add_out(inter);
  inter->callback([&] { action = [&] { return runner.intersect(); }; });

  auto* theorem = app.add_subcommand("theorem-check", "Circle count versus translate count per edge");
  add_graph(theorem);
  add_sphere(theorem, "--sphere-a", o.sphere_a);
  theorem->add_option("--edge", o.edge, "Restrict to the edge containing this dart id");
  add_out(theorem);
  theorem->callback([&] { action = [&] { return runner.theorem(); }; });

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List sphere classes up to a circle bound");
  add_graph(enumerate_cmd);
  enumerate_cmd->add_option("--max-circles", o.max_circles, "Circle bound")->required();
  add_out(enumerate_cmd);
  enumerate_cmd->callback([&] { action = [&] { return runner.enumerate_classes(); }; });

  auto* complex = app.add_subcommand("complex", "Sphere complex up to a circle bound");
  add_graph(complex);
  complex->add_option("--max-circles", o.max_circles, "Circle bound")->required();
  add_format(complex);
  add_out(complex);
  complex->callback([&] { action = [&] { return runner.complex(); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return 2;
  }

  std::string result;
  try {
    result = action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    out << document({{"error", std::string(e.name())}, {"message", e.what()}});
    return 1;
  }
  if (o.out.empty()) {
    out << result;
  } else {
    std::ofstream file(o.out, std::ios::binary);
    if (!(file << result)) {
      err << "error: cannot write '" << o.out << "'\n";
      return 2;
    }
  }
  return 0;
}

}  // namespace sphereint::cli
