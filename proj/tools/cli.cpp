#include "cli.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gconvex/enumerate.hpp"
#include "gconvex/engine.hpp"
#include "gconvex/graph_io.hpp"
#include "gconvex/harness.hpp"
#include "gconvex/patterns.hpp"
#include "gconvex/recognizers.hpp"
#include "gconvex/walks.hpp"

namespace gconvex::cli {
namespace {

using Json = nlohmann::json;

enum class Output { text, json, dot };

struct GraphArgs {
  std::string path;
  std::string graph6;
  std::string format = "auto";
};

struct ConvexityArgs {
  std::string name;
  int k = 0;
  std::string family_path;
};

struct Config {
  GraphArgs graph;
  ConvexityArgs convexity;
  std::string output = "text";
  bool json = false;
  std::string set;
  std::string u, v;
  std::string mode = "mkm";
  std::string class_name;
  std::string theorem, lemma;
  int max_n = 0;
  unsigned jobs = 1;
  std::string certificates_path;
  std::string graphs_path;
  int n = 0;
  int exponential_n = Limits{}.exponential_n;
};

/// What a command produced: a JSON report, its text rendering, an optional
/// vertex set to highlight in DOT output and the exit code.
struct Report {
  Json json;
  std::string text;
  std::optional<VertexSet> highlight;
  int code = kOk;
};

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), {}}; }

std::string read_source(const std::string& path, std::istream& stdin_stream) {
  if (path == "-") return read_all(stdin_stream);
  std::ifstream file(path);
  if (!file) throw InputError("cannot open '" + path + "'");
  return read_all(file);
}

bool looks_like_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    std::istringstream tokens(line);
    std::vector<std::string> words;
    for (std::string w; tokens >> w;) words.push_back(w);
    if (words.empty() || words.front().starts_with('#')) continue;
    return words.size() == 2;
  }
  return false;
}

LabeledGraph load_graph(const GraphArgs& args, std::istream& stdin_stream) {
  if (args.path.empty() == args.graph6.empty()) throw InputError("give exactly one of an input file or --g6");
  if (!args.graph6.empty()) return with_index_labels(parse_graph6(args.graph6));
  const std::string text = read_source(args.path, stdin_stream);
  std::string format = args.format;
  if (format == "auto") format = looks_like_edge_list(text) ? "edges" : "graph6";
  if (format == "edges") return parse_edge_list(text);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw InputError("empty graph6 input");
  const auto end = text.find('\n', first);
  return with_index_labels(parse_graph6(std::string_view(text).substr(first, end - first)));
}

std::vector<PatternGraph> load_family(const std::string& path, std::istream& stdin_stream) {
  std::istringstream in(read_source(path, stdin_stream));
  std::vector<PatternGraph> family;
  for (std::string line; std::getline(in, line);) {
    std::istringstream tokens(line);
    std::string word;
    if (!(tokens >> word) || word.starts_with('#')) continue;
    try {
      family.push_back(patterns::by_name(word));
    } catch (const InputError&) {
      const Graph g = parse_graph6(word);
      std::vector<std::string> labels;
      for (Vertex v = 0; v < g.order(); ++v) labels.push_back(std::to_string(v));
      family.push_back({word, g, labels});
    }
  }
  if (family.empty()) throw InputError("family file '" + path + "' lists no patterns");
  return family;
}

ConvexitySpec resolve_convexity(const ConvexityArgs& args, std::istream& stdin_stream) {
  if (args.name.empty()) throw InputError("--convexity is required");
  const bool wants_family = args.name == "ffree";
  if (wants_family != !args.family_path.empty()) throw InputError("--family goes with --convexity ffree, and only there");
  if (wants_family) return ConvexitySpec::f_free(load_family(args.family_path, stdin_stream));
  if (args.name == "lk") {
    if (args.k < 1) throw InputError("--convexity lk needs --k");
    return ConvexitySpec::lk(args.k);
  }
  if (args.k != 0) throw InputError("--k applies to --convexity lk only");
  return parse_convexity(args.name);
}

VertexSet parse_set(const LabeledGraph& lg, const std::string& text) {
  Mask m = 0;
  std::istringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    item.erase(0, item.find_first_not_of(" \t{"));
    item.erase(item.find_last_not_of(" \t}") + 1);
    if (!item.empty()) m |= bit(lg.find(item));
  }
  return VertexSet(lg.graph.order(), m);
}

Json labels_json(const LabeledGraph& lg, const VertexSet& s) {
  Json out = Json::array();
  for (Vertex v : s) out.push_back(lg.name(v));
  return out;
}

std::string labels_text(const LabeledGraph& lg, const VertexSet& s) {
  std::string out = "{";
  for (Vertex v : s) out += (out.size() > 1 ? ", " : "") + lg.name(v);
  return out + "}";
}

bool has_custom_labels(const LabeledGraph& lg) {
  for (Vertex v = 0; v < lg.graph.order(); ++v)
    if (lg.name(v) != std::to_string(v)) return true;
  return false;
}

Json base_json(std::string_view command, const LabeledGraph& lg) {
  return {{"command", command}, {"n", lg.graph.order()}, {"labels", lg.labels}};
}

Json geometry_json(const LabeledGraph& lg, const GeometryReport& r) {
  Json out = {{"mode", to_string(r.mode)}, {"verdict", r.verdict}};
  if (r.violating_set) out["violating_set"] = labels_json(lg, *r.violating_set);
  if (r.extremes) out["extremes"] = labels_json(lg, *r.extremes);
  if (r.hull_of_extremes) out["hull_of_extremes"] = labels_json(lg, *r.hull_of_extremes);
  if (r.witness) {
    out["antiexchange"] = {{"set", labels_json(lg, r.witness->convex_set)},
                           {"x", lg.name(r.witness->x)},
                           {"y", lg.name(r.witness->y)}};
  }
  return out;
}

std::string dot_id(const std::string& label) {
  std::string out = "\"";
  for (char c : label) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string render_dot(const LabeledGraph& lg, const std::optional<VertexSet>& highlight) {
  std::ostringstream out;
  out << "graph G {\n  node [shape=circle];\n";
  for (Vertex v = 0; v < lg.graph.order(); ++v) {
    out << "  " << dot_id(lg.name(v));
    if (highlight && highlight->contains(v)) out << " [style=filled, fillcolor=lightblue]";
    out << ";\n";
  }
  for (const Edge& e : lg.graph.edges()) out << "  " << dot_id(lg.name(e.u)) << " -- " << dot_id(lg.name(e.v)) << ";\n";
  out << "}\n";
  return out.str();
}

std::string summary_text(const Summary& s) {
  std::ostringstream out;
  const char* positive = s.lemma ? "holds" : "geometries";
  const char* members = s.lemma ? "in domain" : "class members";
  out << s.id << " up to n=" << s.max_n << '\n';
  out << "   n   graphs  " << positive << "  " << members << "  certificates\n";
  auto row = [&](const std::string& n, const LevelCounts& l) {
    out << std::setw(4) << n << std::setw(9) << l.graphs << std::setw(static_cast<int>(std::strlen(positive)) + 2)
        << l.geometries << std::setw(static_cast<int>(std::strlen(members)) + 2) << l.members << std::setw(14)
        << l.certificates << '\n';
  };
  for (const LevelCounts& l : s.levels) row(std::to_string(l.order), l);
  row("all", s.total());
  return out.str();
}

// ---------------------------------------------------------------------------
// Commands

class Runner {
 public:
  Runner(const Config& config, std::istream& in) : config_(config), in_(in) {}

  Report interval_cmd() {
    const LabeledGraph lg = graph();
    const ConvexitySpec c = convexity();
    if (!c.has_interval_oracle()) throw InputError(c.name() + " convexity has no interval function");
    const Vertex u = lg.find(config_.u), v = lg.find(config_.v);
    const VertexSet s = interval(lg.graph, c, u, v);
    Report r{base_json("interval", lg), "", s};
    r.json.update({{"convexity", c.name()}, {"u", lg.name(u)}, {"v", lg.name(v)}, {"interval", labels_json(lg, s)}});
    r.text = label_table(lg) + "I(" + lg.name(u) + ", " + lg.name(v) + ") = " + labels_text(lg, s) + "\n";
    return r;
  }

  Report hull_cmd() {
    const LabeledGraph lg = graph();
    const ConvexitySpec c = convexity();
    const VertexSet s = parse_set(lg, config_.set);
    const VertexSet h = ClosureSystem(lg.graph, c, limits()).hull(s);
    Report r{base_json("hull", lg), "", h};
    r.json.update({{"convexity", c.name()}, {"set", labels_json(lg, s)}, {"hull", labels_json(lg, h)}});
    r.text = label_table(lg) + "H(" + labels_text(lg, s) + ") = " + labels_text(lg, h) + "\n";
    return r;
  }

  Report is_convex_cmd() {
    const LabeledGraph lg = graph();
    const ConvexitySpec c = convexity();
    const VertexSet s = parse_set(lg, config_.set);
    const ClosureSystem closure(lg.graph, c, limits());
    const bool convex = closure.is_convex(s);
    const VertexSet h = closure.hull(s);
    Report r{base_json("is-convex", lg), "", s, convex ? kOk : kFalse};
    r.json.update({{"convexity", c.name()}, {"set", labels_json(lg, s)}, {"convex", convex}, {"hull", labels_json(lg, h)}});
    r.text = label_table(lg) + labels_text(lg, s) + (convex ? " is convex\n" : " is not convex; H = " + labels_text(lg, h) + "\n");
    return r;
  }

  Report extreme_cmd() {
    const LabeledGraph lg = graph();
    const ConvexitySpec c = convexity();
    const VertexSet s = config_.set.empty() ? VertexSet::all(lg.graph.order()) : parse_set(lg, config_.set);
    const VertexSet ext = ClosureSystem(lg.graph, c, limits()).extreme_vertices(s);
    Report r{base_json("extreme", lg), "", ext};
    r.json.update({{"convexity", c.name()}, {"set", labels_json(lg, s)}, {"extremes", labels_json(lg, ext)}});
    r.text = label_table(lg) + "ext(" + labels_text(lg, s) + ") = " + labels_text(lg, ext) + "\n";
    return r;
  }

  Report convex_sets_cmd() {
    const LabeledGraph lg = graph();
    const ConvexitySpec c = convexity();
    const auto sets = all_convex_sets(lg.graph, c, limits());
    Report r{base_json("convex-sets", lg), label_table(lg), std::nullopt};
    Json list = Json::array();
    for (const VertexSet& s : sets) {
      list.push_back(labels_json(lg, s));
      r.text += labels_text(lg, s) + "\n";
    }
    r.json.update({{"convexity", c.name()}, {"count", sets.size()}, {"convex_sets", list}});
    r.text += std::to_string(sets.size()) + " convex sets\n";
    return r;
  }

  Report is_geometry_cmd() {
    const LabeledGraph lg = graph();
    const ConvexitySpec c = convexity();
    if (config_.mode != "mkm" && config_.mode != "antiexchange") throw InputError("--mode is mkm or antiexchange");
    const ClosureSystem closure(lg.graph, c, limits());
    const GeometryReport g =
        config_.mode == "mkm" ? is_convex_geometry_mkm(closure, limits()) : satisfies_antiexchange(closure, limits());
    Report r{base_json("is-geometry", lg), label_table(lg), g.violating_set, g.verdict ? kOk : kFalse};
    if (g.witness) r.highlight = g.witness->convex_set;
    r.json.update({{"convexity", c.name()}, {"report", geometry_json(lg, g)}});
    r.text += c.name() + (g.verdict ? " convexity is a convex geometry" : " convexity is not a convex geometry") + " (" +
              to_string(g.mode) + ")\n";
    if (g.violating_set) {
      r.text += "  convex set " + labels_text(lg, *g.violating_set) + " has extremes " + labels_text(lg, *g.extremes) +
                " with hull " + labels_text(lg, *g.hull_of_extremes) + "\n";
    }
    if (g.witness) {
      r.text += "  S = " + labels_text(lg, g.witness->convex_set) + ", x = " + lg.name(g.witness->x) +
                ", y = " + lg.name(g.witness->y) + ": each lies in the hull of S with the other\n";
    }
    return r;
  }

  Report recognize_cmd() {
    const LabeledGraph lg = graph();
    const ClassSpec cls = parse_class(config_.class_name);
    const bool member = recognize(lg.graph, cls, limits());
    Report r{base_json("recognize", lg), "", std::nullopt, member ? kOk : kFalse};
    r.json.update({{"class", cls.name()}, {"member", member}});
    r.text = cls.name() + (member ? ": yes\n" : ": no\n");
    return r;
  }

  Report verify_cmd(bool lemma) {
    VerifyOptions options{.max_n = config_.max_n, .jobs = std::max(1U, config_.jobs), .limits = limits()};
    std::vector<Graph> external;
    if (!config_.graphs_path.empty()) {
      std::istringstream in(read_source(config_.graphs_path, in_));
      external = connected_graphs_from_graph6(in, limits());
      options.graphs = &external;
    }
    const VerifyResult result =
        lemma ? verify_lemma(find_lemma(config_.lemma), options) : verify_theorem(find_theorem(config_.theorem), options);
    if (!config_.certificates_path.empty()) {
      std::ofstream out(config_.certificates_path);
      if (!out) throw InputError("cannot write '" + config_.certificates_path + "'");
      out << to_jsonl(result.certificates);
    }
    Report r{{{"command", lemma ? "verify-lemma" : "verify"}, {"summary", to_json(result.summary)}}, "", std::nullopt,
             result.certificates.empty() ? kOk : kFalse};
    r.text = summary_text(result.summary);
    r.text += std::to_string(result.certificates.size()) + " counterexamples\n";
    for (std::size_t i = 0; i < std::min<std::size_t>(result.certificates.size(), 5); ++i)
      r.text += "  " + result.certificates[i].graph6 + "\n";
    return r;
  }

  Report fixtures_cmd() {
    const NonhereditaryReport l3 = nonhereditary_fixture_check();
    const GemReport gem = gem_fixture_check();
    Report r;
    r.code = l3.ok() && gem.ok() ? kOk : kFalse;
    r.json = {{"command", "fixtures"},
              {"l3_example",
               {{"full_is_geometry", l3.full_is_geometry},
                {"minus2_is_geometry", l3.minus2_is_geometry},
                {"minus5_is_geometry", l3.minus5_is_geometry},
                {"minus2_extremes", l3.minus2_extremes},
                {"minus2_hull_of_1_7", l3.minus2_hull_of_1_7},
                {"ok", l3.ok()}}},
              {"gem", {{"extremes", gem.extremes}, {"hull_of_a_d", gem.hull_of_a_d}, {"ok", gem.ok()}}}};
    auto ints = [](const std::vector<int>& xs) {
      std::string s = "{";
      for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + std::to_string(xs[i]);
      return s + "}";
    };
    auto words = [](const std::vector<std::string>& xs) {
      std::string s = "{";
      for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + xs[i];
      return s + "}";
    };
    auto yes = [](bool b) { return b ? std::string("yes") : std::string("no"); };
    r.text = "l3 example: geometry " + yes(l3.full_is_geometry) + ", G-2 geometry " + yes(l3.minus2_is_geometry) +
             ", G-5 geometry " + yes(l3.minus5_is_geometry) + "\n";
    r.text += "  G-2: ext(V) = " + ints(l3.minus2_extremes) + ", H({1, 7}) = " + ints(l3.minus2_hull_of_1_7) + "\n";
    r.text += "gem (geodetic): ext(V) = " + words(gem.extremes) + ", H({a, d}) = " + words(gem.hull_of_a_d) + "\n";
    r.text += r.code == kOk ? "fixtures ok\n" : "fixtures FAILED\n";
    return r;
  }

  Report enumerate_cmd() {
    const auto graphs = connected_graphs(config_.n);
    Report r{{{"command", "enumerate"}, {"n", config_.n}, {"graphs", Json::array()}}, "", std::nullopt};
    for (const Graph& g : graphs) {
      const std::string code = emit_graph6(g);
      r.json["graphs"].push_back(code);
      r.text += code + "\n";
    }
    return r;
  }

  Report render_dot_cmd() {
    const LabeledGraph lg = graph();
    std::optional<VertexSet> s;
    if (!config_.set.empty()) s = parse_set(lg, config_.set);
    Report r{base_json("render-dot", lg), render_dot(lg, s), s};
    r.json["dot"] = r.text;
    return r;
  }

  LabeledGraph graph() const { return load_graph(config_.graph, in_); }
  ConvexitySpec convexity() const { return resolve_convexity(config_.convexity, in_); }
  Limits limits() const { return Limits{config_.exponential_n}; }

  std::string label_table(const LabeledGraph& lg) const {
    if (!has_custom_labels(lg)) return {};
    std::string out = "vertices:";
    for (Vertex v = 0; v < lg.graph.order(); ++v) out += " " + std::to_string(v) + "=" + lg.name(v);
    return out + "\n";
  }

 private:
  const Config& config_;
  std::istream& in_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return run(args, std::cin, out, err);
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Config config;
  CLI::App app{"Graph convexities and convex geometries on small graphs", "gconvex"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--output", config.output, "text, json or dot")
      ->check(CLI::IsMember({"text", "json", "dot"}))
      ->capture_default_str();
  app.add_flag("--json", config.json, "same as --output json");
  app.add_option("--exponential-n", config.exponential_n, "largest order for exponential operations")
      ->capture_default_str();

  auto graph_options = [&](CLI::App* cmd) {
    cmd->add_option("input", config.graph.path, "graph file, '-' for stdin");
    cmd->add_option("--g6", config.graph.graph6, "inline graph6 string");
    cmd->add_option("--format", config.graph.format, "auto, graph6 or edges")
        ->check(CLI::IsMember({"auto", "graph6", "edges"}))
        ->capture_default_str();
  };
  auto convexity_options = [&](CLI::App* cmd) {
    cmd->add_option("--convexity,-c", config.convexity.name,
                    "geodetic, monophonic, m3, l<k>, lk, strong, toll, weakly-toll, triangle-path, p3, p4plus, "
                    "ffree or ffree:<p>;<p>...")
        ->required();
    cmd->add_option("--k", config.convexity.k, "k for --convexity lk");
    cmd->add_option("--family", config.convexity.family_path, "pattern file for --convexity ffree");
  };
  auto set_option = [&](CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("--set,-s", config.set, "comma-separated vertex labels");
    if (required) opt->required();
  };

  std::map<CLI::App*, std::function<Report(Runner&)>> commands;
  auto add = [&](const char* name, const char* help, std::function<Report(Runner&)> body) {
    CLI::App* cmd = app.add_subcommand(name, help);
    commands[cmd] = std::move(body);
    return cmd;
  };

  CLI::App* cmd = add("interval", "interval I(u, v)", [](Runner& r) { return r.interval_cmd(); });
  graph_options(cmd);
  convexity_options(cmd);
  cmd->add_option("--u,-u", config.u, "first endpoint")->required();
  cmd->add_option("--v,-v", config.v, "second endpoint")->required();

  cmd = add("hull", "convex hull of a vertex set", [](Runner& r) { return r.hull_cmd(); });
  graph_options(cmd);
  convexity_options(cmd);
  set_option(cmd, true);

  cmd = add("is-convex", "whether a vertex set is convex (exit 1 if not)", [](Runner& r) { return r.is_convex_cmd(); });
  graph_options(cmd);
  convexity_options(cmd);
  set_option(cmd, true);

  cmd = add("extreme", "extreme vertices of a convex set (default: all vertices)",
            [](Runner& r) { return r.extreme_cmd(); });
  graph_options(cmd);
  convexity_options(cmd);
  set_option(cmd, false);

  cmd = add("convex-sets", "list every convex set", [](Runner& r) { return r.convex_sets_cmd(); });
  graph_options(cmd);
  convexity_options(cmd);

  cmd = add("is-geometry", "whether the convexity is a convex geometry (exit 1 if not)",
            [](Runner& r) { return r.is_geometry_cmd(); });
  graph_options(cmd);
  convexity_options(cmd);
  cmd->add_option("--mode", config.mode, "mkm or antiexchange")
      ->check(CLI::IsMember({"mkm", "antiexchange"}))
      ->capture_default_str();

  cmd = add("recognize", "class membership (exit 1 if not a member)", [](Runner& r) { return r.recognize_cmd(); });
  graph_options(cmd);
  cmd->add_option("--class", config.class_name, "class name, e.g. chordal, interval, diam:3")->required();

  for (bool lemma : {false, true}) {
    cmd = add(lemma ? "verify-lemma" : "verify",
              lemma ? "check a lemma on all small connected graphs" : "check a theorem on all small connected graphs",
              [lemma](Runner& r) { return r.verify_cmd(lemma); });
    if (lemma) {
      cmd->add_option("--lemma", config.lemma, "lemma id, e.g. L-HOWORKA")->required();
    } else {
      cmd->add_option("--theorem", config.theorem, "theorem id, e.g. T-MONO, T-LK-NEC:3, T-FFREE:K3;C4")->required();
    }
    cmd->add_option("--max-n", config.max_n, "largest order (default: the entry's own)")->check(CLI::Range(1, 9));
    cmd->add_option("--jobs,-j", config.jobs, "worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--certificates", config.certificates_path, "write counterexamples as JSON lines");
    cmd->add_option("--graphs", config.graphs_path, "check the connected graphs of a graph6 file instead");
  }

  add("fixtures", "run the seven-vertex l3 example and the gem fixture", [](Runner& r) { return r.fixtures_cmd(); });

  cmd = add("enumerate", "print every connected graph on n vertices as graph6",
            [](Runner& r) { return r.enumerate_cmd(); });
  cmd->add_option("--n,-n", config.n, "order")->required();

  cmd = add("render-dot", "print the graph in DOT, optionally highlighting a set",
            [](Runner& r) { return r.render_dot_cmd(); });
  graph_options(cmd);
  set_option(cmd, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream usage, diagnostics;
    const int code = app.exit(e, usage, diagnostics);
    out << usage.str();
    err << diagnostics.str();
    return code == 0 ? kOk : kUsage;
  }

  Output mode = config.output == "json" ? Output::json : config.output == "dot" ? Output::dot : Output::text;
  if (config.json) mode = Output::json;

  try {
    Runner runner(config, in);
    for (auto& [sub, body] : commands) {
      if (!sub->parsed()) continue;
      Report report = body(runner);
      if (mode == Output::json) {
        out << report.json.dump(2) << '\n';
      } else if (mode == Output::dot) {
        if (!report.json.contains("labels")) throw InputError("--output dot needs a command that reads a graph");
        LabeledGraph lg{runner.graph()};
        out << render_dot(lg, report.highlight);
      } else {
        out << report.text;
      }
      return report.code;
    }
  } catch (const CapacityError& e) {
    err << "gconvex: " << e.what() << '\n';
    return kCapacity;
  } catch (const Error& e) {
    err << "gconvex: " << e.what() << '\n';
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "gconvex: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace gconvex::cli
