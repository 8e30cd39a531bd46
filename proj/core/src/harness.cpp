#include "gconvex/harness.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <charconv>
#include <exception>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <thread>

#include "gconvex/canonical.hpp"
#include "gconvex/enumerate.hpp"
#include "gconvex/errors.hpp"
#include "gconvex/graph_io.hpp"
#include "gconvex/patterns.hpp"
#include "gconvex/recognizers.hpp"
#include "gconvex/walks.hpp"

namespace gconvex {

namespace {

using Json = nlohmann::json;

Mask lift_mask(const InducedSubgraph& sub, Mask local) {
  Mask out = 0;
  for (; local != 0; local &= local - 1) out |= bit(sub.to_original[std::countr_zero(local)]);
  return out;
}

Json mask_json(Mask m) {
  Json out = Json::array();
  for (; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

std::function<std::optional<ConvexitySpec>(int)> fixed(ConvexitySpec c) {
  return [c](int) { return std::optional<ConvexitySpec>(c); };
}

std::function<bool(const Graph&, const Limits&)> in_class(GraphClass kind, int k = 0) {
  return [spec = ClassSpec{kind, k}](const Graph& g, const Limits& limits) { return recognize(g, spec, limits); };
}

Theorem make_theorem(std::string id, ConvexitySpec c, GraphClass kind, int max_n = 8) {
  Theorem t;
  t.id = std::move(id);
  t.default_max_n = max_n;
  t.class_name = ClassSpec{kind}.name();
  t.convexity = fixed(std::move(c));
  t.member = in_class(kind);
  return t;
}

Theorem lk_necessity(int k) {
  Theorem t;
  t.id = "T-LK-NEC:" + std::to_string(k);
  t.direction = Direction::only_if;
  t.default_max_n = 7;
  t.class_name = "chordal and diam:" + std::to_string(k);
  t.convexity = fixed(ConvexitySpec::lk(k));
  t.member = [k](const Graph& g, const Limits&) { return is_chordal(g) && diameter(g) <= k; };
  return t;
}

Theorem f_free_theorem(std::string_view family_text) {
  ConvexitySpec c = parse_convexity("ffree:" + std::string(family_text));
  Theorem t;
  t.id = "T-FFREE:" + c.name().substr(std::string_view("ffree:").size());
  t.default_max_n = 6;
  t.class_name = "free of " + c.name().substr(std::string_view("ffree:").size());
  t.convexity = fixed(c);
  t.member = [family = c.family()](const Graph& g, const Limits&) {
    return std::none_of(family.begin(), family.end(),
                        [&](const PatternGraph& p) { return contains_induced(g, p).has_value(); });
  };
  return t;
}

Theorem generated_family_theorem(std::string id, std::function<std::vector<PatternGraph>(int)> family,
                                 GraphClass kind, int max_n) {
  Theorem t;
  t.id = std::move(id);
  t.default_max_n = max_n;
  t.class_name = ClassSpec{kind}.name();
  t.convexity = [family = std::move(family)](int order) -> std::optional<ConvexitySpec> {
    auto members = family(order);
    if (members.empty()) return std::nullopt;
    return ConvexitySpec::f_free(std::move(members));
  };
  t.member = in_class(kind);
  return t;
}

const std::vector<std::string_view>& default_f_free_families() {
  static const std::vector<std::string_view> families{"K3", "P3", "P4", "C4", "K1,3", "K3;C4", "gem;house"};
  return families;
}

}  // namespace

std::vector<Theorem> theorem_registry() {
  std::vector<Theorem> out;
  out.push_back(make_theorem("T-MONO", ConvexitySpec::monophonic(), GraphClass::chordal));
  out.push_back(make_theorem("T-GEO", ConvexitySpec::geodetic(), GraphClass::ptolemaic));
  out.push_back(make_theorem("T-STRONG", ConvexitySpec::strong(), GraphClass::strongly_chordal));
  out.push_back(make_theorem("T-M3", ConvexitySpec::m3(), GraphClass::weakly_polarizable));
  out.push_back(make_theorem("T-TOLL", ConvexitySpec::toll(), GraphClass::interval, 7));
  out.push_back(make_theorem("T-WTOLL", ConvexitySpec::weakly_toll(), GraphClass::proper_interval, 7));
  out.push_back(make_theorem("T-L2", ConvexitySpec::lk(2), GraphClass::chordal_cograph));
  out.push_back(make_theorem("T-L3", ConvexitySpec::lk(3), GraphClass::l3_characterization));
  for (int k = 2; k <= 5; ++k) out.push_back(lk_necessity(k));
  out.push_back(make_theorem("T-P3", ConvexitySpec::p3(), GraphClass::forest_of_stars));
  out.push_back(make_theorem("T-TRI", ConvexitySpec::triangle_path(), GraphClass::forest));
  for (std::string_view family : default_f_free_families()) out.push_back(f_free_theorem(family));
  out.push_back(generated_family_theorem("C-BIP", patterns::odd_cycles, GraphClass::bipartite, 8));
  out.push_back(generated_family_theorem("C-PLANAR", patterns::kuratowski_subdivisions, GraphClass::planar_desk, 6));
  out.push_back(make_theorem("C-P4PLUS", ConvexitySpec::p4_plus(), GraphClass::cograph));
  return out;
}

Theorem inverted(Theorem t) {
  t.id = "INV:" + t.id;
  t.class_name = "not " + t.class_name;
  t.member = [inner = std::move(t.member)](const Graph& g, const Limits& limits) { return !inner(g, limits); };
  return t;
}

Theorem find_theorem(std::string_view id) {
  if (id.starts_with("INV:")) return inverted(find_theorem(id.substr(4)));
  if (id.starts_with("T-LK-NEC:")) {
    const std::string_view digits = id.substr(9);
    int k = 0;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec != std::errc{} || end != digits.data() + digits.size() || k < 1)
      throw InputError("bad path-length bound in theorem id '" + std::string(id) + "'");
    return lk_necessity(k);
  }
  if (id.starts_with("T-FFREE:")) return f_free_theorem(id.substr(8));
  for (Theorem& t : theorem_registry())
    if (t.id == id) return std::move(t);
  throw InputError("unknown theorem id '" + std::string(id) + "'");
}

// ---------------------------------------------------------------------------
// Lemmas

namespace {

std::vector<char> convex_flags(const ClosureSystem& closure) {
  const std::size_t total = std::size_t{1} << closure.order();
  std::vector<char> convex(total);
  for (std::size_t s = 0; s < total; ++s) convex[s] = closure.expand_mask(static_cast<Mask>(s)) == s;
  return convex;
}

enum class Compare { equal, subset };

// Compares ext(S) with a vertex property of G[S] over every non-empty convex S.
LemmaOutcome extremes_lemma(const Graph& g, const ConvexitySpec& c, const Limits& limits,
                            const std::function<VertexSet(const Graph&)>& expected, Compare mode) {
  require_within(g.order(), limits, "extreme-vertex lemma");
  const ClosureSystem closure(g, c, limits);
  const auto convex = convex_flags(closure);
  LemmaOutcome out;
  for (std::size_t s = 1; s < convex.size(); ++s) {
    if (!convex[s]) continue;
    const auto set = static_cast<Mask>(s);
    Mask ext = 0;
    for (Mask rest = set; rest != 0; rest &= rest - 1) {
      const Mask x = rest & (~rest + 1);
      if (convex[set & ~x]) ext |= x;
    }
    const InducedSubgraph sub = induced_subgraph(g, VertexSet(g.order(), set));
    const Mask want = lift_mask(sub, expected(sub.graph).bits());
    const bool fine = mode == Compare::equal ? ext == want : (ext & ~want) == 0;
    if (!fine) {
      out.holds = false;
      out.witness = {{"convexity", c.name()}, {"set", mask_json(set)}, {"extremes", mask_json(ext)},
                     {"expected", mask_json(want)}};
      return out;
    }
  }
  return out;
}

// Every vertex outside `ends` lies in I(a, b) for two distinct members of `ends`.
LemmaOutcome cover_lemma(const Graph& g, const ConvexitySpec& c, Mask ends) {
  const IntervalTable table = IntervalTable::build(g, c);
  Mask covered = ends;
  for (Mask as = ends; as != 0; as &= as - 1)
    for (Mask bs = as & (as - 1); bs != 0; bs &= bs - 1)
      covered |= table.at(std::countr_zero(as), std::countr_zero(bs));
  LemmaOutcome out;
  const Mask missing = full_mask(g.order()) & ~covered;
  if (missing != 0) {
    out.holds = false;
    out.witness = {{"convexity", c.name()}, {"ends", mask_json(ends)}, {"uncovered", mask_json(missing)}};
  }
  return out;
}

LemmaOutcome outside_domain() {
  LemmaOutcome out;
  out.in_domain = false;
  return out;
}

Lemma make_lemma(std::string id, int max_n, std::string domain, std::string statement,
                 std::function<LemmaOutcome(const Graph&, const Limits&)> check) {
  return Lemma{std::move(id), max_n, std::move(domain), std::move(statement), std::move(check)};
}

LemmaOutcome howorka(const Graph& g) {
  LemmaOutcome out;
  if (!recognize(g, ClassSpec{GraphClass::ptolemaic})) return outside_domain();
  const auto geo = IntervalTable::build(g, ConvexitySpec::geodetic());
  const auto mono = IntervalTable::build(g, ConvexitySpec::monophonic());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (geo.at(u, v) != mono.at(u, v)) {
        out.holds = false;
        out.witness = {{"u", u}, {"v", v}, {"geodetic", mask_json(geo.at(u, v))},
                       {"monophonic", mask_json(mono.at(u, v))}};
        return out;
      }
  return out;
}

LemmaOutcome mkm_matches_antiexchange(const Graph& g, const Limits& limits) {
  LemmaOutcome out;
  for (const ConvexitySpec& c : standard_convexities()) {
    const ClosureSystem closure(g, c, limits);
    const bool mkm = is_convex_geometry_mkm(closure, limits).verdict;
    const bool ae = satisfies_antiexchange(closure, limits).verdict;
    const bool ae_all = antiexchange_over_all_sets(closure, limits);
    if (mkm != ae || ae != ae_all) {
      out.holds = false;
      out.witness = {{"convexity", c.name()}, {"mkm", mkm}, {"antiexchange", ae}, {"antiexchange_all_sets", ae_all}};
      return out;
    }
  }
  return out;
}

}  // namespace

std::vector<Lemma> lemma_registry() {
  const auto simplicial = [](const Graph& h) { return simplicial_vertices(h); };
  const auto end_simplicial = [](const Graph& h) { return end_simplicial_vertices(h); };
  std::vector<Lemma> out;
  out.push_back(make_lemma("L-EXT-MONO", 7, "all graphs", "monophonic extremes of S are the simplicial vertices of G[S]",
                           [=](const Graph& g, const Limits& lim) {
                             return extremes_lemma(g, ConvexitySpec::monophonic(), lim, simplicial, Compare::equal);
                           }));
  out.push_back(make_lemma("L-EXT-M3", 7, "all graphs", "m3 extremes of S are the semisimplicial vertices of G[S]",
                           [](const Graph& g, const Limits& lim) {
                             return extremes_lemma(g, ConvexitySpec::m3(), lim,
                                                   [](const Graph& h) { return semisimplicial_vertices(h); },
                                                   Compare::equal);
                           }));
  out.push_back(make_lemma("L-SC-EXT", 7, "chordal", "strong extremes of S are the simple vertices of G[S]",
                           [](const Graph& g, const Limits& lim) {
                             if (!is_chordal(g)) return outside_domain();
                             return extremes_lemma(g, ConvexitySpec::strong(), lim,
                                                   [](const Graph& h) { return simple_vertices(h); }, Compare::equal);
                           }));
  out.push_back(make_lemma("L-SC-COVER", 7, "strongly chordal",
                           "every nonsimple vertex lies on an even-chorded path between simple vertices",
                           [](const Graph& g, const Limits& lim) {
                             if (!is_strongly_chordal(g, lim)) return outside_domain();
                             return cover_lemma(g, ConvexitySpec::strong(), simple_vertices(g).bits());
                           }));
  out.push_back(make_lemma("L-TOLL-EXT-NEC", 7, "all graphs", "toll extremes of S are simplicial in G[S]",
                           [=](const Graph& g, const Limits& lim) {
                             return extremes_lemma(g, ConvexitySpec::toll(), lim, simplicial, Compare::subset);
                           }));
  out.push_back(make_lemma("L-TOLL-EXT-IFF", 7, "interval", "toll extremes of S are the end simplicial vertices of G[S]",
                           [=](const Graph& g, const Limits& lim) {
                             if (!recognize(g, ClassSpec{GraphClass::interval}, lim)) return outside_domain();
                             return extremes_lemma(g, ConvexitySpec::toll(), lim, end_simplicial, Compare::equal);
                           }));
  out.push_back(make_lemma("L-TOLL-COVER", 7, "interval",
                           "every non-end-simplicial vertex lies on a tolled walk between end simplicial vertices",
                           [](const Graph& g, const Limits& lim) {
                             if (!recognize(g, ClassSpec{GraphClass::interval}, lim)) return outside_domain();
                             return cover_lemma(g, ConvexitySpec::toll(), end_simplicial_vertices(g, lim).bits());
                           }));
  out.push_back(make_lemma("L-WT-EXT-NEC", 7, "all graphs", "weakly toll extremes of S are simplicial in G[S]",
                           [=](const Graph& g, const Limits& lim) {
                             return extremes_lemma(g, ConvexitySpec::weakly_toll(), lim, simplicial, Compare::subset);
                           }));
  out.push_back(make_lemma("L-WT-EXT-IFF", 7, "proper interval",
                           "weakly toll extremes of S are the end simplicial vertices of G[S]",
                           [=](const Graph& g, const Limits& lim) {
                             if (!recognize(g, ClassSpec{GraphClass::proper_interval}, lim)) return outside_domain();
                             return extremes_lemma(g, ConvexitySpec::weakly_toll(), lim, end_simplicial, Compare::equal);
                           }));
  out.push_back(make_lemma("L-WT-COVER", 7, "proper interval",
                           "every non-end-simplicial vertex lies on a weakly toll walk between end simplicial vertices",
                           [](const Graph& g, const Limits& lim) {
                             if (!recognize(g, ClassSpec{GraphClass::proper_interval}, lim)) return outside_domain();
                             return cover_lemma(g, ConvexitySpec::weakly_toll(), end_simplicial_vertices(g, lim).bits());
                           }));
  out.push_back(make_lemma("L-HOWORKA", 7, "ptolemaic", "geodetic and monophonic intervals coincide",
                           [](const Graph& g, const Limits&) { return howorka(g); }));
  out.push_back(make_lemma("L-MKM-AE", 7, "all graphs",
                           "the MKM and antiexchange tests agree for every convexity kind",
                           [](const Graph& g, const Limits& lim) { return mkm_matches_antiexchange(g, lim); }));
  return out;
}

Lemma find_lemma(std::string_view id) {
  for (Lemma& l : lemma_registry())
    if (l.id == id) return std::move(l);
  throw InputError("unknown lemma id '" + std::string(id) + "'");
}

// ---------------------------------------------------------------------------
// JSON

Json to_json(const VertexSet& s) { return mask_json(s.bits()); }

Json to_json(const GeometryReport& r) {
  Json out = {{"mode", to_string(r.mode)}, {"verdict", r.verdict}};
  if (r.violating_set) out["violating_set"] = to_json(*r.violating_set);
  if (r.extremes) out["extremes"] = to_json(*r.extremes);
  if (r.hull_of_extremes) out["hull_of_extremes"] = to_json(*r.hull_of_extremes);
  if (r.witness) {
    out["antiexchange"] = {{"set", to_json(r.witness->convex_set)}, {"x", r.witness->x}, {"y", r.witness->y}};
  }
  return out;
}

Json to_json(const Certificate& c) {
  return {{"g6", c.graph6}, {"theorem", c.id}, {"geometry", c.geometry}, {"class", c.member}, {"witness", c.witness}};
}

Certificate certificate_from_json(const Json& j) {
  try {
    Certificate c;
    c.graph6 = j.at("g6").get<std::string>();
    c.id = j.at("theorem").get<std::string>();
    c.geometry = j.at("geometry").get<bool>();
    c.member = j.at("class").get<bool>();
    c.witness = j.value("witness", Json());
    return c;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed certificate: ") + e.what());
  }
}

std::string to_jsonl(const std::vector<Certificate>& certificates) {
  std::string out;
  for (const Certificate& c : certificates) {
    out += to_json(c).dump();
    out += '\n';
  }
  return out;
}

std::vector<Certificate> certificates_from_jsonl(std::string_view text) {
  std::vector<Certificate> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(certificate_from_json(Json::parse(line)));
    } catch (const Json::parse_error& e) {
      throw ParseError(std::string("bad certificate line: ") + e.what(), e.byte);
    }
  }
  return out;
}

LevelCounts Summary::total() const {
  LevelCounts sum;
  sum.order = max_n;
  for (const LevelCounts& l : levels) {
    sum.graphs += l.graphs;
    sum.geometries += l.geometries;
    sum.members += l.members;
    sum.certificates += l.certificates;
  }
  return sum;
}

Json to_json(const Summary& s) {
  const char* positive = s.lemma ? "holds" : "geometries";
  const char* members = s.lemma ? "in_domain" : "class_members";
  auto counts = [&](const LevelCounts& l) {
    return Json{{"graphs", l.graphs}, {positive, l.geometries}, {members, l.members}, {"certificates", l.certificates}};
  };
  Json out = {{"id", s.id}, {"kind", s.lemma ? "lemma" : "theorem"}, {"max_n", s.max_n}};
  out.update(counts(s.total()));
  Json levels = Json::array();
  for (const LevelCounts& l : s.levels) {
    Json entry = {{"n", l.order}};
    entry.update(counts(l));
    levels.push_back(std::move(entry));
  }
  out["levels"] = std::move(levels);
  return out;
}

// ---------------------------------------------------------------------------
// Running

const std::vector<Graph>& enumerated_graphs(int max_n) {
  static std::mutex lock;
  static std::map<int, std::unique_ptr<std::vector<Graph>>> cache;
  const std::scoped_lock guard(lock);
  if (auto it = cache.find(max_n); it != cache.end()) return *it->second;
  auto graphs = std::make_unique<std::vector<Graph>>();
  if (auto larger = cache.lower_bound(max_n); larger != cache.end()) {
    for (const Graph& g : *larger->second)
      if (g.order() <= max_n) graphs->push_back(g);
  } else {
    for (auto& level : connected_graphs_up_to(max_n))
      for (Graph& g : level) graphs->push_back(std::move(g));
  }
  return *cache.emplace(max_n, std::move(graphs)).first->second;
}

GeometryReport theorem_geometry(const Theorem& t, const Graph& g, const Limits& limits) {
  const auto c = t.convexity(g.order());
  if (!c) return GeometryReport{};
  return is_convex_geometry_mkm(ClosureSystem(g, *c, limits), limits);
}

namespace {

struct Row {
  bool positive = false;
  bool member = false;
  std::optional<Certificate> certificate;
};

std::vector<Row> run_rows(const std::vector<Graph>& graphs, unsigned jobs,
                          const std::function<Row(const Graph&)>& evaluate) {
  std::vector<Row> rows(graphs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_lock;
  auto work = [&] {
    for (std::size_t i = next++; i < graphs.size(); i = next++) {
      try {
        rows[i] = evaluate(graphs[i]);
      } catch (...) {
        const std::scoped_lock guard(failure_lock);
        if (!failure) failure = std::current_exception();
        next = graphs.size();
      }
    }
  };
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(graphs.size(), 1))));
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

VerifyResult fold(std::string id, bool lemma, int max_n, const std::vector<Graph>& graphs,
                  std::vector<Row>& rows) {
  VerifyResult result;
  result.summary.id = std::move(id);
  result.summary.lemma = lemma;
  result.summary.max_n = max_n;
  std::map<int, LevelCounts> levels;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    LevelCounts& l = levels[graphs[i].order()];
    l.order = graphs[i].order();
    ++l.graphs;
    l.geometries += rows[i].positive;
    l.members += rows[i].member;
    if (rows[i].certificate) {
      ++l.certificates;
      result.certificates.push_back(std::move(*rows[i].certificate));
    }
  }
  for (auto& [order, counts] : levels) result.summary.levels.push_back(counts);
  std::sort(result.certificates.begin(), result.certificates.end(), [](const Certificate& a, const Certificate& b) {
    return a.graph6 != b.graph6 ? a.graph6 < b.graph6 : a.id < b.id;
  });
  return result;
}

std::vector<Graph> select_graphs(const VerifyOptions& options, int max_n) {
  if (options.graphs) {
    std::vector<Graph> out;
    for (const Graph& g : *options.graphs)
      if (g.order() <= max_n) out.push_back(g);
    return out;
  }
  return enumerated_graphs(max_n);
}

int effective_max_n(const VerifyOptions& options, int fallback) {
  const int max_n = options.max_n > 0 ? options.max_n : fallback;
  if (max_n > kMaxEnumerationOrder) throw CapacityError("verification is limited to " +
                                                        std::to_string(kMaxEnumerationOrder) + " vertices");
  return max_n;
}

Row theorem_row(const Theorem& t, const Graph& g, const Limits& limits) {
  Row row;
  const GeometryReport report = theorem_geometry(t, g, limits);
  row.positive = report.verdict;
  row.member = t.member(g, limits);
  const bool violated = t.direction == Direction::iff ? row.positive != row.member : row.positive && !row.member;
  if (violated) row.certificate = Certificate{emit_graph6(g), t.id, row.positive, row.member, to_json(report)};
  return row;
}

Row lemma_row(const Lemma& l, const Graph& g, const Limits& limits) {
  const LemmaOutcome outcome = l.check(g, limits);
  Row row;
  row.positive = outcome.in_domain && outcome.holds;
  row.member = outcome.in_domain;
  if (outcome.in_domain && !outcome.holds)
    row.certificate = Certificate{emit_graph6(g), l.id, outcome.holds, outcome.in_domain, outcome.witness};
  return row;
}

}  // namespace

VerifyResult verify_theorem(const Theorem& t, const VerifyOptions& options) {
  const int max_n = effective_max_n(options, t.default_max_n);
  const std::vector<Graph> graphs = select_graphs(options, max_n);
  auto rows = run_rows(graphs, options.jobs, [&](const Graph& g) { return theorem_row(t, g, options.limits); });
  return fold(t.id, false, max_n, graphs, rows);
}

VerifyResult verify_lemma(const Lemma& l, const VerifyOptions& options) {
  const int max_n = effective_max_n(options, l.default_max_n);
  const std::vector<Graph> graphs = select_graphs(options, max_n);
  auto rows = run_rows(graphs, options.jobs, [&](const Graph& g) { return lemma_row(l, g, options.limits); });
  return fold(l.id, true, max_n, graphs, rows);
}

bool reverify(const Certificate& c, const Limits& limits) {
  const Graph g = parse_graph6(c.graph6);
  std::optional<Row> row;
  if (c.id.starts_with("L-")) {
    row = lemma_row(find_lemma(c.id), g, limits);
  } else {
    row = theorem_row(find_theorem(c.id), g, limits);
  }
  return row->certificate && *row->certificate == c;
}

// ---------------------------------------------------------------------------
// Fixtures

namespace {

std::vector<int> drawing_labels(const InducedSubgraph& sub, Mask local) {
  std::vector<int> out;
  for (; local != 0; local &= local - 1) out.push_back(sub.to_original[std::countr_zero(local)] + 1);
  return out;
}

}  // namespace

bool NonhereditaryReport::ok() const {
  return full_is_geometry && !minus2_is_geometry && !minus5_is_geometry && minus2_extremes == std::vector<int>{1, 7} &&
         minus2_hull_of_1_7 == std::vector<int>{1, 7};
}

NonhereditaryReport nonhereditary_fixture_check(const Graph& fixture) {
  if (fixture.order() != 7) throw InputError("the l3 fixture has seven vertices");
  const ConvexitySpec l3 = ConvexitySpec::lk(3);
  NonhereditaryReport report;
  report.full_is_geometry = is_convex_geometry_mkm(fixture, l3).verdict;

  const InducedSubgraph minus2 = induced_subgraph(fixture, fixture.vertices().without(1));
  const ClosureSystem closure2(minus2.graph, l3);
  report.minus2_is_geometry = is_convex_geometry_mkm(closure2).verdict;
  report.minus2_extremes = drawing_labels(minus2, closure2.extreme_vertices(minus2.graph.vertices()).bits());
  // labels 1 and 7 are local vertices 0 and 5 once label 2 is gone
  report.minus2_hull_of_1_7 = drawing_labels(minus2, closure2.hull_mask(bit(0) | bit(5)));

  const InducedSubgraph minus5 = induced_subgraph(fixture, fixture.vertices().without(4));
  report.minus5_is_geometry = is_convex_geometry_mkm(minus5.graph, l3).verdict;
  return report;
}

NonhereditaryReport nonhereditary_fixture_check() { return nonhereditary_fixture_check(patterns::l3_example().graph); }

bool GemReport::ok() const {
  return extremes == std::vector<std::string>{"a", "d"} && hull_of_a_d == std::vector<std::string>{"a", "d", "e"};
}

GemReport gem_fixture_check() {
  const PatternGraph gem = patterns::gem();
  const ClosureSystem closure(gem.graph, ConvexitySpec::geodetic());
  auto letters = [&](Mask m) {
    std::vector<std::string> out;
    for (; m != 0; m &= m - 1) out.push_back(gem.labels[std::countr_zero(m)]);
    return out;
  };
  GemReport report;
  report.extremes = letters(closure.extreme_vertices(gem.graph.vertices()).bits());
  report.hull_of_a_d = letters(closure.hull_mask(bit(gem.vertex("a")) | bit(gem.vertex("d"))));
  return report;
}

}  // namespace gconvex
