#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "gconvex/convexity.hpp"
#include "gconvex/engine.hpp"
#include "gconvex/graph.hpp"

namespace gconvex {

// Exhaustive checking of the convex-geometry characterizations over all
// small connected graphs.

enum class Direction {
  iff,      // geometry exactly when in the class
  only_if,  // geometry implies class membership
};

/// A characterization "G is a convex geometry for this convexity iff (or
/// only if) G belongs to this class".
struct Theorem {
  std::string id;
  Direction direction = Direction::iff;
  int default_max_n = 8;
  std::string class_name;
  /// Convexity to test on graphs of the given order. nullopt stands for a
  /// generated F-free family that is still empty at that order: nothing is
  /// ever forced, so every graph is trivially a geometry.
  std::function<std::optional<ConvexitySpec>(int order)> convexity;
  std::function<bool(const Graph&, const Limits&)> member;
};

/// The fixed entries plus T-LK-NEC:2..5 and a handful of T-FFREE families.
std::vector<Theorem> theorem_registry();

/// Registry lookup. Also builds parametrised ids on demand: "T-LK-NEC:<k>",
/// "T-FFREE:<pattern>;<pattern>..." and "INV:<id>" (class side negated, for
/// harness self-tests). Throws InputError for unknown ids.
Theorem find_theorem(std::string_view id);

/// Same theorem with the class verdict negated and id "INV:<id>".
Theorem inverted(Theorem t);

/// Outcome of one lemma on one graph. Graphs outside the lemma's domain are
/// counted but never produce certificates.
struct LemmaOutcome {
  bool in_domain = true;
  bool holds = true;
  nlohmann::json witness;
};

struct Lemma {
  std::string id;
  int default_max_n = 7;
  std::string domain;
  std::string statement;
  std::function<LemmaOutcome(const Graph&, const Limits&)> check;
};

std::vector<Lemma> lemma_registry();
Lemma find_lemma(std::string_view id);

/// Serializable record of one failure. For theorems `geometry` and `member`
/// are the two verdicts that disagreed; for lemmas `geometry` is whether the
/// lemma held and `member` whether the graph was in its domain.
struct Certificate {
  std::string graph6;
  std::string id;
  bool geometry = false;
  bool member = false;
  nlohmann::json witness;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

nlohmann::json to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);

/// Certificates one JSON object per line.
std::string to_jsonl(const std::vector<Certificate>& certificates);
std::vector<Certificate> certificates_from_jsonl(std::string_view text);

/// Recomputes both sides for the graph and id stored in the certificate and
/// checks that the stored verdicts and witness come out again.
bool reverify(const Certificate& c, const Limits& limits = {});

struct LevelCounts {
  int order = 0;
  long graphs = 0;
  long geometries = 0;  // lemmas: graphs on which the statement held
  long members = 0;     // lemmas: graphs inside the domain
  long certificates = 0;
};

struct Summary {
  std::string id;
  bool lemma = false;
  int max_n = 0;
  std::vector<LevelCounts> levels;

  LevelCounts total() const;
};

nlohmann::json to_json(const Summary& s);

struct VerifyOptions {
  int max_n = 0;  // 0 selects the entry's default
  unsigned jobs = 1;
  Limits limits;
  /// Graphs to check instead of the built-in enumeration (all connected).
  const std::vector<Graph>* graphs = nullptr;
};

struct VerifyResult {
  Summary summary;
  std::vector<Certificate> certificates;  // sorted by graph6
};

VerifyResult verify_theorem(const Theorem& t, const VerifyOptions& options = {});
VerifyResult verify_lemma(const Lemma& l, const VerifyOptions& options = {});

/// Shared, lazily built enumeration of connected graphs, orders 1..max_n in
/// increasing order.
const std::vector<Graph>& enumerated_graphs(int max_n);

/// The geometry side of a theorem on one graph (MKM test).
GeometryReport theorem_geometry(const Theorem& t, const Graph& g, const Limits& limits = {});

nlohmann::json to_json(const VertexSet& s);
nlohmann::json to_json(const GeometryReport& r);

/// The seven-vertex l3 example and its vertex-deleted subgraphs. Vertex
/// sets are reported in the drawing's labels 1..7.
struct NonhereditaryReport {
  bool full_is_geometry = false;
  bool minus2_is_geometry = true;
  bool minus5_is_geometry = true;
  std::vector<int> minus2_extremes;
  std::vector<int> minus2_hull_of_1_7;

  /// The full graph is a geometry, neither deletion is, ext(V(G-2)) = {1,7}
  /// and H({1,7}) = {1,7} in G-2.
  bool ok() const;
};

/// Runs on the documented fixture by default; pass a variant on the same
/// seven vertices to probe sensitivity.
NonhereditaryReport nonhereditary_fixture_check(const Graph& fixture);
NonhereditaryReport nonhereditary_fixture_check();

/// Gem under geodetic convexity: ext(V) and H({a, d}), in the letters a..e.
struct GemReport {
  std::vector<std::string> extremes;
  std::vector<std::string> hull_of_a_d;

  /// ext(V) = {a, d} and H({a, d}) = {a, d, e}.
  bool ok() const;
};

GemReport gem_fixture_check();

}  // namespace gconvex
