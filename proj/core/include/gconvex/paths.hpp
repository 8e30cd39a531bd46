#pragma once

#include <functional>
#include <span>
#include <vector>

#include "gconvex/graph.hpp"

namespace gconvex {

/// Which chords a path may carry. A chord joins path positions i < j with
/// j - i >= 2.
class PathRule {
 public:
  enum class Kind { unrestricted, induced, even_chorded, triangle, custom };

  using ChordPredicate = std::function<bool(int i, int j)>;
  using CompletionPredicate = std::function<bool(const Graph&, std::span<const Vertex>)>;

  static PathRule unrestricted() { return PathRule(Kind::unrestricted); }
  /// No chord at all.
  static PathRule induced() { return PathRule(Kind::induced); }
  /// No chord with odd j - i, and neither end vertex lies on a chord.
  static PathRule even_chorded() { return PathRule(Kind::even_chorded); }
  /// Only chords with j - i == 2.
  static PathRule triangle() { return PathRule(Kind::triangle); }
  /// `chord` is consulted for every chord as soon as it appears; `complete`
  /// (optional) sees each finished path.
  static PathRule custom(ChordPredicate chord, CompletionPredicate complete = {}) {
    PathRule r(Kind::custom);
    r.chord_ = std::move(chord);
    r.complete_ = std::move(complete);
    return r;
  }

  Kind kind() const noexcept { return kind_; }
  const ChordPredicate& chord() const noexcept { return chord_; }
  const CompletionPredicate& complete() const noexcept { return complete_; }

 private:
  explicit PathRule(Kind k) : kind_(k) {}

  Kind kind_;
  ChordPredicate chord_;
  CompletionPredicate complete_;
};

/// Path length in edges.
struct LengthBounds {
  int min = 0;
  int max = kMaxVertices;
};

using PathVisitor = std::function<void(std::span<const Vertex>)>;

/// Every simple path that starts at `from`, satisfies the rule and the
/// bounds, whatever its end vertex. Backtracking with prefix pruning.
void for_each_path_from(const Graph& g, Vertex from, const PathRule& rule, LengthBounds bounds,
                        const PathVisitor& visit);

/// Simple u-v paths satisfying the rule, in backtracking order.
void for_each_path(const Graph& g, Vertex u, Vertex v, const PathRule& rule, LengthBounds bounds,
                   const PathVisitor& visit);

std::vector<std::vector<Vertex>> enumerate_simple_paths(const Graph& g, Vertex u, Vertex v, const PathRule& rule,
                                                        LengthBounds bounds = {});

}  // namespace gconvex
