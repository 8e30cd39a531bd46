#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gconvex/patterns.hpp"

namespace gconvex {

enum class ConvexityKind {
  geodetic,
  monophonic,
  m3,
  lk,
  strong,
  toll,
  weakly_toll,
  triangle_path,
  p3,
  f_free,
  p4_plus,
};

/// Which convexity to put on a graph, with its parameters.
///
/// Path-system convexities (everything except f_free and p4_plus) have an
/// interval oracle; the two closure-rule convexities are handled directly by
/// the convexity engine.
class ConvexitySpec {
 public:
  static ConvexitySpec geodetic() { return ConvexitySpec(ConvexityKind::geodetic); }
  static ConvexitySpec monophonic() { return ConvexitySpec(ConvexityKind::monophonic); }
  static ConvexitySpec m3() { return ConvexitySpec(ConvexityKind::m3); }
  static ConvexitySpec lk(int k);
  static ConvexitySpec strong() { return ConvexitySpec(ConvexityKind::strong); }
  static ConvexitySpec toll() { return ConvexitySpec(ConvexityKind::toll); }
  static ConvexitySpec weakly_toll() { return ConvexitySpec(ConvexityKind::weakly_toll); }
  static ConvexitySpec triangle_path() { return ConvexitySpec(ConvexityKind::triangle_path); }
  static ConvexitySpec p3() { return ConvexitySpec(ConvexityKind::p3); }
  /// Non-empty family; each member needs at least two vertices.
  static ConvexitySpec f_free(std::vector<PatternGraph> family);
  static ConvexitySpec p4_plus() { return ConvexitySpec(ConvexityKind::p4_plus); }

  ConvexityKind kind() const noexcept { return kind_; }
  int k() const noexcept { return k_; }
  const std::vector<PatternGraph>& family() const noexcept { return family_; }

  bool has_interval_oracle() const noexcept {
    return kind_ != ConvexityKind::f_free && kind_ != ConvexityKind::p4_plus;
  }

  /// Round-trips through parse_convexity, e.g. "l3", "weakly-toll", "ffree:K3;C4".
  std::string name() const;

 private:
  explicit ConvexitySpec(ConvexityKind kind) : kind_(kind) {}

  ConvexityKind kind_;
  int k_ = 0;
  std::vector<PatternGraph> family_;
};

/// Accepts geodetic, monophonic, m3, l<k>, strong, toll, weakly-toll,
/// triangle-path, p3, p4plus and ffree:<pattern>;<pattern>;...
ConvexitySpec parse_convexity(std::string_view name);

/// One instance of every kind (l2..l4, a small F-free family), for sweeps.
std::vector<ConvexitySpec> standard_convexities();

}  // namespace gconvex
