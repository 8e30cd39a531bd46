#include "gconvex/convexity.hpp"

#include <charconv>

namespace gconvex {

ConvexitySpec ConvexitySpec::lk(int k) {
  if (k < 1) throw InputError("l^k convexity needs k >= 1");
  ConvexitySpec c(ConvexityKind::lk);
  c.k_ = k;
  return c;
}

ConvexitySpec ConvexitySpec::f_free(std::vector<PatternGraph> family) {
  if (family.empty()) throw InputError("F-free convexity needs a non-empty family");
  for (const auto& p : family) {
    if (p.graph.order() < 2) throw InputError("F-free family member " + p.name + " is trivial");
  }
  ConvexitySpec c(ConvexityKind::f_free);
  c.family_ = std::move(family);
  return c;
}

std::string ConvexitySpec::name() const {
  switch (kind_) {
    case ConvexityKind::geodetic: return "geodetic";
    case ConvexityKind::monophonic: return "monophonic";
    case ConvexityKind::m3: return "m3";
    case ConvexityKind::lk: return "l" + std::to_string(k_);
    case ConvexityKind::strong: return "strong";
    case ConvexityKind::toll: return "toll";
    case ConvexityKind::weakly_toll: return "weakly-toll";
    case ConvexityKind::triangle_path: return "triangle-path";
    case ConvexityKind::p3: return "p3";
    case ConvexityKind::p4_plus: return "p4plus";
    case ConvexityKind::f_free: {
      std::string out = "ffree:";
      for (std::size_t i = 0; i < family_.size(); ++i) {
        if (i) out += ';';
        out += family_[i].name;
      }
      return out;
    }
  }
  return "?";
}

ConvexitySpec parse_convexity(std::string_view name) {
  if (name == "geodetic") return ConvexitySpec::geodetic();
  if (name == "monophonic") return ConvexitySpec::monophonic();
  if (name == "m3") return ConvexitySpec::m3();
  if (name == "strong") return ConvexitySpec::strong();
  if (name == "toll") return ConvexitySpec::toll();
  if (name == "weakly-toll" || name == "weaklyToll") return ConvexitySpec::weakly_toll();
  if (name == "triangle-path" || name == "trianglePath") return ConvexitySpec::triangle_path();
  if (name == "p3") return ConvexitySpec::p3();
  if (name == "p4plus" || name == "p4+") return ConvexitySpec::p4_plus();
  if (name.size() > 1 && name[0] == 'l') {
    int k = 0;
    auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), k);
    if (ec == std::errc{} && ptr == name.data() + name.size()) return ConvexitySpec::lk(k);
  }
  if (name.starts_with("ffree:")) {
    // Members are separated by ';' since names such as K3,3 contain commas.
    std::vector<PatternGraph> family;
    std::string_view rest = name.substr(6);
    while (!rest.empty()) {
      const auto cut = rest.find(';');
      family.push_back(patterns::by_name(rest.substr(0, cut)));
      if (cut == std::string_view::npos) break;
      rest = rest.substr(cut + 1);
    }
    return ConvexitySpec::f_free(std::move(family));
  }
  if (name == "ffree") throw InputError("ffree convexity needs a family (ffree:<pattern>;...)");
  throw InputError("unknown convexity '" + std::string(name) + "'");
}

std::vector<ConvexitySpec> standard_convexities() {
  return {ConvexitySpec::geodetic(),      ConvexitySpec::monophonic(),
          ConvexitySpec::m3(),            ConvexitySpec::lk(2),
          ConvexitySpec::lk(3),           ConvexitySpec::lk(4),
          ConvexitySpec::strong(),        ConvexitySpec::toll(),
          ConvexitySpec::weakly_toll(),   ConvexitySpec::triangle_path(),
          ConvexitySpec::p3(),            ConvexitySpec::f_free({patterns::complete(3), patterns::cycle(4)}),
          ConvexitySpec::p4_plus()};
}

}  // namespace gconvex
