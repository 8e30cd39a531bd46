#include <iostream>

#include "gconvex/engine.hpp"
#include "gconvex/patterns.hpp"

int main() {
  const gconvex::PatternGraph gem = gconvex::patterns::gem();
  const auto hull = gconvex::hull(gem.graph, gconvex::ConvexitySpec::geodetic(),
                                  gconvex::VertexSet::of(5, {gem.vertex("a"), gem.vertex("d")}));
  std::cout << hull.size() << '\n';
  return hull.size() == 3 ? 0 : 1;
}
