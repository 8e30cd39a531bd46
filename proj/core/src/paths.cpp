#include "gconvex/paths.hpp"

#include <array>
#include <bit>

namespace gconvex {

namespace {

class PathWalker {
 public:
  PathWalker(const Graph& g, const PathRule& rule, LengthBounds bounds, Vertex target, const PathVisitor& visit)
      : g_(g), rule_(rule), bounds_(bounds), target_(target), visit_(visit) {}

  void start(Vertex from) {
    path_[0] = from;
    pos_[from] = 0;
    on_path_ = bit(from);
    parity_[0] = bit(from);
    parity_[1] = 0;
    emit(1, 0);
    if (from != target_) grow(1);
  }

 private:
  // True if appending w at position j keeps the prefix legal; chords_out gets
  // the earlier path vertices adjacent to w other than its predecessor.
  bool chord_ok(Vertex w, int j, Mask& chords_out) const {
    const Mask earlier = on_path_ & ~bit(path_[j - 1]);
    const Mask chords = g_.row(w) & earlier;
    chords_out = chords;
    switch (rule_.kind()) {
      case PathRule::Kind::unrestricted:
        return true;
      case PathRule::Kind::induced:
        return chords == 0;
      case PathRule::Kind::triangle:
        return (chords & ~(j >= 2 ? bit(path_[j - 2]) : Mask{0})) == 0;
      case PathRule::Kind::even_chorded: {
        // positions i with j - i odd have parity opposite to j
        const Mask odd_distance = parity_[(j + 1) & 1];
        return (chords & odd_distance) == 0 && (chords & bit(path_[0])) == 0;
      }
      case PathRule::Kind::custom:
        for (Mask c = chords; c != 0; c &= c - 1) {
          if (!rule_.chord()(pos_[std::countr_zero(c)], j)) return false;
        }
        return true;
    }
    return false;
  }

  void emit(int count, Mask last_chords) {
    const int length = count - 1;
    if (length < bounds_.min || length > bounds_.max) return;
    const Vertex last = path_[count - 1];
    if (target_ >= 0 && last != target_) return;
    if (rule_.kind() == PathRule::Kind::even_chorded && last_chords != 0) return;
    std::span<const Vertex> p(path_.data(), count);
    if (rule_.kind() == PathRule::Kind::custom && rule_.complete() && !rule_.complete()(g_, p)) return;
    visit_(p);
  }

  void grow(int count) {
    if (count - 1 >= bounds_.max) return;
    const Vertex tail = path_[count - 1];
    for (Mask next = g_.row(tail) & ~on_path_; next != 0; next &= next - 1) {
      const Vertex w = std::countr_zero(next);
      Mask chords = 0;
      if (!chord_ok(w, count, chords)) continue;
      path_[count] = w;
      pos_[w] = count;
      on_path_ |= bit(w);
      parity_[count & 1] |= bit(w);
      emit(count + 1, chords);
      // Once the target is reached it cannot reappear on a simple path.
      if (w != target_) grow(count + 1);
      on_path_ &= ~bit(w);
      parity_[count & 1] &= ~bit(w);
    }
  }

  const Graph& g_;
  const PathRule& rule_;
  LengthBounds bounds_;
  Vertex target_;
  const PathVisitor& visit_;
  std::array<Vertex, kMaxVertices> path_{};
  std::array<int, kMaxVertices> pos_{};
  std::array<Mask, 2> parity_{};
  Mask on_path_ = 0;
};

}  // namespace

void for_each_path_from(const Graph& g, Vertex from, const PathRule& rule, LengthBounds bounds,
                        const PathVisitor& visit) {
  VertexSet::check_vertex(g.order(), from);
  PathWalker(g, rule, bounds, -1, visit).start(from);
}

void for_each_path(const Graph& g, Vertex u, Vertex v, const PathRule& rule, LengthBounds bounds,
                   const PathVisitor& visit) {
  VertexSet::check_vertex(g.order(), u);
  VertexSet::check_vertex(g.order(), v);
  PathWalker(g, rule, bounds, v, visit).start(u);
}

std::vector<std::vector<Vertex>> enumerate_simple_paths(const Graph& g, Vertex u, Vertex v, const PathRule& rule,
                                                        LengthBounds bounds) {
  std::vector<std::vector<Vertex>> out;
  for_each_path(g, u, v, rule, bounds, [&](std::span<const Vertex> p) { out.emplace_back(p.begin(), p.end()); });
  return out;
}

}  // namespace gconvex
