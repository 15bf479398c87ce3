#include "hn4walk/topology.hpp"

#include <bit>
#include <string>

namespace hn4walk {

namespace {

void check_depth(int n) {
  if (n < 2 || n > 30)
    throw std::domain_error("hierarchy depth n must be in [2, 30], got " +
                            std::to_string(n));
}

}  // namespace

LatticeSpec LatticeSpec::ring(int n) {
  check_depth(n);
  LatticeSpec s;
  s.dim = 1;
  s.n = n;
  s.side = 1 << n;
  s.vertex_count = s.side;
  return s;
}

LatticeSpec LatticeSpec::torus(int n) {
  check_depth(n);
  LatticeSpec s;
  s.dim = 2;
  s.n = n;
  s.side = 1 << n;
  s.vertex_count = std::int64_t(s.side) * s.side;
  return s;
}

Hn4Coord to_hn4(int v, int n) {
  check_depth(n);
  if (v < 1 || v > (1 << n))
    throw std::domain_error("vertex label " + std::to_string(v) +
                            " outside [1, " + std::to_string(1 << n) + "]");
  const int i = std::countr_zero(static_cast<unsigned>(v));
  return Hn4Coord{i, ((v >> i) - 1) / 2};
}

int from_hn4(Hn4Coord c, int n) {
  check_depth(n);
  if (c.level < 0 || c.level > n || c.index < 0 ||
      c.index >= level_size(c.level, n))
    throw std::domain_error("invalid HN4 coordinate (" +
                            std::to_string(c.level) + ", " +
                            std::to_string(c.index) + ") for n=" +
                            std::to_string(n));
  return (1 << c.level) * (2 * c.index + 1);
}

int level_size(int i, int n) {
  check_depth(n);
  if (i < 0 || i > n)
    throw std::domain_error("level " + std::to_string(i) + " outside [0, " +
                            std::to_string(n) + "]");
  return i >= n - 1 ? 1 : 1 << (n - i - 1);
}

AxisNeighbor long_range_neighbors(int v, int n) {
  const Hn4Coord c = to_hn4(v, n);
  if (c.level >= n - 1) return AxisNeighbor{true, 0, 0};
  const int ring = level_size(c.level, n);
  const int prev = from_hn4({c.level, (c.index + ring - 1) % ring}, n);
  const int next = from_hn4({c.level, (c.index + 1) % ring}, n);
  return AxisNeighbor{false, prev, next};
}

bool is_directed_selfloop(int v, int n) {
  return to_hn4(v, n).level >= n - 1;
}

}  // namespace hn4walk
