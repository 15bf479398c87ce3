#pragma once

#include <cstdint>
#include <stdexcept>

// Hierarchical coordinate system and long-range adjacency of an HN4 axis.
//
// An axis of side 2^n carries vertex labels 1..2^n (1-based; internal array
// indices are label-1 throughout the library).  Every label factors uniquely
// as v = 2^i * (2j+1); (i, j) are the level and the position within the
// level.  Levels 0..n-2 form rings of size 2^(n-i-1) connected by long-range
// edges; the two singleton levels n-1 and n (labels 2^(n-1) and 2^n) carry
// directed self-loops instead.

namespace hn4walk {

struct LatticeSpec {
  int dim = 1;                     // 1 (ring) or 2 (torus)
  int n = 2;                       // hierarchy depth, >= 2
  int side = 4;                    // 2^n
  std::int64_t vertex_count = 4;   // side^dim

  static LatticeSpec ring(int n);
  static LatticeSpec torus(int n);
};

struct Hn4Coord {
  int level = 0;  // i in [0, n]
  int index = 0;  // j in [0, level_size(i,n)-1]
};

struct AxisNeighbor {
  bool directed_self_loop = false;
  int prev = 0;  // valid only when !directed_self_loop
  int next = 0;
};

// v = 2^level * (2*index + 1); throws std::domain_error for v outside [1, 2^n].
Hn4Coord to_hn4(int v, int n);

// Inverse of to_hn4; throws std::domain_error for an invalid (level, index).
int from_hn4(Hn4Coord c, int n);

// Number of vertices on level i; the level sizes partition 2^n.
int level_size(int i, int n);

// Long-range neighbors of v on its level ring (wrap-around at the ring ends),
// or the directed self-loop marker for v in {2^(n-1), 2^n}.
AxisNeighbor long_range_neighbors(int v, int n);

bool is_directed_selfloop(int v, int n);

}  // namespace hn4walk
