#pragma once

#include <string>
#include <vector>

namespace hn4walk {

// Coin basis layout (vertex-major state, block of coin_dim entries per
// vertex):
//   1D: 0 right, 1 left, 2 long-range right, 3 long-range left, [4 lp]
//   2D: 0 right, 1 left, 2 up, 3 down,
//       4 long-range x right, 5 long-range x left,
//       6 long-range y up, 7 long-range y down, [8 lp]
// The lp direction exists only for the lackadaisical and modified-G coins.

enum class CoinKind { Grover, Skw, Lackadaisical, ModifiedG };

struct CoinSpec {
  CoinKind kind = CoinKind::Grover;
  double loop_weight = 0.0;

  static CoinSpec grover() { return {CoinKind::Grover, 0.0}; }
  static CoinSpec skw() { return {CoinKind::Skw, 0.0}; }
  static CoinSpec lackadaisical(double l) { return {CoinKind::Lackadaisical, l}; }
  static CoinSpec modified_g(double l) { return {CoinKind::ModifiedG, l}; }

  bool has_loop() const {
    return kind == CoinKind::Lackadaisical || kind == CoinKind::ModifiedG;
  }

  // Throws std::domain_error on a negative weight or a nonzero weight for
  // the loopless coins.
  void validate() const;
};

inline int base_coin_dim(int lattice_dim) { return lattice_dim == 1 ? 4 : 8; }

inline int coin_dim(int lattice_dim, const CoinSpec& c) {
  return base_coin_dim(lattice_dim) + (c.has_loop() ? 1 : 0);
}

inline int loop_index(int lattice_dim) { return base_coin_dim(lattice_dim); }

// Unit coin state the diffusion reflects about: 1/sqrt(d0+l) on every edge
// direction and sqrt(l)/sqrt(d0+l) on lp.
std::vector<double> uniform_coin_state(int lattice_dim, const CoinSpec& c);

const char* coin_name(CoinKind k);
CoinKind parse_coin_kind(const std::string& name);  // throws std::invalid_argument

}  // namespace hn4walk
