#pragma once

#include <cstdint>
#include <vector>

#include "hn4walk/coin.hpp"
#include "hn4walk/state.hpp"
#include "hn4walk/topology.hpp"

namespace hn4walk {

// Flip-flop shift as a basis permutation: entry i holds the image of basis
// state i.  The permutation is an involution, so applying it twice is the
// identity with no floating-point error.
std::vector<std::int64_t> build_shift_permutation(const LatticeSpec& lat,
                                                  int coin_dim);

// |psi(0)>: uniform over vertices, loop-weighted uniform over coin
// directions.  Every vertex carries probability exactly 1/N.
WalkState build_initial_state(const LatticeSpec& lat, const CoinSpec& coin);

// S applied standalone (builds the permutation on the fly).
void apply_shift(WalkState& state, const LatticeSpec& lat);

// (D ⊗ I): the loop-weighted Grover diffusion applied at every vertex block,
// with no marked-vertex handling.
void apply_diffusion(WalkState& state, const LatticeSpec& lat,
                     const CoinSpec& coin);

double success_probability(const WalkState& state, const MarkedSet& marked);

// Iteration horizon used when the caller does not give one.
int default_t_max(const LatticeSpec& lat);

// One search configuration: lattice + coin + marked set, with the shift
// permutation and marked flags precomputed.  A Walk is immutable after
// construction; distinct Walks share nothing and a single evolve() run is
// sequential in t.
class Walk {
 public:
  Walk(const LatticeSpec& lat, const CoinSpec& coin, const MarkedSet& marked);

  const LatticeSpec& lattice() const { return lattice_; }
  const CoinSpec& coin() const { return coin_; }
  const MarkedSet& marked() const { return marked_; }
  int coin_dim() const { return d_; }

  WalkState initial_state() const;
  void apply_coin(WalkState& state) const;
  void apply_shift(WalkState& state) const;
  void step(WalkState& state) const;  // shift after coin
  double success_probability(const WalkState& state) const;

  // p(t) for t = 0..t_max starting from the uniform initial state.
  TimeSeries evolve(int t_max) const;

  const std::vector<std::int64_t>& shift_permutation() const { return perm_; }

 private:
  LatticeSpec lattice_;
  CoinSpec coin_;
  MarkedSet marked_;
  int d_;
  std::vector<double> coin_axis_;          // state the diffusion reflects about
  std::vector<std::uint8_t> marked_flag_;  // per vertex
  std::vector<std::int64_t> perm_;

  void coin_block(double* x) const;         // diffusion on one vertex block
  void check_state(const WalkState&) const;
};

}  // namespace hn4walk
