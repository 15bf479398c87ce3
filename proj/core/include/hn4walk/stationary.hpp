#pragma once

#include <string>
#include <variant>
#include <vector>

#include "hn4walk/state.hpp"
#include "hn4walk/topology.hpp"
#include "hn4walk/walk.hpp"

// Exceptional-configuration stationary states: for each configuration the
// Grover and lackadaisical evolution operators admit an eigenvalue-1 state
// that is the uniform initial state minus a small correction at the marked
// vertices.  The SKW and modified-G operators break the invariance; their
// action on the state has a closed form built from helper coin states,
// reproduced here exactly.

namespace hn4walk {

// Marked vertex carrying a directed long-range self-loop, 1D; vertex is
// side/2 or side.
struct OneDSelfLoop {
  int vertex;
};

// Two marked vertices adjacent by a standard torus edge; the partner sits at
// anchor+1 along the axis (wrapping).
struct AdjacentStandard {
  bool horizontal;
  int vx, vy;  // anchor
};

// Two marked vertices adjacent on a long-range level ring; the partner sits
// at (level, index+1) on the anchor's ring, the other axis coordinate is
// shared.
struct AdjacentLongRange {
  bool horizontal;   // true: x coordinates adjacent, y shared
  Hn4Coord anchor;   // level <= n-2
  int other;         // the shared coordinate
};

// Marked 2D vertex whose x (or y) coordinate is a directed-self-loop label;
// the free coordinate is arbitrary.
struct OneSelfLoop {
  bool x_axis;      // true: loop on the x coordinate
  int loop_vertex;  // side/2 or side
  int other;        // free coordinate on the other axis
};

// Marked 2D vertex with directed self-loops on both axes (the four corners
// {side/2, side} x {side/2, side}).
struct TwoSelfLoops {
  int vx, vy;
};

using StationaryKind = std::variant<OneDSelfLoop, AdjacentStandard,
                                    AdjacentLongRange, OneSelfLoop,
                                    TwoSelfLoops>;

std::string kind_name(const StationaryKind& kind);

// The marked set each configuration implies.
MarkedSet marked_set_for(const StationaryKind& kind, const LatticeSpec& lat);

// Helper coin state |psi_cl(0)> - sqrt(d0+l)|direction>; orthogonal to
// |psi_cl(0)>.
std::vector<double> helper_coin_state(int lattice_dim, const CoinSpec& coin,
                                      int direction);

// The non-normalized stationary candidate |psi(0)> minus the kind-specific
// correction.  coin.kind must be Grover (l = 0) or Lackadaisical.
WalkState build_stationary(const StationaryKind& kind, const LatticeSpec& lat,
                           const CoinSpec& coin);

// Norm^2 of the subtracted correction, in closed form.
double correction_norm_sq(const StationaryKind& kind, const LatticeSpec& lat,
                          const CoinSpec& coin);

// ||U psi - psi|| for the evolution operator the Walk encodes.
double residual(const Walk& op, const WalkState& psi);

// Closed-form right-hand side of U_op applied to the kind's stationary
// state.  For op Grover/Lackadaisical this is the state itself; for Skw and
// ModifiedG it carries the helper-state correction (and for ModifiedG the
// shifted-diffused lp term).  builder_coin must match op: Grover form for
// {Grover, Skw}, Lackadaisical form for {Lackadaisical, ModifiedG}, with the
// operator reusing the builder's loop weight.
WalkState predicted_action(CoinKind op, const StationaryKind& kind,
                           const LatticeSpec& lat,
                           const CoinSpec& builder_coin);

struct SuppressionReport {
  double max_prob = 0.0;
  int argmax_t = 0;
  double bound = 0.0;  // 10 * M / N
  bool pass = false;
};

// Evolves the configuration and checks max_t p(t) against 10*M/N.  A failed
// bound is a report outcome, not an error.
SuppressionReport suppression_bound_check(const MarkedSet& marked,
                                          const LatticeSpec& lat,
                                          const CoinSpec& coin, int t_max);
SuppressionReport suppression_bound_check(const StationaryKind& kind,
                                          const LatticeSpec& lat,
                                          const CoinSpec& coin, int t_max);

}  // namespace hn4walk
