#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hn4walk/coin.hpp"
#include "hn4walk/topology.hpp"

namespace hn4walk {

// Raised when an evolution produces probabilities outside [0, 1].
struct NumericalIntegrityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Flat index of a vertex; 2D vertices are stored row-major in v_y.
inline std::int64_t vertex_index(const LatticeSpec& lat, int vx, int vy = 1) {
  return lat.dim == 1 ? vx - 1
                      : std::int64_t(vy - 1) * lat.side + (vx - 1);
}

// Real amplitude vector over (vertex, coin), vertex-major:
// amp[v * coin_dim + c].  All four coins and both shifts are real, so real
// amplitudes are closed under evolution.
struct WalkState {
  std::vector<double> amp;
  int coin_dim = 0;
  std::int64_t vertices = 0;

  static WalkState zero(int coin_dim, std::int64_t vertices) {
    WalkState s;
    s.coin_dim = coin_dim;
    s.vertices = vertices;
    s.amp.assign(static_cast<std::size_t>(coin_dim) * vertices, 0.0);
    return s;
  }

  double& at(std::int64_t vertex, int coin) {
    return amp[static_cast<std::size_t>(vertex) * coin_dim + coin];
  }
  double at(std::int64_t vertex, int coin) const {
    return amp[static_cast<std::size_t>(vertex) * coin_dim + coin];
  }

  std::size_t size() const { return amp.size(); }
  double norm() const;
};

double dot(const WalkState& a, const WalkState& b);

// Distinct in-bounds vertices to mark; 1-based labels as in all I/O.
class MarkedSet {
 public:
  MarkedSet() = default;

  static MarkedSet ring_vertices(const LatticeSpec& lat,
                                 const std::vector<int>& labels);
  static MarkedSet torus_vertices(
      const LatticeSpec& lat,
      const std::vector<std::array<int, 2>>& labels);

  std::size_t count() const { return indices_.size(); }
  int dim() const { return dim_; }

  // Sorted unique 0-based flat vertex indices.
  const std::vector<std::int64_t>& indices() const { return indices_; }

  // Labels in insertion order; 1D sites store {v, 0}.
  const std::vector<std::array<int, 2>>& sites() const { return sites_; }

  std::string describe() const;  // "32" or "(1,1),(2,1)"

 private:
  int dim_ = 0;
  std::vector<std::int64_t> indices_;
  std::vector<std::array<int, 2>> sites_;
};

// Per-step success probabilities of one evolution run.
struct TimeSeries {
  std::vector<double> probs;  // probs[t], t = 0..t_max
  LatticeSpec lattice;
  CoinSpec coin;
  MarkedSet marked;

  double p0() const { return probs.front(); }
  double final_prob() const { return probs.back(); }
  double max_prob() const;
  int argmax_t() const;
};

}  // namespace hn4walk
