#include "hn4walk/walk.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>

namespace hn4walk {

namespace {

inline int wrap_label(int v, int side) { return (v - 1 + side) % side + 1; }

// Per-axis long-range moves, resolved once: self-loop vertices map to
// themselves with sentinel loop=true.
struct AxisLongRange {
  std::vector<std::uint8_t> loop;  // indexed by label
  std::vector<int> prev, next;
};

AxisLongRange axis_long_range(int n) {
  const int side = 1 << n;
  AxisLongRange t;
  t.loop.assign(side + 1, 0);
  t.prev.assign(side + 1, 0);
  t.next.assign(side + 1, 0);
  for (int v = 1; v <= side; ++v) {
    const AxisNeighbor nb = long_range_neighbors(v, n);
    if (nb.directed_self_loop) {
      t.loop[v] = 1;
    } else {
      t.prev[v] = nb.prev;
      t.next[v] = nb.next;
    }
  }
  return t;
}

}  // namespace

std::vector<std::int64_t> build_shift_permutation(const LatticeSpec& lat,
                                                  int d) {
  const int base = base_coin_dim(lat.dim);
  if (d != base && d != base + 1)
    throw std::domain_error("coin dimension does not match lattice");
  const bool lp = d == base + 1;
  const int side = lat.side;
  const AxisLongRange lr = axis_long_range(lat.n);

  std::vector<std::int64_t> perm(static_cast<std::size_t>(d) *
                                 lat.vertex_count);
  auto at = [&](std::int64_t vertex, int coin) { return vertex * d + coin; };

  if (lat.dim == 1) {
    for (int v = 1; v <= side; ++v) {
      const std::int64_t i = v - 1;
      perm[at(i, 0)] = at(wrap_label(v + 1, side) - 1, 1);
      perm[at(i, 1)] = at(wrap_label(v - 1, side) - 1, 0);
      if (lr.loop[v]) {
        perm[at(i, 2)] = at(i, 3);
        perm[at(i, 3)] = at(i, 2);
      } else {
        perm[at(i, 2)] = at(lr.next[v] - 1, 3);
        perm[at(i, 3)] = at(lr.prev[v] - 1, 2);
      }
      if (lp) perm[at(i, 4)] = at(i, 4);
    }
    return perm;
  }

  for (int vy = 1; vy <= side; ++vy) {
    for (int vx = 1; vx <= side; ++vx) {
      const std::int64_t i = vertex_index(lat, vx, vy);
      perm[at(i, 0)] = at(vertex_index(lat, wrap_label(vx + 1, side), vy), 1);
      perm[at(i, 1)] = at(vertex_index(lat, wrap_label(vx - 1, side), vy), 0);
      perm[at(i, 2)] = at(vertex_index(lat, vx, wrap_label(vy + 1, side)), 3);
      perm[at(i, 3)] = at(vertex_index(lat, vx, wrap_label(vy - 1, side)), 2);
      if (lr.loop[vx]) {
        perm[at(i, 4)] = at(i, 5);
        perm[at(i, 5)] = at(i, 4);
      } else {
        perm[at(i, 4)] = at(vertex_index(lat, lr.next[vx], vy), 5);
        perm[at(i, 5)] = at(vertex_index(lat, lr.prev[vx], vy), 4);
      }
      if (lr.loop[vy]) {
        perm[at(i, 6)] = at(i, 7);
        perm[at(i, 7)] = at(i, 6);
      } else {
        perm[at(i, 6)] = at(vertex_index(lat, vx, lr.next[vy]), 7);
        perm[at(i, 7)] = at(vertex_index(lat, vx, lr.prev[vy]), 6);
      }
      if (lp) perm[at(i, 8)] = at(i, 8);
    }
  }
  return perm;
}

WalkState build_initial_state(const LatticeSpec& lat, const CoinSpec& coin) {
  coin.validate();
  const int d = coin_dim(lat.dim, coin);
  const int d0 = base_coin_dim(lat.dim);
  WalkState s = WalkState::zero(d, lat.vertex_count);
  const double edge =
      1.0 / std::sqrt((d0 + coin.loop_weight) * double(lat.vertex_count));
  const double loop = std::sqrt(coin.loop_weight) * edge;
  for (std::int64_t v = 0; v < lat.vertex_count; ++v) {
    double* x = s.amp.data() + v * d;
    for (int c = 0; c < d0; ++c) x[c] = edge;
    if (coin.has_loop()) x[d0] = loop;
  }
  return s;
}

void apply_shift(WalkState& state, const LatticeSpec& lat) {
  const auto perm = build_shift_permutation(lat, state.coin_dim);
  std::vector<double> tmp(state.amp.size());
  for (std::size_t i = 0; i < perm.size(); ++i)
    tmp[perm[i]] = state.amp[i];
  state.amp.swap(tmp);
}

void apply_diffusion(WalkState& state, const LatticeSpec& lat,
                     const CoinSpec& coin) {
  const std::vector<double> s = uniform_coin_state(lat.dim, coin);
  const int d = static_cast<int>(s.size());
  if (state.coin_dim != d || state.vertices != lat.vertex_count)
    throw std::invalid_argument("state dimension mismatch in apply_diffusion");
  for (std::int64_t v = 0; v < state.vertices; ++v) {
    double* x = state.amp.data() + v * d;
    double dot = 0.0;
    for (int c = 0; c < d; ++c) dot += s[c] * x[c];
    for (int c = 0; c < d; ++c) x[c] = 2.0 * dot * s[c] - x[c];
  }
}

double success_probability(const WalkState& state, const MarkedSet& marked) {
  double p = 0.0;
  for (std::int64_t v : marked.indices()) {
    const double* x = state.amp.data() + v * state.coin_dim;
    for (int c = 0; c < state.coin_dim; ++c) p += x[c] * x[c];
  }
  return p;
}

int default_t_max(const LatticeSpec& lat) {
  const double N = double(lat.vertex_count);
  return 4 * static_cast<int>(std::ceil(std::sqrt(N * std::log(N))));
}

Walk::Walk(const LatticeSpec& lat, const CoinSpec& coin,
           const MarkedSet& marked)
    : lattice_(lat), coin_(coin), marked_(marked) {
  coin_.validate();
  if (marked_.count() == 0)
    throw std::domain_error("marked set must be nonempty");
  if (marked_.dim() != lat.dim)
    throw std::domain_error("marked set dimension does not match lattice");
  for (std::int64_t v : marked_.indices())
    if (v < 0 || v >= lat.vertex_count)
      throw std::domain_error("marked vertex outside lattice");
  if (coin_.kind == CoinKind::ModifiedG && coin_.loop_weight == 0.0)
    std::cerr << "hn4walk: warning: modified-g with zero loop weight is "
                 "degenerate (the self-loop amplitude stays zero)\n";
  d_ = hn4walk::coin_dim(lat.dim, coin_);
  coin_axis_ = uniform_coin_state(lat.dim, coin_);
  marked_flag_.assign(lat.vertex_count, 0);
  for (std::int64_t v : marked_.indices()) marked_flag_[v] = 1;
  perm_ = build_shift_permutation(lat, d_);
}

WalkState Walk::initial_state() const {
  return build_initial_state(lattice_, coin_);
}

void Walk::check_state(const WalkState& s) const {
  if (s.coin_dim != d_ || s.vertices != lattice_.vertex_count)
    throw std::invalid_argument("state dimension mismatch");
}

inline void Walk::coin_block(double* x) const {
  double dot = 0.0;
  for (int c = 0; c < d_; ++c) dot += coin_axis_[c] * x[c];
  dot *= 2.0;
  for (int c = 0; c < d_; ++c) x[c] = dot * coin_axis_[c] - x[c];
}

void Walk::apply_coin(WalkState& state) const {
  check_state(state);
  const int lp = loop_index(lattice_.dim);
  for (std::int64_t v = 0; v < lattice_.vertex_count; ++v) {
    double* x = state.amp.data() + v * d_;
    switch (coin_.kind) {
      case CoinKind::Grover:
      case CoinKind::Lackadaisical:
        coin_block(x);
        if (marked_flag_[v])
          for (int c = 0; c < d_; ++c) x[c] = -x[c];
        break;
      case CoinKind::Skw:
        if (marked_flag_[v])
          for (int c = 0; c < d_; ++c) x[c] = -x[c];
        else
          coin_block(x);
        break;
      case CoinKind::ModifiedG:
        if (marked_flag_[v]) x[lp] = -x[lp];
        coin_block(x);
        break;
    }
  }
}

void Walk::apply_shift(WalkState& state) const {
  check_state(state);
  std::vector<double> tmp(state.amp.size());
  for (std::size_t i = 0; i < perm_.size(); ++i)
    tmp[perm_[i]] = state.amp[i];
  state.amp.swap(tmp);
}

void Walk::step(WalkState& state) const {
  apply_coin(state);
  apply_shift(state);
}

double Walk::success_probability(const WalkState& state) const {
  return hn4walk::success_probability(state, marked_);
}

TimeSeries Walk::evolve(int t_max) const {
  if (t_max < 0) throw std::domain_error("t_max must be nonnegative");
  TimeSeries ts;
  ts.lattice = lattice_;
  ts.coin = coin_;
  ts.marked = marked_;
  ts.probs.reserve(t_max + 1);

  WalkState s = initial_state();
  std::vector<double> scratch(s.amp.size());
  ts.probs.push_back(success_probability(s));
  for (int t = 1; t <= t_max; ++t) {
    apply_coin(s);
    for (std::size_t i = 0; i < perm_.size(); ++i)
      scratch[perm_[i]] = s.amp[i];
    s.amp.swap(scratch);
    ts.probs.push_back(success_probability(s));
  }
  return ts;
}

}  // namespace hn4walk
