#include "hn4walk/stationary.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace hn4walk {

namespace {

inline int wrap_label(int v, int side) { return (v - 1 + side) % side + 1; }

void require_loop_label(int v, const LatticeSpec& lat, const char* what) {
  if (v != lat.side / 2 && v != lat.side)
    throw std::domain_error(std::string(what) + " must be " +
                            std::to_string(lat.side / 2) + " or " +
                            std::to_string(lat.side));
}

void require_axis_label(int v, const LatticeSpec& lat, const char* what) {
  if (v < 1 || v > lat.side)
    throw std::domain_error(std::string(what) + " outside [1, " +
                            std::to_string(lat.side) + "]");
}

void check_kind(const StationaryKind& kind, const LatticeSpec& lat) {
  if (std::holds_alternative<OneDSelfLoop>(kind)) {
    if (lat.dim != 1)
      throw std::domain_error("1D stationary kind on a 2D lattice");
  } else if (lat.dim != 2) {
    throw std::domain_error("2D stationary kind on a 1D lattice");
  }

  if (const auto* k = std::get_if<OneDSelfLoop>(&kind)) {
    require_loop_label(k->vertex, lat, "self-loop vertex");
  } else if (const auto* k = std::get_if<AdjacentStandard>(&kind)) {
    require_axis_label(k->vx, lat, "anchor x");
    require_axis_label(k->vy, lat, "anchor y");
  } else if (const auto* k = std::get_if<AdjacentLongRange>(&kind)) {
    if (k->anchor.level > lat.n - 2)
      throw std::domain_error("long-range anchor level has no ring");
    from_hn4(k->anchor, lat.n);  // validates (level, index)
    require_axis_label(k->other, lat, "shared coordinate");
  } else if (const auto* k = std::get_if<OneSelfLoop>(&kind)) {
    require_loop_label(k->loop_vertex, lat, "self-loop coordinate");
    require_axis_label(k->other, lat, "free coordinate");
  } else if (const auto* k = std::get_if<TwoSelfLoops>(&kind)) {
    require_loop_label(k->vx, lat, "corner x");
    require_loop_label(k->vy, lat, "corner y");
  }
}

// The two long-range-ring labels an AdjacentLongRange kind marks.
std::pair<int, int> ring_pair(const AdjacentLongRange& k,
                              const LatticeSpec& lat) {
  const int ring = level_size(k.anchor.level, lat.n);
  const int a = from_hn4(k.anchor, lat.n);
  const int b =
      from_hn4({k.anchor.level, (k.anchor.index + 1) % ring}, lat.n);
  return {a, b};
}

// (vertex, coin, coefficient) triples of the subtracted correction; the
// correction is sqrt((d0+l)/N) times these entries.
struct Correction {
  std::vector<std::int64_t> vertices;
  std::vector<int> coins;
  std::vector<double> coeffs;
  void add(std::int64_t v, int c, double w) {
    vertices.push_back(v);
    coins.push_back(c);
    coeffs.push_back(w);
  }
};

Correction correction_for(const StationaryKind& kind, const LatticeSpec& lat) {
  Correction out;
  if (const auto* k = std::get_if<OneDSelfLoop>(&kind)) {
    const std::int64_t v = k->vertex - 1;
    out.add(v, 2, 0.5);
    out.add(v, 3, 0.5);
  } else if (const auto* k = std::get_if<AdjacentStandard>(&kind)) {
    if (k->horizontal) {
      out.add(vertex_index(lat, k->vx, k->vy), 0, 1.0);
      out.add(vertex_index(lat, wrap_label(k->vx + 1, lat.side), k->vy), 1,
              1.0);
    } else {
      out.add(vertex_index(lat, k->vx, k->vy), 2, 1.0);
      out.add(vertex_index(lat, k->vx, wrap_label(k->vy + 1, lat.side)), 3,
              1.0);
    }
  } else if (const auto* k = std::get_if<AdjacentLongRange>(&kind)) {
    const auto [a, b] = ring_pair(*k, lat);
    if (k->horizontal) {
      out.add(vertex_index(lat, a, k->other), 4, 1.0);
      out.add(vertex_index(lat, b, k->other), 5, 1.0);
    } else {
      out.add(vertex_index(lat, k->other, a), 6, 1.0);
      out.add(vertex_index(lat, k->other, b), 7, 1.0);
    }
  } else if (const auto* k = std::get_if<OneSelfLoop>(&kind)) {
    const std::int64_t v = k->x_axis
                               ? vertex_index(lat, k->loop_vertex, k->other)
                               : vertex_index(lat, k->other, k->loop_vertex);
    const int c = k->x_axis ? 4 : 6;
    out.add(v, c, 0.5);
    out.add(v, c + 1, 0.5);
  } else if (const auto* k = std::get_if<TwoSelfLoops>(&kind)) {
    const std::int64_t v = vertex_index(lat, k->vx, k->vy);
    for (int c = 4; c <= 7; ++c) out.add(v, c, 0.25);
  }
  return out;
}

void require_builder_coin(const CoinSpec& coin) {
  coin.validate();
  if (coin.kind != CoinKind::Grover && coin.kind != CoinKind::Lackadaisical)
    throw std::domain_error(
        "stationary states are built with the Grover or lackadaisical coin");
}

}  // namespace

std::string kind_name(const StationaryKind& kind) {
  if (const auto* k = std::get_if<OneDSelfLoop>(&kind))
    return "1d-selfloop(" + std::to_string(k->vertex) + ")";
  if (const auto* k = std::get_if<AdjacentStandard>(&kind))
    return std::string("2d-adjacent-se-") + (k->horizontal ? "h(" : "v(") +
           std::to_string(k->vx) + "," + std::to_string(k->vy) + ")";
  if (const auto* k = std::get_if<AdjacentLongRange>(&kind))
    return std::string("2d-adjacent-le-") + (k->horizontal ? "h(" : "v(") +
           std::to_string(k->anchor.level) + "," +
           std::to_string(k->anchor.index) + ";" + std::to_string(k->other) +
           ")";
  if (const auto* k = std::get_if<OneSelfLoop>(&kind))
    return std::string("2d-one-selfloop-") + (k->x_axis ? "x(" : "y(") +
           std::to_string(k->loop_vertex) + ";" + std::to_string(k->other) +
           ")";
  const auto& k = std::get<TwoSelfLoops>(kind);
  return "2d-two-selfloops(" + std::to_string(k.vx) + "," +
         std::to_string(k.vy) + ")";
}

MarkedSet marked_set_for(const StationaryKind& kind, const LatticeSpec& lat) {
  check_kind(kind, lat);
  if (const auto* k = std::get_if<OneDSelfLoop>(&kind))
    return MarkedSet::ring_vertices(lat, {k->vertex});
  if (const auto* k = std::get_if<AdjacentStandard>(&kind)) {
    if (k->horizontal)
      return MarkedSet::torus_vertices(
          lat, {{k->vx, k->vy}, {wrap_label(k->vx + 1, lat.side), k->vy}});
    return MarkedSet::torus_vertices(
        lat, {{k->vx, k->vy}, {k->vx, wrap_label(k->vy + 1, lat.side)}});
  }
  if (const auto* k = std::get_if<AdjacentLongRange>(&kind)) {
    const auto [a, b] = ring_pair(*k, lat);
    if (k->horizontal)
      return MarkedSet::torus_vertices(lat,
                                       {{a, k->other}, {b, k->other}});
    return MarkedSet::torus_vertices(lat, {{k->other, a}, {k->other, b}});
  }
  if (const auto* k = std::get_if<OneSelfLoop>(&kind)) {
    if (k->x_axis)
      return MarkedSet::torus_vertices(lat, {{k->loop_vertex, k->other}});
    return MarkedSet::torus_vertices(lat, {{k->other, k->loop_vertex}});
  }
  const auto& k = std::get<TwoSelfLoops>(kind);
  return MarkedSet::torus_vertices(lat, {{k.vx, k.vy}});
}

std::vector<double> helper_coin_state(int lattice_dim, const CoinSpec& coin,
                                      int direction) {
  std::vector<double> s = uniform_coin_state(lattice_dim, coin);
  const int d0 = base_coin_dim(lattice_dim);
  if (direction < 0 || direction >= static_cast<int>(s.size()))
    throw std::domain_error("helper direction outside the coin basis");
  s[direction] -= std::sqrt(d0 + coin.loop_weight);
  return s;
}

WalkState build_stationary(const StationaryKind& kind, const LatticeSpec& lat,
                           const CoinSpec& coin) {
  check_kind(kind, lat);
  require_builder_coin(coin);
  const int d0 = base_coin_dim(lat.dim);
  const double k =
      std::sqrt((d0 + coin.loop_weight) / double(lat.vertex_count));
  WalkState psi = build_initial_state(lat, coin);
  const Correction corr = correction_for(kind, lat);
  for (std::size_t m = 0; m < corr.coins.size(); ++m)
    psi.at(corr.vertices[m], corr.coins[m]) -= k * corr.coeffs[m];
  return psi;
}

double correction_norm_sq(const StationaryKind& kind, const LatticeSpec& lat,
                          const CoinSpec& coin) {
  check_kind(kind, lat);
  const int d0 = base_coin_dim(lat.dim);
  const Correction corr = correction_for(kind, lat);
  double csq = 0.0;
  for (double w : corr.coeffs) csq += w * w;
  return (d0 + coin.loop_weight) / double(lat.vertex_count) * csq;
}

double residual(const Walk& op, const WalkState& psi) {
  WalkState evolved = psi;
  op.step(evolved);
  double s = 0.0;
  for (std::size_t i = 0; i < psi.amp.size(); ++i) {
    const double diff = evolved.amp[i] - psi.amp[i];
    s += diff * diff;
  }
  return std::sqrt(s);
}

WalkState predicted_action(CoinKind op, const StationaryKind& kind,
                           const LatticeSpec& lat,
                           const CoinSpec& builder_coin) {
  require_builder_coin(builder_coin);
  const bool op_has_loop =
      op == CoinKind::Lackadaisical || op == CoinKind::ModifiedG;
  if (op_has_loop != builder_coin.has_loop())
    throw std::domain_error(
        "operator and stationary-state coin families do not match");

  WalkState psi = build_stationary(kind, lat, builder_coin);
  if (op == CoinKind::Grover || op == CoinKind::Lackadaisical)
    return psi;  // exact eigenstate, action is the identity

  const double N = double(lat.vertex_count);
  const int d = coin_dim(lat.dim, builder_coin);
  const int d0 = base_coin_dim(lat.dim);
  const double l = builder_coin.loop_weight;

  // Helper-state term: one helper per corrected (vertex, direction), scaled
  // by 1/sqrt(N) per unit correction coefficient (the pair kinds carry
  // coefficient 1 and prefactor 2/sqrt(N); the self-loop kinds carry 1/2 or
  // 1/4 and prefactor 1/sqrt(N) or 1/(2 sqrt(N)) -- both equal 2*coeff).
  const Correction corr = correction_for(kind, lat);
  WalkState term = WalkState::zero(d, lat.vertex_count);
  for (std::size_t m = 0; m < corr.coins.size(); ++m) {
    const std::vector<double> h =
        helper_coin_state(lat.dim, builder_coin, corr.coins[m]);
    const double scale = 2.0 * corr.coeffs[m] / std::sqrt(N);
    double* x = term.amp.data() + corr.vertices[m] * d;
    for (int c = 0; c < d; ++c) x[c] += scale * h[c];
  }
  apply_shift(term, lat);
  for (std::size_t i = 0; i < psi.amp.size(); ++i) psi.amp[i] -= term.amp[i];

  if (op == CoinKind::ModifiedG) {
    WalkState lp_term = WalkState::zero(d, lat.vertex_count);
    const MarkedSet marked = marked_set_for(kind, lat);
    for (std::int64_t v : marked.indices()) lp_term.at(v, d0) = 1.0;
    apply_diffusion(lp_term, lat, builder_coin);
    apply_shift(lp_term, lat);
    const double w = 2.0 * std::sqrt(l / (N * (d0 + l)));
    for (std::size_t i = 0; i < psi.amp.size(); ++i)
      psi.amp[i] -= w * lp_term.amp[i];
  }
  return psi;
}

SuppressionReport suppression_bound_check(const MarkedSet& marked,
                                          const LatticeSpec& lat,
                                          const CoinSpec& coin, int t_max) {
  const Walk walk(lat, coin, marked);
  const TimeSeries ts = walk.evolve(t_max);
  SuppressionReport r;
  r.max_prob = ts.max_prob();
  r.argmax_t = ts.argmax_t();
  r.bound = 10.0 * double(marked.count()) / double(lat.vertex_count);
  r.pass = r.max_prob <= r.bound;
  return r;
}

SuppressionReport suppression_bound_check(const StationaryKind& kind,
                                          const LatticeSpec& lat,
                                          const CoinSpec& coin, int t_max) {
  return suppression_bound_check(marked_set_for(kind, lat), lat, coin, t_max);
}

}  // namespace hn4walk
