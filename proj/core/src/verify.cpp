#include "hn4walk/verify.hpp"

#include <cmath>
#include <random>
#include <utility>

#include "hn4walk/dense_oracle.hpp"
#include "hn4walk/stationary.hpp"
#include "hn4walk/state.hpp"
#include "hn4walk/topology.hpp"
#include "hn4walk/walk.hpp"

namespace hn4walk {

namespace {

WalkState random_unit_state(int coin_dim, std::int64_t vertices,
                            std::mt19937& rng) {
  WalkState s = WalkState::zero(coin_dim, vertices);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (double& a : s.amp) a = gauss(rng);
  const double inv = 1.0 / s.norm();
  for (double& a : s.amp) a *= inv;
  return s;
}

double check_topology() {
  double violations = 0.0;
  for (int n = 2; n <= 10; ++n) {
    const int side = 1 << n;
    std::int64_t level_sum = 0;
    for (int i = 0; i <= n; ++i) level_sum += level_size(i, n);
    if (level_sum != side) violations += 1.0;

    int loops = 0;
    for (int v = 1; v <= side; ++v) {
      if (from_hn4(to_hn4(v, n), n) != v) violations += 1.0;
      const AxisNeighbor nb = long_range_neighbors(v, n);
      if (nb.directed_self_loop) {
        ++loops;
      } else {
        if (long_range_neighbors(nb.next, n).prev != v) violations += 1.0;
        if (long_range_neighbors(nb.prev, n).next != v) violations += 1.0;
      }
    }
    if (loops != 2) violations += 1.0;
  }
  return violations;
}

double check_shift_involution(bool inject_fault) {
  double violations = 0.0;
  bool fault_pending = inject_fault;
  const std::vector<std::pair<int, int>> lattices = {
      {1, 2}, {1, 3}, {1, 6}, {2, 2}, {2, 3}, {2, 5}};
  for (auto [dim, n] : lattices) {
    const LatticeSpec lat =
        dim == 1 ? LatticeSpec::ring(n) : LatticeSpec::torus(n);
    for (int extra = 0; extra <= 1; ++extra) {
      auto perm = build_shift_permutation(lat, base_coin_dim(dim) + extra);
      if (fault_pending) {
        std::swap(perm[0], perm[2]);
        fault_pending = false;
      }
      for (std::size_t i = 0; i < perm.size(); ++i)
        if (perm[static_cast<std::size_t>(perm[i])] !=
            static_cast<std::int64_t>(i))
          violations += 1.0;
    }
  }
  return violations;
}

double check_unitarity() {
  std::mt19937 rng(20260811);
  double worst = 0.0;
  const LatticeSpec ring = LatticeSpec::ring(6);
  const LatticeSpec torus = LatticeSpec::torus(4);
  const std::vector<CoinSpec> coins_1d = {
      CoinSpec::grover(), CoinSpec::skw(),
      CoinSpec::lackadaisical(2.0 / 64), CoinSpec::modified_g(2.0 / 64)};
  const std::vector<CoinSpec> coins_2d = {
      CoinSpec::grover(), CoinSpec::skw(),
      CoinSpec::lackadaisical(8.0 / 256), CoinSpec::modified_g(8.0 / 256)};
  const std::vector<MarkedSet> marked_1d = {
      MarkedSet::ring_vertices(ring, {32}),
      MarkedSet::ring_vertices(ring, {5, 13, 64})};
  const std::vector<MarkedSet> marked_2d = {
      MarkedSet::torus_vertices(torus, {{1, 16}}),
      MarkedSet::torus_vertices(torus, {{1, 1}, {2, 1}}),
      MarkedSet::torus_vertices(torus, {{2, 1}, {6, 1}})};

  auto sweep = [&](const LatticeSpec& lat, const std::vector<CoinSpec>& coins,
                   const std::vector<MarkedSet>& marks) {
    for (const CoinSpec& coin : coins)
      for (const MarkedSet& m : marks) {
        const Walk walk(lat, coin, m);
        for (int r = 0; r < 20; ++r) {
          WalkState psi =
              random_unit_state(walk.coin_dim(), lat.vertex_count, rng);
          walk.step(psi);
          worst = std::max(worst, std::abs(psi.norm() - 1.0));
        }
      }
  };
  sweep(ring, coins_1d, marked_1d);
  sweep(torus, coins_2d, marked_2d);
  return worst;
}

std::vector<std::pair<StationaryKind, LatticeSpec>> stationary_cases() {
  const LatticeSpec ring = LatticeSpec::ring(6);
  const LatticeSpec torus = LatticeSpec::torus(5);
  std::vector<std::pair<StationaryKind, LatticeSpec>> cases;
  cases.emplace_back(OneDSelfLoop{32}, ring);
  cases.emplace_back(OneDSelfLoop{64}, ring);
  cases.emplace_back(AdjacentStandard{true, 1, 1}, torus);
  cases.emplace_back(AdjacentStandard{false, 7, 3}, torus);
  cases.emplace_back(AdjacentLongRange{true, {1, 0}, 1}, torus);
  cases.emplace_back(AdjacentLongRange{false, {0, 2}, 9}, torus);
  cases.emplace_back(OneSelfLoop{false, 16, 1}, torus);
  cases.emplace_back(OneSelfLoop{true, 32, 5}, torus);
  cases.emplace_back(TwoSelfLoops{16, 16}, torus);
  cases.emplace_back(TwoSelfLoops{32, 16}, torus);
  return cases;
}

double loop_weight_for(const LatticeSpec& lat) {
  return lat.dim == 1 ? 2.0 / lat.vertex_count : 8.0 / lat.vertex_count;
}

double check_stationary_residuals() {
  double worst = 0.0;
  for (const auto& [kind, lat] : stationary_cases()) {
    const MarkedSet marked = marked_set_for(kind, lat);
    const CoinSpec grover = CoinSpec::grover();
    const CoinSpec lack = CoinSpec::lackadaisical(loop_weight_for(lat));
    worst = std::max(worst, residual(Walk(lat, grover, marked),
                                     build_stationary(kind, lat, grover)));
    worst = std::max(worst, residual(Walk(lat, lack, marked),
                                     build_stationary(kind, lat, lack)));
  }
  return worst;
}

double check_action_identities() {
  double worst = 0.0;
  for (const auto& [kind, lat] : stationary_cases()) {
    const MarkedSet marked = marked_set_for(kind, lat);

    const CoinSpec grover = CoinSpec::grover();
    WalkState skw_state = build_stationary(kind, lat, grover);
    const WalkState skw_pred =
        predicted_action(CoinKind::Skw, kind, lat, grover);
    Walk(lat, CoinSpec::skw(), marked).step(skw_state);
    double s = 0.0;
    for (std::size_t i = 0; i < skw_state.amp.size(); ++i) {
      const double diff = skw_state.amp[i] - skw_pred.amp[i];
      s += diff * diff;
    }
    worst = std::max(worst, std::sqrt(s));

    const CoinSpec lack = CoinSpec::lackadaisical(loop_weight_for(lat));
    WalkState g_state = build_stationary(kind, lat, lack);
    const WalkState g_pred =
        predicted_action(CoinKind::ModifiedG, kind, lat, lack);
    Walk(lat, CoinSpec::modified_g(lack.loop_weight), marked).step(g_state);
    s = 0.0;
    for (std::size_t i = 0; i < g_state.amp.size(); ++i) {
      const double diff = g_state.amp[i] - g_pred.amp[i];
      s += diff * diff;
    }
    worst = std::max(worst, std::sqrt(s));
  }
  return worst;
}

double check_dense_oracle() {
  std::mt19937 rng(77);
  double worst = 0.0;
  struct Case {
    LatticeSpec lat;
    MarkedSet marked;
  };
  const LatticeSpec r3 = LatticeSpec::ring(3);
  const LatticeSpec t2 = LatticeSpec::torus(2);
  const std::vector<Case> cases = {
      {r3, MarkedSet::ring_vertices(r3, {4})},
      {r3, MarkedSet::ring_vertices(r3, {3, 8})},
      {t2, MarkedSet::torus_vertices(t2, {{2, 2}})},
      {t2, MarkedSet::torus_vertices(t2, {{1, 1}, {2, 1}})},
  };
  for (const Case& c : cases) {
    const double l = 4.0 / double(c.lat.vertex_count);
    const std::vector<CoinSpec> coins = {CoinSpec::grover(), CoinSpec::skw(),
                                         CoinSpec::lackadaisical(l),
                                         CoinSpec::modified_g(l)};
    for (const CoinSpec& coin : coins) {
      const DenseOperator dense = build_dense(c.lat, coin, c.marked);
      const DenseOperator ref = build_dense_reference(c.lat, coin, c.marked);
      worst = std::max(worst,
                       (dense.matrix - ref.matrix).cwiseAbs().maxCoeff());
      const Eigen::MatrixXd gram = dense.matrix.transpose() * dense.matrix;
      worst = std::max(
          worst, (gram - Eigen::MatrixXd::Identity(gram.rows(), gram.cols()))
                     .cwiseAbs()
                     .maxCoeff());
      const Walk walk(c.lat, coin, c.marked);
      for (int r = 0; r < 10; ++r) {
        WalkState psi =
            random_unit_state(walk.coin_dim(), c.lat.vertex_count, rng);
        const Eigen::VectorXd via_matrix = dense.matrix * to_eigen(psi);
        walk.step(psi);
        worst = std::max(worst,
                         (via_matrix - to_eigen(psi)).cwiseAbs().maxCoeff());
      }
    }
  }
  return worst;
}

double check_norm_drift() {
  double worst = 0.0;
  {
    const LatticeSpec ring = LatticeSpec::ring(6);
    const Walk walk(ring, CoinSpec::modified_g(2.0 / 64),
                    MarkedSet::ring_vertices(ring, {32}));
    WalkState psi = walk.initial_state();
    for (int t = 0; t < 10000; ++t) walk.step(psi);
    worst = std::max(worst, std::abs(psi.norm() - 1.0));
  }
  {
    const LatticeSpec torus = LatticeSpec::torus(4);
    const Walk walk(torus, CoinSpec::lackadaisical(8.0 / 256),
                    MarkedSet::torus_vertices(torus, {{1, 8}}));
    WalkState psi = walk.initial_state();
    for (int t = 0; t < 10000; ++t) walk.step(psi);
    worst = std::max(worst, std::abs(psi.norm() - 1.0));
  }
  return worst;
}

SuiteResult make_result(std::string name, double residual, double tol) {
  return SuiteResult{std::move(name), residual, tol, residual <= tol};
}

}  // namespace

std::vector<SuiteResult> run_verification(VerifyLevel level,
                                          const VerifyOptions& opts) {
  std::vector<SuiteResult> out;
  out.push_back(make_result("topology-bijection", check_topology(), 0.0));
  out.push_back(make_result("shift-involution",
                            check_shift_involution(opts.inject_shift_fault),
                            0.0));
  out.push_back(make_result("unitarity", check_unitarity(), 1e-12));
  out.push_back(
      make_result("stationary-residual", check_stationary_residuals(), 1e-12));
  out.push_back(
      make_result("action-identity", check_action_identities(), 1e-12));
  out.push_back(make_result("dense-oracle", check_dense_oracle(), 1e-12));
  if (level == VerifyLevel::Full)
    out.push_back(make_result("norm-drift", check_norm_drift(), 1e-10));
  return out;
}

}  // namespace hn4walk
