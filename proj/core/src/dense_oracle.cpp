#include "hn4walk/dense_oracle.hpp"

#include <Eigen/Eigenvalues>
#include <stdexcept>
#include <string>

namespace hn4walk {

namespace {

void check_dense_size(const LatticeSpec& lat, int d) {
  if (d * lat.vertex_count > kDenseDimLimit)
    throw std::domain_error("dense operator dimension " +
                            std::to_string(d * lat.vertex_count) +
                            " exceeds limit " + std::to_string(kDenseDimLimit));
}

// Long-range moves per axis label for n = 2 and n = 3, written out by hand
// (0 marks a directed self-loop).  side 4: level-0 ring {1,3}; loops at 2, 4.
// side 8: level-0 ring 1->3->5->7->1, level-1 ring {2,6}; loops at 4, 8.
constexpr int kPrev4[5] = {0, 3, 0, 1, 0};
constexpr int kNext4[5] = {0, 3, 0, 1, 0};
constexpr int kPrev8[9] = {0, 7, 6, 1, 0, 3, 2, 5, 0};
constexpr int kNext8[9] = {0, 3, 6, 5, 0, 7, 2, 1, 0};

int table_prev(int v, int n) { return n == 2 ? kPrev4[v] : kPrev8[v]; }
int table_next(int v, int n) { return n == 2 ? kNext4[v] : kNext8[v]; }

int ring_wrap(int v, int side) { return (v - 1 + side) % side + 1; }

}  // namespace

DenseOperator build_dense(const LatticeSpec& lat, const CoinSpec& coin,
                          const MarkedSet& marked) {
  const Walk walk(lat, coin, marked);
  const int d = walk.coin_dim();
  check_dense_size(lat, d);
  const auto dim = static_cast<Eigen::Index>(d * lat.vertex_count);

  DenseOperator op{Eigen::MatrixXd::Zero(dim, dim), lat, coin, marked};
  WalkState basis = WalkState::zero(d, lat.vertex_count);
  for (Eigen::Index k = 0; k < dim; ++k) {
    basis.amp.assign(basis.amp.size(), 0.0);
    basis.amp[k] = 1.0;
    walk.step(basis);
    for (Eigen::Index r = 0; r < dim; ++r) op.matrix(r, k) = basis.amp[r];
  }
  return op;
}

DenseOperator build_dense_reference(const LatticeSpec& lat,
                                    const CoinSpec& coin,
                                    const MarkedSet& marked) {
  coin.validate();
  if (lat.n > 3)
    throw std::domain_error("reference tables exist for n <= 3 only");
  const int d = coin_dim(lat.dim, coin);
  check_dense_size(lat, d);
  const int side = lat.side;
  const auto dim = static_cast<Eigen::Index>(d * lat.vertex_count);
  auto at = [&](std::int64_t vertex, int c) {
    return static_cast<Eigen::Index>(vertex * d + c);
  };

  // Flip-flop shift from the tables.
  Eigen::MatrixXd S = Eigen::MatrixXd::Zero(dim, dim);
  if (lat.dim == 1) {
    for (int v = 1; v <= side; ++v) {
      const std::int64_t i = v - 1;
      S(at(ring_wrap(v + 1, side) - 1, 1), at(i, 0)) = 1.0;
      S(at(ring_wrap(v - 1, side) - 1, 0), at(i, 1)) = 1.0;
      const int nx = table_next(v, lat.n), pv = table_prev(v, lat.n);
      S(at(nx ? nx - 1 : i, 3), at(i, 2)) = 1.0;
      S(at(pv ? pv - 1 : i, 2), at(i, 3)) = 1.0;
      if (coin.has_loop()) S(at(i, 4), at(i, 4)) = 1.0;
    }
  } else {
    for (int vy = 1; vy <= side; ++vy) {
      for (int vx = 1; vx <= side; ++vx) {
        const std::int64_t i = vertex_index(lat, vx, vy);
        S(at(vertex_index(lat, ring_wrap(vx + 1, side), vy), 1), at(i, 0)) = 1.0;
        S(at(vertex_index(lat, ring_wrap(vx - 1, side), vy), 0), at(i, 1)) = 1.0;
        S(at(vertex_index(lat, vx, ring_wrap(vy + 1, side)), 3), at(i, 2)) = 1.0;
        S(at(vertex_index(lat, vx, ring_wrap(vy - 1, side)), 2), at(i, 3)) = 1.0;
        const int nx1 = table_next(vx, lat.n), pv1 = table_prev(vx, lat.n);
        S(at(nx1 ? vertex_index(lat, nx1, vy) : i, 5), at(i, 4)) = 1.0;
        S(at(pv1 ? vertex_index(lat, pv1, vy) : i, 4), at(i, 5)) = 1.0;
        const int nx2 = table_next(vy, lat.n), pv2 = table_prev(vy, lat.n);
        S(at(nx2 ? vertex_index(lat, vx, nx2) : i, 7), at(i, 6)) = 1.0;
        S(at(pv2 ? vertex_index(lat, vx, pv2) : i, 6), at(i, 7)) = 1.0;
        if (coin.has_loop()) S(at(i, 8), at(i, 8)) = 1.0;
      }
    }
  }

  // Block-diagonal coin from the algebraic definitions.
  const std::vector<double> axis = uniform_coin_state(lat.dim, coin);
  const Eigen::VectorXd s = Eigen::Map<const Eigen::VectorXd>(axis.data(), d);
  const Eigen::MatrixXd diffusion =
      2.0 * s * s.transpose() - Eigen::MatrixXd::Identity(d, d);
  Eigen::MatrixXd marked_block;
  switch (coin.kind) {
    case CoinKind::Grover:
    case CoinKind::Lackadaisical:
      marked_block = -diffusion;
      break;
    case CoinKind::Skw:
      marked_block = -Eigen::MatrixXd::Identity(d, d);
      break;
    case CoinKind::ModifiedG: {
      Eigen::MatrixXd flip = Eigen::MatrixXd::Identity(d, d);
      flip(d - 1, d - 1) = -1.0;
      marked_block = diffusion * flip;
      break;
    }
  }
  std::vector<std::uint8_t> is_marked(lat.vertex_count, 0);
  for (std::int64_t v : marked.indices()) is_marked[v] = 1;

  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(dim, dim);
  for (std::int64_t v = 0; v < lat.vertex_count; ++v)
    C.block(at(v, 0), at(v, 0), d, d) = is_marked[v] ? marked_block : diffusion;

  return DenseOperator{S * C, lat, coin, marked};
}

std::vector<Eigen::VectorXd> unit_eigenspace(const DenseOperator& op,
                                             double tol) {
  // Kernel of U - I via the spectrum of (U-I)^T (U-I); for orthogonal U its
  // eigenvalues are |lambda_U - 1|^2, so the requested |lambda - 1| <= tol
  // becomes a threshold on the squared singular values (floored at the
  // eigensolver's noise level).
  const Eigen::MatrixXd shifted =
      op.matrix - Eigen::MatrixXd::Identity(op.matrix.rows(), op.matrix.cols());
  const Eigen::MatrixXd gram = shifted.transpose() * shifted;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error(
        "eigensolver failed to converge on the dense operator");
  const double threshold = std::max(tol * tol, 1e-13);
  std::vector<Eigen::VectorXd> basis;
  for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k)
    if (solver.eigenvalues()(k) <= threshold)
      basis.push_back(solver.eigenvectors().col(k));
  return basis;
}

Eigen::VectorXd to_eigen(const WalkState& s) {
  return Eigen::Map<const Eigen::VectorXd>(
      s.amp.data(), static_cast<Eigen::Index>(s.amp.size()));
}

WalkState from_eigen(const Eigen::VectorXd& v, int coin_dim,
                     std::int64_t vertices) {
  if (v.size() != static_cast<Eigen::Index>(coin_dim * vertices))
    throw std::invalid_argument("vector length does not match (coin, vertex)");
  WalkState s = WalkState::zero(coin_dim, vertices);
  for (Eigen::Index i = 0; i < v.size(); ++i) s.amp[i] = v(i);
  return s;
}

double span_distance(const std::vector<Eigen::VectorXd>& basis,
                     const Eigen::VectorXd& v) {
  Eigen::VectorXd res = v;
  for (const auto& b : basis) res -= b.dot(v) * b;
  return res.norm();
}

}  // namespace hn4walk
