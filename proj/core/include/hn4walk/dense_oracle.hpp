#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "hn4walk/state.hpp"
#include "hn4walk/walk.hpp"

// Brute-force ground truth: the full evolution operator materialized as a
// dense real orthogonal matrix for tiny lattices, with the eigenvalue-1
// eigenspace extracted numerically.

namespace hn4walk {

inline constexpr std::int64_t kDenseDimLimit = 4096;

struct DenseOperator {
  Eigen::MatrixXd matrix;
  LatticeSpec lattice;
  CoinSpec coin;
  MarkedSet marked;
};

// Column k = step(e_k) of the structured engine; guarded to
// coin_dim * vertex_count <= kDenseDimLimit.
DenseOperator build_dense(const LatticeSpec& lat, const CoinSpec& coin,
                          const MarkedSet& marked);

// Same operator assembled from hand-written long-range neighbor tables and
// explicit coin blocks, U = S * C; supports n <= 3 only.  Kept independent
// of the structured step so the two paths cross-check each other.
DenseOperator build_dense_reference(const LatticeSpec& lat,
                                    const CoinSpec& coin,
                                    const MarkedSet& marked);

// Orthonormal basis of the eigenvalue-1 eigenspace (|lambda - 1| <= tol via
// the kernel of U - I; exact for orthogonal U).  Throws on eigensolver
// failure.
std::vector<Eigen::VectorXd> unit_eigenspace(const DenseOperator& op,
                                             double tol = 1e-9);

Eigen::VectorXd to_eigen(const WalkState& s);
WalkState from_eigen(const Eigen::VectorXd& v, int coin_dim,
                     std::int64_t vertices);

// ||v - proj_span(v)|| for an orthonormal basis.
double span_distance(const std::vector<Eigen::VectorXd>& basis,
                     const Eigen::VectorXd& v);

}  // namespace hn4walk
