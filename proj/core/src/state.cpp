#include "hn4walk/state.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace hn4walk {

double WalkState::norm() const {
  double s = 0.0;
  for (double a : amp) s += a * a;
  return std::sqrt(s);
}

double dot(const WalkState& a, const WalkState& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("state dimension mismatch in dot()");
  double s = 0.0;
  for (std::size_t i = 0; i < a.amp.size(); ++i) s += a.amp[i] * b.amp[i];
  return s;
}

MarkedSet MarkedSet::ring_vertices(const LatticeSpec& lat,
                                   const std::vector<int>& labels) {
  if (lat.dim != 1)
    throw std::domain_error("ring_vertices requires a 1D lattice");
  if (labels.empty()) throw std::domain_error("marked set must be nonempty");
  MarkedSet m;
  m.dim_ = 1;
  std::set<std::int64_t> seen;
  for (int v : labels) {
    if (v < 1 || v > lat.side)
      throw std::domain_error("marked vertex " + std::to_string(v) +
                              " outside [1, " + std::to_string(lat.side) + "]");
    if (!seen.insert(v - 1).second)
      throw std::domain_error("duplicate marked vertex " + std::to_string(v));
    m.sites_.push_back({v, 0});
  }
  m.indices_.assign(seen.begin(), seen.end());
  return m;
}

MarkedSet MarkedSet::torus_vertices(
    const LatticeSpec& lat, const std::vector<std::array<int, 2>>& labels) {
  if (lat.dim != 2)
    throw std::domain_error("torus_vertices requires a 2D lattice");
  if (labels.empty()) throw std::domain_error("marked set must be nonempty");
  MarkedSet m;
  m.dim_ = 2;
  std::set<std::int64_t> seen;
  for (auto [vx, vy] : labels) {
    if (vx < 1 || vx > lat.side || vy < 1 || vy > lat.side)
      throw std::domain_error("marked vertex (" + std::to_string(vx) + "," +
                              std::to_string(vy) + ") outside the " +
                              std::to_string(lat.side) + "-side torus");
    if (!seen.insert(vertex_index(lat, vx, vy)).second)
      throw std::domain_error("duplicate marked vertex (" +
                              std::to_string(vx) + "," + std::to_string(vy) +
                              ")");
    m.sites_.push_back({vx, vy});
  }
  m.indices_.assign(seen.begin(), seen.end());
  return m;
}

std::string MarkedSet::describe() const {
  std::string out;
  for (std::size_t k = 0; k < sites_.size(); ++k) {
    if (k) out += ',';
    if (dim_ == 1)
      out += std::to_string(sites_[k][0]);
    else
      out += "(" + std::to_string(sites_[k][0]) + "," +
             std::to_string(sites_[k][1]) + ")";
  }
  return out;
}

double TimeSeries::max_prob() const {
  return *std::max_element(probs.begin(), probs.end());
}

int TimeSeries::argmax_t() const {
  return static_cast<int>(std::max_element(probs.begin(), probs.end()) -
                          probs.begin());
}

}  // namespace hn4walk
