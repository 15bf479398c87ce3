#include "hn4walk/coin.hpp"

#include <cmath>
#include <stdexcept>

namespace hn4walk {

void CoinSpec::validate() const {
  if (loop_weight < 0.0)
    throw std::domain_error("self-loop weight must be nonnegative");
  if (!has_loop() && loop_weight != 0.0)
    throw std::domain_error(std::string(coin_name(kind)) +
                            " coin has no self-loop; loop weight must be 0");
}

std::vector<double> uniform_coin_state(int lattice_dim, const CoinSpec& c) {
  const int d0 = base_coin_dim(lattice_dim);
  const double inv = 1.0 / std::sqrt(d0 + c.loop_weight);
  std::vector<double> s(coin_dim(lattice_dim, c), inv);
  if (c.has_loop()) s[d0] = std::sqrt(c.loop_weight) * inv;
  return s;
}

const char* coin_name(CoinKind k) {
  switch (k) {
    case CoinKind::Grover: return "grover";
    case CoinKind::Skw: return "skw";
    case CoinKind::Lackadaisical: return "lackadaisical";
    case CoinKind::ModifiedG: return "modified-g";
  }
  return "?";
}

CoinKind parse_coin_kind(const std::string& name) {
  if (name == "grover") return CoinKind::Grover;
  if (name == "skw") return CoinKind::Skw;
  if (name == "lackadaisical") return CoinKind::Lackadaisical;
  if (name == "modified-g") return CoinKind::ModifiedG;
  throw std::invalid_argument("unknown coin '" + name +
                              "' (expected grover|skw|lackadaisical|modified-g)");
}

}  // namespace hn4walk
