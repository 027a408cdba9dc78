// The general 3-node REI network with types [E,E,I] and its nine arrow
// multiplicities. Node 1 and 2 are excitatory, node 3 inhibitory.
#pragma once

#include <array>
#include <compare>
#include <string>

#include "reinet/network.hpp"

namespace reinet {

struct MultiplicityVector {
  int alpha = 0;  // loop on 1
  int delta = 0;  // loop on 2
  int tau = 0;    // loop on 3
  int beta1 = 0;  // 1 -> 3
  int beta2 = 0;  // 1 -> 2
  int beta3 = 0;  // 2 -> 1
  int beta4 = 0;  // 2 -> 3
  int gamma1 = 0; // 3 -> 1
  int gamma2 = 0; // 3 -> 2

  static constexpr std::array<const char*, 9> names = {
      "alpha", "delta", "tau", "beta1", "beta2", "beta3", "beta4", "gamma1", "gamma2"};

  std::array<int, 9> as_array() const {
    return {alpha, delta, tau, beta1, beta2, beta3, beta4, gamma1, gamma2};
  }
  static MultiplicityVector from_array(const std::array<int, 9>& a);
  int& at(int k);
  int& at(const std::string& name);

  ReiNetwork to_network() const;
  // Requires types exactly [E,E,I] and a valid REI network.
  static MultiplicityVector from_network(const ReiNetwork& net);

  // Relabel nodes 1 <-> 2.
  MultiplicityVector swapped() const;

  long arrow_count() const;
  long valence(int node) const;  // 0-based node
  std::string to_string() const; // "alpha=1 beta2=2 ..." (nonzero entries only)

  auto operator<=>(const MultiplicityVector&) const = default;
  bool operator==(const MultiplicityVector&) const = default;
};

bool is_eei(const ReiNetwork& net);

}  // namespace reinet
