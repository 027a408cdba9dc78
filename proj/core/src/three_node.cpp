#include "reinet/three_node.hpp"

#include <sstream>
#include <stdexcept>

namespace reinet {

namespace {
const std::vector<NodeType> kEEI = {NodeType::E, NodeType::E, NodeType::I};
}

bool is_eei(const ReiNetwork& net) { return net.types == kEEI; }

MultiplicityVector MultiplicityVector::from_array(const std::array<int, 9>& a) {
  return {a[0], a[1], a[2], a[3], a[4], a[5], a[6], a[7], a[8]};
}

int& MultiplicityVector::at(int k) {
  switch (k) {
    case 0: return alpha;
    case 1: return delta;
    case 2: return tau;
    case 3: return beta1;
    case 4: return beta2;
    case 5: return beta3;
    case 6: return beta4;
    case 7: return gamma1;
    case 8: return gamma2;
  }
  throw std::out_of_range("multiplicity index");
}

int& MultiplicityVector::at(const std::string& name) {
  for (int k = 0; k < 9; ++k)
    if (name == names[k]) return at(k);
  throw std::invalid_argument("unknown multiplicity '" + name + "'");
}

ReiNetwork MultiplicityVector::to_network() const {
  return ReiNetwork(kEEI,
                    SquareMatrix{{alpha, beta3, 0}, {beta2, delta, 0}, {beta1, beta4, 0}},
                    SquareMatrix{{0, 0, gamma1}, {0, 0, gamma2}, {0, 0, tau}});
}

MultiplicityVector MultiplicityVector::from_network(const ReiNetwork& net) {
  if (!is_eei(net)) throw std::invalid_argument("expected node types [E,E,I]");
  require_valid(net);
  MultiplicityVector m;
  m.alpha = net.exc(0, 0);
  m.beta3 = net.exc(0, 1);
  m.beta2 = net.exc(1, 0);
  m.delta = net.exc(1, 1);
  m.beta1 = net.exc(2, 0);
  m.beta4 = net.exc(2, 1);
  m.gamma1 = net.inh(0, 2);
  m.gamma2 = net.inh(1, 2);
  m.tau = net.inh(2, 2);
  return m;
}

MultiplicityVector MultiplicityVector::swapped() const {
  return {delta, alpha, tau, beta4, beta3, beta2, beta1, gamma2, gamma1};
}

long MultiplicityVector::arrow_count() const {
  long s = 0;
  for (int x : as_array()) s += x;
  return s;
}

long MultiplicityVector::valence(int node) const {
  switch (node) {
    case 0: return alpha + beta3 + gamma1;
    case 1: return delta + beta2 + gamma2;
    case 2: return tau + beta1 + beta4;
  }
  throw std::out_of_range("node index");
}

std::string MultiplicityVector::to_string() const {
  std::ostringstream os;
  auto a = as_array();
  bool first = true;
  for (int k = 0; k < 9; ++k) {
    if (!a[k]) continue;
    if (!first) os << ' ';
    os << names[k] << '=' << a[k];
    first = false;
  }
  if (first) os << "(none)";
  return os.str();
}

}  // namespace reinet
