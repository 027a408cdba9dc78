// Admissible ODE skeletons and the Hill-function gene regulatory model.
#pragma once

#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "reinet/network.hpp"
#include "reinet/synchrony.hpp"

namespace reinet {

struct NodeEquation {
  int node = 0;
  NodeType type = NodeType::E;
  std::string function;
  std::vector<int> exc_args;  // tails, repeated by multiplicity, sorted
  std::vector<int> inh_args;
};

struct OdeSkeleton {
  std::vector<NodeEquation> equations;
  // x1+' = f(x1+; {x1+, x2+}; x3-)  (one line per node)
  std::string render() const;
};

OdeSkeleton skeleton(const ReiNetwork& net);
std::string variable_name(int node, NodeType t);

struct GrnTypeParams {
  double mrna_decay = 1.0;
  double translation = 1.0;
  double protein_decay = 1.0;
  int hill_inh_exponent = 2;
  int hill_exc_exponent = 2;
};

struct GrnParams {
  GrnTypeParams e;
  GrnTypeParams i;
  const GrnTypeParams& of(NodeType t) const { return t == NodeType::E ? e : i; }
  void validate() const;  // throws std::invalid_argument on non-positive values
};

double hill_inh(double z, int n);
double hill_exc(double z, int n);

// State layout: [mrna_1, protein_1, mrna_2, protein_2, ...].
using VectorField = std::function<void(double t, std::span<const double> x, std::span<double> dx)>;

VectorField grn_field(const ReiNetwork& net, const GrnParams& params);

struct SimConfig {
  double dt = 0.01;
  double t_end = 1.0;
  std::vector<double> x0;
  double tolerance = 1e-9;
  bool require_nonnegative = false;
  void validate() const;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<std::vector<double>> states;
};

struct IntegrationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Trajectory integrate(const VectorField& field, const SimConfig& cfg);

// Trajectory CSV with columns t, mrna_<id>, protein_<id> (1-based ids).
std::string trajectory_csv(const Trajectory& tr, int nodes);

struct SynchronyReport {
  double max_divergence = 0.0;          // largest intra-block state spread
  double max_quotient_deviation = 0.0;  // quotient vs block representative
  double tolerance = 0.0;
  bool pass() const { return max_divergence <= tolerance && max_quotient_deviation <= tolerance; }
};

SynchronyReport verify_synchrony(const ReiNetwork& net, const Partition& p, const GrnParams& params,
                                 const SimConfig& cfg);

}  // namespace reinet
