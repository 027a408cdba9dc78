// ODE-equivalence of REI networks, class keys and minimal representatives.
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "reinet/three_node.hpp"
#include "reinet/linalg.hpp"
#include "reinet/network.hpp"

namespace reinet {

// Node-type matrix per type present (E first), then exc, then inh.
std::vector<SquareMatrix> adjacency_bundle(const ReiNetwork& net);
SquareMatrix node_type_matrix(const ReiNetwork& net, NodeType t);

// Raised when the joint span test and the per-type test disagree.
struct InternalInconsistency : std::logic_error {
  using std::logic_error::logic_error;
};

// Span equality at the identity identification, checked jointly and per
// arrow type; throws InternalInconsistency if the two routes disagree.
bool same_span_fixed(const ReiNetwork& a, const ReiNetwork& b);

// A witnessing bijection (sigma[i] = node of b matched with node i of a),
// or nullopt if none exists.
std::optional<std::vector<int>> find_ode_equivalence(const ReiNetwork& a, const ReiNetwork& b);
bool ode_equivalent(const ReiNetwork& a, const ReiNetwork& b);

struct OdeClassKey {
  std::vector<NodeType> types;  // sorted, E first
  SpanKey key;
  std::string serialize() const;
  bool operator==(const OdeClassKey& o) const { return types == o.types && key == o.key; }
};
bool operator<(const OdeClassKey& a, const OdeClassKey& b);

// Least span key over all renumberings that put E nodes first.
OdeClassKey ode_class_key(const ReiNetwork& net);
// Key at the given labelling; no renumbering.
OdeClassKey ode_class_key_fixed(const ReiNetwork& net);

ReiNetwork normal_form_3node(const ReiNetwork& net);
MultiplicityVector normal_form_3node(const MultiplicityVector& v);

struct MinimalForm {
  ReiNetwork net;
  long arrow_count = 0;
  std::string bound_note;
};

MinimalForm minimal_representative(const ReiNetwork& net);

// Exhaustive oracle: every network with the same sorted node types and all
// multiplicities <= cap, keeping the fewest-arrow ODE-equivalent ones.
// Exponential; intended for n <= 3.
MinimalForm minimal_by_search(const ReiNetwork& net, int cap);

enum class Labelling { UpToRenumbering, Fixed };

struct OdeClass {
  OdeClassKey key;
  std::vector<ReiNetwork> members;
  MinimalForm minimal;
};

std::vector<OdeClass> classify(const std::vector<ReiNetwork>& nets,
                               Labelling mode = Labelling::UpToRenumbering);

}  // namespace reinet
