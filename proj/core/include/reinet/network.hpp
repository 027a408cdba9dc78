// Restricted excitatory-inhibitory (REI) networks: the data model plus the
// structural predicates that the rest of the library builds on.
#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace reinet {

enum class NodeType : std::uint8_t { E = 0, I = 1 };

inline NodeType dual(NodeType t) { return t == NodeType::E ? NodeType::I : NodeType::E; }
inline char to_char(NodeType t) { return t == NodeType::E ? 'E' : 'I'; }

// Dense n x n matrix of arrow multiplicities, row-major.
class SquareMatrix {
public:
  SquareMatrix() = default;
  explicit SquareMatrix(int n) : n_(n), v_(static_cast<std::size_t>(n) * n, 0) {}
  SquareMatrix(std::initializer_list<std::initializer_list<int>> rows);

  int size() const { return n_; }
  int& operator()(int i, int j) { return v_[static_cast<std::size_t>(i) * n_ + j]; }
  int operator()(int i, int j) const { return v_[static_cast<std::size_t>(i) * n_ + j]; }
  const std::vector<int>& data() const { return v_; }

  long row_sum(int i) const;
  long total() const;

  auto operator<=>(const SquareMatrix&) const = default;
  bool operator==(const SquareMatrix&) const = default;

private:
  int n_ = 0;
  std::vector<int> v_;
};

// exc(i, j) counts excitatory arrows from node j to node i; inh likewise.
struct ReiNetwork {
  std::vector<NodeType> types;
  SquareMatrix exc;
  SquareMatrix inh;

  ReiNetwork() = default;
  ReiNetwork(std::vector<NodeType> t, SquareMatrix e, SquareMatrix h)
      : types(std::move(t)), exc(std::move(e)), inh(std::move(h)) {}
  explicit ReiNetwork(std::vector<NodeType> t);

  int size() const { return static_cast<int>(types.size()); }
  long arrow_count() const { return exc.total() + inh.total(); }

  auto operator<=>(const ReiNetwork&) const = default;
  bool operator==(const ReiNetwork&) const = default;
};

std::vector<NodeType> parse_types(const std::string& s);  // "EEI"
std::string types_string(const std::vector<NodeType>& t);

struct StructuralError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Violation {
  int head;  // 0-based row
  int tail;  // 0-based column
  NodeType arrow_type;
  bool operator==(const Violation&) const = default;
};

struct ValidationReport {
  std::string structural_error;  // nonempty -> dimensions or entries unusable
  std::vector<Violation> violations;
  bool ok() const { return structural_error.empty() && violations.empty(); }
  std::string describe() const;
};

ValidationReport validate_rei(const ReiNetwork& net);
// Throws StructuralError or std::invalid_argument when validate_rei fails.
void require_valid(const ReiNetwork& net);

ReiNetwork dual(const ReiNetwork& net);

struct InputProfile {
  int node = 0;
  long exc_in = 0;
  long inh_in = 0;
  long valence() const { return exc_in + inh_in; }
};

InputProfile input_profile(const ReiNetwork& net, int i);
bool input_equivalent(const ReiNetwork& net, int i, int j);
// Number of input-equivalence classes.
int input_class_count(const ReiNetwork& net);

bool is_connected(const ReiNetwork& net);
bool is_transitive(const ReiNetwork& net);
inline bool is_feedforward(const ReiNetwork& net) { return is_connected(net) && !is_transitive(net); }

// perm[i] is the new index of old node i.
ReiNetwork permute(const ReiNetwork& net, const std::vector<int>& perm);

// All renumberings that put E nodes first (perm[i] = new index of node i).
std::vector<std::vector<int>> type_sorting_permutations(const std::vector<NodeType>& types);

ReiNetwork canonical_form(const ReiNetwork& net);
ReiNetwork canonical_form_with_duality(const ReiNetwork& net);
bool is_isomorphic(const ReiNetwork& a, const ReiNetwork& b);

}  // namespace reinet
