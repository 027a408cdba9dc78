#include "reinet/network.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

namespace reinet {

SquareMatrix::SquareMatrix(std::initializer_list<std::initializer_list<int>> rows)
    : n_(static_cast<int>(rows.size())) {
  v_.reserve(static_cast<std::size_t>(n_) * n_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n_) throw StructuralError("matrix is not square");
    v_.insert(v_.end(), r.begin(), r.end());
  }
}

long SquareMatrix::row_sum(int i) const {
  long s = 0;
  for (int j = 0; j < n_; ++j) s += (*this)(i, j);
  return s;
}

long SquareMatrix::total() const { return std::accumulate(v_.begin(), v_.end(), 0L); }

ReiNetwork::ReiNetwork(std::vector<NodeType> t)
    : types(std::move(t)), exc(size()), inh(size()) {}

std::vector<NodeType> parse_types(const std::string& s) {
  std::vector<NodeType> out;
  for (char c : s) {
    if (c == 'E') out.push_back(NodeType::E);
    else if (c == 'I') out.push_back(NodeType::I);
    else throw std::invalid_argument(std::string("bad node type '") + c + "'");
  }
  return out;
}

std::string types_string(const std::vector<NodeType>& t) {
  std::string s;
  for (auto x : t) s += to_char(x);
  return s;
}

ValidationReport validate_rei(const ReiNetwork& net) {
  ValidationReport r;
  const int n = net.size();
  if (n <= 0) {
    r.structural_error = "network has no nodes";
    return r;
  }
  if (net.exc.size() != n || net.inh.size() != n) {
    std::ostringstream os;
    os << "matrix dimensions " << net.exc.size() << "/" << net.inh.size()
       << " do not match " << n << " node types";
    r.structural_error = os.str();
    return r;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (net.exc(i, j) < 0 || net.inh(i, j) < 0) {
        std::ostringstream os;
        os << "negative multiplicity at (" << i + 1 << "," << j + 1 << ")";
        r.structural_error = os.str();
        return r;
      }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (net.exc(i, j) > 0 && net.types[j] != NodeType::E)
        r.violations.push_back({i, j, NodeType::E});
      if (net.inh(i, j) > 0 && net.types[j] != NodeType::I)
        r.violations.push_back({i, j, NodeType::I});
    }
  return r;
}

std::string ValidationReport::describe() const {
  if (!structural_error.empty()) return "structural error: " + structural_error;
  std::ostringstream os;
  for (const auto& v : violations) {
    os << "violation at (" << v.head + 1 << "," << v.tail + 1 << "," << to_char(v.arrow_type)
       << "): " << (v.arrow_type == NodeType::E ? "excitatory" : "inhibitory")
       << " arrow from node " << v.tail + 1 << " of type "
       << to_char(dual(v.arrow_type)) << "\n";
  }
  return os.str();
}

void require_valid(const ReiNetwork& net) {
  auto r = validate_rei(net);
  if (!r.structural_error.empty()) throw StructuralError(r.structural_error);
  if (!r.ok()) throw std::invalid_argument(r.describe());
}

ReiNetwork dual(const ReiNetwork& net) {
  std::vector<NodeType> t(net.types.size());
  std::transform(net.types.begin(), net.types.end(), t.begin(),
                 [](NodeType x) { return dual(x); });
  return ReiNetwork(std::move(t), net.inh, net.exc);
}

static void check_index(const ReiNetwork& net, int i) {
  if (i < 0 || i >= net.size()) throw std::out_of_range("node index out of range");
}

InputProfile input_profile(const ReiNetwork& net, int i) {
  check_index(net, i);
  return {i, net.exc.row_sum(i), net.inh.row_sum(i)};
}

bool input_equivalent(const ReiNetwork& net, int i, int j) {
  auto a = input_profile(net, i), b = input_profile(net, j);
  return net.types[i] == net.types[j] && a.exc_in == b.exc_in && a.inh_in == b.inh_in;
}

int input_class_count(const ReiNetwork& net) {
  std::vector<std::tuple<NodeType, long, long>> keys;
  for (int i = 0; i < net.size(); ++i) {
    auto p = input_profile(net, i);
    keys.emplace_back(net.types[i], p.exc_in, p.inh_in);
  }
  std::sort(keys.begin(), keys.end());
  return static_cast<int>(std::unique(keys.begin(), keys.end()) - keys.begin());
}

namespace {

bool linked(const ReiNetwork& net, int from, int to) {
  return net.exc(to, from) + net.inh(to, from) > 0;
}

// Nodes reachable from 0 following arcs forward (dir=+1), backward (-1) or both (0).
std::vector<bool> reach(const ReiNetwork& net, int dir) {
  const int n = net.size();
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < n; ++v) {
      if (v == u || seen[v]) continue;
      bool fwd = linked(net, u, v), bwd = linked(net, v, u);
      if ((dir >= 0 && fwd) || (dir <= 0 && bwd)) {
        seen[v] = true;
        stack.push_back(v);
      }
    }
  }
  return seen;
}

bool all_true(const std::vector<bool>& v) {
  return std::all_of(v.begin(), v.end(), [](bool b) { return b; });
}

}  // namespace

bool is_connected(const ReiNetwork& net) {
  if (net.size() == 0) return false;
  return all_true(reach(net, 0));
}

bool is_transitive(const ReiNetwork& net) {
  if (net.size() == 0) return false;
  if (net.size() == 1) return true;
  return all_true(reach(net, 1)) && all_true(reach(net, -1));
}

ReiNetwork permute(const ReiNetwork& net, const std::vector<int>& perm) {
  const int n = net.size();
  if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permutation size mismatch");
  ReiNetwork out{std::vector<NodeType>(n)};
  for (int i = 0; i < n; ++i) out.types[perm[i]] = net.types[i];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      out.exc(perm[i], perm[j]) = net.exc(i, j);
      out.inh(perm[i], perm[j]) = net.inh(i, j);
    }
  return out;
}

std::vector<std::vector<int>> type_sorting_permutations(const std::vector<NodeType>& types) {
  std::vector<int> e_nodes, i_nodes;
  for (int i = 0; i < static_cast<int>(types.size()); ++i)
    (types[i] == NodeType::E ? e_nodes : i_nodes).push_back(i);
  std::vector<std::vector<int>> out;
  std::vector<int> pe(e_nodes.size()), pi(i_nodes.size());
  std::iota(pe.begin(), pe.end(), 0);
  do {
    std::iota(pi.begin(), pi.end(), 0);
    do {
      std::vector<int> perm(types.size());
      for (std::size_t k = 0; k < e_nodes.size(); ++k) perm[e_nodes[k]] = pe[k];
      for (std::size_t k = 0; k < i_nodes.size(); ++k)
        perm[i_nodes[k]] = static_cast<int>(e_nodes.size()) + pi[k];
      out.push_back(std::move(perm));
    } while (std::next_permutation(pi.begin(), pi.end()));
  } while (std::next_permutation(pe.begin(), pe.end()));
  return out;
}

ReiNetwork canonical_form(const ReiNetwork& net) {
  ReiNetwork best;
  bool first = true;
  for (const auto& p : type_sorting_permutations(net.types)) {
    ReiNetwork c = permute(net, p);
    if (first || c < best) {
      best = std::move(c);
      first = false;
    }
  }
  return best;
}

ReiNetwork canonical_form_with_duality(const ReiNetwork& net) {
  return std::min(canonical_form(net), canonical_form(dual(net)));
}

bool is_isomorphic(const ReiNetwork& a, const ReiNetwork& b) {
  if (a.size() != b.size()) throw std::invalid_argument("is_isomorphic: node counts differ");
  return canonical_form(a) == canonical_form(b);
}

}  // namespace reinet
