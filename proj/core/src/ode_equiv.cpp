#include "reinet/ode_equiv.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace reinet {

SquareMatrix node_type_matrix(const ReiNetwork& net, NodeType t) {
  SquareMatrix m(net.size());
  for (int i = 0; i < net.size(); ++i) m(i, i) = net.types[i] == t ? 1 : 0;
  return m;
}

static bool has_type(const ReiNetwork& net, NodeType t) {
  return std::find(net.types.begin(), net.types.end(), t) != net.types.end();
}

std::vector<SquareMatrix> adjacency_bundle(const ReiNetwork& net) {
  std::vector<SquareMatrix> out;
  for (NodeType t : {NodeType::E, NodeType::I})
    if (has_type(net, t)) out.push_back(node_type_matrix(net, t));
  out.push_back(net.exc);
  out.push_back(net.inh);
  return out;
}

bool same_span_fixed(const ReiNetwork& a, const ReiNetwork& b) {
  if (a.types != b.types) return false;
  bool joint = span_key(adjacency_bundle(a)) == span_key(adjacency_bundle(b));
  bool blocks = true;
  for (NodeType t : {NodeType::E, NodeType::I}) {
    const auto& ma = t == NodeType::E ? a.exc : a.inh;
    const auto& mb = t == NodeType::E ? b.exc : b.inh;
    auto ka = span_key({node_type_matrix(a, t), ma});
    auto kb = span_key({node_type_matrix(b, t), mb});
    blocks = blocks && ka == kb;
  }
  if (joint != blocks)
    throw InternalInconsistency("joint and per-type span tests disagree");
  return joint;
}

std::optional<std::vector<int>> find_ode_equivalence(const ReiNetwork& a, const ReiNetwork& b) {
  if (a.size() != b.size()) throw std::invalid_argument("ode_equivalent: node counts differ");
  auto sa = a.types, sb = b.types;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return std::nullopt;
  std::vector<int> sigma(a.size());
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < a.size() && ok; ++i) ok = a.types[i] == b.types[sigma[i]];
    if (ok && same_span_fixed(permute(a, sigma), b)) return sigma;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return std::nullopt;
}

bool ode_equivalent(const ReiNetwork& a, const ReiNetwork& b) {
  return find_ode_equivalence(a, b).has_value();
}

std::string OdeClassKey::serialize() const { return types_string(types) + "/" + key.serialize(); }

bool operator<(const OdeClassKey& a, const OdeClassKey& b) {
  if (a.types != b.types) return a.types < b.types;
  return a.key < b.key;
}

OdeClassKey ode_class_key_fixed(const ReiNetwork& net) {
  return {net.types, span_key(adjacency_bundle(net))};
}

OdeClassKey ode_class_key(const ReiNetwork& net) {
  std::optional<OdeClassKey> best;
  for (const auto& p : type_sorting_permutations(net.types)) {
    auto k = ode_class_key_fixed(permute(net, p));
    if (!best || k < *best) best = std::move(k);
  }
  return *best;
}

// ---------------------------------------------------------------------------
// 3-node normal form

static int gcd_all(std::initializer_list<int> xs) {
  int g = 0;
  for (int x : xs) g = std::gcd(g, std::abs(x));
  return g;
}

MultiplicityVector normal_form_3node(const MultiplicityVector& in) {
  MultiplicityVector v = in;
  v.tau = 0;
  int m = std::min(v.alpha, v.delta);
  v.alpha -= m;
  v.delta -= m;
  if (int g = gcd_all({v.gamma1, v.gamma2})) {
    v.gamma1 /= g;
    v.gamma2 /= g;
  }
  if (v.delta != 0 && v.alpha == 0) {
    // Same reduction with the loop carried in the alpha slot.
    return normal_form_3node(v.swapped()).swapped();
  }
  if (int g = gcd_all({v.alpha, v.beta1, v.beta2, v.beta3, v.beta4})) {
    v.alpha /= g;
    v.beta1 /= g;
    v.beta2 /= g;
    v.beta3 /= g;
    v.beta4 /= g;
  }
  return v;
}

ReiNetwork normal_form_3node(const ReiNetwork& net) {
  if (!is_eei(net)) throw std::invalid_argument("normal_form_3node: node types must be [E,E,I]");
  return normal_form_3node(MultiplicityVector::from_network(net)).to_network();
}

// ---------------------------------------------------------------------------
// Minimal representatives
//
// Fix a node type T. Equivalent networks at a fixed labelling have
// M'_T = a*A_T + b*M_T with b != 0, where M_T holds the arrows with T tails.
// Off-diagonal entries scale by b; diagonal entries of T columns shift by a.
// Integrality and nonnegativity force b = k/g with g the gcd of the
// off-diagonal entries and the diagonal offsets, so k = 1 is minimal. A
// negative b is possible only when there are no off-diagonal arrows.

namespace {

std::vector<SquareMatrix> minimal_blocks(const ReiNetwork& net, NodeType t) {
  const int n = net.size();
  const SquareMatrix& m = t == NodeType::E ? net.exc : net.inh;
  std::vector<int> cols;
  for (int j = 0; j < n; ++j)
    if (net.types[j] == t) cols.push_back(j);
  if (cols.empty()) return {m};

  int dmin = m(cols[0], cols[0]), dmax = dmin;
  for (int j : cols) {
    dmin = std::min(dmin, m(j, j));
    dmax = std::max(dmax, m(j, j));
  }
  int g = 0;
  bool off = false;
  for (int j : cols)
    for (int i = 0; i < n; ++i)
      if (i != j && m(i, j)) {
        g = std::gcd(g, m(i, j));
        off = true;
      }
  for (int j : cols) g = std::gcd(g, m(j, j) - dmin);
  if (g == 0) return {SquareMatrix(n)};

  auto build = [&](bool from_max) {
    SquareMatrix r(n);
    for (int j : cols) {
      for (int i = 0; i < n; ++i)
        if (i != j) r(i, j) = m(i, j) / g;
      r(j, j) = from_max ? (dmax - m(j, j)) / g : (m(j, j) - dmin) / g;
    }
    return r;
  };
  std::vector<SquareMatrix> out{build(false)};
  if (!off) {
    auto alt = build(true);
    if (alt.total() < out[0].total()) out = {alt};
    else if (alt.total() == out[0].total() && alt != out[0]) out.push_back(alt);
  }
  return out;
}

}  // namespace

MinimalForm minimal_representative(const ReiNetwork& net) {
  require_valid(net);
  auto es = minimal_blocks(net, NodeType::E);
  auto is = minimal_blocks(net, NodeType::I);
  std::optional<ReiNetwork> best;
  for (const auto& e : es)
    for (const auto& h : is) {
      ReiNetwork c = canonical_form(ReiNetwork(net.types, e, h));
      if (!best || c < *best) best = std::move(c);
    }
  MinimalForm r;
  r.net = std::move(*best);
  r.arrow_count = r.net.arrow_count();
  r.bound_note =
      "closed-form per-type reduction; minimum over the whole ODE class, "
      "entries never exceed the input maximum";
  return r;
}

MinimalForm minimal_by_search(const ReiNetwork& net, int cap) {
  require_valid(net);
  const int n = net.size();
  auto key = ode_class_key(net);
  ReiNetwork base = canonical_form(net);  // E nodes first
  std::vector<std::pair<int, int>> slots;  // (row, col)
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) slots.emplace_back(i, j);
  std::vector<int> digits(slots.size(), 0);
  std::optional<ReiNetwork> best;
  while (true) {
    ReiNetwork c(base.types);
    for (std::size_t k = 0; k < slots.size(); ++k) {
      auto [i, j] = slots[k];
      (c.types[j] == NodeType::E ? c.exc : c.inh)(i, j) = digits[k];
    }
    if ((!best || c.arrow_count() <= best->arrow_count()) && ode_class_key(c) == key) {
      c = canonical_form(c);
      if (!best || c.arrow_count() < best->arrow_count() ||
          (c.arrow_count() == best->arrow_count() && c < *best))
        best = c;
    }
    std::size_t k = 0;
    while (k < digits.size() && digits[k] == cap) digits[k++] = 0;
    if (k == digits.size()) break;
    ++digits[k];
  }
  MinimalForm r;
  r.net = *best;
  r.arrow_count = best->arrow_count();
  r.bound_note = "exhaustive search, entries <= " + std::to_string(cap);
  return r;
}

std::vector<OdeClass> classify(const std::vector<ReiNetwork>& nets, Labelling mode) {
  if (nets.empty()) return {};
  const int n = nets.front().size();
  for (const auto& x : nets)
    if (x.size() != n) throw std::invalid_argument("classify: mixed network sizes");
  std::map<OdeClassKey, std::vector<ReiNetwork>> groups;
  for (const auto& x : nets)
    groups[mode == Labelling::Fixed ? ode_class_key_fixed(x) : ode_class_key(x)].push_back(x);
  std::vector<OdeClass> out;
  for (auto& [k, mem] : groups) {
    OdeClass c{k, std::move(mem), {}};
    if (mode == Labelling::Fixed && n == 3 && is_eei(c.members.front())) {
      ReiNetwork nf = normal_form_3node(c.members.front());
      c.minimal = {nf, nf.arrow_count(), "normal form at fixed labelling"};
    } else {
      c.minimal = minimal_representative(c.members.front());
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace reinet
