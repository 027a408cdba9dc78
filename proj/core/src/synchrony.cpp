#include "reinet/synchrony.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "reinet/linalg.hpp"
#include "reinet/ode_equiv.hpp"

namespace reinet {

Partition Partition::normalized() const {
  Partition p = *this;
  for (auto& b : p.blocks) std::sort(b.begin(), b.end());
  std::sort(p.blocks.begin(), p.blocks.end());
  return p;
}

std::vector<int> Partition::block_map(int n) const {
  std::vector<int> m(n, -1);
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b)
    for (int i : blocks[b]) m.at(i) = b;
  return m;
}

int Partition::nontrivial() const {
  return static_cast<int>(std::count_if(blocks.begin(), blocks.end(),
                                        [](const auto& b) { return b.size() > 1; }));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  auto p = normalized();
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    if (b) os << '|';
    for (std::size_t k = 0; k < p.blocks[b].size(); ++k) os << (k ? "," : "") << p.blocks[b][k] + 1;
  }
  return os.str();
}

Partition singletons(int n) {
  Partition p;
  for (int i = 0; i < n; ++i) p.blocks.push_back({i});
  return p;
}

void check_partition(const Partition& p, int n) {
  std::vector<int> seen(n, 0);
  for (const auto& b : p.blocks) {
    if (b.empty()) throw std::invalid_argument("partition has an empty block");
    for (int i : b) {
      if (i < 0 || i >= n) throw std::invalid_argument("partition names node " + std::to_string(i + 1) + " out of range");
      if (seen[i]++) throw std::invalid_argument("node " + std::to_string(i + 1) + " appears in two blocks");
    }
  }
  for (int i = 0; i < n; ++i)
    if (!seen[i]) throw std::invalid_argument("node " + std::to_string(i + 1) + " missing from partition");
}

Partition parse_partition(const std::string& text, int n) {
  Partition p;
  std::string clean;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) clean += c;
  std::stringstream bs(clean);
  std::string block;
  while (std::getline(bs, block, '|')) {
    std::vector<int> b;
    std::stringstream ns(block);
    std::string tok;
    while (std::getline(ns, tok, ',')) {
      if (tok.empty() || !std::all_of(tok.begin(), tok.end(), ::isdigit))
        throw std::invalid_argument("bad node id '" + tok + "' in partition");
      b.push_back(std::stoi(tok) - 1);
    }
    p.blocks.push_back(b);
  }
  if (!clean.empty() && clean.back() == '|') p.blocks.push_back({});
  check_partition(p, n);
  return p.normalized();
}

bool is_balanced(const ReiNetwork& net, const Partition& p) {
  check_partition(p, net.size());
  for (const auto& b : p.blocks)
    for (int i : b)
      if (net.types[i] != net.types[b.front()]) return false;
  for (const auto& b : p.blocks)
    for (const auto& k : p.blocks)
      for (const SquareMatrix* m : {&net.exc, &net.inh}) {
        auto sum = [&](int i) {
          long s = 0;
          for (int j : k) s += (*m)(i, j);
          return s;
        };
        long ref = sum(b.front());
        for (int i : b)
          if (sum(i) != ref) return false;
      }
  return true;
}

bool polydiagonal_invariant(const ReiNetwork& net, const Partition& p) {
  check_partition(p, net.size());
  const int n = net.size();
  const std::size_t nb = p.blocks.size();
  // Columns of P are the block indicators; Delta = column space of P.
  // M Delta is inside Delta iff rank [P | M P] = rank P.
  std::vector<std::vector<long>> pcols;
  for (const auto& b : p.blocks) {
    std::vector<long> v(n, 0);
    for (int i : b) v[i] = 1;
    pcols.push_back(v);
  }
  const std::size_t rp = rank(RatMatrix::from_rows(pcols, n));
  for (const auto& m : adjacency_bundle(net)) {
    auto rows = pcols;
    for (std::size_t c = 0; c < nb; ++c) {
      std::vector<long> img(n, 0);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) img[i] += static_cast<long>(m(i, j)) * pcols[c][j];
      rows.push_back(img);
    }
    if (rank(RatMatrix::from_rows(rows, n)) != rp) return false;
  }
  return true;
}

std::vector<Partition> all_partitions(int n) {
  // Restricted growth strings.
  std::vector<Partition> out;
  if (n <= 0) return out;
  std::vector<int> a(n, 0), mx(n, 0);
  while (true) {
    int k = *std::max_element(a.begin(), a.end()) + 1;
    Partition p;
    p.blocks.assign(k, {});
    for (int i = 0; i < n; ++i) p.blocks[a[i]].push_back(i);
    out.push_back(p);
    int i = n - 1;
    while (i > 0 && a[i] == mx[i - 1] + 1) --i;
    if (i == 0) break;
    ++a[i];
    mx[i] = std::max(mx[i - 1], a[i]);
    for (int j = i + 1; j < n; ++j) {
      a[j] = 0;
      mx[j] = mx[i];
    }
  }
  return out;
}

std::vector<Partition> balanced_partitions(const ReiNetwork& net) {
  require_valid(net);
  std::vector<Partition> out;
  for (auto& p : all_partitions(net.size())) {
    bool compatible = true;
    for (const auto& b : p.blocks)
      for (int i : b) compatible = compatible && input_equivalent(net, i, b.front());
    if (compatible && is_balanced(net, p)) out.push_back(p.normalized());
  }
  std::sort(out.begin(), out.end(), [](const Partition& x, const Partition& y) {
    if (x.blocks.size() != y.blocks.size()) return x.blocks.size() < y.blocks.size();
    return x.to_string() < y.to_string();
  });
  return out;
}

QuotientNetwork quotient(const ReiNetwork& net, const Partition& raw) {
  require_valid(net);
  if (!is_balanced(net, raw)) throw std::invalid_argument("quotient: partition is not balanced");
  Partition p = raw.normalized();
  const int k = static_cast<int>(p.blocks.size());
  ReiNetwork q{std::vector<NodeType>(k)};
  for (int b = 0; b < k; ++b) {
    int rep = p.blocks[b].front();
    q.types[b] = net.types[rep];
    for (int c = 0; c < k; ++c)
      for (int j : p.blocks[c]) {
        q.exc(b, c) += net.exc(rep, j);
        q.inh(b, c) += net.inh(rep, j);
      }
  }
  require_valid(q);
  return {q, p.block_map(net.size())};
}

}  // namespace reinet
