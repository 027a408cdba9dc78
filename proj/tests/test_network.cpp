#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"

using namespace reinet;

namespace {

ReiNetwork random_network(std::mt19937& rng, int n, int cap) {
  std::uniform_int_distribution<int> coin(0, 1), val(0, cap);
  ReiNetwork net{std::vector<NodeType>(n)};
  for (auto& t : net.types) t = coin(rng) ? NodeType::E : NodeType::I;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) (net.types[j] == NodeType::E ? net.exc : net.inh)(i, j) = val(rng);
  return net;
}

}  // namespace

TEST_CASE("validate_rei examples") {
  CHECK(validate_rei(fx::fiber_motif()).ok());
  CHECK(validate_rei(ReiNetwork(parse_types("E"), SquareMatrix{{0}}, SquareMatrix{{0}})).ok());
  auto bad = ReiNetwork(parse_types("EI"), SquareMatrix{{0, 1}, {0, 0}}, SquareMatrix{{0, 0}, {0, 0}});
  auto r = validate_rei(bad);
  REQUIRE_FALSE(r.ok());
  CHECK(r.structural_error.empty());
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0] == Violation{0, 1, NodeType::E});
}

TEST_CASE("dimension mismatch is structural, not an REI violation") {
  ReiNetwork net(parse_types("EE"), SquareMatrix(3), SquareMatrix(3));
  auto r = validate_rei(net);
  CHECK_FALSE(r.structural_error.empty());
  CHECK(r.violations.empty());
  CHECK_THROWS_AS(require_valid(net), StructuralError);
}

TEST_CASE("dual") {
  auto x = fx::fiber_motif();
  CHECK(dual(dual(x)) == x);
  auto d = dual(x);
  CHECK(d.types == parse_types("IIE"));
  CHECK(d.exc == x.inh);
  CHECK(d.inh == x.exc);
  // Split target: two I nodes each receive one excitatory arrow from the E node,
  // which receives one inhibitory arrow and sends itself nothing.
  auto f = dual(fx::split_target());
  CHECK(f.types == parse_types("IIE"));
  CHECK(f.exc == SquareMatrix{{0, 0, 1}, {0, 0, 1}, {0, 0, 0}});
  CHECK(f.inh == SquareMatrix{{0, 0, 0}, {0, 0, 0}, {1, 0, 0}});
}

TEST_CASE("dual preserves validity on random networks") {
  std::mt19937 rng(7);
  for (int k = 0; k < 200; ++k) {
    auto x = random_network(rng, 1 + k % 4, 2);
    REQUIRE(validate_rei(x).ok());
    CHECK(validate_rei(dual(x)).ok());
    CHECK(dual(dual(x)) == x);
  }
}

TEST_CASE("input equivalence") {
  auto x = fx::fiber_motif();
  CHECK_FALSE(input_equivalent(x, 0, 1));
  CHECK(input_profile(x, 1).exc_in == 1);
  CHECK(input_profile(x, 2).inh_in == 1);
  CHECK_FALSE(input_equivalent(x, 1, 2));
  for (int i = 0; i < 3; ++i) CHECK(input_equivalent(x, i, i));
  CHECK_THROWS_AS(input_profile(x, 3), std::out_of_range);
}

TEST_CASE("input equivalence is an equivalence relation") {
  std::mt19937 rng(11);
  for (int k = 0; k < 100; ++k) {
    auto x = random_network(rng, 4, 2);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        CHECK(input_equivalent(x, i, j) == input_equivalent(x, j, i));
        for (int l = 0; l < 4; ++l)
          if (input_equivalent(x, i, j) && input_equivalent(x, j, l)) CHECK(input_equivalent(x, i, l));
      }
  }
}

TEST_CASE("networks with both node types are inhomogeneous") {
  std::mt19937 rng(3);
  for (int k = 0; k < 200; ++k) {
    auto x = random_network(rng, 2 + k % 3, 2);
    bool both = std::count(x.types.begin(), x.types.end(), NodeType::E) % x.size() != 0;
    if (both) CHECK(input_class_count(x) >= 2);
  }
}

TEST_CASE("connectivity and transitivity examples") {
  auto cycle = ReiNetwork(parse_types("EEE"), SquareMatrix{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}, SquareMatrix(3));
  CHECK(is_transitive(cycle));
  CHECK(is_connected(fx::fiber_motif_reduced()));
  CHECK_FALSE(is_transitive(fx::fiber_motif_reduced()));
  CHECK(is_feedforward(fx::fiber_motif_reduced()));
  auto loop = ReiNetwork(parse_types("E"), SquareMatrix{{1}}, SquareMatrix{{0}});
  CHECK(is_connected(loop));
  CHECK(is_transitive(loop));
  auto loose = ReiNetwork(parse_types("EE"), SquareMatrix{{1, 0}, {0, 1}}, SquareMatrix(2));
  CHECK_FALSE(is_connected(loose));
}

namespace {

// Floyd-Warshall style closure, independent of the library's search.
bool closure_all(const ReiNetwork& net, bool undirected) {
  const int n = net.size();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    r[i][i] = true;
    for (int j = 0; j < n; ++j) {
      bool arc = net.exc(j, i) + net.inh(j, i) > 0;  // i -> j
      if (i != j && arc) {
        r[i][j] = true;
        if (undirected) r[j][i] = true;
      }
    }
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!r[i][j]) return false;
  return true;
}

}  // namespace

TEST_CASE("connectivity agrees with brute-force closure, n <= 3, entries <= 2") {
  long checked = 0;
  for (int n = 1; n <= 3; ++n)
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<NodeType> types(n);
      for (int i = 0; i < n; ++i) types[i] = (mask >> i) & 1 ? NodeType::I : NodeType::E;
      const int cells = n * n;
      std::vector<int> d(cells, 0);
      while (true) {
        ReiNetwork net(types);
        for (int c = 0; c < cells; ++c) {
          int i = c / n, j = c % n;
          (types[j] == NodeType::E ? net.exc : net.inh)(i, j) = d[c];
        }
        CHECK(is_connected(net) == closure_all(net, true));
        CHECK(is_transitive(net) == closure_all(net, false));
        ++checked;
        int c = 0;
        while (c < cells && d[c] == 2) d[c++] = 0;
        if (c == cells) break;
        ++d[c];
      }
    }
  CHECK(checked == 2 * 3 + 4 * 81 + 8 * 19683);
}

TEST_CASE("canonical form") {
  auto x = fx::fiber_motif();
  CHECK(canonical_form(canonical_form(x)) == canonical_form(x));
  auto a = MultiplicityVector{1, 1, 0, 0, 0, 0, 2, 1, 1}.to_network();  // NH.1, b=2
  auto b = MultiplicityVector{1, 1, 0, 2, 0, 0, 0, 1, 1}.to_network();  // NH.1, c=2
  CHECK(is_isomorphic(a, b));
  auto f = fx::split_target();
  CHECK(is_isomorphic(f, permute(f, {1, 0, 2})));
  CHECK_FALSE(is_isomorphic(fx::fiber_motif_reduced(), fx::split_target()));
}

TEST_CASE("canonical form is invariant under all renumberings, n <= 4") {
  std::mt19937 rng(5);
  for (int k = 0; k < 60; ++k) {
    int n = 1 + k % 4;
    auto x = random_network(rng, n, 2);
    auto c = canonical_form(x);
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      CHECK(canonical_form(permute(x, p)) == c);
    } while (std::next_permutation(p.begin(), p.end()));
  }
}

TEST_CASE("canonical form with duality") {
  auto x = fx::split_target();
  CHECK(canonical_form_with_duality(x) == canonical_form_with_duality(dual(x)));
}
