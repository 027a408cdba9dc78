#include <cmath>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"

using namespace reinet;

TEST_CASE("skeleton of the fiber motif") {
  auto text = skeleton(fx::fiber_motif()).render();
  CHECK(text ==
        "x1+' = f(x1+)\n"
        "x2+' = g(x2+; x1+; x3-)\n"
        "x3-' = h(x3-; x1+; x3-)\n");
}

TEST_CASE("skeleton of the looped pair groups same-type inputs") {
  auto sk = skeleton(fx::looped_inhibitory_pair());
  CHECK(sk.render() ==
        "x1-' = f(x1-; {x1-, x2-})\n"
        "x2-' = g(x2-; x3+; {x1-, x2-})\n"
        "x3+' = h(x3+)\n");
}

TEST_CASE("skeleton of a single node") {
  ReiNetwork one(parse_types("E"));
  CHECK(skeleton(one).render() == "x1+' = f(x1+)\n");
}

TEST_CASE("function symbols follow input classes") {
  auto s5 = skeleton(fx::split_target());
  CHECK(s5.equations[0].function == s5.equations[1].function);
  auto s27 = skeleton(fx::fiber_motif());
  CHECK(s27.equations[1].function != s27.equations[2].function);
}

TEST_CASE("repeated arguments follow multiplicities, sorted") {
  ReiNetwork a(parse_types("EEE"), SquareMatrix{{0, 0, 0}, {0, 0, 0}, {1, 2, 0}}, SquareMatrix(3));
  CHECK(skeleton(a).equations[2].exc_args == std::vector<int>{0, 1, 1});
  CHECK(skeleton(a).render().find("x3+' = g(x3+; {x1+, x2+, x2+})") != std::string::npos);
}

TEST_CASE("Hill functions") {
  for (double z : {0.0, 0.1, 0.5, 1.0, 2.0, 7.5}) {
    for (int n : {1, 2, 3, 4}) CHECK(hill_inh(z, n) + hill_exc(z, n) == doctest::Approx(1.0).epsilon(1e-15));
  }
  CHECK(hill_inh(1.0, 2) == 0.5);
  CHECK(hill_exc(0.0, 2) == 0.0);
}

TEST_CASE("GRN field of the looped pair matches the hand-written system") {
  auto f = grn_field(fx::looped_inhibitory_pair(), GrnParams{});
  std::mt19937 rng(1);
  std::uniform_real_distribution<double> u(0.0, 3.0);
  auto Hm = [](double z) { return 1.0 / (1.0 + z * z); };
  auto Hp = [](double z) { return z * z / (1.0 + z * z); };
  for (int t = 0; t < 50; ++t) {
    std::vector<double> x(6), dx(6);
    for (auto& v : x) v = u(rng);
    f(0.0, x, dx);
    double x1R = x[0], x1P = x[1], x2R = x[2], x2P = x[3], x3R = x[4], x3P = x[5];
    CHECK(dx[0] == doctest::Approx(-x1R + Hm(x1P) + Hm(x2P)));
    CHECK(dx[1] == doctest::Approx(x1R - x1P));
    CHECK(dx[2] == doctest::Approx(-x2R + Hm(x2P) + Hm(x1P) + Hp(x3P)));
    CHECK(dx[3] == doctest::Approx(x2R - x2P));
    CHECK(dx[4] == doctest::Approx(-x3R));
    CHECK(dx[5] == doctest::Approx(x3R - x3P));
  }
}

TEST_CASE("both internal-dynamics splits give the same right-hand side") {
  // The unlooped pair plus a self-inhibition term in the internal dynamics of
  // nodes 1 and 2 equals the looped pair.
  GrnParams p;
  auto left = grn_field(fx::looped_inhibitory_pair(), p);
  auto right = grn_field(fx::inhibitory_pair(), p);
  std::vector<double> x{0.3, 1.7, 0.9, 0.2, 1.1, 2.4}, a(6), b(6);
  left(0.0, x, a);
  right(0.0, x, b);
  b[0] += hill_inh(x[1], 2);
  b[2] += hill_inh(x[3], 2);
  for (int k = 0; k < 6; ++k) CHECK(a[k] == doctest::Approx(b[k]).epsilon(1e-15));
}

TEST_CASE("GRN field edge cases") {
  ReiNetwork empty(parse_types("EI"));
  auto f = grn_field(empty, GrnParams{});
  std::vector<double> x(4, 0.0), dx(4, 1.0);
  f(0.0, x, dx);
  for (double v : dx) CHECK(v == 0.0);
  GrnParams bad;
  bad.i.translation = 0.0;
  CHECK_THROWS_AS(grn_field(empty, bad), std::invalid_argument);
}

TEST_CASE("integrator basics") {
  SimConfig cfg;
  cfg.dt = 0.01;
  cfg.t_end = 1.0;
  cfg.x0 = {1.0};
  auto zero = integrate([](double, std::span<const double>, std::span<double> dx) { dx[0] = 0.0; }, cfg);
  for (const auto& s : zero.states) CHECK(s[0] == 1.0);
  auto decay = integrate([](double, std::span<const double> x, std::span<double> dx) { dx[0] = -x[0]; }, cfg);
  CHECK(decay.times.size() == 101);
  CHECK(std::abs(decay.states.back()[0] - std::exp(-1.0)) < 1e-6);

  SimConfig bad = cfg;
  bad.dt = 0.0;
  CHECK_THROWS_AS(integrate([](double, std::span<const double>, std::span<double>) {}, bad), std::invalid_argument);
  SimConfig blow = cfg;
  blow.dt = 0.5;
  blow.t_end = 50.0;
  CHECK_THROWS_AS(
      integrate([](double, std::span<const double> x, std::span<double> dx) { dx[0] = x[0] * x[0]; }, blow),
      IntegrationError);
}

TEST_CASE("decoupled node decays monotonically") {
  SimConfig cfg;
  cfg.dt = 0.01;
  cfg.t_end = 10.0;
  cfg.x0 = {0.0, 0.0, 0.0, 0.0, 1.0, 1.0};
  cfg.require_nonnegative = true;
  auto tr = integrate(grn_field(fx::looped_inhibitory_pair(), GrnParams{}), cfg);
  for (std::size_t s = 1; s < tr.states.size(); ++s) CHECK(tr.states[s][4] < tr.states[s - 1][4]);
  CHECK(tr.states.back()[4] == doctest::Approx(std::exp(-10.0)).epsilon(1e-6));
}

TEST_CASE("integrator is fourth order") {
  auto err = [](double dt) {
    SimConfig cfg;
    cfg.dt = dt;
    cfg.t_end = 1.0;
    cfg.x0 = {1.0};
    auto tr = integrate([](double, std::span<const double> x, std::span<double> dx) { dx[0] = -x[0]; }, cfg);
    return std::abs(tr.states.back()[0] - std::exp(-1.0));
  };
  double ratio = err(0.1) / err(0.05);
  CHECK(ratio > 8.0);
  CHECK(ratio < 32.0);
}

TEST_CASE("synchrony on the AH and NH-ii catalogs") {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> rate(0.3, 3.0), init(0.0, 2.0);
  std::uniform_int_distribution<int> expo(1, 4);
  auto nets = expand_family("AH");
  auto nh = expand_family("NH-ii");
  nets.insert(nets.end(), nh.begin(), nh.end());
  for (const auto& net : nets) {
    // Canonical forms may relabel; find the balanced pair of E nodes.
    Partition p;
    for (const auto& cand : balanced_partitions(net))
      if (cand.nontrivial()) p = cand;
    REQUIRE(p.blocks.size() == 2);
    for (int trial = 0; trial < 4; ++trial) {
      GrnParams params;
      if (trial) {
        for (auto* tp : {&params.e, &params.i}) {
          tp->mrna_decay = rate(rng);
          tp->translation = rate(rng);
          tp->protein_decay = rate(rng);
          tp->hill_inh_exponent = expo(rng);
          tp->hill_exc_exponent = expo(rng);
        }
      }
      SimConfig cfg;
      cfg.dt = 0.01;
      cfg.t_end = 20.0;
      std::vector<double> block_val;
      for (std::size_t b = 0; b < p.blocks.size(); ++b) {
        block_val.push_back(init(rng));
        block_val.push_back(init(rng));
      }
      cfg.x0.assign(6, 0.0);
      auto map = p.block_map(3);
      for (int i = 0; i < 3; ++i) {
        cfg.x0[2 * i] = block_val[2 * map[i]];
        cfg.x0[2 * i + 1] = block_val[2 * map[i] + 1];
      }
      auto r = verify_synchrony(net, p, params, cfg);
      CHECK(r.max_divergence <= 1e-9);
      CHECK(r.max_quotient_deviation <= 1e-9);
    }
  }
}

TEST_CASE("verify_synchrony preconditions") {
  SimConfig cfg;
  cfg.x0 = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6};
  CHECK_THROWS_AS(verify_synchrony(fx::fiber_motif_reduced(), parse_partition("1,2|3", 3), GrnParams{}, cfg), std::invalid_argument);
  CHECK_THROWS_AS(verify_synchrony(fx::split_target(), parse_partition("1,2|3", 3), GrnParams{}, cfg),
                  std::invalid_argument);
  auto r = verify_synchrony(fx::split_target(), singletons(3), GrnParams{}, cfg);
  CHECK(r.max_divergence == 0.0);
  CHECK(r.pass());
}

TEST_CASE("trajectory CSV header") {
  SimConfig cfg;
  cfg.dt = 0.5;
  cfg.t_end = 1.0;
  cfg.x0 = {1, 1, 1, 1};
  auto tr = integrate(grn_field(fx::split_target_quotient(), GrnParams{}), cfg);
  auto csv = trajectory_csv(tr, 2);
  CHECK(csv.rfind("t,mrna_1,protein_1,mrna_2,protein_2\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
}
