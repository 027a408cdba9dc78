#include <set>

#include "doctest.h"
#include "fixtures.hpp"

using namespace reinet;

TEST_CASE("support examples") {
  CHECK(support_connected(SupportPattern::parse("b1 b2")));
  CHECK_FALSE(support_connected(SupportPattern::parse("b1")));
  CHECK(support_connected(SupportPattern::parse("g1 g2")));
  CHECK(SupportPattern::parse("beta1, gamma2").to_string() == "beta1, gamma2");
  CHECK_THROWS_AS(SupportPattern::parse("b5"), std::invalid_argument);
}

TEST_CASE("support connectivity matches the network predicate") {
  for (unsigned b = 0; b < 64; ++b) {
    SupportPattern s{static_cast<std::uint8_t>(b)};
    MultiplicityVector v;
    v.beta1 = s.has(0);
    v.beta2 = s.has(1);
    v.beta3 = s.has(2);
    v.beta4 = s.has(3);
    v.gamma1 = s.has(4);
    v.gamma2 = s.has(5);
    CHECK(support_connected(s) == is_connected(v.to_network()));
  }
}

TEST_CASE("support transcription is contained in the brute-force supports") {
  auto got = connected_supports();
  auto table = table1_supports();
  CHECK(table.size() == 51);
  CHECK(std::set<SupportPattern>(table.begin(), table.end()).size() == 51);
  for (const auto& s : table) CHECK(std::find(got.begin(), got.end(), s) != got.end());
  // The brute-force filter also admits three b2,b3 patterns the table omits.
  CHECK(got.size() == 54);
}

TEST_CASE("multiplicity vector round trip") {
  for (const auto& v : enumerate_labelled({2, false})) {
    CHECK(MultiplicityVector::from_network(v.to_network()) == v);
    CHECK(permute(v.to_network(), {1, 0, 2}) == v.swapped().to_network());
  }
}

TEST_CASE("valence-bounded universe") {
  auto labelled = enumerate_labelled({2, false});
  CHECK(labelled.size() == 730);
  auto u = enumerate_valence_le2();
  CHECK(u.size() == 376);
  CHECK(u.size() > 227);
  std::set<ReiNetwork> s(u.begin(), u.end());
  CHECK(s.count(canonical_form(fx::fiber_motif_reduced())));
  CHECK_FALSE(s.count(canonical_form(MultiplicityVector{}.to_network())));
  for (const auto& n : u) {
    CHECK(validate_rei(n).ok());
    CHECK(is_connected(n));
    for (int i = 0; i < 3; ++i) CHECK(input_profile(n, i).valence() <= 2);
    CHECK(canonical_form(n) == n);
  }
  CHECK(enumerate_universe({2, true}).size() == 100);
}

TEST_CASE("family expansions") {
  CHECK(expand_family("AH").size() == 4);
  CHECK(expand_family("mixed").size() == 6);
  auto nh1 = family_registry();
  auto it = std::find_if(nh1.begin(), nh1.end(), [](const FamilySpec& f) { return f.id == "NH.1"; });
  REQUIRE(it != nh1.end());
  for (const auto& v : it->instances()) {
    if (v.tau == 2) CHECK((v.beta4 == 0 && v.beta1 == 0));
    CHECK(v.tau != 1);
  }
  CHECK_THROWS_AS(expand_family("zz"), std::invalid_argument);
}

TEST_CASE("every family network is valid, connected and within valence 2") {
  for (const auto& g : family_groups())
    for (const auto& n : expand_family(g)) {
      CHECK(validate_rei(n).ok());
      CHECK(is_connected(n));
      for (int i = 0; i < 3; ++i) CHECK(input_profile(n, i).valence() <= 2);
    }
}

TEST_CASE("subnetwork families against the raw universe") {
  auto u = enumerate_valence_le2();
  std::set<ReiNetwork> us(u.begin(), u.end());
  auto lit = expand_family("sub");
  auto full = expand_family("sub-complete");
  CHECK(lit.size() == 326);
  for (const auto& n : lit) CHECK(us.count(n));
  CHECK(full == u);
}

TEST_CASE("deduplicated outputs hold no isomorphic pair") {
  for (const auto& g : family_groups()) {
    auto nets = expand_family(g);
    std::set<ReiNetwork> canon;
    for (const auto& n : nets) canon.insert(canonical_form(n));
    CHECK(canon.size() == nets.size());
  }
}

TEST_CASE("table row expansion") {
  const auto& rows = published_table_rows();
  CHECK(rows.size() == 40 + 11 + 27 + 10);
  // First row, no autoregulation, both types: 1 <= beta1, beta2 <= 2, beta3 = gamma1 = 1.
  CHECK(expand_row(rows[0]).size() == 4);
  // Tenth row: excluding beta1 = beta2 = 2.
  CHECK(rows[9].all_two_excluded.size() == 2);
  CHECK(expand_row(rows[9]).size() == 3);
}

TEST_CASE("census report structure") {
  auto r = reproduce_tables();
  CHECK(r.classes.size() == static_cast<std::size_t>(r.total()));
  for (std::size_t k = 1; k < r.classes.size(); ++k) CHECK(r.classes[k - 1].digest < r.classes[k].digest);
  for (const auto& c : r.classes) {
    CHECK(bucket_of(c.rep) == c.bucket);
    CHECK(c.rep.delta == 0);
    CHECK(c.rep.tau == 0);
    CHECK(normal_form_3node(c.rep) == c.rep);
  }
  CHECK(r.table_classes == r.table_classes_in_census);
  // Frozen outcome of the census under the fixed-labelling convention.
  CHECK(r.buckets == std::array<int, 4>{97, 38, 62, 35});
  CHECK(r.uncovered.size() == 6);
  for (const auto& c : r.uncovered) CHECK((c.rep.beta2 && c.rep.beta3 && !c.rep.beta1 && !c.rep.beta4));
}

TEST_CASE("valence-2 case predicates") {
  MultiplicityVector ah1{1, 1, 1, 1, 0, 0, 0, 1, 1};
  CHECK(in_case(ah1, Valence2Case::AlmostHomogeneous));
  CHECK_FALSE(in_case(ah1, Valence2Case::TwoE));
  auto reports = valence2_case_census();
  REQUIRE(reports.size() == 4);
  CHECK(reports[0].census.size() == 4);
  CHECK(reports[0].equal());
  CHECK(reports[1].census.size() == 10);
  CHECK(reports[1].equal());
  CHECK(reports[2].census.size() == 15);
  CHECK(reports[2].family.size() == 11);
  CHECK(reports[2].outside_case.empty());
  CHECK(reports[3].census.size() == 16);
  CHECK(reports[3].outside_case.empty());
}
