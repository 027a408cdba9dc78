// Catalogs of connected 3-node REI networks with types [E,E,I]: supports,
// the valence-bounded universe, the special families and the class census.
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "reinet/three_node.hpp"
#include "reinet/ode_equiv.hpp"

namespace reinet {

// Which of beta1..beta4, gamma1, gamma2 are nonzero (bit k in that order).
struct SupportPattern {
  std::uint8_t bits = 0;

  static constexpr std::array<const char*, 6> names = {"beta1", "beta2", "beta3",
                                                        "beta4", "gamma1", "gamma2"};
  bool has(int k) const { return (bits >> k) & 1u; }
  static SupportPattern of(const MultiplicityVector& v);
  static SupportPattern parse(const std::string& s);  // "beta1,beta2" or "b1,b2"
  std::string to_string() const;                      // "beta1, beta2"

  auto operator<=>(const SupportPattern&) const = default;
};

bool support_connected(SupportPattern s);
std::vector<SupportPattern> connected_supports();
// Transcription of the published connectivity table.
std::vector<SupportPattern> table1_supports();

struct UniverseOptions {
  int max_valence = 2;
  bool exact_valence = false;  // every node has valence exactly max_valence
};

// Every labelled multiplicity vector (entries bounded by the valence) that
// yields a connected network.
std::vector<MultiplicityVector> enumerate_labelled(const UniverseOptions& opt = {});
// Same, deduplicated up to isomorphism; canonical forms, sorted.
std::vector<ReiNetwork> enumerate_universe(const UniverseOptions& opt = {});
inline std::vector<ReiNetwork> enumerate_valence_le2() { return enumerate_universe({2, false}); }

std::vector<ReiNetwork> dedup_isomorphic(const std::vector<ReiNetwork>& nets);

struct FamilySpec {
  std::string id;
  std::string description;
  std::function<std::vector<MultiplicityVector>()> instances;
};

const std::vector<FamilySpec>& family_registry();
// Group ids: sub, sub-complete, AH, NH-ii, NH-iii, mixed.
std::vector<std::string> family_groups();
std::vector<std::string> family_ids_in(const std::string& group);
// Expands a single family id or a group id. Throws std::invalid_argument for
// unknown ids and std::logic_error if a produced network breaks the valence
// bound or the REI rules.
std::vector<ReiNetwork> expand_family(const std::string& id);

// ---------------------------------------------------------------------------
// Published ODE-class tables

struct TableRow {
  int table = 0;  // 3..6
  int row = 0;    // 1-based
  std::vector<std::pair<std::string, std::vector<int>>> params;
  std::vector<std::string> all_two_excluded;  // skip when all of these equal 2
  int stated = 0;
  std::string description() const;
};

const std::vector<TableRow>& published_table_rows();
std::vector<MultiplicityVector> expand_row(const TableRow& row);

enum class Bucket { NoAutoBoth = 0, NoAutoOne = 1, AutoBoth = 2, AutoOne = 3 };
const char* bucket_name(Bucket b);
constexpr std::array<int, 4> kPublishedBuckets = {92, 38, 62, 35};

struct CensusClass {
  OdeClassKey key;
  std::string digest;
  MultiplicityVector rep;
  Bucket bucket = Bucket::NoAutoOne;
  long members = 0;
};

struct RowAudit {
  TableRow row;
  int computed = 0;
  bool members_valid = true;  // every expansion is connected and valence <= 2
};

struct CensusReport {
  std::array<int, 4> buckets{};
  std::vector<CensusClass> classes;  // sorted by digest
  std::vector<RowAudit> rows;
  std::vector<CensusClass> uncovered;  // census classes not named by any row
  std::size_t table_classes = 0;       // distinct classes named by the rows
  std::size_t table_classes_in_census = 0;
  int total() const { return buckets[0] + buckets[1] + buckets[2] + buckets[3]; }
};

std::string key_digest(const OdeClassKey& k);
Bucket bucket_of(const MultiplicityVector& rep);
CensusReport reproduce_tables(int max_valence = 2);

// ---------------------------------------------------------------------------
// Valence-2 cases (i)-(iv)

enum class Valence2Case { AlmostHomogeneous, TwoE, IAndOneE, Mixed };
const char* case_name(Valence2Case c);
bool in_case(const MultiplicityVector& v, Valence2Case c);
std::vector<ReiNetwork> case_members(Valence2Case c);
std::string case_family_group(Valence2Case c);

struct CaseReport {
  Valence2Case which;
  std::vector<ReiNetwork> census;
  std::vector<ReiNetwork> family;
  std::vector<ReiNetwork> missing_from_family;
  std::vector<ReiNetwork> outside_case;
  bool equal() const { return missing_from_family.empty() && outside_case.empty(); }
};

std::vector<CaseReport> valence2_case_census();

}  // namespace reinet
