// Transcriptions of the published tables. These are fixtures: the generators
// never read them, the audits compare against them.
#include <sstream>

#include "reinet/enumeration.hpp"

namespace reinet {

std::vector<SupportPattern> table1_supports() {
  static const char* const rows[] = {
      "b1 b2", "b1 b2 b3", "b1 b2 b3 b4", "b1 b2 b3 g1", "b1 b2 b3 g1 g2",
      "b1 b2 b3 g2", "b1 b2 b3 b4 g1", "b1 b2 b3 b4 g1 g2", "b1 b2 b3 b4 g2", "b1 b2 b4",
      "b1 b2 b4 g1", "b1 b2 b4 g1 g2", "b1 b2 b4 g2", "b1 b2 g1", "b1 b2 g1 g2",
      "b1 b2 g2", "b1 b3", "b1 b3 b4", "b1 b3 b4 g1", "b1 b3 b4 g1 g2",
      "b1 b3 b4 g2", "b1 b3 g1", "b1 b3 g1 g2", "b1 b3 g2", "b1 b4",
      "b1 b4 g1", "b1 b4 g1 g2", "b1 b4 g2", "b1 g1 g2", "b1 g2",
      "b2 b3 b4", "b2 b3 b4 g1", "b2 b3 b4 g1 g2", "b2 b3 b4 g2", "b2 b4",
      "b2 b4 g1", "b2 b4 g1 g2", "b2 b4 g2", "b2 g1", "b2 g1 g2",
      "b2 g2", "b3 b4", "b3 b4 g1", "b3 b4 g1 g2", "b3 b4 g2",
      "b3 g1", "b3 g1 g2", "b3 g2", "b4 g1", "b4 g1 g2",
      "g1 g2",
  };
  std::vector<SupportPattern> out;
  for (const char* r : rows) out.push_back(SupportPattern::parse(r));
  return out;
}

namespace {

const char* long_name(const std::string& s) {
  static const std::pair<const char*, const char*> abbrev[] = {
      {"a", "alpha"}, {"d", "delta"}, {"t", "tau"},     {"b1", "beta1"}, {"b2", "beta2"},
      {"b3", "beta3"}, {"b4", "beta4"}, {"g1", "gamma1"}, {"g2", "gamma2"}};
  for (auto [k, v] : abbrev)
    if (s == k) return v;
  throw std::invalid_argument("bad parameter abbreviation " + s);
}

// "b1=1..2 b3=1" ; "b1 b2" lists parameters that may not all be 2.
TableRow row(int table, int idx, const char* params, const char* excl, int stated) {
  TableRow r;
  r.table = table;
  r.row = idx;
  r.stated = stated;
  std::istringstream ps(params);
  std::string tok;
  while (ps >> tok) {
    auto eq = tok.find('=');
    std::string name = long_name(tok.substr(0, eq));
    std::string val = tok.substr(eq + 1);
    if (val == "1..2") r.params.push_back({name, {1, 2}});
    else r.params.push_back({name, {std::stoi(val)}});
  }
  std::istringstream es(excl);
  while (es >> tok) r.all_two_excluded.push_back(long_name(tok));
  return r;
}

std::vector<TableRow> build_rows() {
  std::vector<TableRow> v;
  int k = 0;
  auto add = [&](int t, const char* p, const char* e, int c) { v.push_back(row(t, ++k, p, e, c)); };
  // No autoregulation, both arrow types.
  add(3, "b1=1..2 b2=1..2 b3=1 g1=1", "", 4);
  add(3, "b1=1..2 b2=1 b3=1 g1=1 g2=1", "", 2);
  add(3, "b1=1..2 b3=1..2 b2=1 g2=1", "", 4);
  add(3, "b2=1..2 b1=1 b3=1 b4=1 g1=1", "", 2);
  add(3, "b3=1..2 b1=1 b2=1 b4=1 g2=1", "", 2);
  add(3, "b1=1 b2=1 b3=1 b4=1 g1=1 g2=1", "", 1);
  add(3, "b2=1..2 b1=1 b4=1 g1=1", "", 2);
  add(3, "b1=1 b2=1 b4=1 g2=1", "", 1);
  add(3, "g1=1..2 b1=1 b2=1 b4=1 g2=1", "", 2);
  add(3, "b1=1..2 b2=1..2 g1=1", "b1 b2", 3);
  add(3, "b1=1..2 g1=1..2 b2=1 g2=1", "", 4);
  add(3, "b1=1..2 b2=1 g2=1", "", 2);
  add(3, "b1=1 b3=1 b4=1 g1=1", "", 1);
  add(3, "g2=1..2 b1=1 b3=1 b4=1 g1=1", "", 2);
  add(3, "b3=1..2 b1=1 b4=1 g2=1", "", 2);
  add(3, "b1=1..2 b3=1 g1=1", "", 2);
  add(3, "b1=1..2 g2=1..2 b3=1 g1=1", "", 4);
  add(3, "b1=1..2 b3=1..2 g2=1", "b1 b3", 3);
  add(3, "b1=1 b4=1 g1=1", "", 1);
  add(3, "g1=1..2 g2=1..2 b1=1 b4=1", "g1 g2", 3);
  add(3, "b1=1 b4=1 g2=1", "", 1);
  add(3, "b1=1 g2=1", "", 1);
  add(3, "g1=1..2 g2=1..2 b1=1", "g1 g2", 3);
  add(3, "b2=1..2 b4=1..2 b3=1 g1=1", "", 4);
  add(3, "b4=1..2 b2=1 b3=1 g1=1 g2=1", "", 2);
  add(3, "b3=1..2 b4=1..2 b2=1 g2=1", "", 4);
  add(3, "b2=1..2 b4=1..2 g1=1", "b2 b4", 3);
  add(3, "b4=1..2 g1=1..2 b2=1 g2=1", "", 4);
  add(3, "b4=1..2 b2=1 g2=1", "", 2);
  add(3, "b2=1 g1=1", "", 1);
  add(3, "g1=1..2 b2=1 g2=1", "", 2);
  add(3, "b2=1 g2=1", "", 1);
  add(3, "b4=1..2 b3=1 g1=1", "", 2);
  add(3, "b4=1..2 g2=1..2 b3=1 g1=1", "", 4);
  add(3, "b3=1..2 b4=1..2 g2=1", "b3 b4", 3);
  add(3, "b3=1 g1=1", "", 1);
  add(3, "g2=1..2 b3=1 g1=1", "", 2);
  add(3, "b3=1 g2=1", "", 1);
  add(3, "b4=1 g1=1", "", 1);
  add(3, "g1=1..2 g2=1..2 b4=1", "g1 g2", 3);
  // No autoregulation, one arrow type.
  k = 0;
  add(4, "b1=1..2 b2=1..2", "b1 b2", 3);
  add(4, "b1=1..2 b2=1..2 b3=1..2", "b1 b2 b3", 7);
  add(4, "b2=1..2 b1=1 b4=1", "", 2);
  add(4, "b2=1..2 b3=1..2 b1=1 b4=1", "", 4);
  add(4, "b2=1..2 b3=1..2 b4=1..2", "b2 b3 b4", 7);
  add(4, "b2=1..2 b4=1..2", "b2 b4", 3);
  add(4, "b1=1..2 b3=1..2", "b1 b3", 3);
  add(4, "b3=1..2 b1=1 b4=1", "", 2);
  add(4, "b3=1..2 b4=1..2", "b3 b4", 3);
  add(4, "b1=1 b4=1", "", 1);
  add(4, "g1=1..2 g2=1..2", "g1 g2", 3);
  // Autoregulation, both arrow types.
  k = 0;
  add(5, "b1=1..2 b3=1 a=1 b2=1 g2=1", "", 2);
  add(5, "b3=1 a=1 b1=1 b2=1 b4=1 g2=1", "", 1);
  add(5, "b2=1..2 g1=1 a=1 b1=1 b4=1", "", 2);
  add(5, "a=1..2 b1=1 b2=1 b4=1 g2=1", "", 2);
  add(5, "g1=1 a=1 b1=1 b2=1 b4=1 g2=1", "", 2);
  add(5, "b1=1..2 b2=1..2 g1=1 a=1", "", 4);
  add(5, "b1=1..2 g1=1 a=1 b2=1 g2=1", "", 2);
  add(5, "a=1..2 b1=1..2 b2=1 g2=1", "", 4);
  add(5, "b3=1 a=1 b1=1 b4=1 g2=1", "", 1);
  add(5, "b1=1..2 b3=1 a=1 g2=1", "", 2);
  add(5, "g1=1 a=1 b1=1 b4=1", "", 1);
  add(5, "g2=1..2 g1=1 a=1 b1=1 b4=1", "", 2);
  add(5, "a=1..2 b1=1 b4=1 g2=1", "", 2);
  add(5, "a=1..2 b1=1..2 g2=1", "a b1", 3);
  add(5, "b1=1..2 g2=1..2 g1=1 a=1", "", 4);
  add(5, "b4=1..2 b3=1 a=1 b2=1 g2=1", "", 2);
  add(5, "b2=1..2 b4=1..2 g1=1 a=1", "", 4);
  add(5, "b4=1..2 g1=1 a=1 b2=1 g2=1", "", 2);
  add(5, "a=1..2 b4=1..2 b2=1 g2=1", "", 4);
  add(5, "b2=1..2 g1=1 a=1", "", 2);
  add(5, "g1=1 a=1 b2=1 g2=1", "", 1);
  add(5, "a=1..2 b2=1 g2=1", "", 2);
  add(5, "b4=1..2 b3=1 a=1 g2=1", "", 2);
  add(5, "b3=1 a=1 g2=1", "", 1);
  add(5, "b4=1..2 g1=1 a=1", "", 2);
  add(5, "b4=1..2 g2=1..2 g1=1 a=1", "", 4);
  add(5, "g2=1..2 g1=1 a=1", "", 2);
  // Autoregulation, one arrow type.
  k = 0;
  add(6, "a=1..2 b1=1..2 b2=1..2", "a b1 b2", 7);
  add(6, "b1=1..2 b2=1..2 b3=1 a=1", "", 4);
  add(6, "a=1..2 b2=1..2 b1=1 b4=1", "", 4);
  add(6, "b2=1..2 b3=1 a=1 b1=1 b4=1", "", 2);
  add(6, "b2=1..2 b4=1..2 b3=1 a=1", "", 4);
  add(6, "a=1..2 b2=1..2 b4=1..2", "a b2 b4", 7);
  add(6, "b1=1..2 b3=1 a=1", "", 2);
  add(6, "b3=1 a=1 b1=1 b4=1", "", 1);
  add(6, "b4=1..2 b3=1 a=1", "", 2);
  add(6, "a=1..2 b1=1 b4=1", "", 2);
  return v;
}

}  // namespace

const std::vector<TableRow>& published_table_rows() {
  static const std::vector<TableRow> rows = build_rows();
  return rows;
}

}  // namespace reinet
