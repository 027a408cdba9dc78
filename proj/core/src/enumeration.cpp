#include "reinet/enumeration.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

namespace reinet {

// ---------------------------------------------------------------------------
// Supports

SupportPattern SupportPattern::of(const MultiplicityVector& v) {
  SupportPattern s;
  int vals[6] = {v.beta1, v.beta2, v.beta3, v.beta4, v.gamma1, v.gamma2};
  for (int k = 0; k < 6; ++k)
    if (vals[k]) s.bits |= static_cast<std::uint8_t>(1u << k);
  return s;
}

SupportPattern SupportPattern::parse(const std::string& text) {
  static const char* const shortn[] = {"b1", "b2", "b3", "b4", "g1", "g2"};
  std::string t = text;
  std::replace(t.begin(), t.end(), ',', ' ');
  std::istringstream is(t);
  std::string tok;
  SupportPattern s;
  while (is >> tok) {
    int hit = -1;
    for (int k = 0; k < 6; ++k)
      if (tok == names[k] || tok == shortn[k]) hit = k;
    if (hit < 0) throw std::invalid_argument("unknown support entry '" + tok + "'");
    s.bits |= static_cast<std::uint8_t>(1u << hit);
  }
  return s;
}

std::string SupportPattern::to_string() const {
  std::string out;
  for (int k = 0; k < 6; ++k) {
    if (!has(k)) continue;
    if (!out.empty()) out += ", ";
    out += names[k];
  }
  return out;
}

bool support_connected(SupportPattern s) {
  // b1 b2 b3 g1 | b2 b3 b4 g2 | b1 b4 g1 g2
  constexpr std::uint8_t s1 = 0b010111, s2 = 0b101110, s3 = 0b111001;
  return (s.bits & s1) && (s.bits & s2) && (s.bits & s3);
}

std::vector<SupportPattern> connected_supports() {
  std::vector<SupportPattern> out;
  for (unsigned b = 0; b < 64; ++b) {
    SupportPattern s{static_cast<std::uint8_t>(b)};
    if (support_connected(s)) out.push_back(s);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Universe

std::vector<MultiplicityVector> enumerate_labelled(const UniverseOptions& opt) {
  const int k = opt.max_valence;
  std::vector<MultiplicityVector> out;
  std::array<int, 9> a{};
  // Odometer over 9 entries in [0, k]; row bounds prune nothing clever, the
  // space is (k+1)^9.
  while (true) {
    auto v = MultiplicityVector::from_array(a);
    bool ok = true;
    for (int node = 0; node < 3 && ok; ++node) {
      long val = v.valence(node);
      ok = opt.exact_valence ? val == k : val <= k;
    }
    if (ok && support_connected(SupportPattern::of(v))) out.push_back(v);
    int i = 0;
    while (i < 9 && a[i] == k) a[i++] = 0;
    if (i == 9) break;
    ++a[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ReiNetwork> dedup_isomorphic(const std::vector<ReiNetwork>& nets) {
  std::set<ReiNetwork> seen;
  for (const auto& n : nets) seen.insert(canonical_form(n));
  return {seen.begin(), seen.end()};
}

std::vector<ReiNetwork> enumerate_universe(const UniverseOptions& opt) {
  std::vector<ReiNetwork> nets;
  for (const auto& v : enumerate_labelled(opt)) nets.push_back(v.to_network());
  return dedup_isomorphic(nets);
}

// ---------------------------------------------------------------------------
// Families

namespace {

using MV = MultiplicityVector;

MV mk(std::initializer_list<std::pair<const char*, int>> kv) {
  MV v;
  for (auto [k, x] : kv) v.at(k) = x;
  return v;
}

// Two-node subnetwork on nodes 2 (E) and 3 (I): (delta, tau, beta4, gamma2).
struct Sub {
  int delta, tau, beta4, gamma2;
};

const Sub kSubConnected[15] = {
    {0, 0, 1, 0}, {0, 0, 2, 0}, {0, 1, 1, 0}, {1, 0, 1, 0}, {0, 0, 1, 1},
    {2, 0, 1, 0}, {1, 0, 1, 1}, {1, 0, 2, 0}, {1, 1, 1, 0}, {0, 0, 1, 2},
    {2, 0, 2, 0}, {2, 1, 1, 0}, {1, 0, 2, 1}, {1, 1, 1, 1}, {0, 0, 2, 2}};
const Sub kSubDisconnected[9] = {{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0},
                                  {1, 1, 0, 0}, {2, 0, 0, 0}, {0, 2, 0, 0},
                                  {2, 1, 0, 0}, {2, 2, 0, 0}, {1, 2, 0, 0}};

// a = beta2, b = beta1, c = beta3, d = gamma1, e = alpha; c+d+e <= 2 and
// a, b capped by the remaining valence of nodes 2 and 3.
std::vector<MV> sub_expand(Sub s) {
  std::vector<MV> out;
  int amax = 2 - (s.delta + s.gamma2), bmax = 2 - (s.tau + s.beta4);
  for (int a = 0; a <= amax; ++a)
    for (int b = 0; b <= bmax; ++b)
      for (int c = 0; c <= 2; ++c)
        for (int d = 0; c + d <= 2; ++d)
          for (int e = 0; c + d + e <= 2; ++e) {
            MV v;
            v.delta = s.delta;
            v.tau = s.tau;
            v.beta4 = s.beta4;
            v.gamma2 = s.gamma2;
            v.beta2 = a;
            v.beta1 = b;
            v.beta3 = c;
            v.gamma1 = d;
            v.alpha = e;
            if (support_connected(SupportPattern::of(v))) out.push_back(v);
          }
  return out;
}

// Case ii catalog: a + b + c = 2, a != 1.
std::vector<MV> nh_abc(const std::function<MV(int, int, int)>& f) {
  std::vector<MV> out;
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; a + b <= 2; ++b) {
      int c = 2 - a - b;
      if (a != 1) out.push_back(f(a, b, c));
    }
  return out;
}

// Case iii catalog: a + b = 2, a != b.
std::vector<MV> nh_ab(const std::function<MV(int, int)>& f) {
  return {f(0, 2), f(2, 0)};
}

std::vector<FamilySpec> build_registry() {
  std::vector<FamilySpec> r;
  const char* letters = "abcdefghijklmno";
  for (int k = 0; k < 15; ++k) {
    Sub s = kSubConnected[k];
    char buf[96];
    std::snprintf(buf, sizeof buf, "subnetwork (%c): delta=%d tau=%d beta4=%d gamma2=%d", letters[k],
                  s.delta, s.tau, s.beta4, s.gamma2);
    r.push_back({std::string(1, letters[k]), buf, [s] { return sub_expand(s); }});
  }
  for (int k = 0; k < 9; ++k) {
    Sub s = kSubDisconnected[k];
    char buf[96];
    std::snprintf(buf, sizeof buf, "subnetwork D%d: delta=%d tau=%d", k + 1, s.delta, s.tau);
    r.push_back({"D" + std::to_string(k + 1), buf, [s] { return sub_expand(s); }});
  }
  // Mirror images of (a)-(o): the 2-node list is only given up to duality.
  for (int k = 0; k < 15; ++k) {
    Sub s = kSubConnected[k];
    Sub m{s.tau, s.delta, s.gamma2, s.beta4};
    char buf[96];
    std::snprintf(buf, sizeof buf, "mirror of (%c): delta=%d tau=%d beta4=%d gamma2=%d", letters[k],
                  m.delta, m.tau, m.beta4, m.gamma2);
    r.push_back({std::string(1, letters[k]) + "*", buf, [m] { return sub_expand(m); }});
  }

  auto fixed = [](MV v) { return [v] { return std::vector<MV>{v}; }; };
  r.push_back({"AH.1", "almost homogeneous", fixed(mk({{"alpha", 1}, {"delta", 1}, {"beta1", 1}, {"tau", 1}, {"gamma1", 1}, {"gamma2", 1}}))});
  r.push_back({"AH.2", "almost homogeneous", fixed(mk({{"alpha", 1}, {"beta1", 1}, {"beta2", 1}, {"tau", 1}, {"gamma1", 1}, {"gamma2", 1}}))});
  r.push_back({"AH.3", "almost homogeneous", fixed(mk({{"alpha", 1}, {"beta2", 1}, {"beta4", 1}, {"tau", 1}, {"gamma1", 1}, {"gamma2", 1}}))});
  r.push_back({"AH.4", "almost homogeneous", fixed(mk({{"beta1", 1}, {"beta2", 1}, {"beta3", 1}, {"tau", 1}, {"gamma1", 1}, {"gamma2", 1}}))});

  r.push_back({"NH.1", "a+b+c=2, a!=1", [] {
                 return nh_abc([](int a, int b, int c) {
                   return mk({{"alpha", 1}, {"delta", 1}, {"gamma1", 1}, {"gamma2", 1}, {"tau", a}, {"beta4", b}, {"beta1", c}});
                 });
               }});
  r.push_back({"NH.2", "a+b+c=2, a!=1", [] {
                 return nh_abc([](int a, int b, int c) {
                   return mk({{"alpha", 1}, {"beta2", 1}, {"gamma1", 1}, {"gamma2", 1}, {"tau", a}, {"beta1", b}, {"beta4", c}});
                 });
               }});
  r.push_back({"NH.3", "a+b+c=2, a!=1", [] {
                 return nh_abc([](int a, int b, int c) {
                   return mk({{"beta2", 1}, {"beta3", 1}, {"gamma1", 1}, {"gamma2", 1}, {"tau", a}, {"beta1", b}, {"beta4", c}});
                 });
               }});

  r.push_back({"NH.4", "fixed", fixed(mk({{"beta1", 1}, {"alpha", 1}, {"gamma1", 1}, {"tau", 1}, {"gamma2", 2}}))});
  struct Nh {
    const char* id;
    const char* one1;
    const char* one2;
    const char* bslot;
  };
  static const Nh nh[] = {{"NH.5", "beta4", "alpha", "delta"}, {"NH.6", "alpha", "beta1", "beta2"},
                          {"NH.7", "alpha", "beta4", "beta2"}, {"NH.8", "beta3", "beta1", "beta2"},
                          {"NH.9", "beta3", "beta4", "beta2"}, {"NH.10", "beta3", "beta1", "delta"},
                          {"NH.11", "beta3", "beta4", "delta"}};
  for (const auto& f : nh) {
    r.push_back({f.id, "a+b=2, a!=b", [f] {
                   return nh_ab([f](int a, int b) {
                     MV v;
                     v.gamma1 = 1;
                     v.tau = 1;
                     v.gamma2 = a;
                     v.at(f.one1) = 1;
                     v.at(f.one2) = 1;
                     v.at(f.bslot) = b;
                     return v;
                   });
                 }});
  }

  r.push_back({"a.9", "mixed", fixed(mk({{"gamma1", 1}, {"gamma2", 2}, {"alpha", 1}, {"beta1", 2}}))});
  r.push_back({"a.11", "mixed", fixed(mk({{"gamma1", 1}, {"gamma2", 2}, {"alpha", 1}, {"beta4", 2}}))});
  r.push_back({"c.3", "mixed", fixed(mk({{"gamma1", 1}, {"tau", 2}, {"alpha", 1}, {"beta2", 2}}))});
  r.push_back({"c.5", "mixed", fixed(mk({{"gamma1", 1}, {"tau", 2}, {"beta3", 1}, {"beta2", 2}}))});
  r.push_back({"c.8", "mixed", fixed(mk({{"gamma1", 1}, {"tau", 2}, {"delta", 2}, {"beta3", 1}}))});
  r.push_back({"d.16", "mixed", fixed(mk({{"gamma1", 2}, {"tau", 1}, {"delta", 2}, {"beta4", 1}}))});
  return r;
}

}  // namespace

const std::vector<FamilySpec>& family_registry() {
  static const std::vector<FamilySpec> reg = build_registry();
  return reg;
}

std::vector<std::string> family_groups() {
  return {"sub", "sub-complete", "AH", "NH-ii", "NH-iii", "mixed"};
}

std::vector<std::string> family_ids_in(const std::string& group) {
  std::vector<std::string> ids;
  auto add_range = [&](const std::vector<std::string>& v) { ids.insert(ids.end(), v.begin(), v.end()); };
  std::vector<std::string> letters, mirrored, ds;
  for (char c = 'a'; c <= 'o'; ++c) {
    letters.emplace_back(1, c);
    mirrored.push_back(std::string(1, c) + "*");
  }
  for (int k = 1; k <= 9; ++k) ds.push_back("D" + std::to_string(k));
  if (group == "sub") {
    add_range(letters);
    add_range(ds);
  } else if (group == "sub-complete") {
    add_range(letters);
    add_range(mirrored);
    add_range(ds);
  } else if (group == "AH") {
    add_range({"AH.1", "AH.2", "AH.3", "AH.4"});
  } else if (group == "NH-ii") {
    add_range({"NH.1", "NH.2", "NH.3"});
  } else if (group == "NH-iii") {
    for (int k = 4; k <= 11; ++k) ids.push_back("NH." + std::to_string(k));
  } else if (group == "mixed") {
    add_range({"a.9", "a.11", "c.3", "c.5", "c.8", "d.16"});
  } else {
    throw std::invalid_argument("unknown family group '" + group + "'");
  }
  return ids;
}

std::vector<ReiNetwork> expand_family(const std::string& id) {
  std::vector<std::string> ids;
  auto groups = family_groups();
  if (std::find(groups.begin(), groups.end(), id) != groups.end()) ids = family_ids_in(id);
  else ids = {id};
  std::vector<ReiNetwork> nets;
  for (const auto& fid : ids) {
    const auto& reg = family_registry();
    auto it = std::find_if(reg.begin(), reg.end(), [&](const FamilySpec& f) { return f.id == fid; });
    if (it == reg.end()) throw std::invalid_argument("unknown family id '" + fid + "'");
    for (const auto& v : it->instances()) {
      ReiNetwork net = v.to_network();
      if (!validate_rei(net).ok()) throw std::logic_error("family " + fid + " produced a non-REI network");
      for (int node = 0; node < 3; ++node)
        if (v.valence(node) > 2)
          throw std::logic_error("family " + fid + " breaks the valence bound: " + v.to_string());
      nets.push_back(net);
    }
  }
  return dedup_isomorphic(nets);
}

// ---------------------------------------------------------------------------
// Census

std::string TableRow::description() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [name, vals] : params) {
    if (!first) os << ", ";
    first = false;
    if (vals.size() == 1) os << name << '=' << vals[0];
    else os << "1<=" << name << "<=2";
  }
  if (!all_two_excluded.empty()) {
    os << " excluding ";
    for (std::size_t k = 0; k < all_two_excluded.size(); ++k)
      os << (k ? "=" : "") << all_two_excluded[k];
    os << "=2";
  }
  return os.str();
}

std::vector<MultiplicityVector> expand_row(const TableRow& row) {
  std::vector<MultiplicityVector> out;
  std::vector<std::size_t> idx(row.params.size(), 0);
  while (true) {
    MultiplicityVector v;
    for (std::size_t k = 0; k < idx.size(); ++k) v.at(row.params[k].first) = row.params[k].second[idx[k]];
    bool excluded = !row.all_two_excluded.empty();
    for (const auto& e : row.all_two_excluded) excluded = excluded && v.at(e) == 2;
    if (!excluded) out.push_back(v);
    std::size_t k = 0;
    while (k < idx.size() && idx[k] + 1 == row.params[k].second.size()) idx[k++] = 0;
    if (k == idx.size()) break;
    ++idx[k];
  }
  return out;
}

const char* bucket_name(Bucket b) {
  switch (b) {
    case Bucket::NoAutoBoth: return "no-auto/both";
    case Bucket::NoAutoOne: return "no-auto/one";
    case Bucket::AutoBoth: return "auto/both";
    case Bucket::AutoOne: return "auto/one";
  }
  return "?";
}

std::string key_digest(const OdeClassKey& k) {
  // FNV-1a, 64 bit: stable across platforms, unlike std::hash.
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : k.serialize()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Bucket bucket_of(const MultiplicityVector& rep) {
  bool autoreg = rep.alpha || rep.delta || rep.tau;
  bool e_arrows = rep.alpha || rep.delta || rep.beta1 || rep.beta2 || rep.beta3 || rep.beta4;
  bool i_arrows = rep.tau || rep.gamma1 || rep.gamma2;
  bool both = e_arrows && i_arrows;
  if (autoreg) return both ? Bucket::AutoBoth : Bucket::AutoOne;
  return both ? Bucket::NoAutoBoth : Bucket::NoAutoOne;
}

CensusReport reproduce_tables(int max_valence) {
  CensusReport rep;
  // Classes at the fixed labelling, represented by universe members without
  // loops on nodes 2 and 3.
  std::vector<ReiNetwork> nets;
  for (const auto& v : enumerate_labelled({max_valence, false}))
    if (v.delta == 0 && v.tau == 0) nets.push_back(v.to_network());
  std::map<std::string, CensusClass> by_digest;
  std::map<OdeClassKey, std::string> digest_of;
  for (auto& c : classify(nets, Labelling::Fixed)) {
    CensusClass cc;
    cc.key = c.key;
    cc.digest = key_digest(c.key);
    cc.rep = MultiplicityVector::from_network(c.minimal.net);
    cc.bucket = bucket_of(cc.rep);
    cc.members = static_cast<long>(c.members.size());
    ++rep.buckets[static_cast<int>(cc.bucket)];
    digest_of[c.key] = cc.digest;
    if (!by_digest.emplace(cc.digest, cc).second) throw std::logic_error("digest collision");
  }
  for (auto& [d, c] : by_digest) rep.classes.push_back(c);

  std::set<OdeClassKey, std::less<>> named;
  for (const auto& row : published_table_rows()) {
    RowAudit a{row, 0, true};
    std::set<OdeClassKey, std::less<>> keys;
    for (const auto& v : expand_row(row)) {
      bool ok = support_connected(SupportPattern::of(v));
      for (int node = 0; node < 3; ++node) ok = ok && v.valence(node) <= max_valence;
      a.members_valid = a.members_valid && ok;
      keys.insert(ode_class_key_fixed(v.to_network()));
    }
    a.computed = static_cast<int>(keys.size());
    named.insert(keys.begin(), keys.end());
    rep.rows.push_back(a);
  }
  rep.table_classes = named.size();
  for (const auto& k : named) rep.table_classes_in_census += digest_of.count(k);
  for (const auto& c : rep.classes)
    if (!named.count(c.key)) rep.uncovered.push_back(c);
  return rep;
}

// ---------------------------------------------------------------------------
// Valence-2 cases

const char* case_name(Valence2Case c) {
  switch (c) {
    case Valence2Case::AlmostHomogeneous: return "i";
    case Valence2Case::TwoE: return "ii";
    case Valence2Case::IAndOneE: return "iii";
    case Valence2Case::Mixed: return "iv";
  }
  return "?";
}

bool in_case(const MultiplicityVector& v, Valence2Case c) {
  std::array<std::pair<int, int>, 3> p = {std::pair{v.alpha + v.beta3, v.gamma1},
                                          std::pair{v.beta2 + v.delta, v.gamma2},
                                          std::pair{v.beta1 + v.beta4, v.tau}};
  auto one_each = [&](int k) { return p[k] == std::pair{1, 1}; };
  switch (c) {
    case Valence2Case::AlmostHomogeneous: return one_each(0) && one_each(1) && one_each(2);
    case Valence2Case::TwoE: return one_each(0) && one_each(1) && !one_each(2);
    case Valence2Case::IAndOneE: return one_each(2) && one_each(0) != one_each(1);
    case Valence2Case::Mixed: {
      auto s = p;
      std::sort(s.begin(), s.end());
      return s == std::array<std::pair<int, int>, 3>{std::pair{0, 2}, std::pair{1, 1}, std::pair{2, 0}};
    }
  }
  return false;
}

std::vector<ReiNetwork> case_members(Valence2Case c) {
  std::vector<ReiNetwork> nets;
  for (const auto& v : enumerate_labelled({2, true}))
    if (in_case(v, c)) nets.push_back(v.to_network());
  return dedup_isomorphic(nets);
}

std::string case_family_group(Valence2Case c) {
  switch (c) {
    case Valence2Case::AlmostHomogeneous: return "AH";
    case Valence2Case::TwoE: return "NH-ii";
    case Valence2Case::IAndOneE: return "NH-iii";
    case Valence2Case::Mixed: return "mixed";
  }
  return "";
}

std::vector<CaseReport> valence2_case_census() {
  std::vector<CaseReport> out;
  for (auto c : {Valence2Case::AlmostHomogeneous, Valence2Case::TwoE, Valence2Case::IAndOneE,
                 Valence2Case::Mixed}) {
    CaseReport r{c, case_members(c), expand_family(case_family_group(c)), {}, {}};
    std::set<ReiNetwork> fam(r.family.begin(), r.family.end());
    std::set<ReiNetwork> cen(r.census.begin(), r.census.end());
    for (const auto& n : r.census)
      if (!fam.count(n)) r.missing_from_family.push_back(n);
    for (const auto& n : r.family)
      if (!cen.count(n)) r.outside_case.push_back(n);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace reinet
