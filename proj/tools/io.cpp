#include "io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace reinet::io {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError(path + ": cannot open file");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

namespace {

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

json parse_json(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    auto [l, c] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    std::ostringstream os;
    os << source << ":" << l << ":" << c << ": malformed JSON";
    throw DataError(os.str());
  }
}

long get_int(const json& obj, const char* field, const std::string& where) {
  if (!obj.is_object() || !obj.contains(field)) throw DataError(where + ": missing field '" + field + "'");
  const json& v = obj.at(field);
  if (!v.is_number_integer()) throw DataError(where + "." + field + ": expected an integer");
  return v.get<long>();
}

NodeType get_type(const json& obj, const std::string& where) {
  if (!obj.is_object() || !obj.contains("type")) throw DataError(where + ": missing field 'type'");
  const json& v = obj.at("type");
  if (v == "E") return NodeType::E;
  if (v == "I") return NodeType::I;
  throw DataError(where + ".type: expected \"E\" or \"I\"");
}

}  // namespace

Loaded parse_network(const std::string& text, const std::string& source, bool lenient) {
  json doc = parse_json(text, source);
  if (!doc.is_object()) throw DataError(source + ": top level must be an object");
  if (!doc.contains("nodes") || !doc["nodes"].is_array())
    throw DataError(source + ": missing 'nodes' list");
  if (!doc.contains("arrows") || !doc["arrows"].is_array())
    throw DataError(source + ": missing 'arrows' list");

  std::map<long, NodeType> nodes;
  const auto& jn = doc["nodes"];
  for (std::size_t k = 0; k < jn.size(); ++k) {
    std::string where = source + ": nodes[" + std::to_string(k) + "]";
    long id = get_int(jn[k], "id", where);
    if (id <= 0) throw DataError(where + ".id: must be a positive integer");
    if (!nodes.emplace(id, get_type(jn[k], where)).second)
      throw DataError(where + ".id: duplicate id " + std::to_string(id));
  }
  if (nodes.empty()) throw DataError(source + ": 'nodes' is empty");
  if (nodes.rbegin()->first - nodes.begin()->first + 1 != static_cast<long>(nodes.size()))
    throw DataError(source + ": node ids are not contiguous");
  const long base = nodes.begin()->first;

  Loaded out;
  std::vector<NodeType> types;
  for (auto& [id, t] : nodes) types.push_back(t);
  out.net = ReiNetwork(types);
  std::map<std::tuple<long, long, NodeType>, std::size_t> first_seen;
  const auto& ja = doc["arrows"];
  for (std::size_t k = 0; k < ja.size(); ++k) {
    std::string where = source + ": arrows[" + std::to_string(k) + "]";
    long tail = get_int(ja[k], "tail", where), head = get_int(ja[k], "head", where);
    long mult = get_int(ja[k], "mult", where);
    NodeType t = get_type(ja[k], where);
    if (!nodes.count(tail)) throw DataError(where + ".tail: unknown node " + std::to_string(tail));
    if (!nodes.count(head)) throw DataError(where + ".head: unknown node " + std::to_string(head));
    if (mult <= 0) throw DataError(where + ".mult: must be a positive integer");
    if (!lenient && nodes[tail] != t)
      throw DataError(where + ".type: arrow type " + std::string(1, to_char(t)) + " does not match tail node " +
                      std::to_string(tail) + " of type " + to_char(nodes[tail]));
    auto key = std::make_tuple(tail, head, t);
    if (auto it = first_seen.find(key); it != first_seen.end())
      out.warnings.push_back(where + ": duplicate of arrows[" + std::to_string(it->second) +
                             "], multiplicities summed");
    else
      first_seen[key] = k;
    auto& m = t == NodeType::E ? out.net.exc : out.net.inh;
    m(static_cast<int>(head - base), static_cast<int>(tail - base)) += static_cast<int>(mult);
  }
  auto rep = validate_rei(out.net);
  if (!lenient && !rep.ok()) throw DataError(source + ": " + rep.describe());
  return out;
}

Loaded load_network_file(const std::string& path, bool lenient) {
  return parse_network(read_file(path), path, lenient);
}

std::string format_network(const ReiNetwork& net, bool compact) {
  json doc;
  doc["nodes"] = json::array();
  for (int i = 0; i < net.size(); ++i)
    doc["nodes"].push_back({{"id", i + 1}, {"type", std::string(1, to_char(net.types[i]))}});
  doc["arrows"] = json::array();
  for (int j = 0; j < net.size(); ++j)
    for (int i = 0; i < net.size(); ++i)
      for (NodeType t : {NodeType::E, NodeType::I}) {
        int m = (t == NodeType::E ? net.exc : net.inh)(i, j);
        if (m)
          doc["arrows"].push_back(
              {{"tail", j + 1}, {"head", i + 1}, {"type", std::string(1, to_char(t))}, {"mult", m}});
      }
  return compact ? doc.dump() : doc.dump(2) + "\n";
}

GrnParams parse_params(const std::string& text, const std::string& source) {
  json doc = parse_json(text, source);
  GrnParams p;
  for (auto [name, slot] : {std::pair{"E", &p.e}, std::pair{"I", &p.i}}) {
    if (!doc.contains(name)) continue;
    const json& o = doc[name];
    std::string where = source + ": " + name;
    for (auto [field, dst] : {std::pair{"mrna_decay", &slot->mrna_decay}, std::pair{"translation", &slot->translation},
                              std::pair{"protein_decay", &slot->protein_decay}}) {
      if (!o.contains(field)) continue;
      if (!o[field].is_number()) throw DataError(where + "." + field + ": expected a number");
      *dst = o[field].get<double>();
    }
    for (auto [field, dst] : {std::pair{"hill_inh_exponent", &slot->hill_inh_exponent},
                              std::pair{"hill_exc_exponent", &slot->hill_exc_exponent}}) {
      if (o.contains(field)) *dst = static_cast<int>(get_int(o, field, where));
    }
  }
  try {
    p.validate();
  } catch (const std::invalid_argument& e) {
    throw DataError(source + ": " + e.what());
  }
  return p;
}

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(tok, &used));
      if (tok.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw DataError("bad real number '" + tok + "'");
    }
  }
  return out;
}

std::string to_dot(const ReiNetwork& net) {
  std::ostringstream os;
  os << "digraph rei {\n";
  for (int i = 0; i < net.size(); ++i)
    os << "  n" << i + 1 << " [label=\"" << i + 1 << "\", shape=circle, style=filled, fillcolor="
       << (net.types[i] == NodeType::E ? "white" : "gray") << "];\n";
  for (int j = 0; j < net.size(); ++j)
    for (int i = 0; i < net.size(); ++i)
      for (NodeType t : {NodeType::E, NodeType::I}) {
        int m = (t == NodeType::E ? net.exc : net.inh)(i, j);
        if (!m) continue;
        const char* style = t == NodeType::E ? "solid" : "dashed";
        if (m <= 3) {
          for (int k = 0; k < m; ++k) os << "  n" << j + 1 << " -> n" << i + 1 << " [style=" << style << "];\n";
        } else {
          os << "  n" << j + 1 << " -> n" << i + 1 << " [style=" << style << ", label=\"" << m << "\"];\n";
        }
      }
  os << "}\n";
  return os.str();
}

std::string census_table(const CensusReport& r) {
  std::ostringstream os;
  os << "digest\tcategory\tmembers";
  for (const char* n : MultiplicityVector::names) os << '\t' << n;
  os << '\n';
  for (const auto& c : r.classes) {
    os << c.digest << '\t' << bucket_name(c.bucket) << '\t' << c.members;
    for (int x : c.rep.as_array()) os << '\t' << x;
    os << '\n';
  }
  return os.str();
}

std::string census_summary(const CensusReport& r) {
  std::ostringstream os;
  for (int b = 0; b < 4; ++b)
    os << "# " << bucket_name(static_cast<Bucket>(b)) << ": " << r.buckets[b] << " (published "
       << kPublishedBuckets[b] << ")\n";
  os << "# total: " << r.total() << '\n';
  int bad = 0;
  for (const auto& a : r.rows)
    if (a.computed != a.row.stated || !a.members_valid) {
      ++bad;
      os << "# row mismatch: table " << a.row.table << " row " << a.row.row << " [" << a.row.description()
         << "] stated " << a.row.stated << " computed " << a.computed << (a.members_valid ? "" : " (invalid members)")
         << '\n';
    }
  os << "# rows audited: " << r.rows.size() << ", mismatching: " << bad << '\n';
  os << "# classes named by the tables: " << r.table_classes << ", found in census: " << r.table_classes_in_census
     << '\n';
  for (const auto& c : r.uncovered)
    os << "# census class not in any table: " << c.digest << ' ' << bucket_name(c.bucket) << ' '
       << c.rep.to_string() << '\n';
  return os.str();
}

}  // namespace reinet::io
