// File formats and report emission for the command line tool.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "reinet/reinet.hpp"

namespace reinet::io {

// Malformed input; message carries the line or field that failed.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Loaded {
  ReiNetwork net;
  std::vector<std::string> warnings;
};

// lenient: accept arrows whose type disagrees with the tail node and skip
// the REI check, so that `validate` can report violations.
Loaded parse_network(const std::string& text, const std::string& source = "<input>", bool lenient = false);
Loaded load_network_file(const std::string& path, bool lenient = false);
// Pretty (multi-line) or compact single-line JSON.
std::string format_network(const ReiNetwork& net, bool compact = false);

GrnParams parse_params(const std::string& text, const std::string& source = "<params>");
std::vector<double> parse_real_list(const std::string& text);

std::string to_dot(const ReiNetwork& net);

std::string census_table(const CensusReport& r);  // tab separated, header first
std::string census_summary(const CensusReport& r);

std::string read_file(const std::string& path);

}  // namespace reinet::io
