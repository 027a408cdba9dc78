// reinet: command line front end.
//
// Exit codes: 0 success or "true", 1 "false" for predicates and failed
// expectations, 2 usage errors, 3 malformed or unusable data.
#include <fstream>
#include <iostream>
#include <map>
#include <optional>

#include "CLI11.hpp"
#include "io.hpp"

using namespace reinet;

namespace {

constexpr int kTrue = 0, kFalse = 1, kUsage = 2, kData = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw io::DataError(out_path + ": cannot write");
  f << text;
}

ReiNetwork load(const std::string& path, bool lenient = false) {
  auto l = io::load_network_file(path, lenient);
  for (const auto& w : l.warnings) std::cerr << "warning: " << w << '\n';
  return l.net;
}

Partition partition_arg(const std::string& text, int n) {
  try {
    return parse_partition(text, n);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--partition: ") + e.what());
  }
}

std::optional<Valence2Case> case_arg(const std::string& s) {
  if (s.empty()) return std::nullopt;
  static const std::map<std::string, Valence2Case> m = {{"i", Valence2Case::AlmostHomogeneous},
                                                        {"ii", Valence2Case::TwoE},
                                                        {"iii", Valence2Case::IAndOneE},
                                                        {"iv", Valence2Case::Mixed}};
  auto it = m.find(s);
  if (it == m.end()) throw UsageError("--case must be one of i, ii, iii, iv");
  return it->second;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Restricted excitatory-inhibitory network toolkit"};
  app.require_subcommand(1);

  std::string file, file_b, out_path, partition_text, case_text, family, labelling = "fixed";
  std::string x0_text, params_path, check_text;
  int max_valence = 2;
  bool expect_published = false, count_only = false;
  double t_end = 10.0, dt = 0.01, tol = 1e-9;

  auto* validate = app.add_subcommand("validate", "Check the REI tail constraint");
  validate->add_option("file", file)->required();

  auto* dualc = app.add_subcommand("dual", "Swap excitatory and inhibitory");
  dualc->add_option("file", file)->required();
  dualc->add_option("-o,--output", out_path);

  auto* equiv = app.add_subcommand("equiv", "Decide ODE-equivalence");
  equiv->add_option("a", file)->required();
  equiv->add_option("b", file_b)->required();

  auto* minimal = app.add_subcommand("minimal", "Minimal ODE-equivalent representative");
  minimal->add_option("file", file)->required();
  minimal->add_option("-o,--output", out_path);

  auto* enumerate = app.add_subcommand("enumerate", "Stream connected [E,E,I] networks (JSON lines)");
  enumerate->add_option("--max-valence", max_valence)->check(CLI::Range(1, 4));
  enumerate->add_option("--case", case_text, "valence-2 case: i, ii, iii or iv");
  enumerate->add_option("--family", family, "family or group id");
  enumerate->add_flag("--count-only", count_only);

  auto* classify_c = app.add_subcommand("classify", "ODE-class census of the valence-bounded universe");
  classify_c->add_option("--max-valence", max_valence)->check(CLI::Range(1, 3));
  classify_c->add_flag("--expect-published,--expect-paper", expect_published, "fail unless the counts are 92 38 62 35");
  classify_c->add_option("--labelling", labelling, "fixed (table convention) or free")
      ->check(CLI::IsMember({"fixed", "free"}));
  classify_c->add_option("-o,--output", out_path);

  auto* supports = app.add_subcommand("supports", "Connected support patterns");
  supports->add_flag("--expect-published,--expect-paper", expect_published, "fail unless equal to the published table");

  auto* synchrony = app.add_subcommand("synchrony", "List balanced partitions");
  synchrony->add_option("file", file)->required();

  auto* quotient_c = app.add_subcommand("quotient", "Quotient by a balanced partition");
  quotient_c->add_option("file", file)->required();
  quotient_c->add_option("--partition", partition_text)->required();
  quotient_c->add_option("-o,--output", out_path);

  auto* skeleton_c = app.add_subcommand("skeleton", "Admissible ODE skeleton");
  skeleton_c->add_option("file", file)->required();

  auto* simulate = app.add_subcommand("simulate", "Integrate the Hill-function GRN model");
  simulate->add_option("file", file)->required();
  simulate->add_option("--t", t_end)->check(CLI::PositiveNumber);
  simulate->add_option("--dt", dt)->check(CLI::PositiveNumber);
  simulate->add_option("--x0", x0_text, "comma list: mrna,protein per node");
  simulate->add_option("--params", params_path);
  simulate->add_option("--check-partition", check_text);
  simulate->add_option("--tolerance", tol);
  simulate->add_option("-o,--output", out_path);

  auto* dot = app.add_subcommand("export-dot", "Graphviz rendering");
  dot->add_option("file", file)->required();
  dot->add_option("-o,--output", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*validate) {
      ReiNetwork net = load(file, true);
      auto r = validate_rei(net);
      if (r.ok()) {
        std::cout << "ok\n";
        return kTrue;
      }
      std::cout << r.describe();
      return r.structural_error.empty() ? kFalse : kData;
    }
    if (*dualc) {
      emit(io::format_network(dual(load(file))), out_path);
      return kTrue;
    }
    if (*equiv) {
      ReiNetwork a = load(file), b = load(file_b);
      if (a.size() != b.size()) {
        std::cout << "not equivalent (node counts differ)\n";
        return kFalse;
      }
      auto sigma = find_ode_equivalence(a, b);
      if (!sigma) {
        std::cout << "not equivalent\n";
        return kFalse;
      }
      std::cout << "equivalent:";
      for (std::size_t i = 0; i < sigma->size(); ++i) std::cout << ' ' << i + 1 << "->" << (*sigma)[i] + 1;
      std::cout << '\n';
      return kTrue;
    }
    if (*minimal) {
      ReiNetwork net = load(file);
      auto m = minimal_representative(net);
      std::ostream& info = out_path.empty() ? std::cerr : std::cout;
      info << "arrows: " << net.arrow_count() << " -> " << m.arrow_count << '\n';
      emit(io::format_network(m.net), out_path);
      return kTrue;
    }
    if (*enumerate) {
      auto which = case_arg(case_text);
      std::vector<ReiNetwork> nets;
      if (!family.empty()) {
        nets = expand_family(family);
      } else if (which) {
        if (max_valence != 2) throw UsageError("--case requires --max-valence 2");
        nets = case_members(*which);
      } else {
        nets = enumerate_universe({max_valence, false});
      }
      if (!count_only)
        for (const auto& n : nets) std::cout << io::format_network(n, true) << '\n';
      (count_only ? std::cout : std::cerr) << nets.size() << '\n';
      return kTrue;
    }
    if (*classify_c) {
      if (labelling == "free") {
        auto classes = classify(enumerate_universe({max_valence, false}));
        std::array<int, 4> b{};
        std::string table = "digest\tcategory\tmembers\tminimal\n";
        for (const auto& c : classes) {
          auto rep = MultiplicityVector::from_network(c.minimal.net);
          ++b[static_cast<int>(bucket_of(rep))];
          table += key_digest(c.key) + "\t" + bucket_name(bucket_of(rep)) + "\t" +
                   std::to_string(c.members.size()) + "\t" + rep.to_string() + "\n";
        }
        emit(table, out_path);
        std::cerr << "classes up to renumbering: " << classes.size() << '\n';
        std::cout.flush();
        std::cerr << b[0] << ' ' << b[1] << ' ' << b[2] << ' ' << b[3] << '\n';
        return expect_published && b != kPublishedBuckets ? kFalse : kTrue;
      }
      auto r = reproduce_tables(max_valence);
      emit(io::census_table(r), out_path);
      std::cerr << io::census_summary(r);
      std::cerr << r.buckets[0] << ' ' << r.buckets[1] << ' ' << r.buckets[2] << ' ' << r.buckets[3] << '\n';
      if (expect_published && r.buckets != kPublishedBuckets) {
        std::cerr << "expected 92 38 62 35\n";
        return kFalse;
      }
      return kTrue;
    }
    if (*supports) {
      auto got = connected_supports();
      for (const auto& s : got) std::cout << s.to_string() << '\n';
      std::cerr << got.size() << " connected supports\n";
      if (!expect_published) return kTrue;
      auto want = table1_supports();
      std::sort(want.begin(), want.end());
      bool same = got == want;
      for (const auto& s : got)
        if (!std::binary_search(want.begin(), want.end(), s)) std::cerr << "not in table: " << s.to_string() << '\n';
      for (const auto& s : want)
        if (!std::binary_search(got.begin(), got.end(), s)) std::cerr << "table only: " << s.to_string() << '\n';
      return same ? kTrue : kFalse;
    }
    if (*synchrony) {
      ReiNetwork net = load(file);
      for (const auto& p : balanced_partitions(net)) std::cout << p.to_string() << '\n';
      return kTrue;
    }
    if (*quotient_c) {
      ReiNetwork net = load(file);
      Partition p = partition_arg(partition_text, net.size());
      if (!is_balanced(net, p)) {
        std::cerr << "partition " << p.to_string() << " is not balanced\n";
        return kData;
      }
      emit(io::format_network(quotient(net, p).net), out_path);
      return kTrue;
    }
    if (*skeleton_c) {
      std::cout << skeleton(load(file)).render();
      return kTrue;
    }
    if (*simulate) {
      ReiNetwork net = load(file);
      GrnParams params;
      if (!params_path.empty()) params = io::parse_params(io::read_file(params_path), params_path);
      SimConfig cfg;
      cfg.dt = dt;
      cfg.t_end = t_end;
      cfg.tolerance = tol;
      cfg.require_nonnegative = true;
      cfg.x0 = x0_text.empty() ? std::vector<double>(2 * net.size(), 1.0) : io::parse_real_list(x0_text);
      if (static_cast<int>(cfg.x0.size()) != 2 * net.size())
        throw UsageError("--x0 needs " + std::to_string(2 * net.size()) + " values");
      if (t_end < dt) throw UsageError("--t must be at least --dt");
      if (!check_text.empty()) {
        Partition p = partition_arg(check_text, net.size());
        if (!is_balanced(net, p)) {
          std::cerr << "partition " << p.to_string() << " is not balanced\n";
          return kData;
        }
        auto r = verify_synchrony(net, p, params, cfg);
        if (!out_path.empty()) emit(trajectory_csv(integrate(grn_field(net, params), cfg), net.size()), out_path);
        std::cout << "max divergence: " << r.max_divergence << '\n'
                  << "quotient deviation: " << r.max_quotient_deviation << '\n'
                  << (r.pass() ? "PASS" : "FAIL") << '\n';
        return r.pass() ? kTrue : kFalse;
      }
      emit(trajectory_csv(integrate(grn_field(net, params), cfg), net.size()), out_path);
      return kTrue;
    }
    if (*dot) {
      emit(io::to_dot(load(file)), out_path);
      return kTrue;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const io::DataError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kData;
  } catch (const IntegrationError& e) {
    std::cerr << "integration error: " << e.what() << '\n';
    return kData;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kData;
  }
  return kUsage;
}
