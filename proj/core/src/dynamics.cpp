#include "reinet/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <tuple>

namespace reinet {

std::string variable_name(int node, NodeType t) {
  return "x" + std::to_string(node + 1) + (t == NodeType::E ? "+" : "-");
}

OdeSkeleton skeleton(const ReiNetwork& net) {
  require_valid(net);
  static const char* const symbols[] = {"f", "g", "h", "k", "p", "q", "r", "s", "u", "v", "w"};
  std::map<std::tuple<NodeType, long, long>, std::string> fn;
  OdeSkeleton sk;
  for (int i = 0; i < net.size(); ++i) {
    auto prof = input_profile(net, i);
    auto key = std::make_tuple(net.types[i], prof.exc_in, prof.inh_in);
    auto it = fn.find(key);
    if (it == fn.end()) {
      std::size_t k = fn.size();
      std::string s = k < std::size(symbols) ? symbols[k] : "f" + std::to_string(k);
      it = fn.emplace(key, s).first;
    }
    NodeEquation eq{i, net.types[i], it->second, {}, {}};
    for (int j = 0; j < net.size(); ++j) {
      eq.exc_args.insert(eq.exc_args.end(), net.exc(i, j), j);
      eq.inh_args.insert(eq.inh_args.end(), net.inh(i, j), j);
    }
    sk.equations.push_back(std::move(eq));
  }
  return sk;
}

std::string OdeSkeleton::render() const {
  std::map<int, NodeType> type_of;
  for (const auto& e : equations) type_of[e.node] = e.type;
  auto group = [&](const std::vector<int>& args) {
    std::string s;
    for (std::size_t k = 0; k < args.size(); ++k) s += (k ? ", " : "") + variable_name(args[k], type_of.at(args[k]));
    return args.size() > 1 ? "{" + s + "}" : s;
  };
  std::ostringstream os;
  for (const auto& e : equations) {
    std::string self = variable_name(e.node, e.type);
    os << self << "' = " << e.function << '(' << self;
    if (!e.exc_args.empty()) os << "; " << group(e.exc_args);
    if (!e.inh_args.empty()) os << "; " << group(e.inh_args);
    os << ")\n";
  }
  return os.str();
}

void GrnParams::validate() const {
  for (const auto* p : {&e, &i}) {
    if (!(p->mrna_decay > 0 && p->translation > 0 && p->protein_decay > 0))
      throw std::invalid_argument("GRN rates must be positive");
    if (p->hill_inh_exponent <= 0 || p->hill_exc_exponent <= 0)
      throw std::invalid_argument("Hill exponents must be positive integers");
  }
}

double hill_inh(double z, int n) { return 1.0 / (1.0 + std::pow(z, n)); }

double hill_exc(double z, int n) {
  double zn = std::pow(z, n);
  return zn / (1.0 + zn);
}

VectorField grn_field(const ReiNetwork& net, const GrnParams& params) {
  require_valid(net);
  params.validate();
  return [net, params](double, std::span<const double> x, std::span<double> dx) {
    const int n = net.size();
    for (int i = 0; i < n; ++i) {
      const auto& p = params.of(net.types[i]);
      double mrna = x[2 * i], protein = x[2 * i + 1];
      double synth = 0.0;
      for (int j = 0; j < n; ++j) {
        if (int m = net.exc(i, j)) synth += m * hill_exc(x[2 * j + 1], p.hill_exc_exponent);
        if (int m = net.inh(i, j)) synth += m * hill_inh(x[2 * j + 1], p.hill_inh_exponent);
      }
      dx[2 * i] = -p.mrna_decay * mrna + synth;
      dx[2 * i + 1] = p.translation * mrna - p.protein_decay * protein;
    }
  };
}

void SimConfig::validate() const {
  if (!(dt > 0)) throw std::invalid_argument("dt must be positive");
  if (!(t_end >= dt)) throw std::invalid_argument("t_end must be at least dt");
}

Trajectory integrate(const VectorField& field, const SimConfig& cfg) {
  cfg.validate();
  const std::size_t d = cfg.x0.size();
  const long steps = std::lround(cfg.t_end / cfg.dt);
  Trajectory tr;
  tr.times.reserve(steps + 1);
  tr.states.reserve(steps + 1);
  std::vector<double> x = cfg.x0, k1(d), k2(d), k3(d), k4(d), tmp(d);
  tr.times.push_back(0.0);
  tr.states.push_back(x);
  for (long s = 0; s < steps; ++s) {
    const double t = s * cfg.dt, h = cfg.dt;
    field(t, x, k1);
    for (std::size_t i = 0; i < d; ++i) tmp[i] = x[i] + 0.5 * h * k1[i];
    field(t + 0.5 * h, tmp, k2);
    for (std::size_t i = 0; i < d; ++i) tmp[i] = x[i] + 0.5 * h * k2[i];
    field(t + 0.5 * h, tmp, k3);
    for (std::size_t i = 0; i < d; ++i) tmp[i] = x[i] + h * k3[i];
    field(t + h, tmp, k4);
    for (std::size_t i = 0; i < d; ++i) {
      x[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
      if (!std::isfinite(x[i])) {
        std::ostringstream os;
        os << "non-finite state component " << i << " at t=" << t + h << "; step size " << h
           << " is too large";
        throw IntegrationError(os.str());
      }
      if (cfg.require_nonnegative && x[i] < 0.0) {
        std::ostringstream os;
        os << "negative concentration " << x[i] << " in component " << i << " at t=" << t + h;
        throw IntegrationError(os.str());
      }
    }
    tr.times.push_back((s + 1) * cfg.dt);
    tr.states.push_back(x);
  }
  return tr;
}

std::string trajectory_csv(const Trajectory& tr, int nodes) {
  std::ostringstream os;
  os << 't';
  for (int i = 1; i <= nodes; ++i) os << ",mrna_" << i << ",protein_" << i;
  os << '\n';
  char buf[40];
  for (std::size_t s = 0; s < tr.times.size(); ++s) {
    std::snprintf(buf, sizeof buf, "%.10g", tr.times[s]);
    os << buf;
    for (double v : tr.states[s]) {
      std::snprintf(buf, sizeof buf, ",%.17g", v);
      os << buf;
    }
    os << '\n';
  }
  return os.str();
}

SynchronyReport verify_synchrony(const ReiNetwork& net, const Partition& p, const GrnParams& params,
                                 const SimConfig& cfg) {
  if (!is_balanced(net, p)) throw std::invalid_argument("verify_synchrony: partition is not balanced");
  const int n = net.size();
  if (static_cast<int>(cfg.x0.size()) != 2 * n) throw std::invalid_argument("initial state has wrong length");
  Partition np = p.normalized();
  for (const auto& b : np.blocks)
    for (int i : b)
      for (int c = 0; c < 2; ++c)
        if (cfg.x0[2 * i + c] != cfg.x0[2 * b.front() + c])
          throw std::invalid_argument("initial state is not constant on the blocks");

  SimConfig full = cfg;
  full.require_nonnegative = true;
  auto tr = integrate(grn_field(net, params), full);

  auto q = quotient(net, np);
  SimConfig qc = full;
  qc.x0.clear();
  for (const auto& b : np.blocks) {
    qc.x0.push_back(cfg.x0[2 * b.front()]);
    qc.x0.push_back(cfg.x0[2 * b.front() + 1]);
  }
  auto qtr = integrate(grn_field(q.net, params), qc);

  SynchronyReport r;
  r.tolerance = cfg.tolerance;
  for (std::size_t s = 0; s < tr.states.size(); ++s) {
    const auto& x = tr.states[s];
    for (std::size_t b = 0; b < np.blocks.size(); ++b) {
      int rep = np.blocks[b].front();
      for (int i : np.blocks[b])
        for (int c = 0; c < 2; ++c)
          r.max_divergence = std::max(r.max_divergence, std::abs(x[2 * i + c] - x[2 * rep + c]));
      for (int c = 0; c < 2; ++c)
        r.max_quotient_deviation =
            std::max(r.max_quotient_deviation, std::abs(qtr.states[s][2 * b + c] - x[2 * rep + c]));
    }
  }
  return r;
}

}  // namespace reinet
