// Copyright 2026 the lpcoh authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: builds Cayley balls, solves p-harmonic Dirichlet
// problems, runs Liouville-trend experiments, verifies controlled Folner
// certificates, measures cocycle sublinearity profiles, and emits the tree
// non-vanishing certificate. Every command prints a single JSON report with
// the fully resolved configuration to stdout; artifact files (graphs, CSV,
// bare certificates) are written behind explicit flags.
//
// Exit codes: 0 success, 2 validation/usage error, 3 resource budget
// exceeded, 4 solver non-convergence.

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lpcoh/cocycle.hpp"
#include "lpcoh/dirichlet.hpp"
#include "lpcoh/errors.hpp"
#include "lpcoh/folner.hpp"
#include "lpcoh/graph.hpp"
#include "lpcoh/group.hpp"
#include "lpcoh/hyperbolic.hpp"

namespace {

using lpcoh::BudgetError;
using lpcoh::ConvergenceError;
using lpcoh::ValidationError;
using ordered_json = nlohmann::ordered_json;

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ValidationError("cannot open config file: " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ValidationError("config line is not key=value: " + line);
    }
    kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return kv;
}

/// Registers options on a subcommand and replays values from a flat
/// key=value config file for every option not given on the command line
/// (flags override the file; the file overrides defaults).
class ConfigBinder {
 public:
  explicit ConfigBinder(CLI::App* app) : app_(app) {
    app_->add_option("--config", config_path_, "flat key=value config file");
  }

  template <typename T>
  CLI::Option* add(const std::string& flag, T& var, const std::string& desc) {
    CLI::Option* opt = app_->add_option(flag, var, desc);
    bind(opt, flag, var);
    return opt;
  }

  CLI::Option* add_flag(const std::string& flag, bool& var, const std::string& desc) {
    CLI::Option* opt = app_->add_flag(flag, var, desc);
    bind(opt, flag, var);
    return opt;
  }

  void apply() const {
    if (config_path_.empty()) return;
    const auto kv = read_config_file(config_path_);
    for (const auto& f : appliers_) f(kv);
  }

 private:
  static std::string key_of(const std::string& flag) {
    std::string name = flag.substr(0, flag.find(','));
    return name.substr(name.find_first_not_of('-'));
  }

  template <typename T>
  void bind(CLI::Option* opt, const std::string& flag, T& var) {
    const std::string key = key_of(flag);
    appliers_.push_back([opt, &var, key](const std::map<std::string, std::string>& kv) {
      auto it = kv.find(key);
      if (opt->count() > 0 || it == kv.end()) return;
      if constexpr (std::is_same_v<T, std::string>) {
        var = it->second;
      } else if constexpr (std::is_same_v<T, bool>) {
        if (it->second == "true" || it->second == "1") {
          var = true;
        } else if (it->second == "false" || it->second == "0") {
          var = false;
        } else {
          throw ValidationError("bad boolean config value for " + key);
        }
      } else {
        std::istringstream ss(it->second);
        ss >> var;
        if (ss.fail() || !ss.eof()) {
          throw ValidationError("bad config value for " + key + ": " + it->second);
        }
      }
    });
  }

  CLI::App* app_;
  std::string config_path_;
  std::vector<std::function<void(const std::map<std::string, std::string>&)>> appliers_;
};

std::ofstream open_output(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw ValidationError("cannot open output file: " + path);
  return os;
}

void emit(const ordered_json& report) { std::cout << report.dump(2) << '\n'; }

// --- cayley ---

struct CayleyParams {
  std::string group = "Z";
  int radius = 5;
  std::int64_t budget = lpcoh::kDefaultVertexBudget;
  std::string out;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
  bool seed_given = false;
};

void run_cayley(const CayleyParams& P) {
  if (P.samples > 0 && !P.seed_given) {
    throw ValidationError("--seed is required when sampling hyperbolicity");
  }
  const lpcoh::Group group = lpcoh::Group::from_name(P.group);
  const lpcoh::CayleyBall ball = lpcoh::build_cayley_ball(group, P.radius, P.budget);

  if (!P.out.empty()) {
    auto os = open_output(P.out);
    lpcoh::write_graph(os, ball.graph);
  }

  std::int64_t num_edges = 0;
  for (const auto& nbrs : ball.graph.adj) num_edges += static_cast<std::int64_t>(nbrs.size());
  num_edges /= 2;

  ordered_json report;
  report["command"] = "cayley";
  report["config"] = {{"group", P.group}, {"radius", P.radius}, {"budget", P.budget},
                      {"out", P.out},     {"samples", P.samples}};
  if (P.samples > 0) report["config"]["seed"] = P.seed;
  report["num_vertices"] = ball.graph.num_vertices();
  report["num_edges"] = num_edges;
  if (P.samples > 0) {
    report["hyperbolicity_estimate"] =
        lpcoh::estimate_hyperbolicity(ball.graph, P.samples, P.seed);
  }
  emit(report);
}

// --- harmonic ---

struct HarmonicParams {
  std::string graph;
  std::string boundary;
  double p = 2.0;
  double tol = -1.0;  // -1: default_tolerance(p)
  int max_iter = 100000;
  std::string out;
};

void run_harmonic(const HarmonicParams& P) {
  std::ifstream gs(P.graph);
  if (!gs) throw ValidationError("cannot open graph file: " + P.graph);
  const lpcoh::Graph g = lpcoh::read_graph(gs);

  std::ifstream bs(P.boundary);
  if (!bs) throw ValidationError("cannot open boundary file: " + P.boundary);
  const lpcoh::BoundaryValues boundary = lpcoh::read_boundary_csv(bs, g);

  const double tol = P.tol > 0.0 ? P.tol : lpcoh::default_tolerance(P.p);
  const auto [f, energy] = lpcoh::solve_p_harmonic(g, boundary, P.p, tol, P.max_iter);

  if (!P.out.empty()) {
    auto os = open_output(P.out);
    lpcoh::write_vertex_function_csv(os, f);
  }

  ordered_json report;
  report["command"] = "harmonic";
  report["config"] = {{"graph", P.graph}, {"boundary", P.boundary}, {"p", P.p},
                      {"tol", tol},       {"max_iter", P.max_iter}, {"out", P.out}};
  report["report"] = ordered_json::parse(lpcoh::energy_report_json(energy));
  emit(report);
}

// --- liouville ---

struct LiouvilleParams {
  std::string group = "Z2";
  double p = 2.0;
  int radius_min = 4;
  int radius_max = 12;
  int radius_step = 2;
  double tol = -1.0;
  int max_iter = 100000;
  std::int64_t budget = lpcoh::kDefaultVertexBudget;
};

/// Boundary data for the Liouville experiment: on ZD the bounded radial
/// profile h(x) = x_1 / max(1, |x|), whose gradient is l^p-summable for
/// p > d; on tree-like groups the indicator of the subtree under the first
/// generator (a bounded-energy function whose harmonic part stays
/// nonconstant).
double liouville_data(const lpcoh::CayleyBall& ball, std::int32_t v) {
  const lpcoh::Elem& g = ball.labels[v];
  if (ball.group.kind() == lpcoh::GroupKind::ZD) {
    const auto wl = ball.group.word_length_closed_form(g);
    return static_cast<double>(g[0]) / static_cast<double>(std::max<std::int64_t>(1, wl));
  }
  std::int32_t first = v;
  while (ball.parent[first] > 0) first = ball.parent[first];
  return v != 0 && ball.parent_gen[first] == 0 ? 1.0 : 0.0;
}

void run_liouville(const LiouvilleParams& P) {
  if (P.radius_min < 3 || P.radius_max < P.radius_min || P.radius_step < 1) {
    throw ValidationError("need 3 <= radius-min <= radius-max, radius-step >= 1");
  }
  const lpcoh::Group group = lpcoh::Group::from_name(P.group);
  const double tol = P.tol > 0.0 ? P.tol : lpcoh::default_tolerance(P.p);

  ordered_json rows = ordered_json::array();
  for (int r = P.radius_min; r <= P.radius_max; r += P.radius_step) {
    const lpcoh::CayleyBall ball = lpcoh::build_cayley_ball(group, r, P.budget);
    lpcoh::BoundaryValues boundary;
    double bmin = 0.0, bmax = 0.0;
    bool first = true;
    for (std::int32_t v = 0; v < ball.graph.num_vertices(); ++v) {
      if (ball.graph.word_length[v] != r) continue;
      const double value = liouville_data(ball, v);
      boundary.emplace_back(v, value);
      bmin = first ? value : std::min(bmin, value);
      bmax = first ? value : std::max(bmax, value);
      first = false;
    }
    const auto [f, energy] = lpcoh::solve_p_harmonic(ball.graph, boundary, P.p, tol, P.max_iter);

    // Oscillation of the solution over the fixed central window (radius 2).
    double cmin = f.values[0], cmax = f.values[0];
    for (std::int32_t v = 0; v < ball.graph.num_vertices(); ++v) {
      if (ball.graph.word_length[v] > 2) continue;
      cmin = std::min(cmin, f.values[v]);
      cmax = std::max(cmax, f.values[v]);
    }
    const double boundary_osc = bmax - bmin;
    rows.push_back({{"radius", r},
                    {"central_oscillation", cmax - cmin},
                    {"boundary_oscillation", boundary_osc},
                    {"normalized", boundary_osc > 0.0 ? (cmax - cmin) / boundary_osc : 0.0},
                    {"energy", energy.energy},
                    {"iterations", energy.iterations}});
  }

  ordered_json report;
  report["command"] = "liouville";
  report["config"] = {{"group", P.group},           {"p", P.p},
                      {"radius_min", P.radius_min}, {"radius_max", P.radius_max},
                      {"radius_step", P.radius_step}, {"tol", tol},
                      {"max_iter", P.max_iter},     {"budget", P.budget}};
  report["rows"] = rows;
  emit(report);
}

// --- folner ---

struct FolnerParams {
  std::string group = "Z";
  int N = 16;
  double C = -1.0;  // -1: group default (2 for Z, 6 otherwise)
  std::int64_t budget = lpcoh::kDefaultVertexBudget;
  std::string out;
  std::string sequence_out;
};

void run_folner(const FolnerParams& P) {
  const lpcoh::Group group = lpcoh::Group::from_name(P.group);
  lpcoh::FolnerSequence F{group, {}};
  if (group.kind() == lpcoh::GroupKind::ZD) {
    F = lpcoh::folner_zd(group.rank(), P.N, P.budget);
  } else if (group.kind() == lpcoh::GroupKind::Lamplighter) {
    F = lpcoh::folner_lamplighter(P.N, P.budget);
  } else {
    throw ValidationError("no built-in Folner sequence for " + group.name());
  }
  const double C = P.C > 0.0
                       ? P.C
                       : (group.kind() == lpcoh::GroupKind::ZD && group.rank() == 1 ? 2.0 : 6.0);
  const lpcoh::ControlCertificate cert = lpcoh::verify_controlled(F, C, P.budget);

  if (!P.out.empty()) {
    auto os = open_output(P.out);
    os << lpcoh::certificate_json(cert) << '\n';
  }
  if (!P.sequence_out.empty()) {
    auto os = open_output(P.sequence_out);
    lpcoh::write_folner_sequence(os, F);
  }

  ordered_json report;
  report["command"] = "folner";
  report["config"] = {{"group", P.group}, {"n", P.N},   {"c", C},
                      {"budget", P.budget}, {"out", P.out}, {"sequence_out", P.sequence_out}};
  report["certificate"] = ordered_json::parse(lpcoh::certificate_json(cert));
  emit(report);
}

// --- sublinearity ---

struct SublinearityParams {
  std::string group = "Z";
  double alpha = 0.5;
  bool with_sign = true;
  double p = 4.0;
  int N = 64;
  int stride = 1;
  std::int64_t truncation = 100000;
  std::int64_t budget = lpcoh::kDefaultVertexBudget;
  std::string out;
};

void run_sublinearity(const SublinearityParams& P) {
  const lpcoh::Group group = lpcoh::Group::from_name(P.group);
  lpcoh::RadialFunction f{P.alpha, P.with_sign};
  const lpcoh::CocycleHandle b =
      lpcoh::CocycleHandle::radial_coboundary(group, f, P.p, P.truncation);
  const lpcoh::SublinearityProfile profile =
      lpcoh::sublinearity_profile(b, P.N, P.p, P.stride, P.budget);

  if (!P.out.empty()) {
    auto os = open_output(P.out);
    lpcoh::write_profile_csv(os, profile);
  }

  ordered_json rows = ordered_json::array();
  for (const auto& row : profile.rows) {
    rows.push_back({{"n", row.n},
                    {"max_norm", row.max_norm},
                    {"ratio", row.ratio},
                    {"tail_bound", row.tail_bound}});
  }
  ordered_json report;
  report["command"] = "sublinearity";
  report["config"] = {{"group", P.group},   {"alpha", P.alpha},
                      {"signed", P.with_sign}, {"p", P.p},
                      {"n", P.N},           {"stride", P.stride},
                      {"truncation", P.truncation}, {"budget", P.budget},
                      {"out", P.out}};
  report["rows"] = rows;
  emit(report);
}

// --- certificate ---

struct CertificateParams {
  int depth = 8;
  double p = 2.0;
  std::int64_t budget = lpcoh::kDefaultVertexBudget;
  std::string out;
  std::string profile_out;
};

void run_certificate(const CertificateParams& P) {
  const lpcoh::TreeBall tree = lpcoh::build_tree_ball(P.depth, P.budget);
  const lpcoh::NonvanishingCertificate cert = lpcoh::nonvanishing_certificate(tree, P.p);

  if (!P.out.empty()) {
    auto os = open_output(P.out);
    os << lpcoh::nonvanishing_certificate_json(cert) << '\n';
  }
  if (!P.profile_out.empty()) {
    const lpcoh::BoundaryFunction F = lpcoh::t2_indicator(tree, std::log(2.0));
    const lpcoh::EnergyProfile profile = lpcoh::extension_energy_profile(F, tree, P.p);
    auto os = open_output(P.profile_out);
    os << "depth,energy,envelope_gromov,envelope_paper\n";
    char buf[160];
    for (const auto& row : profile.rows) {
      std::snprintf(buf, sizeof(buf), "%d,%.17g,%.17g,%.17g\n", row.depth, row.energy,
                    row.envelope_gromov, row.envelope_paper);
      os << buf;
    }
  }

  ordered_json report;
  report["command"] = "certificate";
  report["config"] = {{"depth", P.depth}, {"p", P.p}, {"budget", P.budget},
                      {"out", P.out},     {"profile_out", P.profile_out}};
  report["certificate"] = ordered_json::parse(lpcoh::nonvanishing_certificate_json(cert));
  emit(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical laboratory for p-Dirichlet energy, controlled Folner "
               "certificates, cocycle averaging, and tree non-vanishing certificates"};
  app.require_subcommand(1);

  auto cayley = std::make_shared<CayleyParams>();
  auto harmonic = std::make_shared<HarmonicParams>();
  auto liouville = std::make_shared<LiouvilleParams>();
  auto folner = std::make_shared<FolnerParams>();
  auto sublinearity = std::make_shared<SublinearityParams>();
  auto certificate = std::make_shared<CertificateParams>();
  std::vector<std::shared_ptr<ConfigBinder>> binders;

  {
    CLI::App* sub = app.add_subcommand("cayley", "build a Cayley ball and write the graph file");
    auto b = std::make_shared<ConfigBinder>(sub);
    b->add("--group", cayley->group, "group name (Z, Z2, ..., lamplighter, F2)");
    b->add("--radius", cayley->radius, "ball radius");
    b->add("--budget", cayley->budget, "vertex budget");
    b->add("--out", cayley->out, "graph file to write");
    b->add("--hyperbolicity-samples", cayley->samples, "random quadruples to sample (0 = off)");
    auto* seed_opt = b->add("--seed", cayley->seed, "RNG seed for sampling");
    binders.push_back(b);
    sub->callback([cayley, b, seed_opt] {
      b->apply();
      cayley->seed_given = seed_opt->count() > 0;
      run_cayley(*cayley);
    });
  }
  {
    CLI::App* sub = app.add_subcommand("harmonic", "solve the p-harmonic Dirichlet problem");
    auto b = std::make_shared<ConfigBinder>(sub);
    b->add("--graph", harmonic->graph, "graph file")->required();
    b->add("--boundary", harmonic->boundary, "boundary CSV (vertex,value)")->required();
    b->add("--p", harmonic->p, "energy exponent");
    b->add("--tol", harmonic->tol, "residual tolerance (default 1e-9 for p=2, 1e-7 otherwise)");
    b->add("--max-iter", harmonic->max_iter, "max solver sweeps");
    b->add("--out", harmonic->out, "solution CSV to write");
    binders.push_back(b);
    sub->callback([harmonic, b] { b->apply(); run_harmonic(*harmonic); });
  }
  {
    CLI::App* sub = app.add_subcommand(
        "liouville", "central-oscillation trend of p-harmonic extensions on growing balls");
    auto b = std::make_shared<ConfigBinder>(sub);
    b->add("--group", liouville->group, "group name");
    b->add("--p", liouville->p, "energy exponent");
    b->add("--radius-min", liouville->radius_min, "smallest ball radius");
    b->add("--radius-max", liouville->radius_max, "largest ball radius");
    b->add("--radius-step", liouville->radius_step, "radius increment");
    b->add("--tol", liouville->tol, "residual tolerance");
    b->add("--max-iter", liouville->max_iter, "max solver sweeps");
    b->add("--budget", liouville->budget, "vertex budget");
    binders.push_back(b);
    sub->callback([liouville, b] { b->apply(); run_liouville(*liouville); });
  }
  {
    CLI::App* sub = app.add_subcommand("folner", "build and verify a controlled Folner sequence");
    auto b = std::make_shared<ConfigBinder>(sub);
    b->add("--group", folner->group, "group name (ZD or lamplighter)");
    b->add("--n", folner->N, "sequence length N");
    b->add("--c", folner->C, "certificate constant (default 2 for Z, 6 otherwise)");
    b->add("--budget", folner->budget, "vertex budget");
    b->add("--out", folner->out, "certificate JSON to write");
    b->add("--sequence-out", folner->sequence_out, "sequence file to write");
    binders.push_back(b);
    sub->callback([folner, b] { b->apply(); run_folner(*folner); });
  }
  {
    CLI::App* sub = app.add_subcommand(
        "sublinearity", "M(n)/n profile of a radial coboundary with certified tails");
    auto b = std::make_shared<ConfigBinder>(sub);
    b->add("--group", sublinearity->group, "ZD group name (Z, Z2, ...)");
    b->add("--alpha", sublinearity->alpha, "radial exponent in (0, 1]");
    b->add_flag("--signed,!--unsigned", sublinearity->with_sign, "signed profile (Z only)");
    b->add("--p", sublinearity->p, "l^p exponent");
    b->add("--n", sublinearity->N, "profile up to word length N");
    b->add("--stride", sublinearity->stride, "profile stride");
    b->add("--truncation", sublinearity->truncation, "support truncation radius");
    b->add("--budget", sublinearity->budget, "vertex budget");
    b->add("--out", sublinearity->out, "profile CSV to write");
    binders.push_back(b);
    sub->callback([sublinearity, b] { b->apply(); run_sublinearity(*sublinearity); });
  }
  {
    CLI::App* sub = app.add_subcommand(
        "certificate", "quantitative non-vanishing certificate on a 3-regular tree ball");
    auto b = std::make_shared<ConfigBinder>(sub);
    b->add("--depth", certificate->depth, "tree depth D");
    b->add("--p", certificate->p, "exponent p (pairs with q = p/(p-1))");
    b->add("--budget", certificate->budget, "vertex budget");
    b->add("--out", certificate->out, "certificate JSON to write");
    b->add("--profile-out", certificate->profile_out, "per-depth energy CSV to write");
    binders.push_back(b);
    sub->callback([certificate, b] { b->apply(); run_certificate(*certificate); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return 2;
  } catch (const BudgetError& e) {
    std::cerr << "budget error: " << e.what() << '\n';
    return 3;
  } catch (const ConvergenceError& e) {
    std::cerr << "convergence error: " << e.what() << '\n';
    return 4;
  }
  return 0;
}
