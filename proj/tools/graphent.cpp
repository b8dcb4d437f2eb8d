// Copyright 2026 The Graphent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <omp.h>

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "graphent/canonical.hpp"
#include "graphent/entanglement.hpp"
#include "graphent/graph_io.hpp"
#include "graphent/measurement.hpp"
#include "graphent/oracle.hpp"
#include "graphent/orbits.hpp"
#include "json.hpp"

namespace {

using namespace graphent;

enum ExitCode { kOk = 0, kUsage = 1, kCap = 2, kVerifyFailed = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::vector<std::string> graphs;
  std::string input;
  std::string output;
  std::string format;
  std::size_t max_vertices = 0;  // 0 = command default
  std::size_t orbit_limit = 1'000'000;
  std::optional<std::size_t> depth_limit;
  std::uint64_t seed = 42;
  int jobs = 0;  // 0 = available parallelism
  std::size_t n_max = 7;
  std::size_t trials = 100;
  std::string steps;
};

std::vector<Graph> load_graphs(const RunConfig& cfg) {
  std::vector<Graph> out;
  for (const auto& text : cfg.graphs) out.push_back(parse_graph6(text));
  if (!cfg.input.empty()) {
    if (cfg.input == "-") {
      for (auto& g : read_graph6_lines(std::cin)) out.push_back(std::move(g));
    } else {
      std::ifstream in(cfg.input);
      if (!in) throw UsageError("cannot open " + cfg.input);
      for (auto& g : read_graph6_lines(in)) out.push_back(std::move(g));
    }
  } else if (cfg.graphs.empty()) {
    out = read_graph6_lines(std::cin);
  }
  if (out.empty()) throw UsageError("no input graphs");
  return out;
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (cfg.format == f) return;
  }
  throw UsageError("format " + cfg.format + " is not supported by this command");
}

std::string ri_field(const Graph& g, std::size_t k) {
  return 2 * k <= g.order() ? rank_index(g, k).to_string() : std::string();
}

std::string cmd_bounds(const RunConfig& cfg) {
  require_format(cfg, {"csv", "json"});
  PersistencyOptions options;
  if (cfg.max_vertices) options.max_vertices = cfg.max_vertices;
  options.depth_limit = cfg.depth_limit;
  std::ostringstream out;
  nlohmann::json rows = nlohmann::json::array();
  if (cfg.format == "csv") out << "graph6,n_vertices,n_edges,lower,upper,cover,tight,RI_3,RI_2\n";
  for (const auto& g : load_graphs(cfg)) {
    const BoundsReport r = bounds(g, options);
    const std::string ri3 = ri_field(g, 3);
    const std::string ri2 = ri_field(g, 2);
    if (cfg.format == "csv") {
      out << to_graph6(g) << ',' << g.order() << ',' << g.edge_count() << ',' << r.lower << ',' << r.upper << ','
          << r.cover_size << ',' << (r.tight ? "yes" : "no") << ",\"" << ri3 << "\",\"" << ri2 << "\"\n";
    } else {
      rows.push_back({{"graph6", to_graph6(g)},
                      {"n_vertices", g.order()},
                      {"n_edges", g.edge_count()},
                      {"lower", r.lower},
                      {"upper", r.upper},
                      {"cover", r.cover_size},
                      {"tight", r.tight},
                      {"RI_3", ri3},
                      {"RI_2", ri2}});
    }
  }
  if (cfg.format == "json") out << rows.dump(2) << '\n';
  return out.str();
}

std::string cmd_classify(const RunConfig& cfg) {
  ClassifyOptions options;
  if (cfg.max_vertices) options.max_vertices = cfg.max_vertices;
  const auto classes = classify(cfg.n_max, options);
  if (cfg.format == "json") return classes_json(classes);
  if (cfg.format == "dot") return classes_dot(classes);
  return classes_csv(classes);
}

Sign parse_sign(std::string_view text) {
  if (text == "+" || text == "+1") return Sign::plus;
  if (text == "-" || text == "-1") return Sign::minus;
  throw UsageError("bad outcome '" + std::string(text) + "'");
}

Axis parse_axis(std::string_view text) {
  if (text == "x" || text == "X") return Axis::x;
  if (text == "y" || text == "Y") return Axis::y;
  if (text == "z" || text == "Z") return Axis::z;
  throw UsageError("bad basis '" + std::string(text) + "'");
}

bool feasible(const Graph& g, const std::vector<MeasurementStep>& steps) {
  try {
    apply_sequence(g, steps);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

// Steps look like "0:x:+,2:z"; a missing outcome is sampled from the seed.
std::vector<MeasurementStep> resolve_steps(const Graph& g, const std::string& spec, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<MeasurementStep> steps;
  std::stringstream items(spec);
  std::string item;
  while (std::getline(items, item, ',')) {
    std::vector<std::string> parts;
    std::stringstream fields(item);
    std::string field;
    while (std::getline(fields, field, ':')) parts.push_back(field);
    if (parts.size() < 2 || parts.size() > 3) throw UsageError("bad step '" + item + "'");
    MeasurementStep step;
    try {
      step.vertex = std::stoul(parts[0]);
    } catch (const std::exception&) {
      throw UsageError("bad vertex in step '" + item + "'");
    }
    step.basis = parse_axis(parts[1]);
    if (parts.size() == 3) {
      step.outcome = parse_sign(parts[2]);
    } else {
      auto with = steps;
      with.push_back({step.vertex, step.basis, Sign::plus});
      const bool plus_ok = feasible(g, with);
      with.back().outcome = Sign::minus;
      const bool minus_ok = feasible(g, with);
      if (plus_ok && minus_ok) {
        step.outcome = (rng() & 1u) ? Sign::minus : Sign::plus;
      } else {
        step.outcome = plus_ok ? Sign::plus : Sign::minus;
      }
    }
    steps.push_back(step);
  }
  return steps;
}

std::string cmd_measure(const RunConfig& cfg) {
  require_format(cfg, {"json"});
  const auto graphs = load_graphs(cfg);
  if (graphs.size() != 1) throw UsageError("measure takes exactly one graph");
  const auto steps = resolve_steps(graphs.front(), cfg.steps, cfg.seed);
  return transcript_json(apply_sequence(graphs.front(), steps)) + "\n";
}

std::string cmd_orbit(const RunConfig& cfg) {
  OrbitOptions options;
  if (cfg.max_vertices) options.max_vertices = cfg.max_vertices;
  options.orbit_limit = cfg.orbit_limit;
  std::ostringstream out;
  nlohmann::json rows = nlohmann::json::array();
  if (cfg.format == "csv") out << "source,graph6,n_edges\n";
  for (const auto& g : load_graphs(cfg)) {
    const auto orbit = lc_orbit_labeled(g, options);
    if (cfg.format == "csv") {
      for (const auto& h : orbit) out << to_graph6(g) << ',' << to_graph6(h) << ',' << h.edge_count() << '\n';
    } else if (cfg.format == "dot") {
      for (std::size_t i = 0; i < orbit.size(); ++i) out << to_dot(orbit[i], "orbit_" + std::to_string(i + 1));
    } else {
      nlohmann::json members = nlohmann::json::array();
      for (const auto& h : orbit) members.push_back(to_graph6(h));
      rows.push_back({{"graph6", to_graph6(g)}, {"size", orbit.size()}, {"orbit", members}});
    }
  }
  if (cfg.format == "json") out << rows.dump(2) << '\n';
  return out.str();
}

struct TrialReport {
  std::string graph6;
  std::size_t checks = 0;
  std::vector<std::string> failures;
};

TrialReport verify_one(const Graph& g) {
  TrialReport report{to_graph6(g), 0, {}};
  const auto fail = [&](const std::string& what) { report.failures.push_back(report.graph6 + ": " + what); };
  const oracle::StateVector state = oracle::graph_state(g);
  for (Vertex a = 0; a < g.order(); ++a) {
    for (Axis basis : {Axis::x, Axis::y, Axis::z}) {
      const MeasurementOutcome out = measure_pauli(g, a, basis);
      const auto after = oracle::graph_state(out.graph_after);
      for (Sign s : {Sign::plus, Sign::minus}) {
        ++report.checks;
        const oracle::Projection proj = oracle::apply_projector(state, a, basis, s);
        if (std::abs(proj.probability - out.probability(s).value()) > 1e-12) {
          fail("probability at vertex " + std::to_string(a));
          continue;
        }
        if (!proj.state) continue;
        const auto expected = oracle::insert_qubit(oracle::apply_local_clifford(after, out.byproduct(s)), a,
                                                   oracle::eigenstate(basis, s));
        if (oracle::overlap(*proj.state, expected) < 1.0 - oracle::kStateTolerance) {
          fail(std::string("measurement ") + axis_char(basis) + sign_char(s) + " at vertex " + std::to_string(a));
        }
      }
    }
    ++report.checks;
    const auto lc = oracle::apply_local_clifford(state, local_complement_unitary(g, a));
    if (!oracle::equal_up_to_global_phase(lc, oracle::graph_state(local_complement(g, a)))) {
      fail("local complementation at vertex " + std::to_string(a));
    }
  }
  const std::uint64_t full = (std::uint64_t{1} << g.order()) - 1;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    ++report.checks;
    const VertexSet side(mask);
    if (oracle::reduced_rank(state, side) != (std::size_t{1} << cut_rank(g, side))) {
      fail("reduced rank for mask " + std::to_string(mask));
    }
  }
  return report;
}

Graph random_connected(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double p = 0.25 + 0.55 * unit(rng);
  while (true) {
    Graph g(n);
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) {
        if (unit(rng) < p) g.toggle(a, b);
      }
    }
    if (is_connected(g)) return g;
  }
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  if (cfg.n_max < 2) throw UsageError("--n must be at least 2");
  if (cfg.n_max > oracle::kMaxQubits) {
    throw CapExceeded("verify is limited to " + std::to_string(oracle::kMaxQubits) + " vertices");
  }
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<std::size_t> order(2, cfg.n_max);
  std::vector<Graph> sample;
  for (std::size_t i = 0; i < cfg.trials; ++i) sample.push_back(random_connected(order(rng), rng));

  std::vector<TrialReport> reports(sample.size());
  const auto count = static_cast<std::int64_t>(sample.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) {
    reports[static_cast<std::size_t>(i)] = verify_one(sample[static_cast<std::size_t>(i)]);
  }

  std::size_t checks = 0;
  std::size_t failed = 0;
  for (const auto& r : reports) {
    checks += r.checks;
    for (const auto& f : r.failures) {
      out << "FAIL " << f << '\n';
      ++failed;
    }
  }
  out << "seed " << cfg.seed << ", " << sample.size() << " graphs up to " << cfg.n_max << " vertices, " << checks
      << " checks, " << failed << " failures\n";
  out << (failed == 0 ? "PASS" : "FAIL") << '\n';
  return failed == 0 ? kOk : kVerifyFailed;
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty() || cfg.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(cfg.output);
  if (!file) throw UsageError("cannot write " + cfg.output);
  file << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement bounds and local-complementation tools for graph states"};
  app.require_subcommand(1);
  RunConfig cfg;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--output,-o", cfg.output, "Write results to this file");
    sub->add_option("--jobs,-j", cfg.jobs, "Worker threads (default: available parallelism)")
        ->check(CLI::NonNegativeNumber);
  };
  const auto add_inputs = [&](CLI::App* sub) {
    sub->add_option("graphs", cfg.graphs, "graph6 strings (default: read standard input)");
    sub->add_option("--input,-i", cfg.input, "File with one graph6 per line, or - for standard input");
  };

  auto* bounds_cmd = app.add_subcommand("bounds", "Lower/upper entanglement bounds and rank indices");
  add_inputs(bounds_cmd);
  bounds_cmd->add_option("--max-vertices", cfg.max_vertices, "Cap on the persistency search")
      ->check(CLI::PositiveNumber);
  bounds_cmd->add_option("--depth-limit", cfg.depth_limit, "Cap on the persistency search depth")
      ->check(CLI::PositiveNumber);
  bounds_cmd->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* classify_cmd = app.add_subcommand("classify", "Classes of connected graphs under LC and isomorphism");
  classify_cmd->add_option("n_max", cfg.n_max, "Largest vertex count")->required()->check(CLI::PositiveNumber);
  classify_cmd->add_option("--max-vertices", cfg.max_vertices, "Cap on n_max")->check(CLI::PositiveNumber);
  classify_cmd->add_option("--format", cfg.format, "csv, json or dot")
      ->check(CLI::IsMember({"csv", "json", "dot"}));

  auto* measure_cmd = app.add_subcommand("measure", "Apply a sequence of Pauli measurements");
  add_inputs(measure_cmd);
  measure_cmd->add_option("--steps,-s", cfg.steps, "Steps like 0:x:+,2:z (0-based vertices)")->required();
  measure_cmd->add_option("--seed", cfg.seed, "Seed for outcomes left unspecified");
  measure_cmd->add_option("--format", cfg.format, "json")->check(CLI::IsMember({"json"}));

  auto* orbit_cmd = app.add_subcommand("orbit", "Labeled local-complementation orbit");
  add_inputs(orbit_cmd);
  orbit_cmd->add_option("--max-vertices", cfg.max_vertices, "Cap on the graph order")->check(CLI::PositiveNumber);
  orbit_cmd->add_option("--orbit-limit", cfg.orbit_limit, "Cap on the orbit size")->check(CLI::PositiveNumber);
  orbit_cmd->add_option("--format", cfg.format, "csv, json or dot")->check(CLI::IsMember({"csv", "json", "dot"}));

  auto* verify_cmd = app.add_subcommand("verify", "Check the symbolic rules against dense state vectors");
  verify_cmd->add_option("--seed", cfg.seed, "Sampling seed");
  verify_cmd->add_option("--n", cfg.n_max, "Largest vertex count")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--trials", cfg.trials, "Number of random connected graphs")->check(CLI::PositiveNumber);

  add_common(bounds_cmd);
  add_common(classify_cmd);
  add_common(measure_cmd);
  add_common(orbit_cmd);
  add_common(verify_cmd);
  // Each subcommand starts from its own default format.
  bounds_cmd->preparse_callback([&](std::size_t) { cfg.format = "csv"; });
  classify_cmd->preparse_callback([&](std::size_t) { cfg.format = "csv"; });
  measure_cmd->preparse_callback([&](std::size_t) { cfg.format = "json"; });
  orbit_cmd->preparse_callback([&](std::size_t) { cfg.format = "csv"; });

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

  if (cfg.jobs > 0) omp_set_num_threads(cfg.jobs);
  try {
    if (*verify_cmd) {
      std::ostringstream report;
      const int code = cmd_verify(cfg, report);
      emit(cfg, report.str());
      return code;
    }
    std::string text;
    if (*bounds_cmd) text = cmd_bounds(cfg);
    if (*classify_cmd) text = cmd_classify(cfg);
    if (*measure_cmd) text = cmd_measure(cfg);
    if (*orbit_cmd) text = cmd_orbit(cfg);
    emit(cfg, text);
    return kOk;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kCap;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
