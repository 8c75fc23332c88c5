#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "potts/classes.hpp"
#include "potts/io.hpp"
#include "potts/peierls.hpp"

namespace potts::cli {

namespace {

class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

const Coupling& require_coupling(const RunConfig& config) {
  if (!config.coupling) throw usage_error("--j1 and --j2 are required");
  return *config.coupling;
}

// Writes to --out when given, otherwise to `out`.
void emit(const RunConfig& config, std::ostream& out, const std::string& text) {
  if (config.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(config.out, std::ios::binary);
  if (!file) throw usage_error("cannot open output file '" + config.out + "'");
  file << text;
}

int run_classes(const RunConfig& config, std::ostream& out) {
  json list = json::array();
  for (const auto& orbit : all_orbits(config.k)) {
    json members = json::array();
    for (const auto& s : orbit.members) members.push_back(signature_to_json(s));
    const auto c = energy_coefficients(orbit.representative);
    list.push_back({{"representative", signature_to_json(orbit.representative)},
                    {"members", members},
                    {"orbit_size", orbit.members.size()},
                    {"energy_coefficients", {to_string(c.edge), c.pair}}});
  }
  if (config.list) {
    emit(config, out, list.dump(2) + "\n");
    return 0;
  }
  std::string text;
  const auto orbits = all_orbits(config.k);
  for (std::size_t n = 0; n < orbits.size(); ++n) {
    const auto c = energy_coefficients(orbits[n].representative);
    text += "orbit " + std::to_string(n) + ": " + to_string(orbits[n].representative) + "  size " +
            std::to_string(orbits[n].members.size()) + "  U = " + to_string(c.edge) + " J1 + " +
            std::to_string(c.pair) + " J2\n";
  }
  text += std::to_string(orbits.size()) + " orbits\n";
  emit(config, out, text);
  return 0;
}

int run_ground_states(const RunConfig& config, std::ostream& out) {
  const auto g = ground_state_set(require_coupling(config), config.k);
  emit(config, out, ground_state_set_to_json(g).dump(2) + "\n");
  return 0;
}

std::string format_decimal(const Rational& value) {
  std::ostringstream s;
  s.precision(17);
  s << to_double(value);
  return s.str();
}

int run_regions(const RunConfig& config, std::ostream& out) {
  const auto fan = region_fan(config.k);
  if (!config.grid) {
    emit(config, out, region_fan_to_json(fan).dump(2) + "\n");
    return 0;
  }
  const int n = *config.grid;
  if (n < 3 || n % 2 == 0) throw usage_error("--grid must be odd and >= 3");
  if (config.range <= Rational(0)) throw usage_error("--range must be positive");

  std::map<std::vector<ClassSignature>, std::string> labels;
  std::string csv = "j1,j2,minimizer_orbit_id\n";
  for (int a = 0; a < n; ++a) {
    const Rational j1 = -config.range + config.range * Rational(2 * a, n - 1);
    for (int b = 0; b < n; ++b) {
      const Rational j2 = -config.range + config.range * Rational(2 * b, n - 1);
      const auto minimizers = fan.lookup({j1, j2});
      auto it = labels.find(minimizers);
      if (it == labels.end()) it = labels.emplace(minimizers, orbit_label(minimizers, config.k)).first;
      csv += format_decimal(j1) + "," + format_decimal(j2) + "," + it->second + "\n";
    }
  }
  emit(config, out, csv);
  return 0;
}

int run_extend(const RunConfig& config, std::ostream& out) {
  if (config.ball_json.empty()) throw usage_error("--ball is required");
  BallConfig ball;
  try {
    ball = ball_from_json(json::parse(config.ball_json));
  } catch (const json::exception& e) {
    throw usage_error(std::string("malformed --ball: ") + e.what());
  }
  if (ball.k() != config.k) throw usage_error("--ball has a different k than --k");
  const auto p = extend_periodic(ball);
  const auto report = verify_extension(p, config.depth, 100, config.seed);
  json doc = {{"ground_state", periodic_to_json(p)}, {"verification", extension_report_to_json(report)}};
  emit(config, out, doc.dump(2) + "\n");
  return report.passed() ? 0 : 1;
}

int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto results = run_verification(config.k, config.seed);
  json doc = json::array();
  std::string summary;
  int passed = 0;
  for (const auto& r : results) {
    doc.push_back({{"suite", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    summary += std::string(r.passed ? "PASS " : "FAIL ") + r.name + ": " + r.detail + "\n";
    passed += r.passed ? 1 : 0;
  }
  summary += std::to_string(passed) + "/" + std::to_string(results.size()) + " suites passed\n";
  if (config.out.empty()) {
    if (!config.quiet) out << summary;
  } else {
    emit(config, out, doc.dump(2) + "\n");
    if (!config.quiet) err << summary;
  }
  return passed == static_cast<int>(results.size()) ? 0 : 1;
}

int run_peierls(const RunConfig& config, std::ostream& out) {
  const Coupling J = require_coupling(config);
  const Rational gap = lambda0(J, config.k);
  const auto witnesses = ground_state_set(J, config.k).witnesses;
  std::mt19937_64 rng(config.seed);
  const PerturbationParams params{config.flips, config.depth};

  std::optional<Rational> min_slack;
  json failures = json::array();
  for (int t = 0; t < config.trials; ++t) {
    const auto& bg = witnesses[std::uniform_int_distribution<std::size_t>(0, witnesses.size() - 1)(rng)];
    const auto sigma = random_perturbation(bg, config.k, rng, params);
    const auto report = peierls_check(sigma, J);
    const auto direct = relative_hamiltonian_direct(sigma, sigma.unperturbed(), J);
    if (!min_slack || report.slack() < *min_slack) min_slack = report.slack();
    const bool per_ball_ok = !report.min_ball_excess || *report.min_ball_excess >= gap;
    if (!report.satisfied || direct != report.relative_energy || !per_ball_ok) {
      failures.push_back({{"trial", t},
                          {"configuration", configuration_to_json(sigma)},
                          {"report", peierls_report_to_json(report)},
                          {"direct_relative_energy", to_string(direct)}});
    }
  }
  json doc = {{"lambda0", to_string(gap)},
              {"trials", config.trials},
              {"min_slack", min_slack ? json(to_string(*min_slack)) : json(nullptr)},
              {"failures", failures},
              {"coverage", "randomized finite perturbations: sound but not exhaustive"}};
  emit(config, out, doc.dump(2) + "\n");
  return failures.empty() ? 0 : 1;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.k < 1) throw usage_error("--k must be >= 1");
    switch (config.command) {
      case Command::classes: return run_classes(config, out);
      case Command::ground_states: return run_ground_states(config, out);
      case Command::regions: return run_regions(config, out);
      case Command::extend: return run_extend(config, out);
      case Command::verify: return run_verify(config, out, err);
      case Command::peierls: return run_peierls(config, out);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

int main_with_args(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact ground states and Peierls checks for the 4-state Potts model with competing "
               "interactions on the Cayley tree"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  std::string j1_text;
  std::string j2_text;
  std::string range_text = "2";
  app.add_option("--k", config.k, "Order of the Cayley tree (degree k+1)")->capture_default_str();
  app.add_option("--out", config.out, "Output file (default: stdout)");
  app.add_option("--seed", config.seed, "Seed for randomized checks")->capture_default_str();
  app.add_flag("--quiet", config.quiet, "Suppress summaries");

  auto* classes = app.add_subcommand("classes", "List the S4 orbits of ball-class signatures");
  classes->add_flag("--list", config.list, "Emit the orbit list as JSON");

  auto add_coupling = [&](CLI::App* sub, bool required) {
    auto* a = sub->add_option("--j1", j1_text, "Nearest-neighbour coupling, e.g. -3/2");
    auto* b = sub->add_option("--j2", j2_text, "Second-neighbour coupling");
    if (required) {
      a->required();
      b->required();
    }
  };

  auto* ground = app.add_subcommand("ground-states", "Minimal ball energy, minimizers and periodic witnesses");
  add_coupling(ground, true);

  auto* regions = app.add_subcommand("regions", "Exact phase fan, or a CSV grid of minimizer orbits");
  int grid = 0;
  regions->add_option("--grid", grid, "Grid points per axis (odd, >= 3)");
  regions->add_option("--range", range_text, "Grid half-width")->capture_default_str();

  auto* extend = app.add_subcommand("extend", "Extend a ball configuration to a periodic configuration");
  extend->add_option("--ball", config.ball_json, R"(Ball JSON: {"k":2,"center":1,"leaves":[1,2,3]})")->required();
  extend->add_option("--depth", config.depth, "Verification depth")->capture_default_str();

  app.add_subcommand("verify", "Run all verification suites");

  auto* peierls = app.add_subcommand("peierls", "Randomized Peierls-condition check");
  add_coupling(peierls, true);
  peierls->add_option("--trials", config.trials)->capture_default_str();
  peierls->add_option("--flips", config.flips, "Maximum flipped sites per trial")->capture_default_str();
  int perturbation_depth = 3;
  peierls->add_option("--depth", perturbation_depth, "Maximum depth of flipped sites")->capture_default_str();

  try {
    app.parse(argc, argv);
    if (!j1_text.empty() || !j2_text.empty()) {
      config.coupling = Coupling{parse_rational(j1_text), parse_rational(j2_text)};
    }
    config.range = parse_rational(range_text);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  if (*classes) config.command = Command::classes;
  if (*ground) config.command = Command::ground_states;
  if (*regions) {
    config.command = Command::regions;
    if (regions->count("--grid") > 0) config.grid = grid;
  }
  if (*extend) config.command = Command::extend;
  if (app.got_subcommand("verify")) config.command = Command::verify;
  if (*peierls) {
    config.command = Command::peierls;
    config.depth = perturbation_depth;
  }
  return run(config, out, err);
}

}  // namespace potts::cli
