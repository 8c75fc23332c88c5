#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "cli.hpp"
#include "potts/classes.hpp"
#include "potts/configuration.hpp"
#include "potts/ground.hpp"
#include "potts/peierls.hpp"

namespace potts::cli {

namespace {

Rational random_rational(std::mt19937_64& rng) {
  const auto num = std::uniform_int_distribution<std::int64_t>(-20, 20)(rng);
  const auto den = std::uniform_int_distribution<std::int64_t>(1, 7)(rng);
  return Rational(num, den);
}

Coupling random_coupling(std::mt19937_64& rng) {
  Coupling J{random_rational(rng), random_rational(rng)};
  while (J.is_zero()) J = {random_rational(rng), random_rational(rng)};
  return J;
}

FSets random_fsets(int k, std::mt19937_64& rng) {
  std::vector<int> cells;
  for (int j = 0; j <= k; ++j) cells.push_back(std::uniform_int_distribution<int>(1, 4)(rng));
  return FSets(std::move(cells));
}

SuiteResult group_suite(int k, std::mt19937_64& rng) {
  const CayleyGroup group(k);
  int failures = 0;

  for (int trial = 0; trial < 1000; ++trial) {
    const auto f = random_fsets(k, rng);
    const auto x = random_word(group, 6, rng);
    const auto y = random_word(group, 6, rng);
    if (group.coset_class(group.multiply(x, y), f) != (group.coset_class(x, f) ^ group.coset_class(y, f))) ++failures;
  }

  const auto words = group.ball(4);
  std::map<std::size_t, std::int64_t> spheres;
  for (const auto& w : words) ++spheres[w.length()];
  std::int64_t expected = k + 1;
  for (std::size_t n = 1; n <= 4; ++n, expected *= k) {
    if (spheres[n] != expected) ++failures;
  }

  for (const auto& w : words) {
    if (!group.multiply(w, w.reversed()).is_identity()) ++failures;
    if (group.reduce(w.letters()) != w) ++failures;
  }

  const auto f = random_fsets(k, rng);
  const auto q_e = group.coset_profile(GroupWord{}, f);
  for (const auto& x : words) {
    const int h = group.coset_class(x, f).index();
    const auto q_x = group.coset_profile(x, f);
    for (int c = 0; c < 4; ++c) {
      if (q_x[static_cast<std::size_t>(c)] != q_e[static_cast<std::size_t>(c ^ h)]) ++failures;
    }
  }
  return {"group-algebra", failures == 0,
          std::to_string(failures) + " failures over 1000 coset pairs, sphere sizes, involutions, coset profiles"};
}

SuiteResult closed_form_suite(int k, std::mt19937_64& rng) {
  const auto configs = enumerate_ball_configs(k);
  int failures = 0;
  for (int c = 0; c < 50; ++c) {
    const Coupling J{random_rational(rng), random_rational(rng)};
    for (const auto& b : configs) {
      if (ball_energy_direct(b, J) != ball_energy_closed(signature_of(b), J, k)) ++failures;
    }
  }
  return {"ball-energy-closed-form", failures == 0,
          std::to_string(configs.size()) + " configs x 50 couplings, " + std::to_string(failures) + " mismatches"};
}

SuiteResult decomposition_suite(int k, std::mt19937_64& rng) {
  int failures = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Background bg = Spin(std::uniform_int_distribution<int>(1, 4)(rng));
    const auto sigma = random_perturbation(bg, k, rng);
    const Coupling J{random_rational(rng), random_rational(rng)};
    const auto phi = sigma.unperturbed();
    if (relative_hamiltonian_direct(sigma, phi, J) != relative_hamiltonian_balls(sigma, phi, J)) ++failures;
  }
  return {"ball-decomposition", failures == 0,
          "200 random perturbations, " + std::to_string(failures) + " mismatches"};
}

SuiteResult extension_suite(int k, std::uint64_t seed) {
  const auto configs = enumerate_ball_configs(k);
  int failures = 0;
  for (std::size_t n = 0; n < configs.size(); ++n) {
    if (!verify_extension(extend_periodic(configs[n]), 4, 100, seed + n).passed()) ++failures;
  }
  return {"periodic-extension", failures == 0,
          std::to_string(configs.size()) + " ball configs at depth 4, " + std::to_string(failures) + " failures"};
}

std::vector<ClassSignature> brute_force_minimizers(const std::vector<BallConfig>& configs, const Coupling& J) {
  Rational best = ball_energy_direct(configs.front(), J);
  for (const auto& b : configs) best = std::min(best, ball_energy_direct(b, J));
  std::set<ClassSignature> out;
  for (const auto& b : configs) {
    if (ball_energy_direct(b, J) == best) out.insert(signature_of(b));
  }
  return {out.begin(), out.end()};
}

SuiteResult ground_state_suite(int k, std::mt19937_64& rng) {
  const auto configs = enumerate_ball_configs(k);
  int failures = 0;
  if (!ground_state_set({0, 0}, k).all) ++failures;

  std::vector<Coupling> couplings{{-1, -1}, {-1, 1}};
  for (int n = 0; n < 20; ++n) couplings.push_back(random_coupling(rng));
  const auto fan = region_fan(k);
  for (const auto& J : couplings) {
    const auto g = ground_state_set(J, k);
    if (g.minimum.minimizers != brute_force_minimizers(configs, J)) ++failures;
    if (fan.lookup(J) != g.minimum.minimizers) ++failures;
    for (const auto& w : g.witnesses) {
      if (!verify_extension(w, 3).passed()) ++failures;
    }
  }
  return {"ground-state-sets", failures == 0,
          std::to_string(couplings.size()) + " couplings plus J=(0,0), " + std::to_string(failures) + " failures"};
}

SuiteResult peierls_suite(int k, std::mt19937_64& rng) {
  std::vector<Coupling> couplings{{-1, -1}, {-1, 1}, {1, 0}};
  for (int n = 0; n < 2; ++n) couplings.push_back(random_coupling(rng));
  int failures = 0;
  int trials = 0;
  for (const auto& J : couplings) {
    const Rational gap = lambda0(J, k);
    if (gap <= Rational(0)) ++failures;
    const auto witnesses = ground_state_set(J, k).witnesses;
    for (int t = 0; t < 100; ++t, ++trials) {
      const auto& bg = witnesses[std::uniform_int_distribution<std::size_t>(0, witnesses.size() - 1)(rng)];
      const auto report = peierls_check(random_perturbation(bg, k, rng), J);
      if (!report.satisfied || (report.min_ball_excess && *report.min_ball_excess < gap)) ++failures;
    }
  }
  return {"peierls", failures == 0, std::to_string(trials) + " perturbations, " + std::to_string(failures) + " failures"};
}

}  // namespace

std::vector<SuiteResult> run_verification(int k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<SuiteResult> out;
  out.push_back(group_suite(k, rng));
  out.push_back(closed_form_suite(k, rng));
  out.push_back(decomposition_suite(k, rng));
  out.push_back(extension_suite(k, seed));
  out.push_back(ground_state_suite(k, rng));
  out.push_back(peierls_suite(k, rng));
  return out;
}

}  // namespace potts::cli
