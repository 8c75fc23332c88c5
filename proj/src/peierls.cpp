#include "potts/peierls.hpp"

#include <algorithm>
#include <set>

#include "potts/classes.hpp"
#include "potts/ground.hpp"

namespace potts {

Rational lambda0(const Coupling& J, int k) {
  if (J.is_zero()) throw degenerate_coupling("lambda0 is undefined at J = (0,0)");
  std::set<Rational> values;
  for (const auto& f : all_energy_forms(k)) values.insert(f.evaluate(J));
  if (values.size() < 2) throw degenerate_coupling("all ball energies coincide");
  return *std::next(values.begin()) - *values.begin();
}

bool is_ground_state(const Background& background, const Coupling& J, int k) {
  const Rational u_min = minimize(J, k).u_min;
  if (const auto* s = std::get_if<Spin>(&background)) {
    ClassSignature all_same{*s, {}};
    all_same.counts[static_cast<std::size_t>(s->value() - 1)] = k + 1;
    return ball_energy_closed(all_same, J, k) == u_min;
  }
  // Every ball of a periodic extension lies in the source orbit, so its
  // energy equals the source ball's.
  const auto& p = std::get<PeriodicGroundState>(background);
  return p.is_bijective() && ball_energy_direct(p.source_ball, J) == u_min;
}

std::vector<GroupWord> improper_balls(const FiniteConfiguration& sigma, const Coupling& J, int window_depth) {
  const int k = sigma.k();
  if (!is_ground_state(sigma.background(), J, k)) {
    throw invalid_background("background is not a ground state for this coupling");
  }
  const CayleyGroup group(k);
  const Rational u_min = minimize(J, k).u_min;
  std::vector<GroupWord> sites;
  for (const auto& [x, _] : sigma.overrides()) sites.push_back(x);

  std::vector<GroupWord> out;
  for (const auto& c : neighborhood(group, sites, window_depth)) {
    if (ball_energy_direct(sigma.ball_at(group, c), J) != u_min) out.push_back(c);
  }
  return out;
}

PeierlsReport peierls_check(const FiniteConfiguration& sigma, const Coupling& J) {
  PeierlsReport report;
  report.lambda0 = lambda0(J, sigma.k());
  const auto phi = sigma.unperturbed();
  const CayleyGroup group(sigma.k());
  const auto boundary = improper_balls(sigma, J);
  report.boundary_size = static_cast<int>(boundary.size());
  report.relative_energy = relative_hamiltonian_balls(sigma, phi, J);
  for (const auto& c : boundary) {
    const Rational excess = ball_energy_direct(sigma.ball_at(group, c), J) - ball_energy_direct(phi.ball_at(group, c), J);
    if (!report.min_ball_excess || excess < *report.min_ball_excess) report.min_ball_excess = excess;
  }
  report.satisfied = report.relative_energy >= report.lambda0 * Rational(report.boundary_size);
  return report;
}

FiniteConfiguration random_perturbation(const Background& background, int k, std::mt19937_64& rng,
                                        const PerturbationParams& params) {
  if (params.max_flips < 1 || params.depth < 0) throw std::invalid_argument("invalid perturbation parameters");
  const CayleyGroup group(k);
  auto sites = group.ball(params.depth);
  const int count = std::uniform_int_distribution<int>(1, std::min<int>(params.max_flips, static_cast<int>(sites.size())))(rng);

  // Partial Fisher-Yates: the first `count` entries are a uniform sample.
  for (int n = 0; n < count; ++n) {
    const auto pick = std::uniform_int_distribution<std::size_t>(static_cast<std::size_t>(n), sites.size() - 1)(rng);
    std::swap(sites[static_cast<std::size_t>(n)], sites[pick]);
  }

  FiniteConfiguration sigma(k, background);
  for (int n = 0; n < count; ++n) {
    const auto& x = sites[static_cast<std::size_t>(n)];
    const int old = background_value(background, group, x).value();
    int spin = std::uniform_int_distribution<int>(1, 3)(rng);
    if (spin >= old) ++spin;
    sigma.set(x, Spin(spin));
  }
  return sigma;
}

}  // namespace potts
