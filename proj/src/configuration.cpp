#include "potts/configuration.hpp"

#include <set>
#include <utility>

namespace potts {

Spin background_value(const Background& bg, const CayleyGroup& group, const GroupWord& x) {
  if (const auto* s = std::get_if<Spin>(&bg)) return *s;
  return std::get<PeriodicGroundState>(bg).value_at(group, x);
}

bool same_background(const Background& a, const Background& b, const CayleyGroup& group) {
  if (std::holds_alternative<Spin>(a) && std::holds_alternative<Spin>(b)) {
    return std::get<Spin>(a) == std::get<Spin>(b);
  }
  for (const auto& x : group.ball(4)) {
    if (background_value(a, group, x) != background_value(b, group, x)) return false;
  }
  return true;
}

FiniteConfiguration::FiniteConfiguration(int k, Background background)
    : k_(k), background_(std::move(background)) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (const auto* p = std::get_if<PeriodicGroundState>(&background_); p && p->k() != k) {
    throw std::invalid_argument("periodic background built for a different k");
  }
}

void FiniteConfiguration::set(const GroupWord& x, Spin spin) {
  CayleyGroup(k_).validate(x);
  if (!x.is_reduced()) throw invalid_generator("override word is not reduced: '" + to_string(x) + "'");
  overrides_.insert_or_assign(x, spin);
}

Spin FiniteConfiguration::at(const CayleyGroup& group, const GroupWord& x) const {
  if (auto it = overrides_.find(x); it != overrides_.end()) return it->second;
  return background_value(background_, group, x);
}

BallConfig FiniteConfiguration::ball_at(const CayleyGroup& group, const GroupWord& x) const {
  BallConfig b{at(group, x), {}};
  for (const auto& y : group.neighbors(x)) b.leaves.push_back(at(group, y));
  return b;
}

std::vector<GroupWord> disagreement_set(const CayleyGroup& group, const FiniteConfiguration& sigma,
                                        const FiniteConfiguration& phi) {
  if (sigma.k() != phi.k() || sigma.k() != group.k()) {
    throw std::invalid_argument("configurations built for different k");
  }
  if (!same_background(sigma.background(), phi.background(), group)) {
    throw not_almost_everywhere_equal("configurations differ on an infinite set");
  }
  std::set<GroupWord> candidates;
  for (const auto& [x, _] : sigma.overrides()) candidates.insert(x);
  for (const auto& [x, _] : phi.overrides()) candidates.insert(x);
  std::vector<GroupWord> out;
  for (const auto& x : candidates) {
    if (sigma.at(group, x) != phi.at(group, x)) out.push_back(x);
  }
  return out;
}

std::vector<GroupWord> neighborhood(const CayleyGroup& group, const std::vector<GroupWord>& sites,
                                    int radius) {
  std::set<GroupWord> out;
  for (const auto& x : sites) {
    for (auto& y : group.ball_around(x, radius)) out.insert(std::move(y));
  }
  return {out.begin(), out.end()};
}

Rational relative_hamiltonian_direct(const FiniteConfiguration& sigma, const FiniteConfiguration& phi,
                                     const Coupling& J) {
  const CayleyGroup group(sigma.k());
  const auto sites = disagreement_set(group, sigma, phi);

  // Unordered pairs at distance 1 and 2 with at least one endpoint in D.
  std::set<std::pair<GroupWord, GroupWord>> edges;
  std::set<std::pair<GroupWord, GroupWord>> pairs;
  for (const auto& x : sites) {
    for (const auto& y : group.ball_around(x, 2)) {
      const int d = group.distance(x, y);
      if (d == 0) continue;
      auto key = x < y ? std::pair{x, y} : std::pair{y, x};
      (d == 1 ? edges : pairs).insert(std::move(key));
    }
  }

  auto delta_change = [&](const std::pair<GroupWord, GroupWord>& p) {
    const int s = sigma.at(group, p.first) == sigma.at(group, p.second) ? 1 : 0;
    const int f = phi.at(group, p.first) == phi.at(group, p.second) ? 1 : 0;
    return static_cast<std::int64_t>(s - f);
  };
  std::int64_t edge_sum = 0;
  std::int64_t pair_sum = 0;
  for (const auto& e : edges) edge_sum += delta_change(e);
  for (const auto& p : pairs) pair_sum += delta_change(p);
  return J.j1 * Rational(edge_sum) + J.j2 * Rational(pair_sum);
}

Rational relative_hamiltonian_balls(const FiniteConfiguration& sigma, const FiniteConfiguration& phi,
                                    const Coupling& J) {
  const CayleyGroup group(sigma.k());
  const auto sites = disagreement_set(group, sigma, phi);
  Rational total = 0;
  for (const auto& c : neighborhood(group, sites, 2)) {
    total += ball_energy_closed(signature_of(sigma.ball_at(group, c)), J, group.k()) -
             ball_energy_closed(signature_of(phi.ball_at(group, c)), J, group.k());
  }
  return total;
}

}  // namespace potts
