#include "potts/ground.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace potts {

namespace {

using Wide = __int128;

Wide cross(Direction a, Direction b) { return Wide(a.dx) * b.dy - Wide(a.dy) * b.dx; }
Wide dot(Direction a, Direction b) { return Wide(a.dx) * b.dx + Wide(a.dy) * b.dy; }

Direction primitive(std::int64_t dx, std::int64_t dy) {
  const std::int64_t g = std::gcd(dx, dy);
  return g == 0 ? Direction{} : Direction{dx / g, dy / g};
}

// 0 for angles in [0, pi) measured counterclockwise from base, 1 for [pi, 2 pi).
int half_from(Direction base, Direction v) {
  const Wide c = cross(base, v);
  return (c > 0 || (c == 0 && dot(base, v) > 0)) ? 0 : 1;
}

// Counterclockwise angle from base: strictly less for u than for v.
bool angle_less_from(Direction base, Direction u, Direction v) {
  const int hu = half_from(base, u);
  const int hv = half_from(base, v);
  if (hu != hv) return hu < hv;
  return cross(u, v) > 0;
}

bool same_direction(Direction a, Direction b) { return cross(a, b) == 0 && dot(a, b) > 0; }

Direction interior_of(Direction from, Direction to) {
  if (cross(from, to) > 0) return primitive(from.dx + to.dx, from.dy + to.dy);
  return {-from.dy, from.dx};
}

std::vector<ClassSignature> minimizers_at(const std::vector<EnergyForm>& forms, const Coupling& J) {
  Rational best = forms.front().evaluate(J);
  for (const auto& f : forms) best = std::min(best, f.evaluate(J));
  std::vector<ClassSignature> out;
  for (const auto& f : forms) {
    if (f.evaluate(J) == best) out.push_back(f.signature);
  }
  return out;
}

Spin klein_normalizer(Spin center, Spin v) {
  return SpinPermutation::klein(center.value() - 1)(v);
}

}  // namespace

std::vector<EnergyForm> all_energy_forms(int k) {
  std::vector<EnergyForm> out;
  for (const auto& s : all_signatures(k)) {
    const auto c = energy_coefficients(s);
    out.push_back({s, c.edge, c.pair});
  }
  return out;
}

Minimum minimize(const Coupling& J, int k) {
  const auto forms = all_energy_forms(k);
  auto minimizers = minimizers_at(forms, J);
  const Rational u_min = ball_energy_closed(minimizers.front(), J, k);
  return {u_min, std::move(minimizers)};
}

bool PhaseRegion::contains(const Coupling& J) const {
  return std::all_of(constraints.begin(), constraints.end(), [&](const HalfPlane& h) { return h.contains(J); });
}

PhaseRegion phase_region(const ClassSignature& s) {
  const auto own = energy_coefficients(s);
  std::set<EnergyCoefficients> others;
  for (const auto& t : all_signatures(s.k())) {
    const auto c = energy_coefficients(t);
    if (c != own) others.insert(c);
  }
  PhaseRegion region{s, {}};
  for (const auto& c : others) region.constraints.push_back({own.edge - c.edge, Rational(own.pair - c.pair)});
  return region;
}

std::optional<Rational> Direction::slope() const {
  if (dx == 0) return std::nullopt;
  return Rational(dy, dx);
}

Direction direction_of(const Coupling& J) {
  if (J.is_zero()) throw std::invalid_argument("the zero coupling has no direction");
  const std::int64_t den = std::lcm(J.j1.denominator(), J.j2.denominator());
  return primitive(J.j1.numerator() * (den / J.j1.denominator()), J.j2.numerator() * (den / J.j2.denominator()));
}

RegionFan region_fan(int k) {
  const auto forms = all_energy_forms(k);
  std::set<EnergyCoefficients> points;
  for (const auto& f : forms) points.insert({f.edge_coeff, f.pair_coeff});

  // Candidate rays: both directions of every tie line between two distinct forms.
  std::vector<Direction> candidates;
  auto add = [&](Direction d) {
    if (std::none_of(candidates.begin(), candidates.end(), [&](Direction c) { return same_direction(c, d); })) {
      candidates.push_back(d);
    }
  };
  for (auto a = points.begin(); a != points.end(); ++a) {
    for (auto b = std::next(a); b != points.end(); ++b) {
      // (de) J1 + (dp) J2 = 0 along (2 dp, -2 de); 2 de is an integer.
      const Rational de = a->edge - b->edge;
      const std::int64_t twice_de = (de * 2).numerator();
      const std::int64_t dp = a->pair - b->pair;
      const Direction d = primitive(2 * dp, -twice_de);
      add(d);
      add({-d.dx, -d.dy});
    }
  }
  const Direction east{1, 0};
  std::sort(candidates.begin(), candidates.end(),
            [&](Direction u, Direction v) { return angle_less_from(east, u, v); });

  RegionFan fan;
  fan.k = k;
  if (candidates.empty()) {
    fan.sectors.push_back({east, east, {0, 1}, minimizers_at(forms, Coupling{0, 1})});
    return fan;
  }

  // Sector sets between consecutive candidates; keep rays where the set changes.
  const std::size_t n = candidates.size();
  std::vector<std::vector<ClassSignature>> piece(n);
  std::vector<Direction> piece_interior(n);
  for (std::size_t i = 0; i < n; ++i) {
    piece_interior[i] = interior_of(candidates[i], candidates[(i + 1) % n]);
    piece[i] = minimizers_at(forms, piece_interior[i].as_coupling());
  }
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < n; ++i) {
    if (piece[(i + n - 1) % n] != piece[i]) kept.push_back(i);
  }
  if (kept.empty()) {
    fan.sectors.push_back({east, east, piece_interior[0], piece[0]});
    return fan;
  }
  for (std::size_t r = 0; r < kept.size(); ++r) {
    const std::size_t i = kept[r];
    const std::size_t next = kept[(r + 1) % kept.size()];
    fan.rays.push_back({candidates[i], minimizers_at(forms, candidates[i].as_coupling())});
    fan.sectors.push_back({candidates[i], candidates[next], piece_interior[i], piece[i]});
  }
  return fan;
}

std::vector<ClassSignature> RegionFan::lookup(const Coupling& J) const {
  if (J.is_zero()) return all_signatures(k);
  const Direction d = direction_of(J);
  for (const auto& ray : rays) {
    if (same_direction(ray.direction, d)) return ray.minimizers;
  }
  if (sectors.size() == 1) return sectors.front().minimizers;
  for (const auto& s : sectors) {
    if (angle_less_from(s.from, d, s.to)) return s.minimizers;
  }
  throw std::logic_error("direction not covered by the region fan");
}

PeriodicGroundState extend_periodic(const BallConfig& b) {
  const Spin center = b.center;
  std::vector<int> cells;
  cells.reserve(b.leaves.size());
  for (Spin leaf : b.leaves) cells.push_back(klein_normalizer(center, leaf).value());

  // Relabeled spin carried by each coset, indexed by 2 eps1 + eps2.
  constexpr std::array<int, 4> relabeled_by_coset{1, 2, 4, 3};
  PeriodicGroundState p{FSets(std::move(cells)), {Spin{1}, Spin{2}, Spin{3}, Spin{4}}, b};
  for (std::size_t h = 0; h < 4; ++h) {
    p.coset_values[h] = klein_normalizer(center, Spin(relabeled_by_coset[h]));
  }
  return p;
}

GroupWord random_word(const CayleyGroup& group, int max_length, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> length_dist(0, max_length);
  const int length = length_dist(rng);
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(length));
  for (int n = 0; n < length; ++n) {
    if (letters.empty()) {
      letters.push_back(std::uniform_int_distribution<int>(1, group.degree())(rng));
    } else {
      // Skip the previous letter to stay reduced.
      int j = std::uniform_int_distribution<int>(1, group.k())(rng);
      if (j >= letters.back()) ++j;
      letters.push_back(j);
    }
  }
  return GroupWord(std::move(letters));
}

ExtensionReport verify_extension(const PeriodicGroundState& p, int depth, int samples, std::uint64_t seed) {
  if (depth < 1) throw std::invalid_argument("verification depth must be >= 1");
  const CayleyGroup group(p.k());
  const auto source_sig = signature_of(p.source_ball);
  const auto orbit = orbit_of(source_sig);

  ExtensionReport report;
  auto fail = [&](std::string message) {
    ++report.failures;
    if (report.counterexamples.size() < 10) report.counterexamples.push_back(std::move(message));
  };

  report.bijective = p.is_bijective();
  if (!report.bijective) fail("coset values are not a bijection onto {1,2,3,4}");
  report.central_ball_matches = p.ball_at(group, GroupWord{}) == p.source_ball;
  if (!report.central_ball_matches) fail("central ball differs from the source ball");

  for (const auto& x : group.ball(depth)) {
    const auto sig = signature_of(p.ball_at(group, x));
    ++report.balls_checked;
    if (!orbit.contains(sig)) {
      fail("ball at '" + to_string(x) + "' has signature " + to_string(sig) + " outside the orbit of " +
           to_string(source_sig));
    }
  }

  std::mt19937_64 rng(seed);
  int drawn = 0;
  for (int attempts = 0; drawn < samples && attempts < 1000 * samples; ++attempts) {
    const auto y = random_word(group, 2 * depth, rng);
    if (group.coset_class(y, p.fsets).index() != 0) continue;
    const auto x = random_word(group, depth, rng);
    ++drawn;
    if (p.value_at(group, group.multiply(y, x)) != p.value_at(group, x)) {
      fail("value at y x differs from x for y='" + to_string(y) + "', x='" + to_string(x) + "'");
    }
  }
  report.periodicity_pairs_checked = drawn;
  return report;
}

BallConfig canonical_ball(const ClassSignature& s) {
  BallConfig b{s.center, {}};
  for (int v = 1; v <= 4; ++v) b.leaves.insert(b.leaves.end(), static_cast<std::size_t>(s.counts[v - 1]), Spin(v));
  return b;
}

GroundStateSet ground_state_set(const Coupling& J, int k) {
  GroundStateSet out;
  out.minimum = minimize(J, k);
  if (J.is_zero()) {
    out.all = true;
    return out;
  }
  std::set<int> ids;
  for (const auto& s : out.minimum.minimizers) {
    ids.insert(orbit_id(s));
    out.witnesses.push_back(extend_periodic(canonical_ball(s)));
  }
  const auto orbits = all_orbits(k);
  for (int id : ids) {
    out.orbit_ids.push_back(id);
    out.orbits.push_back(orbits[static_cast<std::size_t>(id)]);
  }
  return out;
}

}  // namespace potts
