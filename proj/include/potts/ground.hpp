#pragma once

// Ground states: exact minimization of the ball-energy linear forms over the
// (J1, J2) plane, and the period-4 extension of a ball configuration to the
// whole tree.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "potts/ball.hpp"
#include "potts/classes.hpp"
#include "potts/group.hpp"
#include "potts/periodic.hpp"

namespace potts {

struct EnergyForm {
  ClassSignature signature;
  Rational edge_coeff;
  std::int64_t pair_coeff = 0;

  Rational evaluate(const Coupling& J) const { return edge_coeff * J.j1 + Rational(pair_coeff) * J.j2; }
};

/// One form per signature, in all_signatures(k) order.
std::vector<EnergyForm> all_energy_forms(int k);

struct Minimum {
  Rational u_min;
  std::vector<ClassSignature> minimizers;  // sorted, all ties
};

Minimum minimize(const Coupling& J, int k);

/// Half-plane a*J1 + b*J2 <= 0.
struct HalfPlane {
  Rational a;
  Rational b;
  bool contains(const Coupling& J) const { return a * J.j1 + b * J.j2 <= Rational(0); }
};

/// Closed cone of couplings at which `signature` is energy-minimal.
struct PhaseRegion {
  ClassSignature signature;
  std::vector<HalfPlane> constraints;
  bool contains(const Coupling& J) const;
};

PhaseRegion phase_region(const ClassSignature& s);

/// Primitive integer direction in the (J1, J2) plane.
struct Direction {
  std::int64_t dx = 0;
  std::int64_t dy = 0;

  /// Slope dy/dx as an exact fraction; nullopt for vertical rays.
  std::optional<Rational> slope() const;
  Coupling as_coupling() const { return {Rational(dx), Rational(dy)}; }
  friend bool operator==(Direction, Direction) = default;
};

/// Scales a nonzero coupling to its primitive integer direction.
Direction direction_of(const Coupling& J);

struct BoundaryRay {
  Direction direction;
  std::vector<ClassSignature> minimizers;
};

/// Open sector swept counterclockwise from `from` to `to`.
struct Sector {
  Direction from;
  Direction to;
  Direction interior;  // a direction strictly inside
  std::vector<ClassSignature> minimizers;
};

/// Partition of the (J1, J2) plane into the cones where the minimizer set is
/// constant. rays[n] is the boundary between sectors[n-1] and sectors[n]
/// (cyclically); sectors[n] runs from rays[n] to rays[n+1].
struct RegionFan {
  int k = 0;
  std::vector<BoundaryRay> rays;
  std::vector<Sector> sectors;

  /// Minimizer set at J, read off the fan. J = (0,0) yields every signature.
  std::vector<ClassSignature> lookup(const Coupling& J) const;
};

RegionFan region_fan(int k);

/// Extends a ball configuration to a periodic configuration on the whole
/// tree whose central ball is b and whose every ball lies in the S_4 orbit
/// of b's signature.
///
/// The ball is first relabeled by the Klein permutation kappa that sends the
/// center to 1; the F-sets are the cells of the relabeled leaves. With the
/// generator-to-coset labels F1 -> H0, F2 -> H1, F3 -> H3, F4 -> H2 the
/// relabeled ball is reproduced by H0->1, H1->2, H3->3, H2->4, and applying
/// kappa again restores b.
PeriodicGroundState extend_periodic(const BallConfig& b);

struct ExtensionReport {
  bool bijective = false;
  bool central_ball_matches = false;
  int balls_checked = 0;
  int periodicity_pairs_checked = 0;
  int failures = 0;
  std::vector<std::string> counterexamples;  // first few only

  bool passed() const { return bijective && central_ball_matches && failures == 0; }
};

/// Checks every ball within `depth` of e against the source orbit, the
/// central ball against the source ball, and value(yx) == value(x) for
/// `samples` random pairs with y in H0 (|y| <= 2 depth) and |x| <= depth.
ExtensionReport verify_extension(const PeriodicGroundState& p, int depth, int samples = 100,
                                 std::uint64_t seed = 0);

struct GroundStateSet {
  bool all = false;  // J = (0,0): every configuration is a ground state
  Minimum minimum;
  std::vector<int> orbit_ids;
  std::vector<OrbitClass> orbits;
  std::vector<PeriodicGroundState> witnesses;  // one per minimizing signature
};

GroundStateSet ground_state_set(const Coupling& J, int k);

/// Leaves sorted ascending: the smallest ball config with signature s.
BallConfig canonical_ball(const ClassSignature& s);

/// Uniform length in [0, max_length], then uniform letters avoiding repeats.
GroupWord random_word(const CayleyGroup& group, int max_length, std::mt19937_64& rng);

}  // namespace potts
