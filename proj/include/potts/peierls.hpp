#pragma once

// Energy gap lambda0, improper balls and the Peierls inequality
// H(sigma, phi) >= lambda0 * |boundary(sigma)| for finite perturbations of a
// ground state.

#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "potts/configuration.hpp"

namespace potts {

class degenerate_coupling : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class invalid_background : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Second-smallest achievable ball energy minus the smallest. Throws
/// degenerate_coupling for J = (0,0), where every ball energy is zero.
Rational lambda0(const Coupling& J, int k);

/// Every ball of the background has minimal energy for J.
bool is_ground_state(const Background& background, const Coupling& J, int k);

/// Centers within `window_depth` of the override sites whose ball is not
/// energy-minimal, sorted. Throws invalid_background if sigma's background is
/// not a ground state for J.
std::vector<GroupWord> improper_balls(const FiniteConfiguration& sigma, const Coupling& J, int window_depth = 2);

struct PeierlsReport {
  Rational lambda0;
  int boundary_size = 0;
  Rational relative_energy;
  bool satisfied = false;
  /// min over improper balls of U(sigma_b) - U(phi_b); empty when the boundary is.
  std::optional<Rational> min_ball_excess;

  Rational slack() const { return relative_energy - lambda0 * Rational(boundary_size); }
};

/// Compares sigma with its own unperturbed background.
PeierlsReport peierls_check(const FiniteConfiguration& sigma, const Coupling& J);

struct PerturbationParams {
  int max_flips = 5;
  int depth = 3;
};

/// Uniform number of flipped sites in [1, max_flips], sites drawn without
/// replacement from the words of length <= depth, each given a uniformly chosen
/// spin different from the background's.
FiniteConfiguration random_perturbation(const Background& background, int k, std::mt19937_64& rng,
                                        const PerturbationParams& params = {});

}  // namespace potts
