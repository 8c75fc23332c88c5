#pragma once

// Configurations that coincide with a background everywhere except on a
// finite set, and the relative Hamiltonian between two of them.

#include <map>
#include <stdexcept>
#include <variant>
#include <vector>

#include "potts/ball.hpp"
#include "potts/group.hpp"
#include "potts/periodic.hpp"

namespace potts {

class not_almost_everywhere_equal : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Either a constant spin or a periodic configuration.
using Background = std::variant<Spin, PeriodicGroundState>;

Spin background_value(const Background& bg, const CayleyGroup& group, const GroupWord& x);

/// True iff the two backgrounds agree on every vertex. Both are functions of
/// a homomorphism onto a subgroup of Z_2^4 so agreement on the words of
/// length <= 4 is decisive.
bool same_background(const Background& a, const Background& b, const CayleyGroup& group);

class FiniteConfiguration {
 public:
  FiniteConfiguration(int k, Background background);

  int k() const { return k_; }
  const Background& background() const { return background_; }
  const std::map<GroupWord, Spin>& overrides() const { return overrides_; }

  /// Overrides the spin at x (x must be reduced with letters in range).
  void set(const GroupWord& x, Spin spin);
  Spin at(const CayleyGroup& group, const GroupWord& x) const;
  BallConfig ball_at(const CayleyGroup& group, const GroupWord& x) const;

  /// The same background with no overrides.
  FiniteConfiguration unperturbed() const { return FiniteConfiguration(k_, background_); }

 private:
  int k_;
  Background background_;
  std::map<GroupWord, Spin> overrides_;
};

/// Sites where the two configurations differ. Throws not_almost_everywhere_equal
/// when the backgrounds differ.
std::vector<GroupWord> disagreement_set(const CayleyGroup& group, const FiniteConfiguration& sigma,
                                        const FiniteConfiguration& phi);

/// Edge and distance-2 pair sums of delta(sigma) - delta(phi), over the pairs
/// that touch the disagreement set.
Rational relative_hamiltonian_direct(const FiniteConfiguration& sigma, const FiniteConfiguration& phi,
                                     const Coupling& J);

/// Sum over unit balls of U(sigma_b) - U(phi_b), over centers within distance
/// 2 of the disagreement set.
Rational relative_hamiltonian_balls(const FiniteConfiguration& sigma, const FiniteConfiguration& phi,
                                    const Coupling& J);

/// Centers within `radius` of any disagreement site, deduplicated and sorted.
std::vector<GroupWord> neighborhood(const CayleyGroup& group, const std::vector<GroupWord>& sites,
                                    int radius);

}  // namespace potts
