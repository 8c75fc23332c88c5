#pragma once

// Spins, couplings and unit-ball configurations with their energies.

#include <array>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include "potts/rational.hpp"

namespace potts {

class invalid_signature : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kNumSpins = 4;

/// Spin value in {1,2,3,4}.
class Spin {
 public:
  constexpr explicit Spin(int value) : value_(value) {
    if (value < 1 || value > kNumSpins) throw std::invalid_argument("spin out of range 1..4");
  }
  constexpr int value() const { return value_; }

  friend constexpr auto operator<=>(Spin, Spin) = default;

 private:
  int value_;
};

struct Coupling {
  Rational j1;
  Rational j2;

  bool is_zero() const { return j1.numerator() == 0 && j2.numerator() == 0; }
  friend bool operator==(const Coupling&, const Coupling&) = default;
};

/// A center spin and one leaf spin per generator direction; leaves[j-1] is
/// the spin at x a_j.
struct BallConfig {
  Spin center{1};
  std::vector<Spin> leaves;

  int k() const { return static_cast<int>(leaves.size()) - 1; }
  friend auto operator<=>(const BallConfig&, const BallConfig&) = default;
  friend bool operator==(const BallConfig&, const BallConfig&) = default;
};

/// Center spin i and leaf multiplicities (m, n, l, r) of spins 1..4.
struct ClassSignature {
  Spin center{1};
  std::array<int, 4> counts{};

  int leaf_count() const { return counts[0] + counts[1] + counts[2] + counts[3]; }
  int k() const { return leaf_count() - 1; }
  friend auto operator<=>(const ClassSignature&, const ClassSignature&) = default;
  friend bool operator==(const ClassSignature&, const ClassSignature&) = default;
};

/// "(i; m,n,l,r)".
std::string to_string(const ClassSignature& s);

/// Linear-form coefficients of a ball energy: U = edge * J1 + pair * J2.
struct EnergyCoefficients {
  Rational edge;
  std::int64_t pair = 0;

  Rational evaluate(const Coupling& J) const { return edge * J.j1 + Rational(pair) * J.j2; }
  friend bool operator==(const EnergyCoefficients& a, const EnergyCoefficients& b) {
    return a.edge == b.edge && a.pair == b.pair;
  }
  friend bool operator<(const EnergyCoefficients& a, const EnergyCoefficients& b) {
    return a.edge != b.edge ? a.edge < b.edge : a.pair < b.pair;
  }
};

ClassSignature signature_of(const BallConfig& b);

/// Half-weighted edge sum plus distance-2 pair sum, taken literally over the
/// ball's edges {center, leaf_j} and unordered leaf pairs.
Rational ball_energy_direct(const BallConfig& b, const Coupling& J);

/// Closed form from the class signature. Throws invalid_signature if the
/// counts do not sum to k+1 or are negative.
Rational ball_energy_closed(const ClassSignature& s, const Coupling& J, int k);

/// Coefficients of the closed form: (matched leaves / 2, sum of C(count, 2)).
EnergyCoefficients energy_coefficients(const ClassSignature& s);

void validate_signature(const ClassSignature& s, int k);

}  // namespace potts
