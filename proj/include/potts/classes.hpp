#pragma once

// Enumeration of unit-ball configurations, the classes of a fixed signature,
// and their orbits under relabeling of spin values by S_4.

#include <array>
#include <stdexcept>
#include <vector>

#include "potts/ball.hpp"

namespace potts {

class size_guard_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Bijection of {1,2,3,4}; images[v-1] = pi(v).
class SpinPermutation {
 public:
  SpinPermutation() : images_{1, 2, 3, 4} {}
  /// Throws std::invalid_argument if `images` is not a permutation of 1..4.
  explicit SpinPermutation(std::array<int, 4> images);

  static SpinPermutation identity() { return {}; }
  /// The three non-trivial elements of the normal Klein four-subgroup:
  /// klein(1) swaps 1<->2, 3<->4; klein(2) swaps 1<->3, 2<->4; klein(3)
  /// swaps 1<->4, 2<->3. klein(0) is the identity.
  static SpinPermutation klein(int which);
  /// All 24 permutations, lexicographic in images.
  static std::vector<SpinPermutation> all();

  Spin operator()(Spin s) const { return Spin(images_[static_cast<std::size_t>(s.value() - 1)]); }
  const std::array<int, 4>& images() const { return images_; }
  SpinPermutation inverse() const;
  /// (this * other)(v) = this(other(v)).
  SpinPermutation operator*(const SpinPermutation& other) const;

  friend bool operator==(const SpinPermutation&, const SpinPermutation&) = default;

 private:
  std::array<int, 4> images_;
};

/// 4^{k+2} configurations, lexicographic in (center, leaves). Throws
/// size_guard_error unless 1 <= k <= 4.
std::vector<BallConfig> enumerate_ball_configs(int k);

/// Configurations with center i and leaf counts (m, n, l, k+1-m-n-l), in
/// lexicographic order. Throws invalid_signature if any implied count is
/// negative.
std::vector<BallConfig> omega_class(Spin i, int m, int n, int l, int k);

BallConfig apply_permutation(const SpinPermutation& pi, const BallConfig& b);
/// Induced action: center pi(i), count of value pi(v) = count of v.
ClassSignature apply_permutation(const SpinPermutation& pi, const ClassSignature& s);

struct OrbitClass {
  ClassSignature representative;        // smallest member
  std::vector<ClassSignature> members;  // sorted

  bool contains(const ClassSignature& s) const;
};

OrbitClass orbit_of(const ClassSignature& s);

/// Every signature (i; m,n,l,r) with m+n+l+r = k+1, sorted.
std::vector<ClassSignature> all_signatures(int k);

/// Orbits partitioning all_signatures(k), sorted by representative. The
/// position in this list is the orbit id used in reports.
std::vector<OrbitClass> all_orbits(int k);

/// Position of the orbit containing s within all_orbits(s.k()).
int orbit_id(const ClassSignature& s);

}  // namespace potts
