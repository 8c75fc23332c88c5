#pragma once

#include <array>
#include <string>
#include <string_view>

#include "potts/ball.hpp"
#include "potts/group.hpp"

namespace potts {

/// Configuration on the whole tree that is constant on the cosets of the
/// parity subgroup H0 determined by an F-set partition.
///
/// value_at(x) = coset_values[coset_class(x, fsets)]. When coset_values is a
/// bijection the configuration has period equal to the number of cosets the
/// generators reach (1, 2 or 4).
struct PeriodicGroundState {
  FSets fsets;
  std::array<Spin, 4> coset_values{Spin{1}, Spin{2}, Spin{3}, Spin{4}};
  BallConfig source_ball;

  int k() const { return fsets.k(); }
  Spin value_at(const CayleyGroup& group, const GroupWord& x) const;
  /// Restriction to the unit ball centered at x.
  BallConfig ball_at(const CayleyGroup& group, const GroupWord& x) const;
  bool is_bijective() const;
  /// Index of H0 in G_k: the size of the subgroup of the Klein group
  /// generated by the generators' coset labels.
  int period() const;

  /// Compact identifier: center digit followed by leaf digits of the
  /// source ball, e.g. "1123". extend_periodic(parse) reproduces the state.
  std::string id() const;
};

}  // namespace potts
