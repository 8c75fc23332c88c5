#include "potts/periodic.hpp"

#include <set>

namespace potts {

Spin PeriodicGroundState::value_at(const CayleyGroup& group, const GroupWord& x) const {
  return coset_values[static_cast<std::size_t>(group.coset_class(x, fsets).index())];
}

BallConfig PeriodicGroundState::ball_at(const CayleyGroup& group, const GroupWord& x) const {
  BallConfig b{value_at(group, x), {}};
  for (const auto& y : group.neighbors(x)) b.leaves.push_back(value_at(group, y));
  return b;
}

bool PeriodicGroundState::is_bijective() const {
  std::set<Spin> seen(coset_values.begin(), coset_values.end());
  return seen.size() == coset_values.size();
}

int PeriodicGroundState::period() const {
  std::set<int> reached{0};
  for (int j = 1; j <= k() + 1; ++j) {
    const int g = fsets.generator_label(j).index();
    std::set<int> next = reached;
    for (int h : reached) next.insert(h ^ g);
    reached = std::move(next);
  }
  return static_cast<int>(reached.size());
}

std::string PeriodicGroundState::id() const {
  std::string out = std::to_string(source_ball.center.value());
  for (Spin s : source_ball.leaves) out += std::to_string(s.value());
  return out;
}

}  // namespace potts
