#include "potts/classes.hpp"

#include <algorithm>
#include <set>

namespace potts {

SpinPermutation::SpinPermutation(std::array<int, 4> images) : images_(images) {
  auto sorted = images;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 4>{1, 2, 3, 4}) throw std::invalid_argument("not a permutation of 1..4");
}

SpinPermutation SpinPermutation::klein(int which) {
  switch (which) {
    case 0: return {};
    case 1: return SpinPermutation({2, 1, 4, 3});
    case 2: return SpinPermutation({3, 4, 1, 2});
    case 3: return SpinPermutation({4, 3, 2, 1});
    default: throw std::invalid_argument("klein index must be 0..3");
  }
}

std::vector<SpinPermutation> SpinPermutation::all() {
  std::array<int, 4> images{1, 2, 3, 4};
  std::vector<SpinPermutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

SpinPermutation SpinPermutation::inverse() const {
  std::array<int, 4> inv{};
  for (int v = 1; v <= 4; ++v) inv[static_cast<std::size_t>(images_[v - 1] - 1)] = v;
  return SpinPermutation(inv);
}

SpinPermutation SpinPermutation::operator*(const SpinPermutation& other) const {
  std::array<int, 4> out{};
  for (std::size_t v = 0; v < 4; ++v) out[v] = images_[static_cast<std::size_t>(other.images_[v] - 1)];
  return SpinPermutation(out);
}

std::vector<BallConfig> enumerate_ball_configs(int k) {
  if (k < 1 || k > 4) throw size_guard_error("enumeration needs 1 <= k <= 4, got " + std::to_string(k));
  const int sites = k + 2;
  std::size_t total = 1;
  for (int s = 0; s < sites; ++s) total *= 4;

  std::vector<BallConfig> out;
  out.reserve(total);
  std::vector<int> digits(static_cast<std::size_t>(sites), 1);
  for (std::size_t n = 0; n < total; ++n) {
    BallConfig b{Spin(digits[0]), {}};
    for (int s = 1; s < sites; ++s) b.leaves.emplace_back(digits[static_cast<std::size_t>(s)]);
    out.push_back(std::move(b));
    // Odometer increment, last site fastest.
    for (int s = sites - 1; s >= 0; --s) {
      auto& d = digits[static_cast<std::size_t>(s)];
      if (d < 4) {
        ++d;
        break;
      }
      d = 1;
    }
  }
  return out;
}

std::vector<BallConfig> omega_class(Spin i, int m, int n, int l, int k) {
  const ClassSignature target{i, {m, n, l, k + 1 - m - n - l}};
  validate_signature(target, k);
  // Lexicographically smallest leaf arrangement, then all distinct arrangements.
  std::vector<int> leaves;
  for (int v = 1; v <= 4; ++v) leaves.insert(leaves.end(), static_cast<std::size_t>(target.counts[v - 1]), v);
  std::vector<BallConfig> out;
  do {
    BallConfig b{i, {}};
    for (int v : leaves) b.leaves.emplace_back(v);
    out.push_back(std::move(b));
  } while (std::next_permutation(leaves.begin(), leaves.end()));
  return out;
}

BallConfig apply_permutation(const SpinPermutation& pi, const BallConfig& b) {
  BallConfig out{pi(b.center), {}};
  out.leaves.reserve(b.leaves.size());
  for (Spin s : b.leaves) out.leaves.push_back(pi(s));
  return out;
}

ClassSignature apply_permutation(const SpinPermutation& pi, const ClassSignature& s) {
  ClassSignature out{pi(s.center), {}};
  for (int v = 1; v <= 4; ++v) {
    out.counts[static_cast<std::size_t>(pi(Spin(v)).value() - 1)] = s.counts[static_cast<std::size_t>(v - 1)];
  }
  return out;
}

bool OrbitClass::contains(const ClassSignature& s) const {
  return std::binary_search(members.begin(), members.end(), s);
}

OrbitClass orbit_of(const ClassSignature& s) {
  std::set<ClassSignature> members;
  for (const auto& pi : SpinPermutation::all()) members.insert(apply_permutation(pi, s));
  return {*members.begin(), {members.begin(), members.end()}};
}

std::vector<ClassSignature> all_signatures(int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const int leaves = k + 1;
  std::vector<ClassSignature> out;
  for (int i = 1; i <= 4; ++i) {
    for (int m = 0; m <= leaves; ++m) {
      for (int n = 0; m + n <= leaves; ++n) {
        for (int l = 0; m + n + l <= leaves; ++l) {
          out.push_back({Spin(i), {m, n, l, leaves - m - n - l}});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<OrbitClass> all_orbits(int k) {
  std::vector<OrbitClass> out;
  std::set<ClassSignature> seen;
  for (const auto& s : all_signatures(k)) {
    if (seen.contains(s)) continue;
    auto orbit = orbit_of(s);
    seen.insert(orbit.members.begin(), orbit.members.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

int orbit_id(const ClassSignature& s) {
  const auto rep = orbit_of(s).representative;
  const auto orbits = all_orbits(s.k());
  for (std::size_t n = 0; n < orbits.size(); ++n) {
    if (orbits[n].representative == rep) return static_cast<int>(n);
  }
  throw invalid_signature("signature has no orbit: " + to_string(s));
}

}  // namespace potts
