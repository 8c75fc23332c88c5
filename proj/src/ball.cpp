#include "potts/ball.hpp"

namespace potts {

namespace {

std::int64_t choose2(int x) { return x < 2 ? 0 : static_cast<std::int64_t>(x) * (x - 1) / 2; }

}  // namespace

std::string to_string(const ClassSignature& s) {
  std::string out = "(" + std::to_string(s.center.value()) + ";";
  for (std::size_t p = 0; p < 4; ++p) {
    out += (p == 0 ? " " : ",") + std::to_string(s.counts[p]);
  }
  return out + ")";
}

ClassSignature signature_of(const BallConfig& b) {
  ClassSignature s{b.center, {}};
  for (Spin leaf : b.leaves) ++s.counts[static_cast<std::size_t>(leaf.value() - 1)];
  return s;
}

Rational ball_energy_direct(const BallConfig& b, const Coupling& J) {
  std::int64_t edge_matches = 0;
  std::int64_t pair_matches = 0;
  for (std::size_t a = 0; a < b.leaves.size(); ++a) {
    if (b.leaves[a] == b.center) ++edge_matches;
    for (std::size_t c = a + 1; c < b.leaves.size(); ++c) {
      if (b.leaves[a] == b.leaves[c]) ++pair_matches;
    }
  }
  return Rational(1, 2) * J.j1 * Rational(edge_matches) + J.j2 * Rational(pair_matches);
}

void validate_signature(const ClassSignature& s, int k) {
  for (int c : s.counts) {
    if (c < 0) throw invalid_signature("negative count in signature " + to_string(s));
  }
  if (s.leaf_count() != k + 1) {
    throw invalid_signature("signature " + to_string(s) + " does not have k+1 = " +
                            std::to_string(k + 1) + " leaves");
  }
}

EnergyCoefficients energy_coefficients(const ClassSignature& s) {
  const int matched = s.counts[static_cast<std::size_t>(s.center.value() - 1)];
  std::int64_t pairs = 0;
  for (int c : s.counts) pairs += choose2(c);
  return {Rational(matched, 2), pairs};
}

Rational ball_energy_closed(const ClassSignature& s, const Coupling& J, int k) {
  validate_signature(s, k);
  return energy_coefficients(s).evaluate(J);
}

}  // namespace potts
