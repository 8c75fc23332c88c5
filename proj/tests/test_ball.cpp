#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "potts/ball.hpp"
#include "potts/classes.hpp"

using namespace potts;

namespace {

BallConfig ball(int center, std::vector<int> leaves) {
  BallConfig b{Spin(center), {}};
  for (int v : leaves) b.leaves.emplace_back(v);
  return b;
}

ClassSignature sig(int center, std::array<int, 4> counts) { return {Spin(center), counts}; }

}  // namespace

TEST_CASE("spin range") {
  CHECK(Spin(4).value() == 4);
  CHECK_THROWS_AS(Spin(0), std::invalid_argument);
  CHECK_THROWS_AS(Spin(5), std::invalid_argument);
}

TEST_CASE("signature counts leaves only") {
  CHECK(signature_of(ball(1, {1, 1, 1})) == sig(1, {3, 0, 0, 0}));
  CHECK(signature_of(ball(1, {1, 1, 2})) == sig(1, {2, 1, 0, 0}));
  CHECK(signature_of(ball(4, {2, 3, 4})) == sig(4, {0, 1, 1, 1}));
}

TEST_CASE("ball energy worked values") {
  CHECK(ball_energy_direct(ball(1, {1, 1, 2}), {1, 1}) == Rational(2));
  CHECK(ball_energy_direct(ball(1, {2, 3, 4}), {Rational(7, 3), Rational(-5)}) == Rational(0));
  CHECK(ball_energy_direct(ball(1, {1, 1, 1}), {-1, -1}) == Rational(-9, 2));

  CHECK(ball_energy_closed(sig(1, {3, 0, 0, 0}), {-1, -1}, 2) == Rational(-9, 2));
  CHECK(ball_energy_closed(sig(1, {0, 1, 1, 1}), {Rational(3, 2), 11}, 2) == Rational(0));
  CHECK(ball_energy_closed(sig(2, {3, 0, 0, 0}), {-1, -1}, 2) == Rational(-3));
}

TEST_CASE("closed form rejects inconsistent signatures") {
  CHECK_THROWS_AS(ball_energy_closed(sig(1, {1, 1, 0, 0}), {1, 1}, 2), invalid_signature);
  CHECK_THROWS_AS(ball_energy_closed(sig(1, {4, -1, 0, 0}), {1, 1}, 2), invalid_signature);
}

TEST_CASE("direct and closed energies agree with the explicit-ball oracle") {
  std::mt19937_64 rng(11);
  for (int k = 1; k <= 3; ++k) {
    const auto balls = oracle::all_balls(k);
    for (int c = 0; c < 50; ++c) {
      const Coupling J{oracle::random_rational(rng), oracle::random_rational(rng)};
      for (const auto& b : balls) {
        const auto expected = oracle::ball_energy(b, J);
        REQUIRE(ball_energy_direct(b, J) == expected);
        REQUIRE(ball_energy_closed(signature_of(b), J, k) == expected);
      }
    }
  }
}

TEST_CASE("the duplicated third-spin term would break centers of spin 4") {
  // 1/2 (d1i m + d2i n + d3i l + d3i l) J1 + pairs J2, taken literally.
  auto literal = [](const ClassSignature& s, const Coupling& J) {
    const int i = s.center.value();
    const int matched = (i == 1 ? s.counts[0] : 0) + (i == 2 ? s.counts[1] : 0) + (i == 3 ? 2 * s.counts[2] : 0);
    std::int64_t pairs = 0;
    for (int c : s.counts) pairs += c * (c - 1) / 2;
    return Rational(matched, 2) * J.j1 + Rational(pairs) * J.j2;
  };
  const auto b = ball(4, {4, 1, 2});
  CHECK(literal(signature_of(b), {1, 0}) != oracle::ball_energy(b, {1, 0}));
  CHECK(ball_energy_closed(signature_of(b), {1, 0}, 2) == oracle::ball_energy(b, {1, 0}));
}

TEST_CASE("ball energy is invariant under spin relabeling") {
  const Coupling J{Rational(-3, 2), Rational(5, 7)};
  for (const auto& b : enumerate_ball_configs(2)) {
    for (const auto& pi : SpinPermutation::all()) {
      CHECK(ball_energy_direct(apply_permutation(pi, b), J) == ball_energy_direct(b, J));
    }
  }
}

TEST_CASE("ball energy is linear in the coupling") {
  std::mt19937_64 rng(3);
  for (const auto& b : enumerate_ball_configs(2)) {
    const Rational edge = ball_energy_direct(b, {1, 0});
    const Rational pair = ball_energy_direct(b, {0, 1});
    const auto coeffs = energy_coefficients(signature_of(b));
    CHECK(edge == coeffs.edge);
    CHECK(pair == Rational(coeffs.pair));
    const Coupling J{oracle::random_rational(rng), oracle::random_rational(rng)};
    CHECK(ball_energy_direct(b, J) == edge * J.j1 + pair * J.j2);
  }
}
