#include <map>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "potts/ground.hpp"
#include "potts/group.hpp"

using namespace potts;

namespace {

// All words (not necessarily reduced) of exactly `length` letters.
std::vector<std::vector<int>> all_sequences(int k, int length) {
  std::vector<std::vector<int>> out{{}};
  for (int n = 0; n < length; ++n) {
    std::vector<std::vector<int>> next;
    for (const auto& w : out) {
      for (int j = 1; j <= k + 1; ++j) {
        auto v = w;
        v.push_back(j);
        next.push_back(std::move(v));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("multiply cancels adjacent generators") {
  const CayleyGroup g(2);
  CHECK(g.multiply(g.word({1, 2}), g.word({2, 3})) == g.word({1, 3}));
  CHECK(g.multiply(GroupWord{}, g.word({3, 1})) == g.word({3, 1}));
  CHECK(g.multiply(g.word({1, 2, 1}), g.word({1, 2, 1})).is_identity());
  for (int j = 1; j <= 3; ++j) CHECK(g.multiply(g.generator(j), g.generator(j)).is_identity());
}

TEST_CASE("multiply matches the step-by-step reduction oracle") {
  for (int k = 1; k <= 3; ++k) {
    const CayleyGroup g(k);
    for (int len = 0; len <= 5; ++len) {
      for (const auto& seq : all_sequences(k, len)) {
        CHECK(g.reduce(seq).letters() == oracle::naive_reduce(seq));
      }
    }
  }
}

TEST_CASE("out-of-range generators are rejected") {
  const CayleyGroup g(2);
  CHECK_THROWS_AS(g.word({4}), invalid_generator);
  CHECK_THROWS_AS(g.word({0}), invalid_generator);
  CHECK_THROWS_AS(g.multiply(GroupWord({1}), GroupWord({5})), invalid_generator);
  CHECK_THROWS_AS(g.omega(GroupWord{}, 4), invalid_generator);
  CHECK_THROWS_AS(CayleyGroup(0), std::invalid_argument);
}

TEST_CASE("reduction is idempotent and words are inverted by reversal") {
  for (int k = 1; k <= 3; ++k) {
    const CayleyGroup g(k);
    for (const auto& w : g.ball(6)) {
      CHECK(w.is_reduced());
      CHECK(g.reduce(w.letters()) == w);
      CHECK(g.multiply(w, w.reversed()).is_identity());
    }
  }
}

TEST_CASE("distance agrees with BFS on an explicit tree") {
  const CayleyGroup g(2);
  CHECK(g.distance(GroupWord{}, GroupWord{}) == 0);
  CHECK(g.distance(GroupWord{}, g.word({1, 2})) == 2);
  CHECK(g.distance(g.word({1}), g.word({1, 2, 3})) == 2);

  const oracle::ExplicitTree tree(2, 4);
  const auto words = g.ball(2);
  for (const auto& x : words) {
    const auto dist = tree.bfs(tree.node_of(x.letters()));
    for (const auto& y : words) {
      CHECK(g.distance(x, y) == dist[static_cast<std::size_t>(tree.node_of(y.letters()))]);
    }
  }
}

TEST_CASE("omega counts letters") {
  const CayleyGroup g(2);
  CHECK(g.omega(GroupWord{}, 1) == 0);
  CHECK(g.omega(g.word({1, 2, 1}), 1) == 2);
  CHECK(g.omega(g.word({3, 1, 3, 2}), 3) == 2);
}

TEST_CASE("neighbors are the k+1 vertices at distance one") {
  const CayleyGroup g(2);
  const auto n = g.neighbors(GroupWord{});
  CHECK(n == std::vector<GroupWord>{g.word({1}), g.word({2}), g.word({3})});
  const auto around_a1 = g.neighbors(g.word({1}));
  CHECK(std::find(around_a1.begin(), around_a1.end(), GroupWord{}) != around_a1.end());

  const oracle::ExplicitTree tree(2, 4);
  for (const auto& x : g.ball(3)) {
    const auto nb = g.neighbors(x);
    CHECK(nb.size() == 3);
    std::set<int> from_group;
    for (const auto& y : nb) {
      CHECK(g.distance(x, y) == 1);
      from_group.insert(tree.node_of(y.letters()));
    }
    const auto& adj = tree.adjacent(tree.node_of(x.letters()));
    CHECK(from_group == std::set<int>(adj.begin(), adj.end()));
  }
}

TEST_CASE("sphere sizes follow (k+1) k^(n-1)") {
  for (int k = 1; k <= 3; ++k) {
    std::map<std::size_t, int> sizes;
    for (const auto& w : CayleyGroup(k).ball(4)) ++sizes[w.length()];
    int expected = k + 1;
    for (std::size_t n = 1; n <= 4; ++n, expected *= k) CHECK(sizes[n] == expected);
  }
}

TEST_CASE("coset classes from the parity sums") {
  const CayleyGroup g(2);
  const FSets f({1, 2, 3});
  CHECK(g.coset_class(GroupWord{}, f).index() == 0);
  // a2: 2 in F1 u F2 (eps1 even), 2 in F2 u F3 (eps2 odd) -> H1.
  CHECK(g.coset_class(g.word({2}), f).index() == 1);
  CHECK(g.coset_class(g.word({1}), f).index() == 0);
  // a3: eps1 odd, eps2 odd -> H3.
  CHECK(g.coset_class(g.word({3}), f).index() == 3);
  CHECK(g.coset_class(g.word({3, 2}), f).index() == 2);
  CHECK(g.coset_class(g.word({1}), FSets({4, 4, 4})).index() == 2);
}

TEST_CASE("coset_class is a homomorphism onto the Klein group") {
  std::mt19937_64 rng(7);
  for (int k = 1; k <= 3; ++k) {
    const CayleyGroup g(k);
    for (int trial = 0; trial < 300; ++trial) {
      std::vector<int> cells;
      for (int j = 0; j <= k; ++j) cells.push_back(std::uniform_int_distribution<int>(1, 4)(rng));
      const FSets f(cells);
      const auto x = random_word(g, 7, rng);
      const auto y = random_word(g, 7, rng);
      CHECK(g.coset_class(g.multiply(x, y), f) == (g.coset_class(x, f) ^ g.coset_class(y, f)));
    }
  }
}

TEST_CASE("coset profile at the identity") {
  const CayleyGroup g(2);
  const FSets f({1, 2, 3});
  CHECK(g.coset_profile(GroupWord{}, f) == std::array<int, 4>{1, 1, 0, 1});
  CHECK(g.coset_profile(g.word({2, 1}), FSets({1, 1, 4})) == std::array<int, 4>{2, 0, 1, 0});
}

TEST_CASE("coset profiles permute Q(e) according to the coset of x") {
  // H0: Q(e); H1: (q1,q0,q3,q2); H2: (q2,q3,q0,q1); H3: (q3,q2,q1,q0).
  constexpr std::array<std::array<int, 4>, 4> table{{{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}};
  for (int k = 1; k <= 3; ++k) {
    const CayleyGroup g(k);
    for (const auto& cells : {std::vector<int>(static_cast<std::size_t>(k + 1), 1), std::vector<int>{1, 2, 3, 4, 1, 2}}) {
      const FSets f(std::vector<int>(cells.begin(), cells.begin() + k + 1));
      const auto q_e = g.coset_profile(GroupWord{}, f);
      for (const auto& x : g.ball(4)) {
        const auto q_x = g.coset_profile(x, f);
        const auto& perm = table[static_cast<std::size_t>(g.coset_class(x, f).index())];
        for (std::size_t c = 0; c < 4; ++c) CHECK(q_x[c] == q_e[static_cast<std::size_t>(perm[c])]);
        CHECK(q_x[0] + q_x[1] + q_x[2] + q_x[3] == k + 1);
      }
    }
  }
}

TEST_CASE("word serialization") {
  CHECK(to_string(GroupWord{}).empty());
  CHECK(to_string(GroupWord({1, 2, 1})) == "1 2 1");
  CHECK(parse_word("1 2 1") == GroupWord({1, 2, 1}));
  CHECK(parse_word("").is_identity());
  CHECK_THROWS_AS(parse_word("1 x"), invalid_generator);
}
