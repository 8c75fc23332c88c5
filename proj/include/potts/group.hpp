#pragma once

// Vertices of the Cayley tree of order k, represented as reduced words in the
// free product of k+1 cyclic groups of order two. Generators are 1-based.

#include <array>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace potts {

class invalid_generator : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A word in the generators a_1..a_{k+1}. Words produced by CayleyGroup are
/// always reduced (no two equal adjacent letters); the empty word is e.
class GroupWord {
 public:
  GroupWord() = default;
  explicit GroupWord(std::vector<int> letters) : letters_(std::move(letters)) {}

  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }
  bool is_reduced() const;

  /// Letter sequence reversed; the inverse of a reduced word.
  GroupWord reversed() const;

  friend auto operator<=>(const GroupWord&, const GroupWord&) = default;
  friend bool operator==(const GroupWord&, const GroupWord&) = default;

 private:
  std::vector<int> letters_;
};

/// Space-separated generator indices, "" for the identity.
std::string to_string(const GroupWord& word);
/// Inverse of to_string. The result is not reduced or range-checked here.
GroupWord parse_word(std::string_view text);

/// Klein four-group element (eps1, eps2). Index 2*eps1 + eps2 gives the
/// coset number: H0 = (0,0), H1 = (0,1), H2 = (1,0), H3 = (1,1).
struct CosetLabel {
  bool eps1 = false;
  bool eps2 = false;

  static CosetLabel from_index(int index) { return {(index & 2) != 0, (index & 1) != 0}; }
  int index() const { return (eps1 ? 2 : 0) + (eps2 ? 1 : 0); }

  friend CosetLabel operator^(CosetLabel a, CosetLabel b) {
    return {a.eps1 != b.eps1, a.eps2 != b.eps2};
  }
  friend bool operator==(CosetLabel, CosetLabel) = default;
};

/// Partition F_1..F_4 of the generator indices, stored as generator -> cell.
class FSets {
 public:
  /// cells[j-1] is the cell (1..4) of generator j. Throws std::invalid_argument
  /// if a cell value is out of range or the list is shorter than 2.
  explicit FSets(std::vector<int> cells);

  int k() const { return static_cast<int>(cells_.size()) - 1; }
  int cell_of(int generator) const { return cells_.at(static_cast<std::size_t>(generator - 1)); }
  const std::vector<int>& cells() const { return cells_; }
  /// (|F_1|, |F_2|, |F_3|, |F_4|).
  std::array<int, 4> sizes() const;

  /// Contribution of one generator to the two parity sums.
  CosetLabel generator_label(int generator) const;

  friend bool operator==(const FSets&, const FSets&) = default;

 private:
  std::vector<int> cells_;
};

class CayleyGroup {
 public:
  /// Throws std::invalid_argument for k < 1.
  explicit CayleyGroup(int k);

  int k() const { return k_; }
  int degree() const { return k_ + 1; }

  /// Validates every letter and cancels adjacent equal pairs.
  GroupWord reduce(std::vector<int> letters) const;
  GroupWord word(std::initializer_list<int> letters) const { return reduce(letters); }
  GroupWord generator(int j) const { return reduce({j}); }

  GroupWord multiply(const GroupWord& a, const GroupWord& b) const;
  GroupWord inverse(const GroupWord& x) const;
  int distance(const GroupWord& x, const GroupWord& y) const;

  /// Number of occurrences of a_j in x.
  int omega(const GroupWord& x, int j) const;

  /// [x a_1, ..., x a_{k+1}]; entry j-1 is the neighbor in direction j.
  std::vector<GroupWord> neighbors(const GroupWord& x) const;

  CosetLabel coset_class(const GroupWord& x, const FSets& f) const;
  /// Q(x): number of neighbors of x in each coset H0..H3.
  std::array<int, 4> coset_profile(const GroupWord& x, const FSets& f) const;

  /// All reduced words of length <= depth, ordered by length then lexicographically.
  std::vector<GroupWord> ball(int depth) const;
  /// All x with distance(center, x) <= radius, same ordering relative to center.
  std::vector<GroupWord> ball_around(const GroupWord& center, int radius) const;

  void validate(const GroupWord& x) const;
  void validate_generator(int j) const;

 private:
  int k_;
};

}  // namespace potts
