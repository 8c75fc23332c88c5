#include "potts/group.hpp"

#include <algorithm>
#include <sstream>

namespace potts {

bool GroupWord::is_reduced() const {
  return std::adjacent_find(letters_.begin(), letters_.end()) == letters_.end();
}

GroupWord GroupWord::reversed() const {
  return GroupWord(std::vector<int>(letters_.rbegin(), letters_.rend()));
}

std::string to_string(const GroupWord& word) {
  std::string out;
  for (int letter : word.letters()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(letter);
  }
  return out;
}

GroupWord parse_word(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<int> letters;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw invalid_generator("malformed word token: '" + token + "'");
    letters.push_back(value);
  }
  return GroupWord(std::move(letters));
}

FSets::FSets(std::vector<int> cells) : cells_(std::move(cells)) {
  if (cells_.size() < 2) throw std::invalid_argument("FSets needs at least 2 generators");
  for (int c : cells_) {
    if (c < 1 || c > 4) throw std::invalid_argument("FSets cell out of range: " + std::to_string(c));
  }
}

std::array<int, 4> FSets::sizes() const {
  std::array<int, 4> out{};
  for (int c : cells_) ++out[static_cast<std::size_t>(c - 1)];
  return out;
}

CosetLabel FSets::generator_label(int generator) const {
  const int cell = cell_of(generator);
  // eps1 sums over N_k \ (F1 u F2), eps2 over F2 u F3.
  return {cell == 3 || cell == 4, cell == 2 || cell == 3};
}

CayleyGroup::CayleyGroup(int k) : k_(k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1, got " + std::to_string(k));
}

void CayleyGroup::validate_generator(int j) const {
  if (j < 1 || j > k_ + 1) {
    throw invalid_generator("generator " + std::to_string(j) + " outside 1.." + std::to_string(k_ + 1));
  }
}

void CayleyGroup::validate(const GroupWord& x) const {
  for (int j : x.letters()) validate_generator(j);
}

GroupWord CayleyGroup::reduce(std::vector<int> letters) const {
  std::vector<int> out;
  out.reserve(letters.size());
  for (int j : letters) {
    validate_generator(j);
    if (!out.empty() && out.back() == j) {
      out.pop_back();
    } else {
      out.push_back(j);
    }
  }
  return GroupWord(std::move(out));
}

GroupWord CayleyGroup::multiply(const GroupWord& a, const GroupWord& b) const {
  std::vector<int> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return reduce(std::move(letters));
}

GroupWord CayleyGroup::inverse(const GroupWord& x) const {
  validate(x);
  return reduce(x.reversed().letters());
}

int CayleyGroup::distance(const GroupWord& x, const GroupWord& y) const {
  return static_cast<int>(multiply(inverse(x), y).length());
}

int CayleyGroup::omega(const GroupWord& x, int j) const {
  validate_generator(j);
  return static_cast<int>(std::count(x.letters().begin(), x.letters().end(), j));
}

std::vector<GroupWord> CayleyGroup::neighbors(const GroupWord& x) const {
  std::vector<GroupWord> out;
  out.reserve(static_cast<std::size_t>(degree()));
  for (int j = 1; j <= degree(); ++j) out.push_back(multiply(x, generator(j)));
  return out;
}

CosetLabel CayleyGroup::coset_class(const GroupWord& x, const FSets& f) const {
  if (f.k() != k_) throw std::invalid_argument("FSets built for a different k");
  CosetLabel label;
  for (int j : x.letters()) {
    validate_generator(j);
    label = label ^ f.generator_label(j);
  }
  return label;
}

std::array<int, 4> CayleyGroup::coset_profile(const GroupWord& x, const FSets& f) const {
  std::array<int, 4> q{};
  for (const auto& y : neighbors(x)) ++q[static_cast<std::size_t>(coset_class(y, f).index())];
  return q;
}

std::vector<GroupWord> CayleyGroup::ball(int depth) const {
  std::vector<GroupWord> out{GroupWord{}};
  std::size_t layer_begin = 0;
  for (int n = 1; n <= depth; ++n) {
    const std::size_t layer_end = out.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      const std::vector<int> letters = out[i].letters();
      for (int j = 1; j <= degree(); ++j) {
        if (!letters.empty() && letters.back() == j) continue;
        auto next = letters;
        next.push_back(j);
        out.emplace_back(std::move(next));
      }
    }
    layer_begin = layer_end;
  }
  return out;
}

std::vector<GroupWord> CayleyGroup::ball_around(const GroupWord& center, int radius) const {
  auto words = ball(radius);
  for (auto& w : words) w = multiply(center, w);
  return words;
}

}  // namespace potts
