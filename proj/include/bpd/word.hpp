#pragma once

// Words in the simple transpositions s_1..s_{n-1}, line diagrams, and the
// Little bump / Little map on reduced words.

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bpd/perm.hpp"

namespace bpd {

class Word {
 public:
  Word() = default;
  /// Throws InvalidInput unless every letter lies in 1..ambient_size-1.
  Word(std::vector<int> letters, int ambient_size);

  const std::vector<int>& letters() const { return letters_; }
  int ambient_size() const { return ambient_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  /// 1-based letter access.
  int operator[](std::size_t t) const { return letters_[t - 1]; }

  /// Drops the letter at 1-based time t.
  Word without(std::size_t t) const;

  auto operator<=>(const Word&) const = default;
  bool operator==(const Word&) const = default;

 private:
  std::vector<int> letters_;
  int ambient_ = 1;
};

/// s_{a_1} ... s_{a_l} applied by right multiplication to the identity.
Permutation evaluate(const Word& a);
bool is_reduced(const Word& a);

/// Descent positions t with a_t > a_{t+1}.
std::vector<std::size_t> word_descents(const Word& a);

/// trajectories[v-1][t] is the row (position) of line v after t letters.
struct LineDiagram {
  Word word;
  std::vector<std::vector<int>> trajectories;

  /// The two lines (values, ascending) that swap at 1-based time t.
  std::pair<int, int> crossing_at(std::size_t t) const;
  /// Number of times lines u and v cross.
  int crossings(int u, int v) const;
};

LineDiagram line_diagram(const Word& a);

/// Unique time at which lines u and v cross, if they cross exactly once.
std::optional<std::size_t> crossing_time(const Word& a, int u, int v);

/// Single bump at 1-based time t.  When a_t = 1 every other letter is
/// incremented and the ambient size grows by one.
Word bump_at(const Word& a, std::size_t t);

struct LittleBumpResult {
  Word word;
  /// Times bumped, in order, starting with t1.
  std::vector<std::size_t> bumped;
};

/// Little bump starting at t1.  Requires `a` reduced and a^(t1) reduced.
LittleBumpResult little_bump_trace(const Word& a, std::size_t t1);
Word little_bump(const Word& a, std::size_t t1);

/// theta_{k,v}: bump at the crossing of the lines w_k and v, where w is
/// the permutation of `a`.  Requires v = w_j for some j > k with w_j < w_k
/// and l(w t_{k,j}) = l(w) - 1.
Word little_map(const Word& a, int k, int v);
LittleBumpResult little_map_trace(const Word& a, int k, int v);

/// theta_{k,v}^{-1}(a) = (theta_{n+1-k, n+1-v}(a^c))^c.
Word little_map_inverse(const Word& a, int k, int v);

/// The unique v for which theta_{k,v} applies to a reduced word of w, when
/// exactly one j > k gives l(w t_{k,j}) = l(w) - 1; nullopt otherwise.
std::optional<int> infer_little_value(const Permutation& w, int k);

Word reverse(const Word& a);
/// (n - a_1, ..., n - a_l) with n the word's ambient size.
Word complement_word(const Word& a);

/// `(5,4,1,2,5)` or `5 4 1 2 5`.  Ambient size defaults to max letter + 1.
Word parse_word(std::string_view text, std::optional<int> ambient_size = std::nullopt);
std::string to_string(const Word& a);
std::ostream& operator<<(std::ostream& os, const Word& a);

}  // namespace bpd
