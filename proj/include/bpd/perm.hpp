#pragma once

// Permutations of {1..n} in one-line notation.
//
// All indices and values are 1-based, matching the usual combinatorial
// conventions: w[i] is the value at position i, and w.apply_simple(i)
// is w*s_i (swap the entries in positions i and i+1).

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace bpd {

class Word;

class Permutation {
 public:
  /// Identity of S_1.
  Permutation();

  /// Throws InvalidInput unless `window` is a bijection of {1..window.size()}.
  explicit Permutation(std::vector<int> window);

  static Permutation identity(int n);
  /// The longest element n (n-1) ... 1.
  static Permutation longest(int n);
  /// The permutation of S_n whose Lehmer code is `code` padded with zeros.
  static Permutation from_code(const std::vector<int>& code, int n);

  int size() const { return static_cast<int>(window_.size()); }

  /// Value at 1-based position i.
  int operator[](int i) const { return window_[static_cast<std::size_t>(i - 1)]; }
  int at(int i) const;
  /// 1-based position of value v.
  int position_of(int v) const;

  const std::vector<int>& window() const { return window_; }

  bool is_identity() const;

  /// w * s_i.
  Permutation apply_simple(int i) const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> window_;
};

/// Partition with strictly positive, weakly decreasing parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  /// Sorts `values` into weakly decreasing order and drops zeros.
  static Partition from_unsorted(std::vector<int> values);

  const std::vector<int>& parts() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool empty() const { return parts_.empty(); }
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }

  Partition conjugate() const;

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

struct PatternFlags {
  bool dominant = false;
  bool vexillary = false;
  bool grassmannian = false;

  bool operator==(const PatternFlags&) const = default;
};

/// Number of inversions.
int length(const Permutation& w);

/// c_i(w) = #{j > i : w_j < w_i}.
std::vector<int> lehmer_code(const Permutation& w);

/// Lehmer code sorted into a partition.
Partition code_shape(const Permutation& w);

/// Positions d with w_d > w_{d+1}.
std::vector<int> descents(const Permutation& w);

bool is_dominant(const Permutation& w);
bool contains_132(const Permutation& w);
bool contains_2143(const Permutation& w);
bool is_grassmannian(const Permutation& w);
PatternFlags classify(const Permutation& w);

/// w t_{i,j}: swap the entries at positions i < j.
Permutation apply_transposition(const Permutation& w, int i, int j);

enum class Side { Left, Right };

/// Left: 1 x w = 1 (w_1+1) ... (w_n+1).  Right: w x 1 = w_1 ... w_n (n+1).
Permutation embed(const Permutation& w, Side side);
Permutation embed_left(const Permutation& w);
Permutation embed_right(const Permutation& w);

Permutation inverse(const Permutation& w);

/// v_i = n + 1 - w_{n+1-i}, i.e. conjugation by the longest element.
Permutation complement(const Permutation& w);

/// All reduced words of w, sorted lexicographically.
std::vector<Word> reduced_words(const Permutation& w);

/// Number of reduced words, by the descent recursion (memoised).
std::size_t count_reduced_words(const Permutation& w);

/// All permutations of S_n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// Accepts `2,3,1,6,5,4` or the compact digit form `231654` (n <= 9).
Permutation parse_permutation(std::string_view text);

/// Comma-separated one-line notation.
std::string to_string(const Permutation& w);
/// Digit form when n <= 9, otherwise comma-separated.
std::string to_compact_string(const Permutation& w);
/// `(4,2,1)`; the empty partition prints as `()`.
std::string to_string(const Partition& lambda);
Partition parse_partition(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Permutation& w);
std::ostream& operator<<(std::ostream& os, const Partition& lambda);

}  // namespace bpd
